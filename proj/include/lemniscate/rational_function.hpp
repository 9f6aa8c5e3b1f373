#pragma once

#include "lemniscate/poly.hpp"

#include <string>

namespace lemniscate {

/// Quotient num/den of polynomials in x, kept in lowest terms with a monic
/// denominator so that equal functions have equal representations.
class RationalFunction {
public:
    RationalFunction() : den_(Poly::constant(1)) {}
    RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const BigRational& c) : RationalFunction(Poly::constant(c)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : RationalFunction(Poly::constant(c)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(int e) const;
    RationalFunction derivative() const;
    /// Exact value at x0; throws DomainError if the denominator vanishes there.
    BigRational operator()(const BigRational& x0) const;

    std::string str() const;
    std::string latex() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

}  // namespace lemniscate
