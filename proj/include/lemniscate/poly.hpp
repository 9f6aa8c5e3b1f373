#pragma once

#include "lemniscate/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lemniscate {

/// Dense univariate polynomial over the rationals, in the variable x.
///
/// Coefficients are stored lowest degree first. The zero polynomial is the
/// empty coefficient list, so a non-empty list always has a nonzero last
/// entry.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigRational> coefficients);
    Poly(std::initializer_list<BigRational> coefficients);

    static Poly constant(const BigRational& c);
    /// c * x^k.
    static Poly monomial(const BigRational& c, unsigned k);
    static Poly x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^k (zero past the degree).
    BigRational coeff(std::size_t k) const;
    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    const BigRational& leading() const;
    bool has_integer_coefficients() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const BigRational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRational& c) { return a *= c; }
    friend Poly operator*(const BigRational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly pow(unsigned e) const;
    /// Formal derivative applied `order` times.
    Poly derivative(unsigned order = 1) const;
    /// Horner evaluation.
    BigRational operator()(const BigRational& x0) const;
    /// p(q(x)).
    Poly compose(const Poly& q) const;

    /// (x-1)^d * p(x/(x-1)); requires d >= degree.
    Poly moebius_substitute(unsigned d) const;
    /// x^d * p(1/x); requires d >= degree.
    Poly reflect(unsigned d) const;

    /// Euclidean division: *this = quotient * divisor + remainder.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Monic greatest common divisor (zero if both are zero).
    static Poly gcd(Poly a, Poly b);
    /// Scaled so the leading coefficient is one.
    Poly monic() const;

    /// Human-readable form, highest degree first, e.g. "16x^2-16x+1".
    std::string str() const;
    std::string latex() const;
    /// Serialization form: coefficient strings "num/den", lowest degree first.
    std::vector<std::string> to_strings() const;
    static Poly from_strings(const std::vector<std::string>& coefficients);

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

}  // namespace lemniscate
