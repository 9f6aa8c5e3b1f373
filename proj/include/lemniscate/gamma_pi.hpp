#pragma once

#include "lemniscate/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace lemniscate {

/// Finite sum of c * Gamma(1/4)^a * pi^{h/2} with rational c.
///
/// The pi exponent is stored doubled so that z(1/2) = Gamma^2 / (2 pi^{3/2})
/// is representable. Terms are keyed by (a, h) and never hold zero.
class GammaPiExpr {
public:
    using Key = std::pair<int, int>;  // (gamma exponent a, doubled pi exponent h)
    using Terms = std::map<Key, BigRational>;

    GammaPiExpr() = default;
    GammaPiExpr(const BigRational& c);  // NOLINT(google-explicit-constructor)
    GammaPiExpr(long c) : GammaPiExpr(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

    /// c * Gamma^a * pi^{h/2}.
    static GammaPiExpr term(const BigRational& c, int gamma_exp, int pi_half_exp);
    /// (num/den) * Gamma^a * pi^k with an integral pi exponent.
    static GammaPiExpr monomial(long num, long den, int gamma_exp, int pi_exp);
    static GammaPiExpr gamma(int a) { return term(BigRational(1), a, 0); }
    static GammaPiExpr pi(int k) { return term(BigRational(1), 0, 2 * k); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    BigRational coefficient(int gamma_exp, int pi_half_exp) const;

    GammaPiExpr& operator+=(const GammaPiExpr& o);
    GammaPiExpr& operator-=(const GammaPiExpr& o);
    GammaPiExpr& operator*=(const BigRational& c);
    friend GammaPiExpr operator+(GammaPiExpr a, const GammaPiExpr& b) { return a += b; }
    friend GammaPiExpr operator-(GammaPiExpr a, const GammaPiExpr& b) { return a -= b; }
    friend GammaPiExpr operator*(const GammaPiExpr& a, const GammaPiExpr& b);
    friend GammaPiExpr operator*(GammaPiExpr a, const BigRational& c) { return a *= c; }
    friend GammaPiExpr operator*(const BigRational& c, GammaPiExpr a) { return a *= c; }
    GammaPiExpr operator-() const;
    friend bool operator==(const GammaPiExpr&, const GammaPiExpr&) = default;

    /// Integer power; negative powers are allowed for single-term values only.
    GammaPiExpr pow(int k) const;
    /// Exact inverse of a single-term value; throws DomainError otherwise.
    GammaPiExpr inverse() const;

    /// Terms in display order: ascending Gamma exponent, then ascending pi exponent.
    std::vector<std::pair<Key, BigRational>> ordered_terms() const;

    /// "-3Γ⁴/(2⁴π⁵) + Γ¹²/(2¹⁰π⁹)".
    std::string str() const;
    /// "-3*G^4/(2^4*pi^5) + G^12/(2^10*pi^9)".
    std::string ascii() const;
    /// "-\frac{3\Gamma^{4}}{2^{4}\pi^{5}}+\frac{\Gamma^{12}}{2^{10}\pi^{9}}".
    std::string latex() const;

private:
    void add_term(const Key& k, const BigRational& c);

    Terms terms_;
};

}  // namespace lemniscate
