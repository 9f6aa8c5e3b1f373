#pragma once

#include "lemniscate/rational_function.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace lemniscate {

/// Storage slots for z', z'', ...; the usable order is DiffExpr::max_order().
inline constexpr int kDerivativeSlots = 8;
inline constexpr int kDefaultMaxOrder = 4;

/// z^e * (z')^{d1} * (z'')^{d2} * ... ; z may carry a negative exponent.
struct ZMonomial {
    int z = 0;
    std::array<int, kDerivativeSlots> d{};

    /// Exponent of z^{(order)}, order 0 being z itself.
    int exponent(int order) const { return order == 0 ? z : d[static_cast<std::size_t>(order - 1)]; }
    int& exponent(int order) { return order == 0 ? z : d[static_cast<std::size_t>(order - 1)]; }
    /// Highest derivative order present (0 when only z appears).
    int top_order() const;

    friend auto operator<=>(const ZMonomial&, const ZMonomial&) = default;
    friend bool operator==(const ZMonomial&, const ZMonomial&) = default;
};

ZMonomial operator*(const ZMonomial& a, const ZMonomial& b);

/// Element of (x(1-x))^{s/2} * Q(x)[z, 1/z, z', z'', ...].
///
/// z = z(x) = 2K/pi is treated as a free function of x; no differential
/// relation it satisfies is applied, so d_dx acts purely formally. Terms are
/// kept in a map ordered by monomial, which makes iteration, printing and
/// serialization deterministic.
class DiffExpr {
public:
    using Terms = std::map<ZMonomial, RationalFunction>;

    DiffExpr() = default;
    explicit DiffExpr(int half_power, int max_order = kDefaultMaxOrder);

    static DiffExpr constant(const RationalFunction& c, int half_power = 0);
    /// z^{(order)}.
    static DiffExpr z_derivative(int order, int max_order = kDefaultMaxOrder);
    static DiffExpr term(const RationalFunction& c, const ZMonomial& m, int half_power = 0);
    /// The prefactor (x(1-x))^{s/2} alone.
    static DiffExpr prefactor(int half_power);

    int half_power() const { return half_power_; }
    int max_order() const { return max_order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Highest derivative order of z appearing in any term.
    int top_order() const;

    /// Same value written with prefactor exponent s, multiplying each
    /// coefficient by (x(1-x))^{(half_power - s)/2}; parities must agree.
    DiffExpr rebased(int s) const;
    DiffExpr with_max_order(int max_order) const;

    DiffExpr& operator+=(const DiffExpr& o);
    DiffExpr& operator-=(const DiffExpr& o);
    DiffExpr& operator*=(const RationalFunction& c);
    friend DiffExpr operator+(DiffExpr a, const DiffExpr& b) { return a += b; }
    friend DiffExpr operator-(DiffExpr a, const DiffExpr& b) { return a -= b; }
    friend DiffExpr operator*(const DiffExpr& a, const DiffExpr& b);
    friend DiffExpr operator*(DiffExpr a, const RationalFunction& c) { return a *= c; }
    friend DiffExpr operator*(const RationalFunction& c, DiffExpr a) { return a *= c; }
    DiffExpr operator-() const;

    /// Equality of the represented functions (prefactors reconciled first).
    friend bool operator==(const DiffExpr& a, const DiffExpr& b);
    /// Exact structural equality, prefactor exponent included.
    bool identical(const DiffExpr& o) const { return half_power_ == o.half_power_ && terms_ == o.terms_; }

    /// d/dx; the prefactor exponent drops by two.
    DiffExpr d_dx() const;
    /// d/dy = (dx/dy) d/dx with dx/dy = -x(1-x) z^2; the prefactor exponent is preserved.
    DiffExpr d_dy() const;

    /// Text form: "sqrt(x(1-x)) * (...)" with z1 = z', z2 = z'', ...
    std::string str() const;
    std::string latex() const;

    /// Parses a polynomial expression in x, z, z', z'', z''', z'''' (also
    /// written zp, zpp, z3, z4) with integer/rational constants, + - * ^ and
    /// parentheses; the result carries prefactor exponent `half_power`.
    static DiffExpr parse(std::string_view text, int half_power = 0, int max_order = kDefaultMaxOrder);

private:
    void add_term(const ZMonomial& m, const RationalFunction& c);
    void check_compatible(const DiffExpr& o, const char* op) const;

    int half_power_ = 0;
    int max_order_ = kDefaultMaxOrder;
    Terms terms_;
};

/// x(1-x) as a polynomial.
Poly x_one_minus_x();

}  // namespace lemniscate
