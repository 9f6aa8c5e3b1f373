#pragma once

#include "lemniscate/diff_expr.hpp"
#include "lemniscate/gamma_pi.hpp"
#include "lemniscate/series.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lemniscate {

/// Exact value of z^{(n)} at x = 1/2, for 0 <= n <= kDerivativeSlots.
GammaPiExpr z_derivative_value(int n);

/// Substitutes x = 1/2: the prefactor becomes 2^{-s}, every z^{(n)} its exact
/// value and each coefficient is evaluated exactly.
GammaPiExpr eval_at_half(const DiffExpr& e);

/// The eight hyperbolic series with closed forms at y = pi. The cosh series
/// are sum_{n>=0} (-1)^n (2n+1)^e f((2n+1)pi/2), the sinh series are
/// sum_{n>=1} (-1)^n n^e f(n pi), with exponent e given by family and m.
enum class ClosedFamily {
    Cosh3Minus,  // (2n+1)^{4m-1} / cosh^3
    Cosh3Plus,   // (2n+1)^{4m+1} / cosh^3
    Cosh4,       // (2n+1)^{4m} sinh / cosh^4
    Cosh5,       // (2n+1)^{4m+1} / cosh^5
    Sinh3Minus,  // n^{4m-3} / sinh^3
    Sinh3Plus,   // n^{4m-1} / sinh^3
    Sinh4,       // n^{4m-2} cosh / sinh^4
    Sinh5,       // n^{4m-1} / sinh^5
};

inline constexpr ClosedFamily kAllClosedFamilies[] = {
    ClosedFamily::Cosh3Minus, ClosedFamily::Cosh3Plus, ClosedFamily::Cosh4,      ClosedFamily::Cosh5,
    ClosedFamily::Sinh3Minus, ClosedFamily::Sinh3Plus, ClosedFamily::Sinh4,      ClosedFamily::Sinh5,
};

/// Stable identifier such as "cosh3_4m-1".
std::string_view to_string(ClosedFamily f);
/// Accepts the identifiers of to_string and the short aliases cosh3 (=
/// cosh3_4m-1), cosh4, cosh5, sinh3 (= sinh3_4m-3), sinh4, sinh5.
ClosedFamily closed_family_from_string(std::string_view name);
bool is_cosh_family(ClosedFamily f);
/// Exponent e of the summand at index m.
int family_exponent(ClosedFamily f, int m);
/// Power of cosh or sinh in the denominator.
int family_hyperbolic_power(ClosedFamily f);
/// Smallest m with a closed form: 1 for cosh families, 2 for sinh families.
int family_min_index(ClosedFamily f);
/// The m with family_exponent(f, m) == e, if any.
std::optional<int> family_index_for_exponent(ClosedFamily f, int e);

enum class SumRoute { Theorem, Pipeline };
enum class IntegralRoute { Theorem, Corollary };
enum class BerndtSign { Plus, Minus };

std::string_view to_string(BerndtSign s);

/// Largest p/g/q/R table index any closed form at index m needs.
int required_table_index(int m);

/// Closed form of the family at index m. The theorem route evaluates the
/// explicit p/R formulas, the pipeline route evaluates the d/dy family
/// expression at x = 1/2. Throws DomainError when m is below
/// family_min_index (or below 1 for the pipeline), and when the tables are
/// too short.
GammaPiExpr closed_sum(ClosedFamily f, int m, SumRoute route, const SeriesTables& tables);
GammaPiExpr closed_sum(ClosedFamily f, int m, SumRoute route);

/// Integral of x^{4m+1}/(cos x + cosh x)^3 (plus, m >= 1) or
/// x^{4m-1}/(cos x - cosh x)^3 (minus, m >= 2) over (0, infinity).
/// The corollary route assembles it from four closed_sum values.
GammaPiExpr berndt_integral_closed(BerndtSign sign, int m, IntegralRoute route, const SeriesTables& tables);
GammaPiExpr berndt_integral_closed(BerndtSign sign, int m, IntegralRoute route);
/// A variant of the minus-sign theorem formula whose first bracket carries the
/// opposite sign on the R' term and pi^2 in place of pi^3. It disagrees with
/// known_integrals() and with the corollary route; no route uses it.
GammaPiExpr minus_integral_theorem_as_printed(int m, const SeriesTables& tables);
/// Integrand exponent: 4m+1 for plus, 4m-1 for minus.
int berndt_exponent(BerndtSign sign, int m);

/// Conjectured value of the integral of x/(cos x + cosh x)^3; not proven.
GammaPiExpr conjecture_closed();

struct MembershipResult {
    bool passed = false;
    /// Exponent pairs (a, h) of terms outside the allowed span.
    std::vector<GammaPiExpr::Key> offending;
};

/// The five (Gamma exponent, doubled pi exponent) pairs allowed for the
/// integral of the given sign at index p.
std::vector<GammaPiExpr::Key> membership_pattern(BerndtSign sign, int p);
MembershipResult theorem1_membership_check(const GammaPiExpr& e, BerndtSign sign, int p);

}  // namespace lemniscate
