#pragma once

#include "lemniscate/closed_forms.hpp"
#include "lemniscate/families.hpp"
#include "lemniscate/hyperbolic_sums.hpp"
#include "lemniscate/numerics.hpp"

#include <optional>
#include <string>

namespace lemniscate {

/// Outcome of one check: an exact value (or a named identity) against an
/// independently computed number. Exact checks leave the numeric fields empty.
struct VerificationReport {
    std::string id;
    std::string category;
    std::string kind;
    std::optional<GammaPiExpr> symbolic;  // absent for pure identities
    std::string identity;                 // human-readable description
    std::string numeric_value;            // decimal strings at working precision
    std::string reference_value;
    std::string deviation;
    std::string rel_deviation;
    double digits_agreed = 0;
    int tolerance_digits = 0;
    bool pass = false;
    double runtime_ms = 0;
    bool conjectural = false;
    std::string detail;  // failure explanation; empty on success
};

/// Digits of agreement between a value and a reference: -log10 of the
/// relative deviation, or of the absolute deviation when the reference lies
/// within 10^-target_digits of zero; capped at the working precision.
double digits_of_agreement(const BigFloat& value, const BigFloat& reference, const NumericContext& ctx);

/// Fills the numeric fields of a report from two numbers.
void fill_report(VerificationReport& r, const BigFloat& numeric, const BigFloat& reference, int tolerance_digits,
                 const NumericContext& ctx);

/// Evaluates `symbolic` numerically and compares it with `numeric`.
VerificationReport compare(const GammaPiExpr& symbolic, const BigFloat& numeric, int tolerance_digits,
                           const NumericContext& ctx);

/// The n >= 1 series computed by sum_hyperbolic whose value is sign * (closed form).
struct FamilySeries {
    HyperbolicSeries series;
    int sign;
};
FamilySeries family_series(ClosedFamily f, int m);

/// Numeric value of the family's series at y = pi in the convention of closed_sum.
BigFloat closed_family_numeric(ClosedFamily f, int m, const NumericContext& ctx);

/// Checks the residue-theorem identity expressing the order-three integral of
/// the given sign at index p (plus: p >= 0, minus: p >= 2) as four hyperbolic
/// series at y = pi; both sides are computed numerically.
VerificationReport contour_identity_check(BerndtSign sign, int p, int tolerance_digits, const NumericContext& ctx);

/// The series a DiffExpr family stands for, in sum_hyperbolic's shapes.
HyperbolicSeries family_series(CoshFamily f, int p);
HyperbolicSeries family_series(SinhFamily f, int p);

/// Evaluates the family's DiffExpr at x0 through the 2F1 z-derivatives and
/// compares it with the series summed at y(x0) from the AGM.
VerificationReport generic_x_check(CoshFamily f, int p, const BigFloat& x0, int tolerance_digits,
                                   const SeriesTables& tables, const NumericContext& ctx);
VerificationReport generic_x_check(SinhFamily f, int p, const BigFloat& x0, int tolerance_digits,
                                   const SeriesTables& tables, const NumericContext& ctx);

}  // namespace lemniscate
