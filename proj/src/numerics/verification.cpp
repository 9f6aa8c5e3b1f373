#include "lemniscate/verification.hpp"

#include "lemniscate/error.hpp"
#include "lemniscate/quadrature.hpp"

#include <chrono>
#include <cmath>

namespace lemniscate {

double digits_of_agreement(const BigFloat& value, const BigFloat& reference, const NumericContext& ctx) {
    const double cap = ctx.target_digits + ctx.guard_bits * std::log10(2.0);
    const BigFloat dev = abs(value - reference);
    if (dev.is_zero()) return cap;
    // References within 10^-target of zero are compared absolutely.
    const bool absolute = reference.is_zero() || reference.log10_abs() < -ctx.target_digits;
    const double d = absolute ? -dev.log10_abs() : -(dev.log10_abs() - reference.log10_abs());
    return std::min(d, cap);
}

void fill_report(VerificationReport& r, const BigFloat& numeric, const BigFloat& reference, int tolerance_digits,
                 const NumericContext& ctx) {
    const int shown = ctx.target_digits;
    const BigFloat dev = abs(numeric - reference);
    r.numeric_value = numeric.str(shown);
    r.reference_value = reference.str(shown);
    r.deviation = dev.str(6);
    r.rel_deviation = reference.is_zero() ? "inf" : (dev / abs(reference)).str(6);
    r.digits_agreed = digits_of_agreement(numeric, reference, ctx);
    r.tolerance_digits = tolerance_digits;
    r.pass = r.digits_agreed >= tolerance_digits;
}

VerificationReport compare(const GammaPiExpr& symbolic, const BigFloat& numeric, int tolerance_digits,
                           const NumericContext& ctx) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.kind = "compare";
    r.symbolic = symbolic;
    r.identity = symbolic.str();
    fill_report(r, evaluate(symbolic, ctx), numeric, tolerance_digits, ctx);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

FamilySeries family_series(ClosedFamily f, int m) {
    const int e = family_exponent(f, m);
    const int k = family_hyperbolic_power(f);
    // The cosh closed forms run over n >= 0 with (2n+1); the computed series
    // over n >= 1 with (2n-1) is their negative.
    switch (f) {
        case ClosedFamily::Cosh3Minus:
        case ClosedFamily::Cosh3Plus:
        case ClosedFamily::Cosh5: return {{SeriesShape::InvCosh, k, e}, -1};
        case ClosedFamily::Cosh4: return {{SeriesShape::SinhOverCosh, k, e}, -1};
        case ClosedFamily::Sinh3Minus:
        case ClosedFamily::Sinh3Plus:
        case ClosedFamily::Sinh5: return {{SeriesShape::InvSinh, k, e}, 1};
        case ClosedFamily::Sinh4: return {{SeriesShape::CoshOverSinh, k, e}, 1};
    }
    throw DomainError("family_series: bad family");
}

BigFloat closed_family_numeric(ClosedFamily f, int m, const NumericContext& ctx) {
    const FamilySeries fs = family_series(f, m);
    BigFloat v = sum_hyperbolic(fs.series, pi_value(ctx), ctx).value;
    return fs.sign < 0 ? -v : v;
}

namespace {

BigFloat sum_at_pi(SeriesShape shape, int power, int exponent, const NumericContext& ctx) {
    return sum_hyperbolic({shape, power, exponent}, pi_value(ctx), ctx).value;
}

}  // namespace

VerificationReport contour_identity_check(BerndtSign sign, int p, int tolerance_digits, const NumericContext& ctx) {
    const auto start = std::chrono::steady_clock::now();
    const int min_p = sign == BerndtSign::Plus ? 0 : 2;
    if (p < min_p) throw DomainError("contour_identity_check: index below " + std::to_string(min_p));
    const mpfr_prec_t bits = ctx.bits();
    const BigFloat pi = pi_value(ctx);
    const BigFloat pi2 = pi * pi;
    VerificationReport r;
    r.id = "contour-" + std::string(to_string(sign)) + "-p" + std::to_string(p);
    r.kind = "contour_identity";
    const long P = p;
    BigFloat lhs(bits), rhs(bits);
    if (sign == BerndtSign::Plus) {
        r.identity = "(-4)^{p+1}/pi^{4p} * int x^{4p+1}/(cos x + cosh x)^3 = four cosh series at y = pi";
        const BigFloat integral = quad_berndt(4 * p + 1, sign, ctx).value;
        lhs = integral * pow(BigFloat(-4L, bits), p + 1) / pow(pi, 4L * p);
        rhs = sum_at_pi(SeriesShape::InvCosh, 3, 4 * p + 1, ctx) * pi2 * BigFloat(2.5, bits) -
              sum_at_pi(SeriesShape::SinhOverCosh, 4, 4 * p, ctx) * pi * (3 * (4 * P + 1)) -
              sum_at_pi(SeriesShape::InvCosh, 5, 4 * p + 1, ctx) * pi2 * 3L;
        // The first series carries the factor 4p(4p+1), which vanishes at p = 0.
        if (p > 0) rhs += sum_at_pi(SeriesShape::InvCosh, 3, 4 * p - 1, ctx) * (4 * P * (4 * P + 1));
    } else {
        r.identity = "(-1)^{p-1}/(pi^{4p-2} 2^{2p-3}) * int x^{4p-1}/(cos x - cosh x)^3 = four sinh series at y = pi";
        const BigFloat integral = quad_berndt(4 * p - 1, sign, ctx).value;
        lhs = ldexp(integral / pow(pi, 4L * p - 2), -(2 * p - 3));
        if ((p - 1) % 2 != 0) lhs = -lhs;
        rhs = sum_at_pi(SeriesShape::InvSinh, 3, 4 * p - 3, ctx) * (-(4 * P - 1) * (4 * P - 2) / 2) +
              sum_at_pi(SeriesShape::CoshOverSinh, 4, 4 * p - 2, ctx) * pi * (3 * (4 * P - 1)) -
              sum_at_pi(SeriesShape::InvSinh, 3, 4 * p - 1, ctx) * pi2 * 5L -
              sum_at_pi(SeriesShape::InvSinh, 5, 4 * p - 1, ctx) * pi2 * 6L;
    }
    fill_report(r, lhs, rhs, tolerance_digits, ctx);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

HyperbolicSeries family_series(CoshFamily f, int p) {
    const SeriesShape shape = f == CoshFamily::S4 ? SeriesShape::SinhOverCosh : SeriesShape::InvCosh;
    return {shape, hyperbolic_power(f), exponent_of(f, p)};
}

HyperbolicSeries family_series(SinhFamily f, int p) {
    const SeriesShape shape = f == SinhFamily::K4 ? SeriesShape::CoshOverSinh : SeriesShape::InvSinh;
    return {shape, hyperbolic_power(f), exponent_of(f, p)};
}

namespace {

template <class Family>
VerificationReport generic_x_impl(Family f, int p, const BigFloat& x0, int tolerance_digits, const DiffExpr& e,
                                  const NumericContext& ctx) {
    const auto start = std::chrono::steady_clock::now();
    const HyperbolicSeries series = family_series(f, p);
    VerificationReport r;
    r.id = "generic-x-" + std::string(to_string(f)) + "-p" + std::to_string(p) + "-x" + x0.str(3);
    r.kind = "generic_x";
    r.identity = series.str() + " at x = " + x0.str(6);
    const BigFloat symbolic = dexpr_eval_numeric(e, x0, ctx);
    const BigFloat direct = sum_hyperbolic(series, elliptic_data(x0, ctx).y, ctx).value;
    fill_report(r, symbolic, direct, tolerance_digits, ctx);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

VerificationReport generic_x_check(CoshFamily f, int p, const BigFloat& x0, int tolerance_digits,
                                   const SeriesTables& tables, const NumericContext& ctx) {
    return generic_x_impl(f, p, x0, tolerance_digits, cosh_family_expr(f, p, tables), ctx);
}

VerificationReport generic_x_check(SinhFamily f, int p, const BigFloat& x0, int tolerance_digits,
                                   const SeriesTables& tables, const NumericContext& ctx) {
    return generic_x_impl(f, p, x0, tolerance_digits, sinh_family_expr(f, p, tables), ctx);
}

}  // namespace lemniscate
