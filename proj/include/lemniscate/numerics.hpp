#pragma once

#include "lemniscate/bigfloat.hpp"
#include "lemniscate/diff_expr.hpp"
#include "lemniscate/gamma_pi.hpp"

namespace lemniscate {

struct QuadratureConfig {
    /// Gauss-Legendre order of the first attempt on each panel; 0 picks one from the target.
    int initial_order = 0;
    /// Largest order tried before a panel is declared unconverged.
    int max_order = 640;
    /// Unit-width panels allowed before the tail bound must take over.
    int max_panels = 2000;
};

/// Precision settings passed explicitly to every numeric routine.
struct NumericContext {
    int target_digits = 40;
    int guard_bits = 50;
    long max_series_terms = 2'000'000;
    QuadratureConfig quad;

    /// Validated context; throws DomainError when target_digits < 10.
    static NumericContext with_digits(int digits);
    /// Working precision: target_digits * log2(10) + guard_bits.
    mpfr_prec_t bits() const;
    /// Relative tolerance 10^{-(target_digits + extra)} as a log10 exponent.
    double log10_tolerance(int extra = 5) const { return -static_cast<double>(target_digits + extra); }
};

/// Arithmetic-geometric mean of a, b > 0, iterated until |a_n - b_n| drops
/// below the working precision.
BigFloat agm(const BigFloat& a, const BigFloat& b, const NumericContext& ctx);
BigFloat pi_value(const NumericContext& ctx);
/// Gamma(1/4) = sqrt((2 pi)^{3/2} / agm(1, sqrt 2)).
BigFloat gamma_quarter(const NumericContext& ctx);

/// Ramanujan's quantities at modulus x = k^2.
struct EllipticData {
    BigFloat x, K, Kp, y, z;
};
/// K = pi / (2 agm(1, sqrt(1-x))), K' = pi / (2 agm(1, sqrt x)), y = pi K'/K, z = 2K/pi.
EllipticData elliptic_data(const BigFloat& x, const NumericContext& ctx);

/// 2F1(1/2+n, 1/2+n; 1+n; x) by its Taylor series with a geometric tail
/// bound. Requires 0 <= x < 1; throws ConvergenceError when more than
/// max_series_terms terms would be needed.
BigFloat hyp2f1_halfplus(int n, const BigFloat& x, const NumericContext& ctx);
/// d^n z / dx^n = ((1/2)_n^2 / n!) 2F1(1/2+n, 1/2+n; 1+n; x).
BigFloat z_derivative_numeric(int n, const BigFloat& x, const NumericContext& ctx);

struct JacobiValues {
    BigFloat sn, cn, dn, sd;
};
/// sn, cn, dn and sd = sn/dn at modulus x = k^2 by the descending Landen
/// (AGM) scheme. Requires 0 < x < 1 and |u| <= K(x).
JacobiValues jacobi_sn_sd(const BigFloat& u, const BigFloat& x, const NumericContext& ctx);

/// Numeric value of an exact Gamma(1/4)-pi expression.
BigFloat evaluate(const GammaPiExpr& e, const NumericContext& ctx);

/// Numeric value of a differential expression at x0 in (0, 1), with z and its
/// derivatives from the hypergeometric series.
BigFloat dexpr_eval_numeric(const DiffExpr& e, const BigFloat& x0, const NumericContext& ctx);

}  // namespace lemniscate
