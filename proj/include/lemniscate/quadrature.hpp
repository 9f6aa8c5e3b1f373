#pragma once

#include "lemniscate/closed_forms.hpp"
#include "lemniscate/numerics.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace lemniscate {

/// Gauss-Legendre rule on [-1, 1] at a given binary precision.
struct GaussLegendreRule {
    int order = 0;
    std::vector<BigFloat> nodes;
    std::vector<BigFloat> weights;
};

/// Rule of the given order; nodes are Newton-refined in working precision and
/// cached per (order, precision).
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order, mpfr_prec_t bits);

using Integrand = std::function<BigFloat(const BigFloat&)>;
/// log10 of a rigorous bound on |integral from X to infinity|.
using TailBound = std::function<double(double X)>;

struct QuadResult {
    BigFloat value;
    int panels = 0;
    int max_order_used = 0;
    double cutoff = 0;
    double log10_tail = 0;
};

/// Integral over (0, infinity): unit panels [k, k+1], each integrated with
/// Gauss-Legendre whose order grows by half until two successive orders agree,
/// and panels added until the tail bound is negligible. Throws
/// ConvergenceError when a panel exceeds quad.max_order or the panel budget runs out.
QuadResult integrate_half_line(const Integrand& f, const TailBound& tail, const NumericContext& ctx);

/// Integral of x^a / (cos x + cosh x)^3 (plus, a >= 0) or
/// x^a / (cos x - cosh x)^3 (minus, a >= 6) over (0, infinity).
QuadResult quad_berndt(int a, BerndtSign sign, const NumericContext& ctx);

enum class SanityKind { Ramanujan, Ismail };

/// Ramanujan: integral of sin(n x) / (x (cos x + cosh x)) for odd n > 0, equal to pi/4.
/// Ismail: integral over the real line of 1 / (cos(K sqrt x) + cosh(K' sqrt x)) at
/// modulus 1/2 (n is ignored), equal to 2.
QuadResult quad_sanity(SanityKind kind, int n, const NumericContext& ctx);
/// The Ismail integral at an arbitrary modulus x0 in (0, 1).
QuadResult ismail_integral(const BigFloat& x0, const NumericContext& ctx);

}  // namespace lemniscate
