#include "lemniscate/quadrature.hpp"

#include "lemniscate/error.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace lemniscate {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<BigFloat, BigFloat> legendre(int n, const BigFloat& x) {
    const mpfr_prec_t bits = x.precision();
    BigFloat p0(1L, bits), p1 = x;
    for (int k = 2; k <= n; ++k) {
        BigFloat p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
    BigFloat dp = (x * p1 - p0) * static_cast<long>(n) / (x * x - BigFloat(1L, bits));
    return {p1, dp};
}

GaussLegendreRule build_rule(int n, mpfr_prec_t bits) {
    GaussLegendreRule rule;
    rule.order = n;
    rule.nodes.assign(static_cast<std::size_t>(n), BigFloat(bits));
    rule.weights.assign(static_cast<std::size_t>(n), BigFloat(bits));
    const double stop = -static_cast<double>(bits - 8) * std::log10(2.0);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        BigFloat x(std::cos(pi * (i + 0.75) / (n + 0.5)), bits);
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre(n, x);
            const BigFloat dx = p / dp;
            x -= dx;
            if (dx.is_zero() || dx.log10_abs() < stop) break;
        }
        auto [p, dp] = legendre(n, x);
        const BigFloat w = BigFloat(2L, bits) / ((BigFloat(1L, bits) - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i), hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = BigFloat(bits);
    return rule;
}

BigFloat panel(const Integrand& f, const GaussLegendreRule& rule, long left, mpfr_prec_t bits) {
    // Map [-1, 1] to [left, left + 1].
    const BigFloat mid = BigFloat(1L, bits) * left + BigFloat(0.5, bits);
    BigFloat sum(bits);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + ldexp(rule.nodes[i], -1));
    return ldexp(sum, -1);
}

int initial_order(const NumericContext& ctx) {
    if (ctx.quad.initial_order > 0) return ctx.quad.initial_order;
    return std::max(12, ctx.target_digits * 2 / 3);
}

}  // namespace

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order, mpfr_prec_t bits) {
    if (order < 1) throw DomainError("gauss_legendre: order must be positive");
    static std::mutex mutex;
    static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const GaussLegendreRule>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({order, bits}); it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const GaussLegendreRule>(build_rule(order, bits));
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(order, bits), rule).first->second;
}

QuadResult integrate_half_line(const Integrand& f, const TailBound& tail, const NumericContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    QuadResult out{BigFloat(bits), 0, 0, 0, 0};
    double scale = -HUGE_VAL;  // log10 of the largest panel contribution so far
    for (long k = 0; k < ctx.quad.max_panels; ++k) {
        int n = initial_order(ctx);
        BigFloat previous = panel(f, *gauss_legendre(n, bits), k, bits);
        for (;;) {
            const int next = n + std::max(4, n / 2);
            if (next > ctx.quad.max_order)
                throw ConvergenceError("quadrature: panel [" + std::to_string(k) + ", " + std::to_string(k + 1) +
                                       "] did not converge by order " + std::to_string(ctx.quad.max_order));
            BigFloat current = panel(f, *gauss_legendre(next, bits), k, bits);
            scale = std::max({scale, current.log10_abs(), out.value.log10_abs()});
            const BigFloat diff = current - previous;
            n = next;
            previous = std::move(current);
            if (diff.is_zero() || diff.log10_abs() < ctx.log10_tolerance(6) + scale) break;
        }
        out.value += previous;
        out.panels = static_cast<int>(k + 1);
        out.max_order_used = std::max(out.max_order_used, n);
        const double X = static_cast<double>(k + 1);
        const double t = tail(X);
        if (t < ctx.log10_tolerance() + std::max(scale, out.value.log10_abs())) {
            out.cutoff = X;
            out.log10_tail = t;
            return out;
        }
    }
    throw ConvergenceError("quadrature: tail bound not reached within the panel budget");
}

namespace {

// log10 of integral_X^inf x^a e^{-c x} dx = a! / c^{a+1} e^{-cX} sum_{j<=a} (cX)^j / j!.
double log10_incomplete_gamma(int a, double c, double X) {
    double sum = 0, term = 1;
    for (int j = 0; j <= a; ++j) {
        if (j > 0) term *= c * X / j;
        sum += term;
    }
    return (std::lgamma(a + 1.0) - (a + 1) * std::log(c) - c * X + std::log(sum)) / std::log(10.0);
}

}  // namespace

QuadResult quad_berndt(int a, BerndtSign sign, const NumericContext& ctx) {
    if (sign == BerndtSign::Plus && a < 0) throw DomainError("quad_berndt: need a >= 0 for the plus sign");
    if (sign == BerndtSign::Minus && a < 6) throw DomainError("quad_berndt: need a >= 6 for the minus sign");
    // cos x + cosh x = 2 (cos^2(x/2) + sinh^2(x/2)) and cos x - cosh x = -2 (sin^2(x/2) + sinh^2(x/2)):
    // both forms are sums of squares, so nothing cancels near x = 0.
    const Integrand f = [a, sign](const BigFloat& x) {
        const BigFloat h = ldexp(x, -1);
        const BigFloat trig = sign == BerndtSign::Plus ? cos(h) : sin(h);
        const BigFloat hyp = sinh(h);
        const BigFloat d = trig * trig + hyp * hyp;
        const BigFloat v = pow(x, a) / ldexp(d * d * d, 3);
        return sign == BerndtSign::Plus ? v : -v;
    };
    // |cos x +- cosh x| >= cosh x - 1 = e^x (1 - e^{-x})^2 / 2.
    const TailBound tail = [a](double X) {
        return std::log10(8.0) - 6 * std::log10(-std::expm1(-X)) + log10_incomplete_gamma(a, 3.0, X);
    };
    return integrate_half_line(f, tail, ctx);
}

QuadResult quad_sanity(SanityKind kind, int n, const NumericContext& ctx) {
    if (kind == SanityKind::Ismail) return ismail_integral(BigFloat(0.5, ctx.bits()), ctx);
    if (n <= 0 || n % 2 == 0) throw DomainError("quad_sanity: Ramanujan's integral needs odd n > 0");
    const Integrand f = [n](const BigFloat& x) {
        const BigFloat h = ldexp(x, -1);
        const BigFloat c = cos(h), s = sinh(h);
        return sin(x * static_cast<long>(n)) / (ldexp(x * (c * c + s * s), 1));
    };
    // |sin(nx)/x| <= 1/X beyond X; same denominator bound as above.
    const TailBound tail = [](double X) {
        return std::log10(2.0) - X / std::log(10.0) - std::log10(X) - 2 * std::log10(-std::expm1(-X));
    };
    return integrate_half_line(f, tail, ctx);
}

QuadResult ismail_integral(const BigFloat& x0, const NumericContext& ctx) {
    const EllipticData e = elliptic_data(x0, ctx);
    // With x = t^2 on both half-lines (sqrt of a negative x turns cos into cosh and back):
    // 2 int_0^inf t [1/(cos(K t) + cosh(K' t)) + 1/(cosh(K t) + cos(K' t))] dt.
    const BigFloat K = e.K, Kp = e.Kp;
    const auto denom = [](const BigFloat& trig_arg, const BigFloat& hyp_arg) {
        const BigFloat c = cos(ldexp(trig_arg, -1)), s = sinh(ldexp(hyp_arg, -1));
        return ldexp(c * c + s * s, 1);
    };
    const Integrand f = [K, Kp, denom](const BigFloat& t) {
        return ldexp(t, 1) * (BigFloat(1L, t.precision()) / denom(K * t, Kp * t) +
                              BigFloat(1L, t.precision()) / denom(Kp * t, K * t));
    };
    const double k = K.to_double(), kp = Kp.to_double();
    const TailBound tail = [k, kp](double X) {
        // 2 t / (cosh(c t) - 1) <= 4 t e^{-c t} / (1 - e^{-c X})^2, integrated from X.
        const auto piece = [X](double c) {
            return std::log10(4.0) - 2 * std::log10(-std::expm1(-c * X)) + log10_incomplete_gamma(1, c, X);
        };
        const double a = piece(kp), b = piece(k);
        const double hi = std::max(a, b);
        return hi + std::log10(std::pow(10.0, a - hi) + std::pow(10.0, b - hi));
    };
    return integrate_half_line(f, tail, ctx);
}

}  // namespace lemniscate
