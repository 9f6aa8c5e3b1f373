#include "lemniscate/numerics.hpp"

#include "lemniscate/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace lemniscate {

NumericContext NumericContext::with_digits(int digits) {
    if (digits < 10) throw DomainError("precision must be at least 10 digits, got " + std::to_string(digits));
    NumericContext ctx;
    ctx.target_digits = digits;
    return ctx;
}

mpfr_prec_t NumericContext::bits() const {
    return static_cast<mpfr_prec_t>(std::ceil(target_digits * std::log2(10.0))) + guard_bits;
}

BigFloat agm(const BigFloat& a0, const BigFloat& b0, const NumericContext& ctx) {
    if (a0.sign() <= 0 || b0.sign() <= 0) throw DomainError("agm: arguments must be positive");
    const mpfr_prec_t bits = ctx.bits();
    BigFloat a = a0.with_precision(bits), b = b0.with_precision(bits);
    const double stop = -static_cast<double>(bits - 4) * std::log10(2.0);
    for (int i = 0; i < 200; ++i) {
        if ((abs(a - b) / a).log10_abs() < stop) return a;
        BigFloat next_a = ldexp(a + b, -1);
        b = sqrt(a * b);
        a = std::move(next_a);
    }
    throw ConvergenceError("agm: no convergence");
}

BigFloat pi_value(const NumericContext& ctx) { return BigFloat::pi(ctx.bits()); }

BigFloat gamma_quarter(const NumericContext& ctx) {
    static std::mutex mutex;
    static std::map<mpfr_prec_t, BigFloat> cache;
    const mpfr_prec_t bits = ctx.bits();
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(bits); it != cache.end()) return it->second;
    }
    const BigFloat two_pi = BigFloat::pi(bits) * 2L;
    const BigFloat m = agm(BigFloat(1L, bits), sqrt(BigFloat(2L, bits)), ctx);
    BigFloat g = sqrt(two_pi * sqrt(two_pi) / m);
    std::lock_guard lock(mutex);
    cache.emplace(bits, g);
    return g;
}

EllipticData elliptic_data(const BigFloat& x, const NumericContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const BigFloat one(1L, bits);
    if (!(x.sign() > 0 && x < one)) throw DomainError("elliptic_data: need 0 < x < 1");
    const BigFloat xx = x.with_precision(bits);
    const BigFloat pi = BigFloat::pi(bits);
    EllipticData d{xx, BigFloat(bits), BigFloat(bits), BigFloat(bits), BigFloat(bits)};
    d.K = pi / (agm(one, sqrt(one - xx), ctx) * 2L);
    d.Kp = pi / (agm(one, sqrt(xx), ctx) * 2L);
    d.y = pi * d.Kp / d.K;
    d.z = d.K * 2L / pi;
    return d;
}

BigFloat hyp2f1_halfplus(int n, const BigFloat& x, const NumericContext& ctx) {
    if (n < 0) throw DomainError("hyp2f1_halfplus: order must be nonnegative");
    const mpfr_prec_t bits = ctx.bits();
    const BigFloat xx = x.with_precision(bits);
    if (xx.sign() < 0 || !(xx < BigFloat(1L, bits))) throw DomainError("hyp2f1_halfplus: need 0 <= x < 1");
    BigFloat sum(1L, bits), term(1L, bits);
    if (xx.is_zero()) return sum;
    const double xd = xx.to_double();
    const double target = ctx.log10_tolerance();
    // a = n + 1/2, c = n + 1; t_{k+1}/t_k = x (a+k)^2 / ((c+k)(k+1)).
    for (long k = 0; k < ctx.max_series_terms; ++k) {
        const long two_a = 2L * n + 1 + 2 * k;
        term *= xx;
        term *= two_a * two_a;
        term /= 4L * (n + 1 + k) * (k + 1);
        sum += term;
        // Later ratios are bounded by rho = x max(1, (a+k+1)/(k+2)).
        const double rho = xd * std::max(1.0, (n + 0.5 + k + 1) / (k + 2.0));
        if (rho < 1) {
            const double tail = term.log10_abs() + std::log10(rho / (1 - rho));
            if (tail < target + sum.log10_abs()) return sum;
        }
    }
    throw ConvergenceError("hyp2f1_halfplus: series budget exhausted at x = " + xx.str(10));
}

BigFloat z_derivative_numeric(int n, const BigFloat& x, const NumericContext& ctx) {
    BigRational scale(1);
    for (int j = 0; j < n; ++j) scale *= BigRational(2 * j + 1, 2);
    scale = scale * scale / BigRational::factorial(static_cast<unsigned>(n));
    return hyp2f1_halfplus(n, x, ctx) * BigFloat(scale, ctx.bits());
}

JacobiValues jacobi_sn_sd(const BigFloat& u, const BigFloat& x, const NumericContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const BigFloat one(1L, bits);
    if (!(x.sign() > 0 && x < one)) throw DomainError("jacobi_sn_sd: need 0 < x < 1");
    const BigFloat xx = x.with_precision(bits);
    std::vector<BigFloat> a{one}, c{sqrt(xx)};
    BigFloat b = sqrt(one - xx);
    const double stop = -static_cast<double>(bits - 4) * std::log10(2.0);
    while (c.back().log10_abs() >= stop) {
        if (a.size() > 200) throw ConvergenceError("jacobi_sn_sd: Landen scheme did not converge");
        const BigFloat& ai = a.back();
        c.push_back(ldexp(ai - b, -1));
        BigFloat next_b = sqrt(ai * b);
        a.push_back(ldexp(ai + b, -1));
        b = std::move(next_b);
    }
    const std::size_t N = a.size() - 1;
    const BigFloat K = BigFloat::pi(bits) / (a[N] * 2L);
    const BigFloat uu = u.with_precision(bits);
    if (abs(uu) > K + ldexp(K, -(bits - 8))) throw DomainError("jacobi_sn_sd: |u| exceeds K(x)");
    BigFloat phi = ldexp(a[N] * uu, static_cast<long>(N));
    for (std::size_t i = N; i > 0; --i) phi = ldexp(phi + asin(c[i] * sin(phi) / a[i]), -1);
    JacobiValues v{sin(phi), cos(phi), BigFloat(bits), BigFloat(bits)};
    // dn^2 = 1 - x sn^2 is bounded below by 1 - x, so this form loses nothing near u = K.
    v.dn = sqrt(one - xx * v.sn * v.sn);
    v.sd = v.sn / v.dn;
    return v;
}

BigFloat evaluate(const GammaPiExpr& e, const NumericContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const BigFloat g = gamma_quarter(ctx);
    const BigFloat root_pi = sqrt(BigFloat::pi(bits));
    BigFloat sum(bits);
    for (const auto& [key, c] : e.terms()) sum += BigFloat(c, bits) * pow(g, key.first) * pow(root_pi, key.second);
    return sum;
}

namespace {

BigFloat horner(const Poly& p, const BigFloat& x) {
    BigFloat acc(x.precision());
    const auto& cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + BigFloat(*it, x.precision());
    return acc;
}

}  // namespace

BigFloat dexpr_eval_numeric(const DiffExpr& e, const BigFloat& x0, const NumericContext& ctx) {
    NumericContext inner = ctx;
    inner.guard_bits += 32;
    const mpfr_prec_t bits = inner.bits();
    const BigFloat x = x0.with_precision(bits);
    const BigFloat one(1L, bits);
    if (!(x.sign() > 0 && x < one)) throw DomainError("dexpr_eval_numeric: need 0 < x0 < 1");
    std::vector<BigFloat> z;
    for (int k = 0; k <= e.top_order(); ++k) z.push_back(z_derivative_numeric(k, x, inner));
    const BigFloat prefactor = pow(sqrt(x * (one - x)), e.half_power());
    BigFloat sum(bits);
    for (const auto& [mono, coeff] : e.terms()) {
        BigFloat t = horner(coeff.num(), x) / horner(coeff.den(), x);
        for (int k = 0; k < static_cast<int>(z.size()); ++k)
            if (mono.exponent(k) != 0) t *= pow(z[static_cast<std::size_t>(k)], mono.exponent(k));
        sum += t;
    }
    return (sum * prefactor).with_precision(ctx.bits());
}

}  // namespace lemniscate
