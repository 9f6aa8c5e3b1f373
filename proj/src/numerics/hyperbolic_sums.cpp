#include "lemniscate/hyperbolic_sums.hpp"

#include "lemniscate/error.hpp"

#include <cmath>

namespace lemniscate {

std::string HyperbolicSeries::str() const {
    const bool cosh_shape = shape == SeriesShape::InvCosh || shape == SeriesShape::SinhOverCosh;
    const std::string w = cosh_shape ? "(2n-1)" : "n";
    const std::string t = cosh_shape ? "((2n-1)y/2)" : "(ny)";
    std::string num;
    if (shape == SeriesShape::SinhOverCosh) num = "sinh" + t;
    if (shape == SeriesShape::CoshOverSinh) num = "cosh" + t;
    const std::string den = std::string(cosh_shape ? "cosh" : "sinh") + (power == 1 ? "" : "^" + std::to_string(power)) + t;
    return "sum_{n>=1} (-1)^n " + w + "^" + std::to_string(exponent) + (num.empty() ? "" : " " + num) + " / " + den;
}

namespace {

bool is_cosh_shape(SeriesShape s) { return s == SeriesShape::InvCosh || s == SeriesShape::SinhOverCosh; }
bool has_numerator(SeriesShape s) { return s == SeriesShape::SinhOverCosh || s == SeriesShape::CoshOverSinh; }

void validate(const HyperbolicSeries& s) {
    if (s.power < 1 || (has_numerator(s.shape) && s.power < 2))
        throw DomainError("sum_hyperbolic: bad denominator power for " + s.str());
}

BigFloat term(const HyperbolicSeries& s, long n, const BigFloat& y, mpfr_prec_t bits) {
    const bool cosh_shape = is_cosh_shape(s.shape);
    const long w = cosh_shape ? 2 * n - 1 : n;
    BigFloat t = cosh_shape ? ldexp(y * w, -1) : y * w;
    BigFloat den = pow(cosh_shape ? cosh(t) : sinh(t), s.power);
    BigFloat value = pow(BigFloat(w, bits), s.exponent) / den;
    if (s.shape == SeriesShape::SinhOverCosh) value *= sinh(t);
    if (s.shape == SeriesShape::CoshOverSinh) value *= cosh(t);
    return n % 2 == 0 ? value : -value;
}

// log10 of a bound on sum_{n > N} |term_n|, using |term_n| <= C w(n)^e e^{-kappa t_n y}.
double log10_tail(const HyperbolicSeries& s, long N, double y) {
    const bool cosh_shape = is_cosh_shape(s.shape);
    const int kappa = s.power - (has_numerator(s.shape) ? 1 : 0);
    // cosh t >= e^t / 2; sinh t >= e^t (1 - e^{-2y}) / 2 for t >= y; |sinh t|, cosh t <= e^t.
    const double log_c = s.power * std::log(2.0) - (cosh_shape ? 0.0 : s.power * std::log1p(-std::exp(-2 * y)));
    const double step = cosh_shape ? 2.0 : 1.0;  // growth of w per index
    const double rate = kappa * y;  // t grows by 1 per index in both shapes
    const auto w = [&](long n) { return cosh_shape ? 2.0 * n - 1 : static_cast<double>(n); };
    const auto t = [&](long n) { return cosh_shape ? (2.0 * n - 1) / 2 : static_cast<double>(n); };
    const long first = N + 1;
    // For e >= 0 the ratio of consecutive majorant terms decreases in n, so its value at
    // the first neglected index bounds all later ones; for e < 0 the weight factor is below 1.
    const double log_ratio = std::max(0, s.exponent) * std::log((w(first) + step) / w(first)) - rate;
    if (log_ratio >= 0) return HUGE_VAL;
    const double log_first = log_c + s.exponent * std::log(w(first)) - rate * t(first);
    return (log_first - std::log1p(-std::exp(log_ratio))) / std::log(10.0);
}

}  // namespace

SeriesSum sum_hyperbolic(const HyperbolicSeries& s, const BigFloat& y, const NumericContext& ctx) {
    validate(s);
    if (y.sign() <= 0) throw DomainError("sum_hyperbolic: need y > 0");
    const mpfr_prec_t bits = ctx.bits();
    const BigFloat yy = y.with_precision(bits);
    const double yd = yy.to_double();
    SeriesSum out{BigFloat(bits), 0, 0};
    for (long n = 1; n <= ctx.max_series_terms; ++n) {
        out.value += term(s, n, yy, bits);
        out.terms = n;
        const double tail = log10_tail(s, n, yd);
        const double scale = std::max(out.value.log10_abs(), -static_cast<double>(ctx.target_digits));
        if (tail < ctx.log10_tolerance() + scale) {
            out.log10_tail = tail;
            return out;
        }
    }
    throw ConvergenceError("sum_hyperbolic: term budget exhausted for " + s.str());
}

BigFloat sum_hyperbolic_fixed(const HyperbolicSeries& s, const BigFloat& y, long terms, const NumericContext& ctx) {
    validate(s);
    const mpfr_prec_t bits = ctx.bits();
    const BigFloat yy = y.with_precision(bits);
    BigFloat sum(bits);
    for (long n = 1; n <= terms; ++n) sum += term(s, n, yy, bits);
    return sum;
}

}  // namespace lemniscate
