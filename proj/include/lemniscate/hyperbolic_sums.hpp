#pragma once

#include "lemniscate/numerics.hpp"

#include <string>

namespace lemniscate {

/// Shape of the summand. Cosh shapes run over t = (2n-1)/2 with weight
/// (2n-1)^e, sinh shapes over t = n with weight n^e; all carry (-1)^n and
/// start at n = 1.
enum class SeriesShape {
    InvCosh,       // 1 / cosh^k(t y)
    SinhOverCosh,  // sinh(t y) / cosh^k(t y)
    InvSinh,       // 1 / sinh^k(t y)
    CoshOverSinh,  // cosh(t y) / sinh^k(t y)
};

struct HyperbolicSeries {
    SeriesShape shape;
    int power;     // k >= 1 (k >= 2 for the quotient shapes)
    int exponent;  // e, any integer

    std::string str() const;
};

struct SeriesSum {
    BigFloat value;
    long terms = 0;
    /// log10 of the rigorous bound on the neglected tail.
    double log10_tail = 0;
};

/// Partial sum truncated where the majorant C w(n) e^{-kappa t y} of the
/// remaining terms (kappa = power of the denominator minus power of the
/// numerator) certifies a tail below 10^{-(target_digits+5)} relative to the
/// sum. Requires y > 0.
SeriesSum sum_hyperbolic(const HyperbolicSeries& series, const BigFloat& y, const NumericContext& ctx);

/// Same sum truncated after exactly `terms` terms (no tail control).
BigFloat sum_hyperbolic_fixed(const HyperbolicSeries& series, const BigFloat& y, long terms, const NumericContext& ctx);

}  // namespace lemniscate
