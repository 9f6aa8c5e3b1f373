#pragma once

#include "lemniscate/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>

namespace lemniscate {

/// RAII wrapper over an MPFR value with its own precision. Binary operations
/// round to the larger precision of the operands; all rounding is to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128);
    BigFloat(long value, mpfr_prec_t bits);
    BigFloat(double value, mpfr_prec_t bits);
    BigFloat(const BigRational& value, mpfr_prec_t bits);
    /// Parses a decimal string such as "3.14159" or "-1.5e-20"; throws DomainError on junk.
    static BigFloat parse(const std::string& text, mpfr_prec_t bits);
    static BigFloat pi(mpfr_prec_t bits);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    /// Same value rounded to `bits`.
    BigFloat with_precision(mpfr_prec_t bits) const;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// log10 |value|, -inf for zero; safe far outside the double range.
    double log10_abs() const;

    /// Scientific notation with `digits` significant digits, e.g. "1.25e-3".
    std::string str(int digits) const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    BigFloat& operator*=(long k);
    BigFloat& operator/=(long k);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend BigFloat operator*(BigFloat a, long k) { return a *= k; }
    friend BigFloat operator*(long k, BigFloat a) { return a *= k; }
    friend BigFloat operator/(BigFloat a, long k) { return a /= k; }
    BigFloat operator-() const;

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(20); }

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat asin(const BigFloat& x);
BigFloat pow(const BigFloat& x, long k);
BigFloat pow(const BigFloat& x, const BigFloat& y);
/// x * 2^k, exact.
BigFloat ldexp(const BigFloat& x, long k);

}  // namespace lemniscate
