#include "lemniscate/bigfloat.hpp"

#include "lemniscate/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lemniscate {

BigFloat::BigFloat(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get().get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t bits) {
    BigFloat out(bits);
    char* end = nullptr;
    if (!text.empty()) mpfr_strtofr(out.v_, text.c_str(), &end, 10, MPFR_RNDN);
    if (text.empty() || end != text.c_str() + text.size())
        throw DomainError("cannot parse decimal number '" + text + "'");
    return out;
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
    BigFloat out(bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(mpfr_prec_t bits) const {
    BigFloat out(bits);
    mpfr_set(out.v_, v_, MPFR_RNDN);
    return out;
}

double BigFloat::log10_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long e = 0;
    const double mantissa = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(mantissa)) + static_cast<double>(e) * std::log10(2.0);
}

std::string BigFloat::str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits, 1) - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.is_zero()) throw DomainError("BigFloat: division by zero");
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(long k) {
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(long k) {
    if (k == 0) throw DomainError("BigFloat: division by zero");
    mpfr_div_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
BigFloat unary(const BigFloat& x) {
    BigFloat out(x.precision());
    F(out.get(), x.get(), MPFR_RNDN);
    return out;
}

}  // namespace

BigFloat abs(const BigFloat& x) { return unary<mpfr_abs>(x); }
BigFloat sqrt(const BigFloat& x) {
    if (x.sign() < 0) throw DomainError("BigFloat: sqrt of a negative number");
    return unary<mpfr_sqrt>(x);
}
BigFloat exp(const BigFloat& x) { return unary<mpfr_exp>(x); }
BigFloat log(const BigFloat& x) {
    if (x.sign() <= 0) throw DomainError("BigFloat: log of a non-positive number");
    return unary<mpfr_log>(x);
}
BigFloat sin(const BigFloat& x) { return unary<mpfr_sin>(x); }
BigFloat cos(const BigFloat& x) { return unary<mpfr_cos>(x); }
BigFloat sinh(const BigFloat& x) { return unary<mpfr_sinh>(x); }
BigFloat cosh(const BigFloat& x) { return unary<mpfr_cosh>(x); }
BigFloat asin(const BigFloat& x) { return unary<mpfr_asin>(x); }

BigFloat pow(const BigFloat& x, long k) {
    BigFloat out(x.precision());
    mpfr_pow_si(out.get(), x.get(), k, MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
    BigFloat out(joint(x, y));
    mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
    return out;
}

BigFloat ldexp(const BigFloat& x, long k) {
    BigFloat out(x.precision());
    mpfr_mul_2si(out.get(), x.get(), k, MPFR_RNDN);
    return out;
}

}  // namespace lemniscate
