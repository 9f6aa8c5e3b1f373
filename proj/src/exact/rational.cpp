#include "lemniscate/rational.hpp"

#include "lemniscate/error.hpp"

#include <utility>

namespace lemniscate {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("BigRational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return BigRational(mpz_class(std::string(text), 10));
        }
        return BigRational(mpz_class(std::string(text.substr(0, slash)), 10),
                           mpz_class(std::string(text.substr(slash + 1)), 10));
    } catch (const std::invalid_argument&) {
        throw DomainError("BigRational: cannot parse '" + std::string(text) + "'");
    }
}

BigRational BigRational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRational(f);
}

BigRational BigRational::binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return BigRational(b);
}

BigRational BigRational::pow2(long e) {
    mpz_class p(1);
    const unsigned long shift = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), shift);
    return e < 0 ? BigRational(mpz_class(1), p) : BigRational(p);
}

BigRational BigRational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw DomainError("BigRational: zero to a negative power");
        return BigRational(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(n, d);
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string BigRational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::fraction_str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace lemniscate
