#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace lemniscate {

/// Exact rational number, always in lowest terms with a positive denominator.
/// Backed by GMP's mpq_class.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    BigRational(const mpz_class& num, const mpz_class& den);
    BigRational(long num, long den);
    explicit BigRational(const mpz_class& integer) : value_(integer) {}
    explicit BigRational(mpq_class value);

    /// Parses "n" or "n/d" (decimal integers, optional leading sign).
    static BigRational parse(std::string_view text);

    static BigRational factorial(unsigned n);
    static BigRational binomial(unsigned n, unsigned k);
    /// 2^e for any integer e.
    static BigRational pow2(long e);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& get() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    BigRational pow(long e) const;
    BigRational abs() const;

    /// "n/d", or "n" when the denominator is 1.
    std::string str() const;
    /// Always "n/d" (the serialization form).
    std::string fraction_str() const;
    double to_double() const { return value_.get_d(); }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

}  // namespace lemniscate
