#include "lemniscate/poly.hpp"

#include "lemniscate/error.hpp"

#include <algorithm>
#include <sstream>

namespace lemniscate {

Poly::Poly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<BigRational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const BigRational& c) { return Poly({c}); }

Poly Poly::monomial(const BigRational& c, unsigned k) {
    if (c.is_zero()) return {};
    std::vector<BigRational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }

const BigRational& Poly::leading() const {
    if (coeffs_.empty()) throw DomainError("Poly: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.is_integer(); });
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Poly Poly::derivative(unsigned order) const {
    Poly r = *this;
    for (unsigned k = 0; k < order && !r.is_zero(); ++k) {
        std::vector<BigRational> d;
        d.reserve(r.coeffs_.size());
        for (std::size_t i = 1; i < r.coeffs_.size(); ++i) d.push_back(r.coeffs_[i] * BigRational(static_cast<long>(i)));
        r = Poly(std::move(d));
    }
    return r;
}

BigRational Poly::operator()(const BigRational& x0) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

Poly Poly::compose(const Poly& q) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
}

Poly Poly::moebius_substitute(unsigned d) const {
    if (degree() > static_cast<int>(d)) {
        throw DomainError("moebius_substitute: degree bound " + std::to_string(d) +
                          " is below the polynomial degree " + std::to_string(degree()));
    }
    // sum_k c_k x^k (x-1)^(d-k)
    const Poly xm1({BigRational(-1), BigRational(1)});
    std::vector<Poly> powers(d + 1);
    powers[0] = constant(1);
    for (unsigned i = 1; i <= d; ++i) powers[i] = powers[i - 1] * xm1;
    Poly out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        out += monomial(coeffs_[k], static_cast<unsigned>(k)) * powers[d - k];
    }
    return out;
}

Poly Poly::reflect(unsigned d) const {
    if (degree() > static_cast<int>(d)) throw DomainError("reflect: degree bound below polynomial degree");
    std::vector<BigRational> v(d + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[d - k] = coeffs_[k];
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DomainError("Poly: division by the zero polynomial");
    Poly rem = *this;
    const int dd = divisor.degree();
    if (rem.degree() < dd) return {Poly{}, rem};
    std::vector<BigRational> quot(static_cast<std::size_t>(rem.degree() - dd + 1));
    const BigRational lead_inv = BigRational(1) / divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const auto shift = static_cast<std::size_t>(rem.degree() - dd);
        const BigRational factor = rem.leading() * lead_inv;
        quot[shift] = factor;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= factor * divisor.coeffs_[i];
        rem.trim();
    }
    return {Poly(std::move(quot)), rem};
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * (BigRational(1) / leading());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

void append_term(std::ostringstream& os, const BigRational& c, std::size_t k, bool first, bool latex) {
    const bool neg = c.sign() < 0;
    const BigRational mag = c.abs();
    if (neg) os << "-";
    else if (!first) os << "+";
    const bool unit = mag == BigRational(1);
    if (!unit || k == 0) {
        if (latex && !mag.is_integer()) {
            os << "\\frac{" << mag.numerator().get_str() << "}{" << mag.denominator().get_str() << "}";
        } else {
            os << mag.str();
        }
    }
    if (k >= 1) os << "x";
    if (k >= 2) {
        if (latex) os << "^{" << k << "}";
        else os << "^" << k;
    }
}

}  // namespace

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        append_term(os, coeffs_[k], k, first, false);
        first = false;
    }
    return os.str();
}

std::string Poly::latex() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        append_term(os, coeffs_[k], k, first, true);
        first = false;
    }
    return os.str();
}

std::vector<std::string> Poly::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.fraction_str());
    return out;
}

Poly Poly::from_strings(const std::vector<std::string>& coefficients) {
    std::vector<BigRational> v;
    v.reserve(coefficients.size());
    for (const auto& s : coefficients) v.push_back(BigRational::parse(s));
    Poly p(std::move(v));
    if (p.coeffs_.size() != coefficients.size()) throw DomainError("Poly: serialized form has trailing zeros");
    return p;
}

}  // namespace lemniscate
