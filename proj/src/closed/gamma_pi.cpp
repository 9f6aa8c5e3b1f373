#include "lemniscate/gamma_pi.hpp"

#include "lemniscate/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace lemniscate {

GammaPiExpr::GammaPiExpr(const BigRational& c) {
    if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

GammaPiExpr GammaPiExpr::term(const BigRational& c, int gamma_exp, int pi_half_exp) {
    GammaPiExpr e;
    e.add_term({gamma_exp, pi_half_exp}, c);
    return e;
}

GammaPiExpr GammaPiExpr::monomial(long num, long den, int gamma_exp, int pi_exp) {
    return term(BigRational(num, den), gamma_exp, 2 * pi_exp);
}

BigRational GammaPiExpr::coefficient(int gamma_exp, int pi_half_exp) const {
    auto it = terms_.find({gamma_exp, pi_half_exp});
    return it == terms_.end() ? BigRational(0) : it->second;
}

void GammaPiExpr::add_term(const Key& k, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GammaPiExpr& GammaPiExpr::operator+=(const GammaPiExpr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

GammaPiExpr& GammaPiExpr::operator-=(const GammaPiExpr& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

GammaPiExpr& GammaPiExpr::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

GammaPiExpr operator*(const GammaPiExpr& a, const GammaPiExpr& b) {
    GammaPiExpr out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

GammaPiExpr GammaPiExpr::operator-() const {
    GammaPiExpr out = *this;
    for (auto& [k, v] : out.terms_) v = -v;
    return out;
}

GammaPiExpr GammaPiExpr::inverse() const {
    if (terms_.size() != 1) throw DomainError("GammaPiExpr: only single-term values can be inverted");
    const auto& [k, c] = *terms_.begin();
    return term(BigRational(1) / c, -k.first, -k.second);
}

GammaPiExpr GammaPiExpr::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    GammaPiExpr out(1);
    GammaPiExpr base = *this;
    while (k > 0) {
        if (k & 1) out = out * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return out;
}

std::vector<std::pair<GammaPiExpr::Key, BigRational>> GammaPiExpr::ordered_terms() const {
    return {terms_.begin(), terms_.end()};
}

namespace {

// One term split into the factors that end up above and below the fraction bar.
struct Factors {
    mpz_class num;        // |numerator of c|
    mpz_class odd_den;    // odd part of the denominator of c
    unsigned long two_den = 0;
    int gamma_up = 0, gamma_down = 0;
    int pi_up = 0, pi_down = 0;  // doubled exponents
};

Factors split(const GammaPiExpr::Key& k, const BigRational& c) {
    Factors f;
    f.num = abs(c.numerator());
    f.odd_den = c.denominator();
    f.two_den = mpz_scan1(f.odd_den.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(f.odd_den.get_mpz_t(), f.odd_den.get_mpz_t(), f.two_den);
    (k.first >= 0 ? f.gamma_up : f.gamma_down) = std::abs(k.first);
    (k.second >= 0 ? f.pi_up : f.pi_down) = std::abs(k.second);
    return f;
}

struct Style {
    std::string (*power)(const std::string& base, long e);
    std::string (*pi_power)(int h);
    std::string gamma;
    std::string mul;   // between coefficient/2-power and symbols
    std::string dot;   // between the odd part and the power of two
};

std::string superscript(long e) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char ch : std::to_string(e)) s += digits[ch - '0'];
    return s;
}

std::string text_power(const std::string& base, long e) { return e == 1 ? base : base + superscript(e); }
std::string text_pi(int h) {
    if (h == 1) return "√π";
    if (h % 2 == 0) return text_power("π", h / 2);
    return "π^(" + std::to_string(h) + "/2)";
}

std::string ascii_power(const std::string& base, long e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
}
std::string ascii_pi(int h) {
    if (h == 1) return "sqrt(pi)";
    if (h % 2 == 0) return ascii_power("pi", h / 2);
    return "pi^(" + std::to_string(h) + "/2)";
}

std::string latex_power(const std::string& base, long e) {
    return e == 1 ? base : base + "^{" + std::to_string(e) + "}";
}
std::string latex_pi(int h) {
    if (h == 1) return "\\sqrt{\\pi}";
    if (h % 2 == 0) return latex_power("\\pi", h / 2);
    return "\\pi^{" + std::to_string(h) + "/2}";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> upper_parts(const Factors& f, const Style& s) {
    std::vector<std::string> parts;
    if (f.num != 1) parts.push_back(f.num.get_str());
    if (f.gamma_up) parts.push_back(s.power(s.gamma, f.gamma_up));
    if (f.pi_up) parts.push_back(s.pi_power(f.pi_up));
    return parts;
}

std::vector<std::string> lower_parts(const Factors& f, const Style& s) {
    std::vector<std::string> parts;
    std::string numeric;
    if (f.odd_den != 1) numeric = f.odd_den.get_str();
    if (f.two_den) {
        if (!numeric.empty()) numeric += s.dot;
        numeric += s.power("2", static_cast<long>(f.two_den));
    }
    if (!numeric.empty()) parts.push_back(numeric);
    if (f.gamma_down) parts.push_back(s.power(s.gamma, f.gamma_down));
    if (f.pi_down) parts.push_back(s.pi_power(f.pi_down));
    return parts;
}

std::string render_plain(const GammaPiExpr& e, const Style& s) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : e.ordered_terms()) {
        const Factors f = split(k, c);
        const auto up = upper_parts(f, s);
        const auto down = lower_parts(f, s);
        std::string body = up.empty() ? "1" : join(up, s.mul);
        if (!down.empty()) {
            const std::string d = join(down, s.mul);
            body += down.size() == 1 && d.find(s.dot) == std::string::npos ? "/" + d : "/(" + d + ")";
        }
        if (first) out += c.sign() < 0 ? "-" : "";
        else out += c.sign() < 0 ? " - " : " + ";
        out += body;
        first = false;
    }
    return out;
}

}  // namespace

std::string GammaPiExpr::str() const {
    static const Style style{text_power, text_pi, "Γ", "", "·"};
    return render_plain(*this, style);
}

std::string GammaPiExpr::ascii() const {
    static const Style style{ascii_power, ascii_pi, "G", "*", "*"};
    return render_plain(*this, style);
}

std::string GammaPiExpr::latex() const {
    static const Style style{latex_power, latex_pi, "\\Gamma", "", "\\cdot "};
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : ordered_terms()) {
        const Factors f = split(k, c);
        const auto up = upper_parts(f, style);
        const auto down = lower_parts(f, style);
        const std::string num = up.empty() ? "1" : join(up, "");
        if (c.sign() < 0) out += "-";
        else if (!first) out += "+";
        out += down.empty() ? num : "\\frac{" + num + "}{" + join(down, "") + "}";
        first = false;
    }
    return out;
}

}  // namespace lemniscate
