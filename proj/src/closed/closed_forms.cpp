#include "lemniscate/closed_forms.hpp"

#include "lemniscate/error.hpp"
#include "lemniscate/families.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace lemniscate {

GammaPiExpr z_derivative_value(int n) {
    if (n < 0 || n > kDerivativeSlots) throw DomainError("z_derivative_value: order out of range");
    // z^{(n)}(1/2) = (1/2)_n^2 sqrt(pi) / Gamma(n/2 + 3/4)^2, with Gamma(3/4)^2 = 2 pi^2 / Gamma^2.
    BigRational rising(1);
    for (int j = 0; j < n; ++j) rising *= BigRational(2 * j + 1, 2);
    BigRational shift(1);
    if (n % 2 == 0) {
        for (int j = 0; j < n / 2; ++j) shift *= BigRational(4 * j + 3, 4);
        return GammaPiExpr::term(rising * rising / (shift * shift * BigRational(2)), 2, -3);
    }
    for (int j = 0; j <= n / 2; ++j) shift *= BigRational(4 * j + 1, 4);
    return GammaPiExpr::term(rising * rising / (shift * shift), -2, 1);
}

GammaPiExpr eval_at_half(const DiffExpr& e) {
    static const std::array<GammaPiExpr, kDerivativeSlots + 1> z_values = [] {
        std::array<GammaPiExpr, kDerivativeSlots + 1> v;
        for (int n = 0; n <= kDerivativeSlots; ++n) v[static_cast<std::size_t>(n)] = z_derivative_value(n);
        return v;
    }();
    const BigRational half(1, 2);
    const BigRational prefactor = BigRational::pow2(-e.half_power());
    GammaPiExpr out;
    for (const auto& [mono, coeff] : e.terms()) {
        GammaPiExpr t(coeff(half) * prefactor);
        for (int order = 0; order <= kDerivativeSlots; ++order) {
            const int k = mono.exponent(order);
            if (k != 0) t = t * z_values[static_cast<std::size_t>(order)].pow(k);
        }
        out += t;
    }
    return out;
}

std::string_view to_string(ClosedFamily f) {
    switch (f) {
        case ClosedFamily::Cosh3Minus: return "cosh3_4m-1";
        case ClosedFamily::Cosh3Plus: return "cosh3_4m+1";
        case ClosedFamily::Cosh4: return "cosh4_4m";
        case ClosedFamily::Cosh5: return "cosh5_4m+1";
        case ClosedFamily::Sinh3Minus: return "sinh3_4m-3";
        case ClosedFamily::Sinh3Plus: return "sinh3_4m-1";
        case ClosedFamily::Sinh4: return "sinh4_4m-2";
        case ClosedFamily::Sinh5: return "sinh5_4m-1";
    }
    return "?";
}

ClosedFamily closed_family_from_string(std::string_view name) {
    for (ClosedFamily f : kAllClosedFamilies)
        if (name == to_string(f)) return f;
    if (name == "cosh3") return ClosedFamily::Cosh3Minus;
    if (name == "cosh4") return ClosedFamily::Cosh4;
    if (name == "cosh5") return ClosedFamily::Cosh5;
    if (name == "sinh3") return ClosedFamily::Sinh3Minus;
    if (name == "sinh4") return ClosedFamily::Sinh4;
    if (name == "sinh5") return ClosedFamily::Sinh5;
    throw DomainError("unknown series family '" + std::string(name) + "'");
}

bool is_cosh_family(ClosedFamily f) {
    switch (f) {
        case ClosedFamily::Cosh3Minus:
        case ClosedFamily::Cosh3Plus:
        case ClosedFamily::Cosh4:
        case ClosedFamily::Cosh5: return true;
        default: return false;
    }
}

int family_exponent(ClosedFamily f, int m) {
    switch (f) {
        case ClosedFamily::Cosh3Minus: return 4 * m - 1;
        case ClosedFamily::Cosh3Plus: return 4 * m + 1;
        case ClosedFamily::Cosh4: return 4 * m;
        case ClosedFamily::Cosh5: return 4 * m + 1;
        case ClosedFamily::Sinh3Minus: return 4 * m - 3;
        case ClosedFamily::Sinh3Plus: return 4 * m - 1;
        case ClosedFamily::Sinh4: return 4 * m - 2;
        case ClosedFamily::Sinh5: return 4 * m - 1;
    }
    return 0;
}

int family_hyperbolic_power(ClosedFamily f) {
    switch (f) {
        case ClosedFamily::Cosh3Minus:
        case ClosedFamily::Cosh3Plus:
        case ClosedFamily::Sinh3Minus:
        case ClosedFamily::Sinh3Plus: return 3;
        case ClosedFamily::Cosh4:
        case ClosedFamily::Sinh4: return 4;
        case ClosedFamily::Cosh5:
        case ClosedFamily::Sinh5: return 5;
    }
    return 0;
}

int family_min_index(ClosedFamily f) { return is_cosh_family(f) ? 1 : 2; }

std::optional<int> family_index_for_exponent(ClosedFamily f, int e) {
    const int offset = e - family_exponent(f, 0);
    if (offset <= 0 || offset % 4 != 0) return std::nullopt;
    return offset / 4;
}

std::string_view to_string(BerndtSign s) { return s == BerndtSign::Plus ? "plus" : "minus"; }

int required_table_index(int m) { return 2 * m + 1; }

namespace {

using G = GammaPiExpr;

BigRational Q(long n, long d = 1) { return BigRational(n, d); }
BigRational fact(int n) { return BigRational::factorial(static_cast<unsigned>(n)); }
BigRational sign_pow(int m) { return m % 2 == 0 ? BigRational(1) : BigRational(-1); }

G gamma_pi(const BigRational& c, int a, int pi_exp) { return G::term(c, a, 2 * pi_exp); }

const BigRational kHalf(1, 2);

BigRational p_at(const SeriesTables& t, int n, unsigned k) { return t.p(n).derivative(k)(kHalf); }
BigRational R_at(const SeriesTables& t, int n, unsigned k) { return t.R(n).derivative(k)(kHalf); }

void require_tables(const SeriesTables& t, int m) {
    if (t.max_index() < required_table_index(m))
        throw DomainError("series tables too short for index " + std::to_string(m));
}

G cosh_theorem(ClosedFamily f, int m, const SeriesTables& t) {
    const auto p = [&](int n, unsigned k = 0) { return p_at(t, n, k); };
    const long mm = m;
    switch (f) {
        case ClosedFamily::Cosh3Plus: {
            const G bracket = gamma_pi(p(4 * m + 1), 0, 1) + G((4 * mm + 1) * p(4 * m - 1, 1));
            return gamma_pi(BigRational::pow2(-(4 * m + 5)), 8 * m + 4, -(6 * m + 4)) * bracket;
        }
        case ClosedFamily::Cosh3Minus: {
            const BigRational inner = (4 * mm - 6) * p(4 * m - 3) + p(4 * m - 3, 2);
            const G braces = gamma_pi(128 * (8 * mm * mm - 6 * mm + 1) * p(4 * m - 3), 0, 4) + gamma_pi(inner, 8, 0);
            return gamma_pi(-BigRational::pow2(-(4 * m + 7)), 8 * m - 4, -(6 * m + 3)) * braces;
        }
        case ClosedFamily::Cosh4: {
            const BigRational inner = (4 * mm - 6) * p(4 * m - 3) + p(4 * m - 3, 2);
            const G bracket = gamma_pi(p(4 * m - 1, 1), 0, 1) + G(6 * mm * inner);
            const G braces = G(-256 * mm * (8 * mm * mm - 6 * mm + 1) * p(4 * m - 3)) - gamma_pi(1, 8, -4) * bracket;
            return gamma_pi(BigRational::pow2(-(4 * m + 6)) / 3, 8 * m - 4, -6 * m) * braces;
        }
        case ClosedFamily::Cosh5: {
            const BigRational inner = (4 * mm - 6) * p(4 * m - 3) + p(4 * m - 3, 2);
            const G middle = gamma_pi(9 * p(4 * m + 1), 0, 2) + gamma_pi(10 * (4 * mm + 1) * p(4 * m - 1, 1), 0, 1) +
                             G(6 * mm * (4 * mm + 1) * inner);
            const BigRational last = 8 * (mm - 2) * (6 * mm - 7) * p(4 * m - 3) + 12 * (2 * mm - 5) * p(4 * m - 3, 2) +
                                     p(4 * m - 3, 4);
            const G braces =
                gamma_pi(32768 * mm * (2 * mm - 1) * (4 * mm - 1) * (4 * mm + 1) * p(4 * m - 3), 0, 8) +
                gamma_pi(256, 8, 4) * middle + gamma_pi(last, 16, 0);
            return gamma_pi(BigRational::pow2(-(4 * m + 15)) / 3, 8 * m - 4, -(6 * m + 9)) * braces;
        }
        default: break;
    }
    throw DomainError("cosh_theorem: not a cosh family");
}

G sinh_theorem(ClosedFamily f, int m, const SeriesTables& t) {
    const auto R = [&](int n, unsigned k = 0) { return R_at(t, n, k); };
    const long mm = m;
    switch (f) {
        case ClosedFamily::Sinh3Minus: {
            const G braces = gamma_pi(256 * (mm - 1) * (4 * mm - 3) * R(4 * m - 6), -8, 4) +
                             G(4 * (mm - 3) * R(4 * m - 6) + R(4 * m - 6, 2));
            return gamma_pi(-fact(4 * m - 6) * BigRational::pow2(-(8 * m + 3)), 8 * m, -6 * m) * braces;
        }
        case ClosedFamily::Sinh3Plus: {
            const G braces = G((4 * mm - 1) * R(4 * m - 4, 1)) -
                             gamma_pi(2 * (3 + 2 * mm * (4 * mm - 5)) * R(4 * m - 2), 0, 1);
            return gamma_pi(-fact(4 * m - 4) * BigRational::pow2(-(8 * m + 3)), 8 * m, -(6 * m + 1)) * braces;
        }
        case ClosedFamily::Sinh4: {
            const G braces = gamma_pi(256 * (mm - 1) * (2 * mm - 1) * (4 * mm - 3) * R(4 * m - 6), -8, 3) -
                             G(4 * (mm - 1) * (4 * mm - 5) * R(4 * m - 4, 1)) +
                             gamma_pi(3 * (2 * mm - 1) * (4 * (mm - 3) * R(4 * m - 6) + R(4 * m - 6, 2)), 0, -1);
            return gamma_pi(-fact(4 * m - 6) * BigRational::pow2(-(8 * m + 3)) / 3, 8 * m, -6 * m) * braces;
        }
        case ClosedFamily::Sinh5: {
            const G first = gamma_pi(-fact(4 * m - 1) * R(4 * m - 6) * BigRational::pow2(-(8 * m + 1)) /
                                         BigRational(3 * (4 * mm - 5)),
                                     8 * m - 8, -(6 * m - 2));
            const G bracket = gamma_pi(72 * (mm - 1) * (2 * mm - 1) * (4 * mm - 5) * (4 * mm - 3) * R(4 * m - 2), 0, 2) -
                              gamma_pi(40 * (mm - 1) * (4 * mm - 5) * (4 * mm - 1) * R(4 * m - 4, 1), 0, 1) +
                              G(3 * (8 * mm * mm - 6 * mm + 1) * (4 * (mm - 3) * R(4 * m - 6) + R(4 * m - 6, 2)));
            const BigRational last = 8 * (6 * mm * mm - 37 * mm + 55) * R(4 * m - 6) + 24 * (mm - 4) * R(4 * m - 6, 2) +
                                     R(4 * m - 6, 4);
            const G braces = gamma_pi(256, 0, 4) * bracket + gamma_pi(last, 8, 0);
            return first -
                   gamma_pi(fact(4 * m - 6) * BigRational::pow2(-(8 * m + 13)) / 3, 8 * m, -(6 * m + 6)) * braces;
        }
        default: break;
    }
    throw DomainError("sinh_theorem: not a sinh family");
}

G pipeline(ClosedFamily f, int m, const SeriesTables& t) {
    switch (f) {
        // Family expressions sum over n >= 1 with (2n-1); the reported cosh
        // series run over n >= 0 with (2n+1), which flips the sign.
        case ClosedFamily::Cosh3Minus: return -eval_at_half(cosh_family_expr(CoshFamily::C3, 2 * m - 1, t));
        case ClosedFamily::Cosh3Plus: return -eval_at_half(cosh_family_expr(CoshFamily::C3, 2 * m, t));
        case ClosedFamily::Cosh4: return -eval_at_half(cosh_family_expr(CoshFamily::S4, 2 * m - 1, t));
        case ClosedFamily::Cosh5: return -eval_at_half(cosh_family_expr(CoshFamily::C5, 2 * m - 1, t));
        case ClosedFamily::Sinh3Minus: return eval_at_half(sinh_family_expr(SinhFamily::B3, 2 * m - 3, t));
        case ClosedFamily::Sinh3Plus: return eval_at_half(sinh_family_expr(SinhFamily::B3, 2 * m - 2, t));
        case ClosedFamily::Sinh4: return eval_at_half(sinh_family_expr(SinhFamily::K4, 2 * m - 3, t));
        case ClosedFamily::Sinh5: return eval_at_half(sinh_family_expr(SinhFamily::B5, 2 * m - 3, t));
    }
    throw DomainError("pipeline: bad family");
}

// Tables shared by the convenience overloads; grown on demand.
const SeriesTables& shared_tables(int m) {
    static std::mutex mutex;
    static std::optional<SeriesTables> tables;
    std::lock_guard lock(mutex);
    if (!tables || tables->max_index() < required_table_index(m))
        tables = SeriesTables::generate(std::max(required_table_index(m), 9));
    return *tables;
}

}  // namespace

GammaPiExpr closed_sum(ClosedFamily f, int m, SumRoute route, const SeriesTables& tables) {
    if (m < family_min_index(f))
        throw DomainError(std::string(to_string(f)) + " has no closed form at m = " + std::to_string(m) +
                          " (needs m >= " + std::to_string(family_min_index(f)) + ")");
    require_tables(tables, m);
    if (route == SumRoute::Pipeline) return pipeline(f, m, tables);
    return is_cosh_family(f) ? cosh_theorem(f, m, tables) : sinh_theorem(f, m, tables);
}

GammaPiExpr closed_sum(ClosedFamily f, int m, SumRoute route) {
    if (m < family_min_index(f)) return closed_sum(f, m, route, SeriesTables::generate(1));
    return closed_sum(f, m, route, shared_tables(m));
}

int berndt_exponent(BerndtSign sign, int m) { return sign == BerndtSign::Plus ? 4 * m + 1 : 4 * m - 1; }

namespace {

G plus_theorem(int m, const SeriesTables& t) {
    const auto p = [&](int n, unsigned k = 0) { return p_at(t, n, k); };
    const long mm = m;
    const G bracket = gamma_pi(p(4 * m - 1, 1), 0, 1) + G(mm * (4 * mm - 6) * p(4 * m - 3) + mm * p(4 * m - 3, 2));
    const BigRational last =
        8 * (mm - 2) * (6 * mm - 7) * p(4 * m - 3) + 12 * (2 * mm - 5) * p(4 * m - 3, 2) + p(4 * m - 3, 4);
    const G braces = gamma_pi(256 * p(4 * m + 1), 8, 6) -
                     gamma_pi(32768 * mm * (2 * mm - 1) * (4 * mm - 1) * (4 * mm + 1) * p(4 * m - 3), 0, 8) +
                     gamma_pi(512 * (4 * mm + 1), 8, 4) * bracket - gamma_pi(last, 16, 0);
    return gamma_pi(sign_pow(m) * BigRational::pow2(-(6 * m + 17)), 8 * m - 4, -(2 * m + 7)) * braces;
}

// With as_printed, the first bracket is 2 pi [(4m-4)!(4m-1) R' - 8 pi^2 (4m-1)! R / ((4m-5) Gamma^8)];
// that form contradicts known_integrals() at m = 2, 3. The corrected bracket is
// 2 pi [-(4m-4)!(4m-1) R' - 8 pi^3 (4m-1)! R / ((4m-5) Gamma^8)].
G minus_theorem(int m, const SeriesTables& t, bool as_printed) {
    const auto R = [&](int n, unsigned k = 0) { return R_at(t, n, k); };
    const long mm = m;
    const BigRational r_prime = 2 * fact(4 * m - 4) * (4 * mm - 1) * R(4 * m - 4, 1);
    const G first = gamma_pi(as_printed ? r_prime : -r_prime, 0, 1) -
                    gamma_pi(16 * fact(4 * m - 1) * R(4 * m - 6) / BigRational(4 * mm - 5), -8, as_printed ? 3 : 4);
    const G inner = gamma_pi((2 * mm - 1) * 8 * (mm - 1) * (4 * mm - 5) * (4 * mm - 3) * R(4 * m - 2), 0, 2) +
                    G((2 * mm - 1) * (4 * mm - 1) * (4 * (mm - 3) * R(4 * m - 6) + R(4 * m - 6, 2)));
    const BigRational last =
        8 * (55 + mm * (6 * mm - 37)) * R(4 * m - 6) + 24 * (mm - 4) * R(4 * m - 6, 2) + R(4 * m - 6, 4);
    const G second = G(fact(4 * m - 6)) * (inner - gamma_pi(last / 256, 8, -4));
    return gamma_pi(sign_pow(m) * BigRational::pow2(-(6 * m + 7)), 8 * m, -(2 * m + 2)) * (first + second);
}

G plus_corollary(int m, const SeriesTables& t) {
    // The corollary uses sums over n >= 1 with (2n-1), the negatives of the n >= 0 closed forms.
    const long mm = m;
    const auto S = [&](ClosedFamily f) { return -closed_sum(f, m, SumRoute::Pipeline, t); };
    const G bracket = G(4 * mm * (4 * mm + 1)) * S(ClosedFamily::Cosh3Minus) +
                      gamma_pi(Q(5, 2), 0, 2) * S(ClosedFamily::Cosh3Plus) -
                      gamma_pi(3 * (4 * mm + 1), 0, 1) * S(ClosedFamily::Cosh4) -
                      gamma_pi(3, 0, 2) * S(ClosedFamily::Cosh5);
    const BigRational scale = BigRational(1) / BigRational(-4).pow(m + 1);
    return gamma_pi(scale, 0, 4 * m) * bracket;
}

G minus_corollary(int m, const SeriesTables& t) {
    const long mm = m;
    const auto U = [&](ClosedFamily f) { return closed_sum(f, m, SumRoute::Pipeline, t); };
    const G bracket = G(-(4 * mm - 1) * (4 * mm - 2) / 2) * U(ClosedFamily::Sinh3Minus) +
                      gamma_pi(3 * (4 * mm - 1), 0, 1) * U(ClosedFamily::Sinh4) -
                      gamma_pi(5, 0, 2) * U(ClosedFamily::Sinh3Plus) - gamma_pi(6, 0, 2) * U(ClosedFamily::Sinh5);
    return gamma_pi(sign_pow(m - 1) * BigRational::pow2(2 * m - 3), 0, 4 * m - 2) * bracket;
}

}  // namespace

GammaPiExpr berndt_integral_closed(BerndtSign sign, int m, IntegralRoute route, const SeriesTables& tables) {
    const int min_m = sign == BerndtSign::Plus ? 1 : 2;
    if (m < min_m)
        throw DomainError("integral (" + std::string(to_string(sign)) + ") has no closed form at m = " +
                          std::to_string(m) + " (needs m >= " + std::to_string(min_m) + ")");
    require_tables(tables, m);
    if (sign == BerndtSign::Plus) return route == IntegralRoute::Theorem ? plus_theorem(m, tables) : plus_corollary(m, tables);
    return route == IntegralRoute::Theorem ? minus_theorem(m, tables, false) : minus_corollary(m, tables);
}

GammaPiExpr minus_integral_theorem_as_printed(int m, const SeriesTables& tables) {
    if (m < 2) throw DomainError("minus integral needs m >= 2");
    require_tables(tables, m);
    return minus_theorem(m, tables, true);
}

GammaPiExpr berndt_integral_closed(BerndtSign sign, int m, IntegralRoute route) {
    if (m < 1) return berndt_integral_closed(sign, m, route, SeriesTables::generate(1));
    return berndt_integral_closed(sign, m, route, shared_tables(m));
}

GammaPiExpr conjecture_closed() {
    return G::monomial(-1, 128, 4, -2) + G::monomial(1, 512, 4, -1) + G::monomial(1, 8192, 12, -7);
}

std::vector<GammaPiExpr::Key> membership_pattern(BerndtSign sign, int p) {
    // Pairs (a, doubled pi exponent).
    if (sign == BerndtSign::Plus)
        return {{8 * p - 4, -2 * (2 * p - 1)},
                {8 * p + 4, -2 * (2 * p + 3)},
                {8 * p + 4, -2 * (2 * p + 2)},
                {8 * p + 4, -2 * (2 * p + 1)},
                {8 * p + 12, -2 * (2 * p + 7)}};
    return {{8 * p - 8, -2 * (2 * p - 2)},
            {8 * p, -2 * (2 * p + 2)},
            {8 * p, -2 * (2 * p + 1)},
            {8 * p, -2 * (2 * p)},
            {8 * p + 8, -2 * (2 * p + 6)}};
}

MembershipResult theorem1_membership_check(const GammaPiExpr& e, BerndtSign sign, int p) {
    const auto pattern = membership_pattern(sign, p);
    MembershipResult r;
    for (const auto& [key, c] : e.terms()) {
        if (std::find(pattern.begin(), pattern.end(), key) == pattern.end()) r.offending.push_back(key);
    }
    r.passed = r.offending.empty();
    return r;
}

}  // namespace lemniscate
