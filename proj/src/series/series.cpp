#include "lemniscate/series.hpp"

#include "lemniscate/error.hpp"

#include <algorithm>

namespace lemniscate {

std::string_view to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::SdP: return "sd_p";
        case SeriesKind::SnG: return "sn_g";
        case SeriesKind::Sn2Q: return "sn2_q";
        case SeriesKind::SinhR: return "sinh_R";
    }
    return "?";
}

SeriesKind series_kind_from_string(std::string_view name) {
    for (auto k : {SeriesKind::SdP, SeriesKind::SnG, SeriesKind::Sn2Q, SeriesKind::SinhR}) {
        if (to_string(k) == name) return k;
    }
    throw DomainError("unknown series kind '" + std::string(name) + "'");
}

char series_symbol(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::SdP: return 'p';
        case SeriesKind::SnG: return 'g';
        case SeriesKind::Sn2Q: return 'q';
        case SeriesKind::SinhR: return 'R';
    }
    return '?';
}

int series_subscript(SeriesKind kind, int entry) {
    switch (kind) {
        case SeriesKind::SdP: return 2 * entry + 1;
        case SeriesKind::SnG: return 2 * entry - 1;
        case SeriesKind::Sn2Q:
        case SeriesKind::SinhR: return 2 * entry;
    }
    return 0;
}

SeriesTable::SeriesTable(SeriesKind kind, std::vector<Poly> polys) : kind_(kind), polys_(std::move(polys)) {}

const Poly& SeriesTable::entry(int index) const {
    if (index < first_index() || index > max_index()) {
        throw DomainError(std::string(to_string(kind_)) + ": entry " + std::to_string(index) +
                          " outside generated range [" + std::to_string(first_index()) + ", " +
                          std::to_string(max_index()) + "]");
    }
    return polys_[static_cast<std::size_t>(index - first_index())];
}

namespace {

// Exponential-generating-function Cauchy product coefficient:
// n! [u^n] (sum a_i u^i/i!)(sum b_j u^j/j!) = sum_i C(n,i) a_i b_{n-i}.
Poly egf_product_coeff(const std::vector<Poly>& a, const std::vector<Poly>& b, unsigned n) {
    Poly acc;
    for (unsigned i = 0; i <= n; ++i) {
        if (i >= a.size() || n - i >= b.size()) continue;
        if (a[i].is_zero() || b[n - i].is_zero()) continue;
        acc += BigRational::binomial(n, i) * (a[i] * b[n - i]);
    }
    return acc;
}

// Odd series f with f(0)=0, f'(0)=1 and f'' = lin * f + cub * f^3, returned as
// EGF coefficients indexed by u-power (even entries zero).
std::vector<Poly> solve_odd_ode(const Poly& lin, const Poly& cub, unsigned max_power) {
    std::vector<Poly> f(max_power + 1);
    std::vector<Poly> f2(max_power + 1);  // EGF coefficients of f^2
    std::vector<Poly> f3(max_power + 1);  // EGF coefficients of f^3
    if (max_power >= 1) f[1] = Poly::constant(1);
    for (unsigned n = 3; n <= max_power; n += 2) {
        // [u^{n-2}] f^3 needs f^2 through u^{n-3}, which needs f through u^{n-4}.
        f2[n - 3] = egf_product_coeff(f, f, n - 3);
        f3[n - 2] = egf_product_coeff(f2, f, n - 2);
        f[n] = lin * f[n - 2] + cub * f3[n - 2];
    }
    return f;
}

}  // namespace

SeriesTable gen_sd_polys(int max_m) {
    if (max_m < 0) throw DomainError("gen_sd_polys: M must be >= 0");
    const Poly lin({BigRational(-1), BigRational(2)});                    // 2x - 1
    const Poly cub({BigRational(0), BigRational(-2), BigRational(2)});    // -2x(1-x)
    const auto f = solve_odd_ode(lin, cub, static_cast<unsigned>(2 * max_m + 1));
    std::vector<Poly> out;
    for (int m = 0; m <= max_m; ++m) out.push_back(f[static_cast<std::size_t>(2 * m + 1)]);
    return SeriesTable(SeriesKind::SdP, std::move(out));
}

SeriesTable gen_sn_polys(int max_n) {
    if (max_n < 1) throw DomainError("gen_sn_polys: M must be >= 1");
    const Poly lin({BigRational(-1), BigRational(-1)});  // -(1+x)
    const Poly cub({BigRational(0), BigRational(2)});    // 2x
    const auto f = solve_odd_ode(lin, cub, static_cast<unsigned>(2 * max_n - 1));
    std::vector<Poly> out;
    for (int n = 1; n <= max_n; ++n) out.push_back(f[static_cast<std::size_t>(2 * n - 1)]);
    return SeriesTable(SeriesKind::SnG, std::move(out));
}

SeriesTable gen_q_polys(const SeriesTable& g, int max_n) {
    if (max_n < 1) throw DomainError("gen_q_polys: M must be >= 1");
    if (g.kind() != SeriesKind::SnG) throw DomainError("gen_q_polys: expected an sn_g table");
    if (g.max_index() < max_n) throw DomainError("gen_q_polys: g table too short");
    std::vector<Poly> out;
    for (int n = 1; n <= max_n; ++n) {
        Poly acc;
        for (int j = 1; j <= n; ++j) {
            acc += BigRational::binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(2 * j - 1)) *
                   (g.entry(j) * g.entry(n - j + 1));
        }
        out.push_back(std::move(acc));
    }
    return SeriesTable(SeriesKind::Sn2Q, std::move(out));
}

SeriesTable gen_q_polys(int max_n) { return gen_q_polys(gen_sn_polys(max_n), max_n); }

SeriesTable gen_R_polys(const SeriesTable& q, int max_m) {
    if (max_m < 1) throw DomainError("gen_R_polys: M must be >= 1");
    if (q.kind() != SeriesKind::Sn2Q) throw DomainError("gen_R_polys: expected an sn2_q table");
    if (q.max_index() < max_m) throw DomainError("gen_R_polys: q table too short");
    std::vector<Poly> out;
    for (int m = 1; m <= max_m; ++m) {
        const Poly& qm = q.entry(m);
        if (qm.degree() > m - 1) {
            throw PipelineError("gen_R_polys: deg q_" + std::to_string(2 * m) + " = " +
                                std::to_string(qm.degree()) + " exceeds " + std::to_string(m - 1));
        }
        out.push_back(qm.moebius_substitute(static_cast<unsigned>(m - 1)) *
                      (BigRational(1) / BigRational::factorial(static_cast<unsigned>(2 * m))));
    }
    return SeriesTable(SeriesKind::SinhR, std::move(out));
}

SeriesTable gen_R_polys(int max_m) { return gen_R_polys(gen_q_polys(max_m), max_m); }

SeriesTables::SeriesTables(SeriesTable sd, SeriesTable sn, SeriesTable sn2, SeriesTable sinh)
    : sd_(std::move(sd)), sn_(std::move(sn)), sn2_(std::move(sn2)), sinh_(std::move(sinh)) {
    if (sd_.kind() != SeriesKind::SdP || sn_.kind() != SeriesKind::SnG || sn2_.kind() != SeriesKind::Sn2Q ||
        sinh_.kind() != SeriesKind::SinhR) {
        throw DomainError("SeriesTables: tables passed in the wrong order");
    }
}

SeriesTables SeriesTables::generate(int max_index) {
    if (max_index < 1) throw DomainError("SeriesTables::generate: bound must be >= 1");
    auto sd = gen_sd_polys(max_index);
    auto sn = gen_sn_polys(max_index);
    auto sn2 = gen_q_polys(sn, max_index);
    auto sinh = gen_R_polys(sn2, max_index);
    return SeriesTables(std::move(sd), std::move(sn), std::move(sn2), std::move(sinh));
}

const SeriesTable& SeriesTables::table(SeriesKind kind) const {
    switch (kind) {
        case SeriesKind::SdP: return sd_;
        case SeriesKind::SnG: return sn_;
        case SeriesKind::Sn2Q: return sn2_;
        case SeriesKind::SinhR: return sinh_;
    }
    throw DomainError("SeriesTables: bad kind");
}

int SeriesTables::max_index() const {
    return std::min({sd_.max_index(), sn_.max_index(), sn2_.max_index(), sinh_.max_index()});
}

const Poly& SeriesTables::p(int n) const {
    if (n < 1 || n % 2 == 0) throw DomainError("p_n needs odd n >= 1, got " + std::to_string(n));
    return sd_.entry((n - 1) / 2);
}

const Poly& SeriesTables::g(int n) const {
    if (n < 1 || n % 2 == 0) throw DomainError("g_n needs odd n >= 1, got " + std::to_string(n));
    return sn_.entry((n + 1) / 2);
}

const Poly& SeriesTables::q(int n) const {
    if (n < 2 || n % 2 != 0) throw DomainError("q_n needs even n >= 2, got " + std::to_string(n));
    return sn2_.entry(n / 2);
}

const Poly& SeriesTables::R(int n) const {
    if (n < 2 || n % 2 != 0) throw DomainError("R_n needs even n >= 2, got " + std::to_string(n));
    return sinh_.entry(n / 2);
}

namespace {

class IdentityLog {
public:
    explicit IdentityLog(std::vector<IdentityResult>& out) : out_(out) {}

    template <typename F>
    void check(const std::string& name, int index, F&& body) {
        IdentityResult r{name, index, false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const Error& e) {
            r.detail = e.what();
        }
        out_.push_back(std::move(r));
    }

private:
    std::vector<IdentityResult>& out_;
};

std::string expect_zero(const BigRational& v, const std::string& what) {
    return v.is_zero() ? std::string{} : what + " = " + v.str();
}

}  // namespace

std::vector<IdentityResult> check_structural_identities(const SeriesTables& t, int max_n, int max_m) {
    std::vector<IdentityResult> out;
    IdentityLog log(out);
    const BigRational half(1, 2);
    const BigRational minus_one(-1);

    for (int n = 1; n <= max_n; ++n) {
        log.check("g_reflection", n, [&] {
            const Poly& g = t.g(2 * n - 1);
            if (g.degree() != n - 1) return "deg g_" + std::to_string(2 * n - 1) + " = " + std::to_string(g.degree());
            return g.reflect(static_cast<unsigned>(n - 1)) == g ? std::string{} : "g_" + std::to_string(2 * n - 1) + " not palindromic";
        });
        log.check("q_reflection", n, [&] {
            const Poly& q = t.q(2 * n);
            if (q.degree() != n - 1) return "deg q_" + std::to_string(2 * n) + " = " + std::to_string(q.degree());
            return q.reflect(static_cast<unsigned>(n - 1)) == q ? std::string{} : "q_" + std::to_string(2 * n) + " not palindromic";
        });
    }

    for (int m = 1; m <= max_m; ++m) {
        log.check("q_4m_at_minus_one", m, [&] { return expect_zero(t.q(4 * m)(minus_one), "q_" + std::to_string(4 * m) + "(-1)"); });
        log.check("q_4m-2_first_derivative", m, [&] {
            const Poly& q = t.q(4 * m - 2);
            return expect_zero(q.derivative()(minus_one) + BigRational(m - 1) * q(minus_one), "q'+(m-1)q at -1");
        });
        log.check("q_4m_second_derivative", m, [&] {
            const Poly& q = t.q(4 * m);
            return expect_zero(q.derivative(2)(minus_one) + BigRational(2 * (m - 1)) * q.derivative()(minus_one),
                               "q''+2(m-1)q' at -1");
        });
    }

    for (int m = 0; m <= max_m; ++m) {
        log.check("p_4m+1_first_derivative_at_half", m,
                  [&] { return expect_zero(t.p(4 * m + 1).derivative()(half), "p'_" + std::to_string(4 * m + 1) + "(1/2)"); });
        if (m == 0) continue;
        log.check("p_4m-1_at_half", m, [&] { return expect_zero(t.p(4 * m - 1)(half), "p_" + std::to_string(4 * m - 1) + "(1/2)"); });
        log.check("p_4m-3_first_derivative_at_half", m,
                  [&] { return expect_zero(t.p(4 * m - 3).derivative()(half), "p'_" + std::to_string(4 * m - 3) + "(1/2)"); });
        log.check("p_4m-1_second_derivative_at_half", m,
                  [&] { return expect_zero(t.p(4 * m - 1).derivative(2)(half), "p''_" + std::to_string(4 * m - 1) + "(1/2)"); });
        log.check("p_4m-1_fourth_derivative_at_half", m,
                  [&] { return expect_zero(t.p(4 * m - 1).derivative(4)(half), "p''''_" + std::to_string(4 * m - 1) + "(1/2)"); });
    }

    for (int m = 2; m <= max_m; ++m) {
        log.check("R_4m-4_at_half", m, [&] { return expect_zero(t.R(4 * m - 4)(half), "R_" + std::to_string(4 * m - 4) + "(1/2)"); });
        log.check("R_4m-2_first_derivative_at_half", m,
                  [&] { return expect_zero(t.R(4 * m - 2).derivative()(half), "R'_" + std::to_string(4 * m - 2) + "(1/2)"); });
        log.check("R_4m-4_second_derivative_at_half", m,
                  [&] { return expect_zero(t.R(4 * m - 4).derivative(2)(half), "R''_" + std::to_string(4 * m - 4) + "(1/2)"); });
    }

    const int sd_max = t.table(SeriesKind::SdP).max_index();
    for (int m = 0; m <= sd_max; ++m) {
        log.check("p_integer_coefficients", m, [&] {
            const Poly& p = t.p(2 * m + 1);
            if (p.degree() != m) return "deg p_" + std::to_string(2 * m + 1) + " = " + std::to_string(p.degree());
            return p.has_integer_coefficients() ? std::string{} : "p_" + std::to_string(2 * m + 1) + " = " + p.str();
        });
    }
    const int r_max = t.table(SeriesKind::SinhR).max_index();
    for (int m = 1; m <= r_max; ++m) {
        log.check("R_degree", m, [&] {
            const Poly& r = t.R(2 * m);
            return r.degree() == m - 1 ? std::string{} : "deg R_" + std::to_string(2 * m) + " = " + std::to_string(r.degree());
        });
    }
    return out;
}

}  // namespace lemniscate
