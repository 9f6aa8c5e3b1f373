#pragma once

#include "lemniscate/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lemniscate {

/// Which coefficient family a table holds.
///
///  - SdP:   entry m is p_{2m+1}, sd(u) = sum p_{2m+1}(x) u^{2m+1}/(2m+1)!
///  - SnG:   entry n is g_{2n-1}, sn(u) = sum g_{2n-1}(x) u^{2n-1}/(2n-1)!
///  - Sn2Q:  entry n is q_{2n},   sn(u)^2 = sum q_{2n}(x) u^{2n}/(2n)!
///  - SinhR: entry m is R_{2m} = (x-1)^{m-1} q_{2m}(x/(x-1)) / (2m)!
enum class SeriesKind { SdP, SnG, Sn2Q, SinhR };

std::string_view to_string(SeriesKind kind);
/// Accepts "sd_p", "sn_g", "sn2_q", "sinh_R"; throws DomainError otherwise.
SeriesKind series_kind_from_string(std::string_view name);

/// Letter used when printing the polynomials of a kind ("p", "g", "q", "R").
char series_symbol(SeriesKind kind);
/// Polynomial subscript of entry i: 2i+1, 2i-1, 2i or 2i.
int series_subscript(SeriesKind kind, int entry);

/// Immutable table of Maclaurin coefficient polynomials.
class SeriesTable {
public:
    SeriesTable(SeriesKind kind, std::vector<Poly> polys);

    SeriesKind kind() const { return kind_; }
    /// Index of the first entry: 0 for SdP, 1 for the others.
    int first_index() const { return kind_ == SeriesKind::SdP ? 0 : 1; }
    int max_index() const { return first_index() + static_cast<int>(polys_.size()) - 1; }
    /// Entry by table index (see SeriesKind); throws DomainError when out of range.
    const Poly& entry(int index) const;
    const std::vector<Poly>& polys() const { return polys_; }

    friend bool operator==(const SeriesTable& a, const SeriesTable& b) {
        return a.kind_ == b.kind_ && a.polys_ == b.polys_;
    }

private:
    SeriesKind kind_;
    std::vector<Poly> polys_;
};

/// p_1 ... p_{2M+1} from sd'' = (2x-1) sd - 2x(1-x) sd^3.
SeriesTable gen_sd_polys(int max_m);
/// g_1 ... g_{2M-1} from sn'' = -(1+x) sn + 2x sn^3.
SeriesTable gen_sn_polys(int max_n);
/// q_2 ... q_{2M} by the Cauchy product of the sn series with itself.
SeriesTable gen_q_polys(const SeriesTable& g, int max_n);
SeriesTable gen_q_polys(int max_n);
/// R_2 ... R_{2M} from the q table.
SeriesTable gen_R_polys(const SeriesTable& q, int max_m);
SeriesTable gen_R_polys(int max_m);

/// All four tables generated together, addressed by polynomial subscript.
class SeriesTables {
public:
    SeriesTables(SeriesTable sd, SeriesTable sn, SeriesTable sn2, SeriesTable sinh);
    /// Tables large enough for p_{2M+1}, g_{2M-1}, q_{2M} and R_{2M}.
    static SeriesTables generate(int max_index);

    const SeriesTable& table(SeriesKind kind) const;
    /// Largest M such that every table has entry M (entry 0 excluded for the 1-based kinds).
    int max_index() const;

    /// p_n for odd n >= 1.
    const Poly& p(int n) const;
    /// g_n for odd n >= 1.
    const Poly& g(int n) const;
    /// q_n for even n >= 2.
    const Poly& q(int n) const;
    /// R_n for even n >= 2.
    const Poly& R(int n) const;

    friend bool operator==(const SeriesTables& a, const SeriesTables& b) {
        return a.sd_ == b.sd_ && a.sn_ == b.sn_ && a.sn2_ == b.sn2_ && a.sinh_ == b.sinh_;
    }

private:
    SeriesTable sd_, sn_, sn2_, sinh_;
};

/// Outcome of one exact identity check on the coefficient tables.
struct IdentityResult {
    std::string identity;
    int index = 0;
    bool passed = false;
    std::string detail;
};

/// Checks, for every index the tables allow up to `max_n`:
///  - g_{2n-1} and q_{2n} are palindromic of length n (x^{n-1} f(1/x) = f(x)),
///  - q_{4m}(-1) = 0, q'_{4m-2}(-1) + (m-1) q_{4m-2}(-1) = 0,
///    q''_{4m}(-1) + 2(m-1) q'_{4m}(-1) = 0,
///  - p'_{4m+1}(1/2) = 0, and for m >= 1: p_{4m-1}(1/2) = p'_{4m-3}(1/2) =
///    p''_{4m-1}(1/2) = p^{(4)}_{4m-1}(1/2) = 0,
///  - R_{4m-4}(1/2) = R'_{4m-2}(1/2) = R''_{4m-4}(1/2) = 0,
///  - every p has integer coefficients, and all degrees are as expected.
/// Reflection identities run for n <= max_n, vanishing identities for
/// m <= max_m. Tables that are too short yield failed records, not throws.
std::vector<IdentityResult> check_structural_identities(const SeriesTables& tables, int max_n, int max_m);

}  // namespace lemniscate
