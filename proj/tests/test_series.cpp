#include "lemniscate/error.hpp"
#include "lemniscate/numerics.hpp"
#include "lemniscate/series.hpp"

#include <gtest/gtest.h>

#include "oracle/oracle_values.hpp"
#include "test_support.hpp"

using namespace lemniscate;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<BigRational> v;
    for (long k : c) v.emplace_back(k);
    return Poly(std::move(v));
}

const SeriesTables& tables() {
    static const SeriesTables t = SeriesTables::generate(22);
    return t;
}

}  // namespace

TEST(SdPolys, FirstEntries) {
    const SeriesTable t = gen_sd_polys(2);
    ASSERT_EQ(t.max_index(), 2);
    EXPECT_EQ(t.entry(0), P({1}));
    EXPECT_EQ(t.entry(1), P({-1, 2}));
    EXPECT_EQ(t.entry(2), P({1, -16, 16}));
    EXPECT_EQ(gen_sd_polys(0).entry(0), P({1}));
}

TEST(SnPolys, FirstEntries) {
    const SeriesTable g = gen_sn_polys(3);
    EXPECT_EQ(g.entry(1), P({1}));
    EXPECT_EQ(g.entry(2), P({-1, -1}));
    EXPECT_EQ(g.entry(3), P({1, 14, 1}));
    EXPECT_THROW(g.entry(4), DomainError);
}

TEST(QPolys, CauchyProductEntries) {
    const SeriesTable q = gen_q_polys(4);
    EXPECT_EQ(q.entry(1), P({2}));
    EXPECT_EQ(q.entry(2), P({-8, -8}));
    EXPECT_TRUE(tables().q(8)(BigRational(-1)).is_zero());
}

TEST(RPolys, FirstEntries) {
    const SeriesTable r = gen_R_polys(4);
    EXPECT_EQ(r.entry(1), P({1}));
    EXPECT_EQ(r.entry(2), Poly({BigRational(1, 3), BigRational(-2, 3)}));
    EXPECT_TRUE(tables().R(8)(BigRational(1, 2)).is_zero());
    // Value used when checking one of the sinh closed forms by hand.
    EXPECT_EQ(tables().R(6)(BigRational(1, 2)), BigRational(-1, 20));
}

TEST(SeriesTables, SubscriptAccessorsMatchTables) {
    const auto& t = tables();
    EXPECT_EQ(&t.p(5), &t.table(SeriesKind::SdP).entry(2));
    EXPECT_EQ(&t.g(5), &t.table(SeriesKind::SnG).entry(3));
    EXPECT_EQ(&t.q(6), &t.table(SeriesKind::Sn2Q).entry(3));
    EXPECT_EQ(&t.R(6), &t.table(SeriesKind::SinhR).entry(3));
    EXPECT_THROW(t.p(4), DomainError);
    EXPECT_THROW(t.q(3), DomainError);
    EXPECT_EQ(t.max_index(), 22);
}

TEST(SeriesKind, NamesRoundTrip) {
    for (SeriesKind k : {SeriesKind::SdP, SeriesKind::SnG, SeriesKind::Sn2Q, SeriesKind::SinhR})
        EXPECT_EQ(series_kind_from_string(to_string(k)), k);
    EXPECT_THROW(series_kind_from_string("sd"), DomainError);
    EXPECT_EQ(series_subscript(SeriesKind::SdP, 2), 5);
    EXPECT_EQ(series_subscript(SeriesKind::SnG, 2), 3);
    EXPECT_EQ(series_subscript(SeriesKind::SinhR, 2), 4);
}

TEST(SeriesTables, DegreesAndIntegrality) {
    const auto& t = tables();
    for (int m = 0; m <= 20; ++m) {
        EXPECT_EQ(t.p(2 * m + 1).degree(), m);
        EXPECT_TRUE(t.p(2 * m + 1).has_integer_coefficients()) << "p_" << 2 * m + 1;
    }
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(t.g(2 * n - 1).degree(), n - 1);
        EXPECT_EQ(t.q(2 * n).degree(), n - 1);
        EXPECT_EQ(t.R(2 * n).degree(), n - 1);
    }
}

TEST(SeriesTables, CauchyProductConsistency) {
    // (sum g u^{2n-1}/(2n-1)!)^2 truncated at u^{2N} equals sum q u^{2n}/(2n)!.
    const auto& t = tables();
    const int N = 12;
    for (int n = 1; n <= N; ++n) {
        Poly coeff;
        for (int i = 1; i <= n; ++i) {
            const int j = n + 1 - i;  // (2i-1) + (2j-1) = 2n
            coeff += t.g(2 * i - 1) * t.g(2 * j - 1) *
                     (BigRational(1) / (BigRational::factorial(2 * i - 1) * BigRational::factorial(2 * j - 1)));
        }
        EXPECT_EQ(coeff, t.q(2 * n) * (BigRational(1) / BigRational::factorial(2 * n))) << "n = " << n;
    }
}

TEST(StructuralIdentities, AllHoldUpToTheAcceptanceBounds) {
    const auto results = check_structural_identities(tables(), 15, 8);
    ASSERT_FALSE(results.empty());
    for (const auto& r : results) EXPECT_TRUE(r.passed) << r.identity << " at " << r.index << ": " << r.detail;
}

TEST(StructuralIdentities, SmallBoundAndIndexBookkeeping) {
    const auto results = check_structural_identities(tables(), 4, 4);
    bool saw_p3 = false, saw_q4 = false;
    for (const auto& r : results) {
        EXPECT_TRUE(r.passed) << r.identity;
        if (r.identity == "p_4m-1_at_half" && r.index == 1) saw_p3 = true;
        if (r.identity == "q_4m_at_minus_one" && r.index == 1) saw_q4 = true;
    }
    EXPECT_TRUE(saw_p3);
    EXPECT_TRUE(saw_q4);
}

TEST(StructuralIdentities, ShortTablesYieldFailuresNotThrows) {
    const SeriesTables small = SeriesTables::generate(3);
    const auto results = check_structural_identities(small, 15, 8);
    bool any_failed = false;
    for (const auto& r : results) any_failed |= !r.passed;
    EXPECT_TRUE(any_failed);
}

TEST(StructuralIdentities, ReflectionOfAPerturbedTableFails) {
    std::vector<Poly> g = tables().table(SeriesKind::SnG).polys();
    g[2] += Poly::monomial(1, 2);  // g_5 becomes 1 + 14x + 2x^2
    const SeriesTables broken(tables().table(SeriesKind::SdP), SeriesTable(SeriesKind::SnG, g),
                              tables().table(SeriesKind::Sn2Q), tables().table(SeriesKind::SinhR));
    bool g3_failed = false;
    for (const auto& r : check_structural_identities(broken, 5, 2))
        if (r.identity == "g_reflection" && r.index == 3) g3_failed = !r.passed;
    EXPECT_TRUE(g3_failed);
}

TEST(TruncatedSeries, AgreesWithJacobiFunctionsAtModulus036) {
    // Degree-43 truncations at u = 0.3, k = 0.6 against the AGM-based sn and sd
    // and against mpmath's ellipfun. The nearest singularities sit at distance
    // K' = 1.99 (sn) and |K + iK'| = 2.65 (sd), so the tails are near
    // (0.3/1.99)^45 < 1e-36 and (0.3/2.65)^45 < 1e-42.
    const auto ctx = NumericContext::with_digits(40);
    const mpfr_prec_t bits = ctx.bits();
    const BigFloat u = BigFloat::parse("0.3", bits), x = BigFloat::parse("0.36", bits);
    BigFloat sd_series(0L, bits), sn_series(0L, bits);
    for (int m = 0; 2 * m + 1 <= 43; ++m) {
        const int k = 2 * m + 1;
        const BigRational c = tables().p(k)(BigRational(9, 25)) / BigRational::factorial(k);
        sd_series += BigFloat(c, bits) * pow(u, k);
    }
    for (int n = 1; 2 * n - 1 <= 43; ++n) {
        const int k = 2 * n - 1;
        const BigRational c = tables().g(k)(BigRational(9, 25)) / BigRational::factorial(k);
        sn_series += BigFloat(c, bits) * pow(u, k);
    }
    const JacobiValues j = jacobi_sn_sd(u, x, ctx);
    EXPECT_GT(testing_support::agreement(sn_series, oracle::kSn03_036), 34);
    EXPECT_GT(testing_support::agreement(sd_series, oracle::kSd03_036), 38);
    EXPECT_GT(testing_support::agreement(j.sn, oracle::kSn03_036), 38);
    EXPECT_GT(testing_support::agreement(j.sd, oracle::kSd03_036), 38);
}

TEST(SnContinuation, ReciprocalModulusIdentityOnCoefficients) {
    // sn(u, k) = k^{-1} sn(k u, 1/k) is equivalent to g_{2n-1}(x) = x^{n-1} g_{2n-1}(1/x).
    const auto& t = tables();
    for (int n = 1; n <= 15; ++n) {
        const Poly& g = t.g(2 * n - 1);
        for (const BigRational& x0 : {BigRational(3, 7), BigRational(-5, 2), BigRational(9, 25)}) {
            EXPECT_EQ(g(x0), x0.pow(n - 1) * g(BigRational(1) / x0)) << "n = " << n;
        }
    }
}
