#include "lemniscate/error.hpp"
#include "lemniscate/families.hpp"
#include "lemniscate/hyperbolic_sums.hpp"
#include "lemniscate/known_values.hpp"
#include "lemniscate/quadrature.hpp"
#include "lemniscate/verification.hpp"

#include <gtest/gtest.h>

#include <mpfr.h>

#include "oracle/oracle_values.hpp"
#include "test_support.hpp"

using namespace lemniscate;
using testing_support::agreement;

namespace {

const NumericContext& ctx40() {
    static const NumericContext c = NumericContext::with_digits(40);
    return c;
}

BigFloat num(const char* s, const NumericContext& c = ctx40()) { return BigFloat::parse(s, c.bits()); }

}  // namespace

TEST(BigFloat, PrecisionContractAndBasics) {
    const auto& c = ctx40();
    EXPECT_GE(c.bits(), static_cast<mpfr_prec_t>(40 * 3.3219280948873623 + 50));
    EXPECT_THROW(NumericContext::with_digits(9), DomainError);
    EXPECT_THROW(BigFloat(1L, c.bits()) / BigFloat(0L, c.bits()), DomainError);
    EXPECT_THROW(BigFloat::parse("1.2.3", c.bits()), DomainError);
    EXPECT_EQ(BigFloat(BigRational(1, 4), c.bits()), num("0.25"));
    EXPECT_EQ(num("2.5").str(3), "2.50e+00");
    EXPECT_TRUE(num("-3") < num("2"));
}

TEST(Agm, TrivialAndLemniscatic) {
    const auto& c = ctx40();
    const BigFloat one(1L, c.bits());
    EXPECT_EQ(agm(one, one, c), one);
    const BigFloat g = agm(one, sqrt(BigFloat(2L, c.bits())), c);
    EXPECT_GT(agreement(g, oracle::kAgmOneSqrt2), 45);
    const BigFloat a = num("0.7"), b = num("1.9");
    const BigFloat step = agm((a + b) / 2L, sqrt(a * b), c);
    EXPECT_GT(agreement(step, agm(a, b, c).str(60)), 45);
}

TEST(GammaQuarter, AgainstOracleAndReflection) {
    const auto& c = ctx40();
    const BigFloat g = gamma_quarter(c);
    EXPECT_GT(agreement(g, oracle::kGammaQuarter), 45);
    // Independent cross-check with MPFR's own Gamma function.
    BigFloat mpfr_g(c.bits());
    mpfr_gamma(mpfr_g.get(), num("0.25").get(), MPFR_RNDN);
    EXPECT_GT(agreement(g, mpfr_g.str(60)), 45);
    const BigFloat reflection = g * num(oracle::kGammaThreeQuarters);
    EXPECT_GT(agreement(reflection, (pi_value(c) * sqrt(BigFloat(2L, c.bits()))).str(60)), 45);
    // Gamma^4 agm(1, sqrt 2)^2 = (2 pi)^3.
    const BigFloat m = agm(BigFloat(1L, c.bits()), sqrt(BigFloat(2L, c.bits())), c);
    EXPECT_GT(agreement(pow(g, 4) * m * m, pow(pi_value(c) * 2L, 3).str(60)), 45);
}

TEST(EllipticData, LemniscaticPointAndSymmetry) {
    const auto& c = ctx40();
    const EllipticData h = elliptic_data(num("0.5"), c);
    EXPECT_GT(agreement(h.y, pi_value(c).str(60)), 45);
    EXPECT_GT(agreement(h.z, oracle::kZHalf), 45);
    EXPECT_GT(agreement(hyp2f1_halfplus(0, num("0.5"), c), oracle::kZHalf), 45);
    const EllipticData a = elliptic_data(num("0.36"), c), b = elliptic_data(num("0.64"), c);
    EXPECT_GT(agreement(a.K, oracle::kEllipticK036), 45);
    EXPECT_GT(agreement(a.Kp, oracle::kEllipticKp036), 45);
    EXPECT_GT(agreement(a.y, oracle::kNomeY036), 45);
    EXPECT_EQ(a.K.str(45), b.Kp.str(45));
    EXPECT_EQ(a.Kp.str(45), b.K.str(45));
    EXPECT_THROW(elliptic_data(num("1"), c), DomainError);
    EXPECT_THROW(elliptic_data(num("0"), c), DomainError);
}

TEST(Hyp2F1, ZDerivativesAgainstOracle) {
    const auto& c = ctx40();
    EXPECT_GT(agreement(z_derivative_numeric(1, num("0.5"), c), oracle::kZPrimeHalf), 40);
    EXPECT_GT(agreement(hyp2f1_halfplus(2, num("0.36"), c), oracle::kHyp2f1_2_036), 45);
    // mpmath's numeric second derivative is the weaker side here.
    EXPECT_GT(agreement(z_derivative_numeric(2, num("0.36"), c), oracle::kZSecond036), 30);
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(hyp2f1_halfplus(n, num("0"), c), BigFloat(1L, c.bits()));
}

TEST(Hyp2F1, TermBudgetIsEnforced) {
    NumericContext c = ctx40();
    c.max_series_terms = 50;
    EXPECT_THROW(hyp2f1_halfplus(0, num("0.7"), c), ConvergenceError);
}

TEST(Jacobi, DefiningIdentities) {
    const auto& c = ctx40();
    const JacobiValues zero = jacobi_sn_sd(num("0"), num("0.36"), c);
    EXPECT_TRUE(zero.sn.is_zero());
    EXPECT_TRUE(zero.sd.is_zero());
    for (const char* u : {"0.1", "0.77", "1.4"}) {
        for (const char* x : {"0.2", "0.36", "0.81"}) {
            const JacobiValues j = jacobi_sn_sd(num(u), num(x), c);
            const BigFloat one(1L, c.bits());
            EXPECT_LT((abs(j.sn * j.sn + j.cn * j.cn - one)).log10_abs(), -40) << u << " " << x;
            EXPECT_LT((abs(j.dn * j.dn + num(x) * j.sn * j.sn - one)).log10_abs(), -40) << u << " " << x;
            EXPECT_LT((abs(j.sd * j.dn - j.sn)).log10_abs(), -40);
        }
    }
    EXPECT_THROW(jacobi_sn_sd(num("3"), num("0.36"), c), DomainError);
}

TEST(HyperbolicSums, ListedValues) {
    const auto& c = ctx40();
    const BigFloat pi = pi_value(c);
    // n >= 1 sums with (2n-1) are the negatives of the tabulated n >= 0 forms.
    EXPECT_GT(agreement(-sum_hyperbolic({SeriesShape::InvCosh, 1, 1}, pi, c).value, oracle::kCosh1E1), 45);
    EXPECT_GT(agreement(-sum_hyperbolic({SeriesShape::InvCosh, 3, 3}, pi, c).value, oracle::kCosh3E3), 45);
    EXPECT_GT(agreement(sum_hyperbolic({SeriesShape::InvSinh, 1, 3}, pi, c).value, oracle::kSinh1E3), 45);
    EXPECT_GT(agreement(sum_hyperbolic({SeriesShape::CoshOverSinh, 4, 10}, pi, c).value, oracle::kSinh4E10), 45);
    EXPECT_GT(agreement(-sum_hyperbolic({SeriesShape::SinhOverCosh, 4, 8}, pi, c).value, oracle::kCosh4E8), 45);
}

TEST(HyperbolicSums, TailBoundIsSound) {
    const auto& c = ctx40();
    const BigFloat y = num("1.3");
    for (const HyperbolicSeries s : {HyperbolicSeries{SeriesShape::InvCosh, 3, 9}, HyperbolicSeries{SeriesShape::InvSinh, 5, 11},
                                     HyperbolicSeries{SeriesShape::CoshOverSinh, 2, 4}, HyperbolicSeries{SeriesShape::SinhOverCosh, 4, 0},
                                     HyperbolicSeries{SeriesShape::InvCosh, 1, -1}}) {
        const SeriesSum r = sum_hyperbolic(s, y, c);
        const BigFloat doubled = sum_hyperbolic_fixed(s, y, 2 * r.terms, c);
        const double change = abs(doubled - r.value).log10_abs();
        EXPECT_LE(change, r.log10_tail + 1e-9) << s.str();
        EXPECT_LT(r.log10_tail, r.value.log10_abs() - 45) << s.str();
    }
    EXPECT_THROW(sum_hyperbolic({SeriesShape::InvSinh, 1, 1}, num("0"), c), DomainError);
}

TEST(HyperbolicSums, AllPublishedSumsToThirtyDigits) {
    const auto& c = ctx40();
    for (const KnownSum& k : known_sums()) {
        const VerificationReport r = compare(k.value, closed_family_numeric(k.family, k.m, c), 30, c);
        EXPECT_TRUE(r.pass) << to_string(k.family) << " m=" << k.m << " digits " << r.digits_agreed;
    }
    EXPECT_GT(agreement(closed_family_numeric(ClosedFamily::Sinh5, 3, c), oracle::kSinh5E11), 45);
    EXPECT_GT(agreement(closed_family_numeric(ClosedFamily::Cosh3Plus, 2, c), oracle::kCosh3E9), 45);
}

TEST(Quadrature, GaussLegendreIntegratesPolynomialsExactly) {
    const auto rule = gauss_legendre(12, ctx40().bits());
    ASSERT_EQ(rule->nodes.size(), 12u);
    BigFloat s(0L, ctx40().bits());
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) s += rule->weights[i] * pow(rule->nodes[i], 22);
    EXPECT_GT(agreement(s, BigFloat(BigRational(2, 23), ctx40().bits()).str(60)), 45);
}

TEST(Quadrature, BerndtIntegralsAgainstOracle) {
    const auto& c = ctx40();
    EXPECT_GT(agreement(quad_berndt(5, BerndtSign::Plus, c).value, oracle::kPlusA5), 42);
    EXPECT_GT(agreement(quad_berndt(9, BerndtSign::Plus, c).value, oracle::kPlusA9), 42);
    EXPECT_GT(agreement(quad_berndt(13, BerndtSign::Plus, c).value, oracle::kPlusA13), 42);
    EXPECT_GT(agreement(quad_berndt(7, BerndtSign::Minus, c).value, oracle::kMinusA7), 42);
    EXPECT_GT(agreement(quad_berndt(11, BerndtSign::Minus, c).value, oracle::kMinusA11), 42);
    EXPECT_GT(agreement(quad_berndt(1, BerndtSign::Plus, c).value, oracle::kPlusA1), 42);
    EXPECT_THROW(quad_berndt(5, BerndtSign::Minus, c), DomainError);
    EXPECT_THROW(quad_berndt(-1, BerndtSign::Plus, c), DomainError);
}

TEST(Quadrature, RaisingThePanelOrderDoesNotMoveTheResult) {
    NumericContext base = ctx40();
    NumericContext high = base;
    high.quad.initial_order = 120;
    for (int a : {5, 9}) {
        const BigFloat lo = quad_berndt(a, BerndtSign::Plus, base).value;
        const BigFloat hi = quad_berndt(a, BerndtSign::Plus, high).value;
        EXPECT_LT(abs(hi - lo).log10_abs() - lo.log10_abs(), -40) << a;
    }
    const BigFloat lo = quad_berndt(7, BerndtSign::Minus, base).value;
    const BigFloat hi = quad_berndt(7, BerndtSign::Minus, high).value;
    EXPECT_LT(abs(hi - lo).log10_abs() - lo.log10_abs(), -40);
}

TEST(Quadrature, OrderBudgetIsEnforced) {
    NumericContext c = ctx40();
    c.quad.max_order = 8;
    c.quad.initial_order = 4;
    EXPECT_THROW(quad_berndt(5, BerndtSign::Plus, c), ConvergenceError);
}

TEST(Quadrature, SanityIntegrals) {
    const auto& c = ctx40();
    const std::string quarter_pi = ldexp(pi_value(c), -2).str(60);
    EXPECT_GT(agreement(quad_sanity(SanityKind::Ramanujan, 1, c).value, quarter_pi), 38);
    EXPECT_GT(agreement(quad_sanity(SanityKind::Ramanujan, 3, c).value, quarter_pi), 38);
    EXPECT_GT(agreement(quad_sanity(SanityKind::Ismail, 0, c).value, "2"), 38);
    EXPECT_GT(agreement(ismail_integral(num("0.36"), c).value, "2"), 38);
    EXPECT_THROW(quad_sanity(SanityKind::Ramanujan, 2, c), DomainError);
}

TEST(Compare, Examples) {
    const auto& c = ctx40();
    const GammaPiExpr g4 = GammaPiExpr::monomial(1, 16, 4, -3);
    EXPECT_GE(compare(g4, num("0.3483009824214192"), 10, c).digits_agreed, 15);
    const auto c30 = NumericContext::with_digits(30);
    EXPECT_TRUE(compare(GammaPiExpr(), BigFloat::parse("1e-40", c30.bits()), 25, c30).pass);
    EXPECT_FALSE(compare(GammaPiExpr(), BigFloat::parse("1e-20", c30.bits()), 25, c30).pass);
    const GammaPiExpr perturbed = GammaPiExpr::monomial(-3, 16, 4, -5) + GammaPiExpr::monomial(1, 1023, 12, -9);
    EXPECT_FALSE(compare(perturbed, num(oracle::kCosh3E3), 30, c).pass);
    const VerificationReport ok = compare(GammaPiExpr::monomial(-3, 16, 4, -5) + GammaPiExpr::monomial(1, 1024, 12, -9),
                                          num(oracle::kCosh3E3), 30, c);
    EXPECT_TRUE(ok.pass);
    EXPECT_EQ(ok.pass, ok.digits_agreed >= ok.tolerance_digits);
}

TEST(ContourIdentities, HoldToTwentyFiveDigits) {
    const auto& c = ctx40();
    for (int p : {0, 1, 2}) {
        const VerificationReport r = contour_identity_check(BerndtSign::Plus, p, 25, c);
        EXPECT_TRUE(r.pass) << r.id << " " << r.digits_agreed;
    }
    for (int p : {2, 3}) {
        const VerificationReport r = contour_identity_check(BerndtSign::Minus, p, 25, c);
        EXPECT_TRUE(r.pass) << r.id << " " << r.digits_agreed;
    }
    EXPECT_THROW(contour_identity_check(BerndtSign::Minus, 1, 25, c), DomainError);
}

TEST(DiffExprNumeric, AgainstDirectSummation) {
    const auto& c = ctx40();
    const SeriesTables t = SeriesTables::generate(14);
    EXPECT_GT(agreement(dexpr_eval_numeric(DiffExpr::parse("z"), num("0.5"), c), oracle::kZHalf), 45);
    EXPECT_EQ(dexpr_eval_numeric(DiffExpr::parse("3/7"), num("0.3"), c), BigFloat(BigRational(3, 7), c.bits()));
    // C1(1) is the n >= 1 sum, the negative of the oracle's n >= 0 value.
    EXPECT_GT(agreement(-dexpr_eval_numeric(cosh_family_expr(CoshFamily::C1, 1, t), num("0.36"), c), oracle::kCosh1E1At036), 45);
    for (const char* x : {"0.25", "0.36", "0.5"}) {
        for (int p = 1; p <= 4; ++p) {
            for (CoshFamily f : {CoshFamily::C1, CoshFamily::C3, CoshFamily::S4, CoshFamily::C5}) {
                const auto r = generic_x_check(f, p, num(x), 25, t, c);
                EXPECT_TRUE(r.pass) << r.id << " " << r.digits_agreed;
            }
            for (SinhFamily f : {SinhFamily::B1, SinhFamily::B3, SinhFamily::K4, SinhFamily::B5}) {
                const auto r = generic_x_check(f, p, num(x), 25, t, c);
                EXPECT_TRUE(r.pass) << r.id << " " << r.digits_agreed;
            }
        }
    }
}

TEST(DiffExprNumeric, MisprintedBlockFailsNumerically) {
    // The printed cosh-cube block (sign of the z'' term) disagrees with the series at generic x.
    const auto& c = ctx40();
    const DiffExpr printed = -DiffExpr::parse(
        "-1/4*z^4*(2*x-1 + z^2*(8*x^2-8*x+1) + 24*(x-1)^2*x^2*z'^2 + 4*(x-1)*x*z*(5*(2*x-1)*z' - 2*(x-1)*x*z''))", 1);
    const BigFloat x = num("0.36");
    const BigFloat direct = sum_hyperbolic(family_series(CoshFamily::C3, 1), elliptic_data(x, c).y, c).value;
    EXPECT_LT(digits_of_agreement(dexpr_eval_numeric(printed, x, c), direct, c), 3);
}
