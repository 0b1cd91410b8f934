#include "jetlct/fp_oracle.hpp"
#include "jetlct/jet_dim.hpp"
#include "jetlct/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace jetlct;

namespace {

BigInt count_at(const Ideal& ideal, std::uint32_t p, std::size_t m, bool fiber = false, CountOptions opts = {})
{
    return count_jet_points(ideal, p, m, fiber, opts).levels.back().count;
}

Ideal random_binomial_ideal(SplitMix64& rng, std::size_t n)
{
    std::vector<Term> terms;
    for (int k = 0; k < 2; ++k) {
        Exponents e(n);
        for (auto& x : e) {
            x = static_cast<std::uint32_t>(rng.uniform(0, 3));
        }
        terms.push_back({Rational(rng.uniform(1, 4)) * (k == 0 ? 1 : -1), e});
    }
    auto f = Polynomial::from_terms(n, terms);
    if (f.is_zero() || f.is_constant()) {
        f = Polynomial::variable(n, 0);
    }
    return Ideal(n, {f});
}

}  // namespace

TEST(PrimeField, Arithmetic)
{
    PrimeField f(7);
    EXPECT_EQ(f.mul(f.inv(3), 3), 1u);
    EXPECT_EQ(f.reduce(make_rational(1, 2)), 4u);
    EXPECT_EQ(f.reduce(BigInt(-1)), 6u);
    EXPECT_THROW(f.reduce(make_rational(1, 14)), std::domain_error);
    EXPECT_THROW(PrimeField(9), std::invalid_argument);
    EXPECT_EQ(rank_mod_p({{1, 2}, {2, 4}}, f), 1u);
    EXPECT_EQ(rank_mod_p({{1, 2}, {3, 4}}, f), 2u);
}

TEST(FpCount, CuspBaseLevel)
{
    auto rep = count_jet_points(parse_ideal("u^2 - v^3"), 5, 0, false);
    EXPECT_EQ(rep.levels[0].count, 5);
    EXPECT_EQ(rep.levels[0].est_dim, 1);
}

TEST(FpCount, CoordinateHyperplaneAndUnit)
{
    auto x = parse_ideal("x");
    for (std::size_t m = 0; m <= 5; ++m) {
        EXPECT_EQ(count_at(x, 7, m), 1);
    }
    auto unit = parse_ideal("1", std::vector<std::string>{"x"});
    auto rep = count_jet_points(unit, 7, 3, false);
    for (const auto& lc : rep.levels) {
        EXPECT_EQ(lc.count, 0);
        EXPECT_FALSE(lc.est_dim);
    }
    auto two = count_jet_points(parse_ideal("x1; x2", std::vector<std::string>{"x1", "x2"}), 5, 4, false);
    for (const auto& lc : two.levels) {
        EXPECT_EQ(lc.count, 1);
        EXPECT_EQ(lc.est_dim, 0);
    }
}

TEST(FpCount, MatchesExhaustiveEnumeration)
{
    SplitMix64 rng(401);
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 2));
        Ideal ideal = trial % 2 == 0 ? random_monomial_ideal(rng, n, {1, 3}, {1, 2}).to_ideal()
                                     : random_binomial_ideal(rng, n);
        const std::uint32_t p = trial % 3 == 0 ? 3 : 5;
        const std::size_t max_level = n == 1 ? 4 : (p == 3 ? 3 : 2);
        auto rep = count_jet_points(ideal, p, max_level, false);
        auto fib = count_jet_points(ideal, p, max_level, true);
        for (std::size_t m = 0; m <= max_level; ++m) {
            EXPECT_EQ(rep.levels[m].count, oracle::enumerate_jet_points(ideal, p, m, JetConvention::Coefficient))
                << render(ideal) << " p=" << p << " m=" << m;
            EXPECT_EQ(fib.levels[m].count, oracle::enumerate_jet_points(ideal, p, m, JetConvention::Coefficient, true))
                << render(ideal) << " p=" << p << " m=" << m << " fiber";
        }
    }
}

TEST(FpCount, MonomialIdealsMatchStratumSums)
{
    SplitMix64 rng(409);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        auto mi = random_monomial_ideal(rng, n, {1, 4}, {1, 4});
        const std::uint32_t p = trial % 2 ? 5 : 7;
        auto rep = count_jet_points(mi.to_ideal(), p, 5, false);
        auto fib = count_jet_points(mi.to_ideal(), p, 5, true);
        for (std::size_t m = 0; m <= 5; ++m) {
            EXPECT_EQ(rep.levels[m].count, oracle::monomial_jet_count(mi, p, m)) << render(mi) << " m=" << m;
            EXPECT_EQ(fib.levels[m].count, oracle::monomial_jet_count(mi, p, m, true)) << render(mi) << " m=" << m;
        }
    }
}

TEST(FpCount, ShortcutDoesNotChangeCounts)
{
    CountOptions plain;
    plain.smooth_shortcut = false;
    for (const char* text : {"u^2 - v^3", "x^2 + y^2 - 1", "x*y - z^2", "y^2 - x^3 - x"}) {
        auto ideal = parse_ideal(text);
        auto a = count_jet_points(ideal, 5, 3, false);
        auto b = count_jet_points(ideal, 5, 3, false, plain);
        for (std::size_t m = 0; m <= 3; ++m) {
            EXPECT_EQ(a.levels[m].count, b.levels[m].count) << text << " m=" << m;
        }
    }
}

TEST(FpCount, SmoothHypersurfacesLiftFreely)
{
    for (const char* text : {"v", "u - v"}) {
        auto ideal = parse_ideal(text, std::vector<std::string>{"u", "v"});
        for (std::uint32_t p : {5u, 7u}) {
            auto rep = count_jet_points(ideal, p, 6, false);
            const BigInt base = rep.levels[0].count;
            EXPECT_EQ(base, p);
            for (std::size_t m = 0; m <= 6; ++m) {
                EXPECT_EQ(rep.levels[m].count, base * jetlct::pow(BigInt(p), m)) << text;
                EXPECT_EQ(rep.levels[m].est_dim, static_cast<std::int64_t>(m) + 1);
            }
        }
    }
}

TEST(FpCount, LiftingNeverExceedsAFullFibre)
{
    for (const char* text : {"u^2 - v^3", "x*y", "x^2*y - y^3", "x*y*z"}) {
        auto ideal = parse_ideal(text);
        auto rep = count_jet_points(ideal, 5, 5, false);
        const BigInt fibre = jetlct::pow(BigInt(5), ideal.ambient_dim());
        for (std::size_t m = 1; m <= 5; ++m) {
            EXPECT_LE(rep.levels[m].count, rep.levels[m - 1].count * fibre) << text;
        }
    }
}

TEST(FpCount, ConventionsAgreeAboveTheLevel)
{
    CountOptions deriv;
    deriv.convention = JetConvention::Derivation;
    for (const char* text : {"u^2 - v^3", "x^2 - y^2", "x*y + 2*y^3"}) {
        auto ideal = parse_ideal(text);
        auto a = count_jet_points(ideal, 7, 5, false);
        auto b = count_jet_points(ideal, 7, 5, false, deriv);
        for (std::size_t m = 0; m <= 5; ++m) {
            EXPECT_EQ(a.levels[m].count, b.levels[m].count) << text;
        }
    }
    EXPECT_THROW(count_jet_points(parse_ideal("x^2"), 5, 5, false, deriv), std::invalid_argument);
}

TEST(FpCount, BudgetReportsCompletedLevels)
{
    CountOptions tiny;
    tiny.budget = 2000;
    tiny.smooth_shortcut = false;
    try {
        count_jet_points(parse_ideal("x*y - z*w"), 5, 8, false, tiny);
        FAIL() << "expected the budget to run out";
    } catch (const BudgetExceeded& e) {
        EXPECT_LT(e.partial().levels.size(), 9u);
        for (std::size_t m = 0; m < e.partial().levels.size(); ++m) {
            EXPECT_EQ(e.partial().levels[m].level, m);
        }
    }
}

TEST(EstimateLct, CuspReachesFiveSixthsAtLevelFive)
{
    auto est = estimate_lct(parse_ideal("u^2 - v^3"), {5, 7}, 8, false);
    EXPECT_TRUE(est.disagreeing_levels.empty());
    EXPECT_EQ(est.estimate, Threshold(make_rational(5, 6)));
    EXPECT_EQ(est.best_level, 5u);
    EXPECT_NEAR(est.approx, 5.0 / 6.0, 1e-12);
}

TEST(EstimateLct, MonomialCuspWithinGranularity)
{
    auto est = estimate_lct(parse_ideal("x^2; y^3"), {5, 7}, 6, false);
    const Rational exact = make_rational(5, 6);
    const Rational gap = est.estimate.value() - exact;
    EXPECT_LE(abs(gap), make_rational(1, 7));
}

TEST(EstimateLct, PointInThePlane)
{
    auto est = estimate_lct(parse_ideal("x1; x2", std::vector<std::string>{"x1", "x2"}), {5, 7}, 4, false);
    EXPECT_EQ(est.estimate, Threshold(Rational(2)));
}

TEST(EstimateLct, EmptySchemeIsInfinite)
{
    auto est = estimate_lct(parse_ideal("1", std::vector<std::string>{"x", "y"}), {5, 7}, 2, false);
    EXPECT_TRUE(est.estimate.is_infinite());
}

TEST(EstimateDimension, RoundsTheLogarithm)
{
    EXPECT_EQ(estimate_dimension(BigInt(45), 5), 2);
    EXPECT_EQ(estimate_dimension(BigInt(65), 5), 3);  // (xy) at m = 1 overshoots: 65 = 5 (3*5 - 2)
    EXPECT_FALSE(estimate_dimension(BigInt(0), 5));
    EXPECT_EQ(ratio_dimension(BigInt(65), 5, BigInt(7 * 19), 7), 2);
}

TEST(Recursion, CuspShiftsBySixAndSeven)
{
    auto r7 = cusp_recursion_check(7, 8);
    EXPECT_TRUE(r7.holds);
    ASSERT_EQ(r7.est_dims.size(), 9u);
    EXPECT_EQ(*r7.est_dims[6], *r7.est_dims[0] + 7);
    EXPECT_EQ(*r7.est_dims[7], *r7.est_dims[1] + 7);
    EXPECT_TRUE(cusp_recursion_check(5, 8).holds);
    EXPECT_THROW(cusp_recursion_check(7, 5), std::invalid_argument);
}

TEST(Recursion, SmoothCurveIsLinear)
{
    auto r = recursion_check(parse_ideal("v", std::vector<std::string>{"u", "v"}), 7, 8, 6, 6);
    EXPECT_TRUE(r.holds);
    for (std::size_t m = 0; m < r.est_dims.size(); ++m) {
        EXPECT_EQ(*r.est_dims[m], static_cast<std::int64_t>(m) + 1);
    }
}

TEST(EstimateLct, TwoPrimeFitSeesThroughManyComponents)
{
    // The umbrella's Y_3 has enough top-dimensional components to push
    // round(log_p count) one above the dimension for both primes.
    auto est = estimate_lct(parse_ideal("x^2 - y^2*z"), {5, 7}, 5, false);
    EXPECT_EQ(est.estimate, Threshold(make_rational(3, 4)));
    ASSERT_TRUE(est.ratio_estimate);
    EXPECT_EQ(*est.ratio_estimate, Threshold(Rational(1)));
    auto cusp = estimate_lct(parse_ideal("u^2 - v^3"), {5, 7}, 8, false);
    EXPECT_EQ(*cusp.ratio_estimate, Threshold(make_rational(5, 6)));
    EXPECT_FALSE(estimate_lct(parse_ideal("u^2 - v^3"), {5}, 3, false).ratio_estimate);
}
