#include "jetlct/json_io.hpp"
#include "jetlct/theorems.hpp"

#include <gtest/gtest.h>

using namespace jetlct;

TEST(Properties, ProductOfCoordinatePowers)
{
    MonomialIdeal x2(1, {{2}}), y3(1, {{3}});
    EXPECT_EQ(lct_threshold(product_ideal(x2, y3)), lct_threshold(x2) + lct_threshold(y3));
    EXPECT_EQ(lct_monomial(product_ideal(x2, y3)).lct, make_rational(5, 6));
}

TEST(Properties, IntersectionOfHyperplanes)
{
    // lct(x) + lct(y) = 2 = lct((x) + (y))
    MonomialIdeal x(2, {{1, 0}}), y(2, {{0, 1}});
    EXPECT_TRUE(lct_threshold(x) + lct_threshold(y) >= lct_threshold(x + y));
    EXPECT_EQ(lct_threshold(x + y), Threshold(Rational(2)));
}

TEST(Properties, RestrictionToTheLastHyperplane)
{
    auto h = restrict_to_last_hyperplane(MonomialIdeal(2, {{2, 0}, {0, 3}}));
    ASSERT_TRUE(h);
    EXPECT_EQ(render(*h), "(x^2)");
    EXPECT_FALSE(restrict_to_last_hyperplane(MonomialIdeal(2, {{0, 1}})));
    EXPECT_FALSE(restrict_to_last_hyperplane(MonomialIdeal(1, {{2}})));
}

TEST(Properties, PropertyNamesRoundTrip)
{
    for (auto p : {Property::Product, Property::Intersection, Property::Bounds, Property::Monotonic,
                   Property::Restriction}) {
        EXPECT_EQ(property_from_string(to_string(p)), p);
    }
    EXPECT_FALSE(property_from_string("everything"));
}

TEST(Checks, SeededRunsFindNoViolations)
{
    TrialConfig cfg;
    cfg.trials = 150;
    EXPECT_TRUE(check_all(cfg).empty());
    cfg.n_range = {1, 4};
    cfg.degree_range = {1, 7};
    cfg.generator_count_range = {1, 6};
    cfg.seed = 9001;
    EXPECT_TRUE(check_all(cfg).empty());
}

TEST(Checks, ThreadCountDoesNotChangeResults)
{
    TrialConfig one;
    one.trials = 60;
    TrialConfig four = one;
    four.threads = 4;
    // Compare trial by trial through the replay entry point as well.
    for (auto p : {Property::Product, Property::Bounds}) {
        auto a = check_property(p, one);
        auto b = check_property(p, four);
        EXPECT_EQ(a.size(), b.size());
        for (std::uint64_t t = 0; t < one.trials; ++t) {
            const auto seed = SplitMix64::derive(one.seed ^ static_cast<std::uint64_t>(p), t);
            EXPECT_EQ(run_trial(p, seed, one).has_value(), run_trial(p, seed, four).has_value());
        }
    }
}

TEST(Checks, InvalidConfigurationIsRejected)
{
    TrialConfig cfg;
    cfg.trials = 0;
    EXPECT_THROW(check_all(cfg), std::invalid_argument);
    cfg.trials = 1;
    cfg.degree_range = {3, 2};
    EXPECT_THROW(check_all(cfg), std::invalid_argument);
}

TEST(Checks, ViolationReportsSerialise)
{
    ViolationReport v{"bounds", {"(x^2)"}, "lct <= n", {"1/2", "1"}, 3, 77};
    auto j = to_json(v);
    EXPECT_EQ(j["property"], "bounds");
    EXPECT_EQ(j["trial"], 3);
    EXPECT_EQ(j["values"][0], "1/2");
}

TEST(RandomIdeals, DeterministicPerSeed)
{
    SplitMix64 a(5), b(5);
    for (int k = 0; k < 20; ++k) {
        EXPECT_EQ(random_monomial_ideal(a, 3, {1, 6}, {1, 5}), random_monomial_ideal(b, 3, {1, 6}, {1, 5}));
    }
    EXPECT_NE(SplitMix64::derive(42, 0), SplitMix64::derive(42, 1));
    SplitMix64 seq(42);
    EXPECT_EQ(seq.next(), SplitMix64::derive(42, 0));
    EXPECT_EQ(seq.next(), SplitMix64::derive(42, 1));
}
