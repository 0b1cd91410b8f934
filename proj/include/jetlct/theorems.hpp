#pragma once

// Randomized checks of standard LCT identities and inequalities over
// monomial ideals. Every value comes from the exact polar LP; violations are
// returned as data together with the seed that regenerates the inputs.
//
// For a monomial ideal contained in the maximal ideal, the LCT at the origin
// equals the global LCT: the locus where (A^n, c V(I)) fails to be log
// canonical is closed and torus invariant, so if nonempty it contains the
// origin. The checks stated at a point therefore use lct_monomial directly.

#include "jetlct/jet.hpp"
#include "jetlct/newton.hpp"
#include "jetlct/random.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace jetlct {

struct TrialConfig {
    std::uint64_t seed = 42;
    std::uint64_t trials = 100;
    IntRange n_range{1, 3};
    IntRange degree_range{1, 5};
    IntRange generator_count_range{1, 4};
    unsigned threads = 1;

    void validate() const
    {
        if (trials < 1) {
            throw std::invalid_argument("trials must be at least 1");
        }
        if (n_range.empty() || degree_range.empty() || generator_count_range.empty()) {
            throw std::invalid_argument("trial ranges must be nonempty");
        }
        if (n_range.lo < 1 || degree_range.lo < 1 || generator_count_range.lo < 1) {
            throw std::invalid_argument("trial ranges must be positive");
        }
    }
};

struct ViolationReport {
    std::string property;
    std::vector<std::string> inputs;
    std::string relation;
    std::vector<std::string> values;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;  // trial seed; run_trial(property, seed, cfg) replays it
};

enum class Property { Product, Intersection, Bounds, Monotonic, Restriction };

inline const char* to_string(Property p)
{
    switch (p) {
    case Property::Product: return "product";
    case Property::Intersection: return "intersection";
    case Property::Bounds: return "bounds";
    case Property::Monotonic: return "monotonic";
    case Property::Restriction: return "restriction";
    }
    return "?";
}

inline std::optional<Property> property_from_string(const std::string& s)
{
    for (auto p : {Property::Product, Property::Intersection, Property::Bounds, Property::Monotonic,
                   Property::Restriction}) {
        if (s == to_string(p)) {
            return p;
        }
    }
    return std::nullopt;
}

// Intersection with the coordinate hyperplane x_n = 0, as an ideal of the
// hyperplane: generators involving x_n vanish, the others drop their last
// coordinate. Empty when every generator vanishes, i.e. H lies inside Y.
inline std::optional<MonomialIdeal> restrict_to_last_hyperplane(const MonomialIdeal& mi)
{
    const std::size_t n = mi.ambient_dim();
    std::vector<Exponents> kept;
    for (const auto& g : mi.generators()) {
        if (g[n - 1] == 0) {
            kept.emplace_back(g.begin(), g.end() - 1);
        }
    }
    if (kept.empty() || n == 1) {
        return std::nullopt;
    }
    return MonomialIdeal(n - 1, std::move(kept));
}

namespace detail {

inline std::size_t draw_dim(SplitMix64& rng, const TrialConfig& cfg)
{
    return static_cast<std::size_t>(rng.uniform(cfg.n_range.lo, cfg.n_range.hi));
}

inline MonomialIdeal draw_ideal(SplitMix64& rng, std::size_t n, const TrialConfig& cfg)
{
    return random_monomial_ideal(rng, n, cfg.degree_range, cfg.generator_count_range);
}

inline ViolationReport violation(Property p, std::vector<std::string> inputs, std::string relation,
                                 std::vector<std::string> values)
{
    return ViolationReport{to_string(p), std::move(inputs), std::move(relation), std::move(values), 0, 0};
}

}  // namespace detail

inline std::optional<ViolationReport> run_trial(Property prop, std::uint64_t trial_seed, const TrialConfig& cfg)
{
    SplitMix64 rng(trial_seed);
    std::optional<ViolationReport> out;
    switch (prop) {
    case Property::Product: {
        auto a = detail::draw_ideal(rng, detail::draw_dim(rng, cfg), cfg);
        auto b = detail::draw_ideal(rng, detail::draw_dim(rng, cfg), cfg);
        Threshold lhs = lct_threshold(product_ideal(a, b));
        Threshold ca = lct_threshold(a), cb = lct_threshold(b);
        if (!(lhs == ca + cb)) {
            out = detail::violation(prop, {render(a), render(b)}, "lct(A x B) = lct(A) + lct(B)",
                                    {lhs.str(), ca.str(), cb.str()});
        }
        break;
    }
    case Property::Intersection: {
        const std::size_t n = detail::draw_dim(rng, cfg);
        auto a = detail::draw_ideal(rng, n, cfg);
        auto b = detail::draw_ideal(rng, n, cfg);
        Threshold ca = lct_threshold(a), cb = lct_threshold(b), cab = lct_threshold(a + b);
        if (!(ca + cb >= cab)) {
            out = detail::violation(prop, {render(a), render(b)}, "lct(A) + lct(B) >= lct(A + B)",
                                    {ca.str(), cb.str(), cab.str()});
        }
        break;
    }
    case Property::Bounds: {
        const std::size_t n = detail::draw_dim(rng, cfg);
        auto a = detail::draw_ideal(rng, n, cfg);
        const Rational c = lct_monomial(a).lct;
        const auto q = static_cast<long>(multiplicity_at_origin(a));
        const Rational dim(static_cast<long>(n));
        if (!(c <= dim) || !(make_rational(1, q) <= c) || !(c <= dim / q)) {
            out = detail::violation(prop, {render(a)}, "lct <= n and 1/q <= lct <= n/q",
                                    {to_string(c), std::to_string(n), std::to_string(q)});
        }
        break;
    }
    case Property::Monotonic: {
        const std::size_t n = detail::draw_dim(rng, cfg);
        auto a = detail::draw_ideal(rng, n, cfg);
        TrialConfig one = cfg;
        one.generator_count_range = {1, 1};
        auto bigger = a + detail::draw_ideal(rng, n, one);
        Threshold small_c = lct_threshold(a), big_c = lct_threshold(bigger);
        if (!bigger.contains(a) || !(big_c >= small_c)) {
            out = detail::violation(prop, {render(a), render(bigger)}, "A subset B implies lct(B) >= lct(A)",
                                    {small_c.str(), big_c.str()});
        }
        break;
    }
    case Property::Restriction: {
        const std::size_t n = detail::draw_dim(rng, cfg);
        auto a = detail::draw_ideal(rng, n, cfg);
        const Rational c = lct_monomial(a).lct;
        auto restricted = restrict_to_last_hyperplane(a);
        // c(H, H) = 0 by convention.
        const Threshold ch = restricted ? lct_threshold(*restricted) : Threshold(Rational(0));
        if (!(Threshold(c) >= ch)) {
            out = detail::violation(prop, {render(a), restricted ? render(*restricted) : std::string("(0)")},
                                    "lct(X, Y) >= lct(H, Y cap H)", {to_string(c), ch.str()});
        }
        break;
    }
    }
    if (out) {
        out->seed = trial_seed;
    }
    return out;
}

inline std::vector<ViolationReport> check_property(Property prop, const TrialConfig& cfg)
{
    cfg.validate();
    const unsigned threads = std::max(1u, cfg.threads);
    std::vector<std::vector<ViolationReport>> per_thread(threads);
    auto work = [&](unsigned id) {
        for (std::uint64_t t = id; t < cfg.trials; t += threads) {
            const std::uint64_t seed = SplitMix64::derive(cfg.seed ^ static_cast<std::uint64_t>(prop), t);
            if (auto v = run_trial(prop, seed, cfg)) {
                v->trial = t;
                per_thread[id].push_back(std::move(*v));
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) {
            pool.emplace_back(work, id);
        }
    }
    std::vector<ViolationReport> all;
    for (auto& v : per_thread) {
        all.insert(all.end(), v.begin(), v.end());
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.trial < b.trial; });
    return all;
}

inline std::vector<ViolationReport> check_product(const TrialConfig& cfg) { return check_property(Property::Product, cfg); }
inline std::vector<ViolationReport> check_intersection(const TrialConfig& cfg)
{
    return check_property(Property::Intersection, cfg);
}
inline std::vector<ViolationReport> check_bounds(const TrialConfig& cfg) { return check_property(Property::Bounds, cfg); }
inline std::vector<ViolationReport> check_monotonicity(const TrialConfig& cfg)
{
    return check_property(Property::Monotonic, cfg);
}
inline std::vector<ViolationReport> check_restriction(const TrialConfig& cfg)
{
    return check_property(Property::Restriction, cfg);
}

inline std::vector<ViolationReport> check_all(const TrialConfig& cfg)
{
    std::vector<ViolationReport> all;
    for (auto p : {Property::Product, Property::Intersection, Property::Bounds, Property::Monotonic,
                   Property::Restriction}) {
        auto v = check_property(p, cfg);
        all.insert(all.end(), v.begin(), v.end());
    }
    return all;
}

}  // namespace jetlct
