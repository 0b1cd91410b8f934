#include "jetlct/simplex.hpp"
#include "jetlct/random.hpp"

#include <gtest/gtest.h>

using namespace jetlct;

namespace {

std::vector<Rational> q(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (auto x : v) {
        out.emplace_back(x);
    }
    return out;
}

}  // namespace

TEST(Simplex, SmallMinimisation)
{
    // min x + y  s.t.  2x >= 1, 3y >= 1
    LinearProgram lp(2);
    lp.objective = q({1, 1});
    lp.add(q({2, 0}), Relation::GreaterEq, Rational(1));
    lp.add(q({0, 3}), Relation::GreaterEq, Rational(1));
    auto res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.value, make_rational(5, 6));
    EXPECT_EQ(res.x, (std::vector<Rational>{make_rational(1, 2), make_rational(1, 3)}));
}

TEST(Simplex, InfeasibleAndUnbounded)
{
    LinearProgram infeasible(1);
    infeasible.add(q({1}), Relation::LessEq, Rational(1));
    infeasible.add(q({1}), Relation::GreaterEq, Rational(2));
    EXPECT_EQ(solve_lp(infeasible).status, LpStatus::Infeasible);

    LinearProgram unbounded(2);
    unbounded.objective = q({-1, 0});
    unbounded.add(q({1, -1}), Relation::LessEq, Rational(1));
    EXPECT_EQ(solve_lp(unbounded).status, LpStatus::Unbounded);
}

TEST(Simplex, EqualitiesAndRedundantRows)
{
    LinearProgram lp(3);
    lp.objective = q({1, 2, 3});
    lp.add(q({1, 1, 1}), Relation::Equal, Rational(6));
    lp.add(q({2, 2, 2}), Relation::Equal, Rational(12));
    lp.add(q({1, 0, 0}), Relation::LessEq, Rational(2));
    auto res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.value, Rational(10));
    EXPECT_EQ(res.x, q({2, 4, 0}));
}

TEST(Simplex, LexminPicksSmallestOptimalVertex)
{
    // Every point of x + y = 1 is optimal for min x + y s.t. x + y >= 1.
    LinearProgram lp(2);
    lp.objective = q({1, 1});
    lp.add(q({1, 1}), Relation::GreaterEq, Rational(1));
    auto res = solve_lp_lexmin(lp);
    ASSERT_EQ(res.status, LpStatus::Optimal);
    EXPECT_EQ(res.x, q({0, 1}));
}

TEST(Simplex, OptimumMatchesGridSearchOnRandomCoveringPrograms)
{
    // min c.x s.t. A x >= 1 with small nonnegative integer data; compare with
    // the best vertex found by solving every 2x2 subsystem.
    SplitMix64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        LinearProgram lp(2);
        lp.objective = {Rational(rng.uniform(1, 4)), Rational(rng.uniform(1, 4))};
        std::vector<std::vector<Rational>> rows;
        for (auto k = rng.uniform(1, 4); k > 0; --k) {
            std::vector<Rational> row{Rational(rng.uniform(0, 4)), Rational(rng.uniform(0, 4))};
            if (row[0] == 0 && row[1] == 0) {
                row[0] = 1;
            }
            rows.push_back(row);
            lp.add(row, Relation::GreaterEq, Rational(1));
        }
        rows.push_back({Rational(1), Rational(0)});
        rows.push_back({Rational(0), Rational(1)});
        auto feasible = [&](const std::vector<Rational>& x) {
            if (x[0] < 0 || x[1] < 0) {
                return false;
            }
            for (std::size_t k = 0; k + 2 < rows.size(); ++k) {
                if (rows[k][0] * x[0] + rows[k][1] * x[1] < 1) {
                    return false;
                }
            }
            return true;
        };
        std::optional<Rational> best;
        for (std::size_t a = 0; a < rows.size(); ++a) {
            for (std::size_t b = a + 1; b < rows.size(); ++b) {
                Rational ra = a + 2 < rows.size() ? Rational(1) : Rational(0);
                Rational rb = b + 2 < rows.size() ? Rational(1) : Rational(0);
                Rational det = rows[a][0] * rows[b][1] - rows[a][1] * rows[b][0];
                if (det == 0) {
                    continue;
                }
                std::vector<Rational> x{(ra * rows[b][1] - rb * rows[a][1]) / det,
                                        (rows[a][0] * rb - rows[b][0] * ra) / det};
                if (feasible(x)) {
                    Rational v = lp.objective[0] * x[0] + lp.objective[1] * x[1];
                    if (!best || v < *best) {
                        best = v;
                    }
                }
            }
        }
        auto res = solve_lp(lp);
        ASSERT_EQ(res.status, LpStatus::Optimal);
        ASSERT_TRUE(best.has_value());
        EXPECT_EQ(res.value, *best);
    }
}
