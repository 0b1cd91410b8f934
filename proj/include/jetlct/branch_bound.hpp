#pragma once

// Small pure-integer covering programs
//
//   minimize sum_i a_i   s.t.  sum_i b_ji a_i >= rhs for every row j,
//                              lower_i <= a_i <= upper_i, a integer,
//
// with nonnegative integer rows b_j, solved by depth-first branch and bound
// over the exact LP relaxation.

#include "jetlct/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace jetlct {

struct CoveringProgram {
    std::vector<std::vector<std::uint32_t>> rows;
    std::int64_t rhs = 0;
    std::vector<std::int64_t> lower;
    std::vector<std::int64_t> upper;

    std::size_t num_vars() const { return lower.size(); }

    bool feasible(const std::vector<std::int64_t>& a) const
    {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < lower[i] || a[i] > upper[i]) {
                return false;
            }
        }
        for (const auto& b : rows) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                s += static_cast<std::int64_t>(b[i]) * a[i];
            }
            if (s < rhs) {
                return false;
            }
        }
        return true;
    }
};

struct IntegerSolution {
    std::int64_t value = 0;
    std::vector<std::int64_t> point;
    std::size_t nodes = 0;
};

namespace detail {

inline LpResult covering_relaxation(const CoveringProgram& prog, const std::vector<std::int64_t>& lo,
                                    const std::vector<std::int64_t>& hi)
{
    const std::size_t n = prog.num_vars();
    LinearProgram lp(n);
    lp.objective.assign(n, Rational(1));
    for (const auto& b : prog.rows) {
        lp.add(std::vector<Rational>(b.begin(), b.end()), Relation::GreaterEq, Rational(prog.rhs));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> unit(n, Rational(0));
        unit[i] = 1;
        if (lo[i] > 0) {
            lp.add(unit, Relation::GreaterEq, Rational(lo[i]));
        }
        lp.add(std::move(unit), Relation::LessEq, Rational(hi[i]));
    }
    return solve_lp(lp);
}

inline std::int64_t to_int64(const BigInt& z)
{
    if (!z.fits_slong_p()) {
        throw std::overflow_error("integer program value out of range");
    }
    return z.get_si();
}

class CoveringSearch {
public:
    explicit CoveringSearch(const CoveringProgram& prog) : prog_(prog) {}

    std::optional<IntegerSolution> run()
    {
        explore(prog_.lower, prog_.upper);
        if (!best_) {
            return std::nullopt;
        }
        best_->nodes = nodes_;
        return best_;
    }

private:
    void explore(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi)
    {
        ++nodes_;
        LpResult relax = covering_relaxation(prog_, lo, hi);
        if (relax.status != LpStatus::Optimal) {
            return;
        }
        // The objective is integral on integer points.
        const std::int64_t bound = to_int64(ceil_of(relax.value));
        if (best_ && bound >= best_->value) {
            return;
        }

        // Rounding up keeps every covering row satisfied and stays in the box.
        std::vector<std::int64_t> rounded(lo.size());
        std::int64_t rounded_sum = 0;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            rounded[i] = to_int64(ceil_of(relax.x[i]));
            rounded_sum += rounded[i];
        }
        if (!best_ || rounded_sum < best_->value) {
            best_ = IntegerSolution{rounded_sum, rounded, 0};
        }
        if (rounded_sum == bound) {
            return;
        }

        // Branch on the most fractional coordinate, down branch first.
        std::optional<std::size_t> pick;
        Rational best_frac(-1);
        for (std::size_t i = 0; i < lo.size(); ++i) {
            Rational f = relax.x[i] - Rational(floor_of(relax.x[i]));
            if (f == 0) {
                continue;
            }
            Rational closeness = f < Rational(1, 2) ? f : 1 - f;
            if (closeness > best_frac) {
                best_frac = closeness;
                pick = i;
            }
        }
        if (!pick) {
            return;  // integral relaxation: rounded point is the relaxation point
        }
        const std::int64_t fl = to_int64(floor_of(relax.x[*pick]));
        {
            auto h = hi;
            h[*pick] = fl;
            if (h[*pick] >= lo[*pick]) {
                explore(lo, std::move(h));
            }
        }
        {
            auto l = lo;
            l[*pick] = fl + 1;
            if (l[*pick] <= hi[*pick]) {
                explore(std::move(l), hi);
            }
        }
    }

    const CoveringProgram& prog_;
    std::optional<IntegerSolution> best_;
    std::size_t nodes_ = 0;
};

}  // namespace detail

inline std::optional<IntegerSolution> solve_covering(const CoveringProgram& prog)
{
    for (std::size_t i = 0; i < prog.num_vars(); ++i) {
        if (prog.lower[i] > prog.upper[i]) {
            return std::nullopt;
        }
    }
    return detail::CoveringSearch(prog).run();
}

}  // namespace jetlct
