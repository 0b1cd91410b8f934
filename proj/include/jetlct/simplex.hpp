#pragma once

// Exact rational linear programming: dense two-phase tableau simplex with
// Bland's rule, so it terminates on degenerate problems.
//
//   minimize    c . x
//   subject to  a_k . x (<= | >= | =) b_k   for every constraint k
//               x >= 0

#include "jetlct/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace jetlct {

enum class Relation { LessEq, GreaterEq, Equal };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
};

struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;

    explicit LinearProgram(std::size_t n = 0) : num_vars(n), objective(n, Rational(0)) {}

    void add(std::vector<Rational> coeffs, Relation rel, Rational rhs)
    {
        if (coeffs.size() != num_vars) {
            throw std::invalid_argument("constraint width differs from the variable count");
        }
        constraints.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value{0};
    std::vector<Rational> x;
};

namespace detail {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows, std::vector<Rational>(cols + 1, Rational(0))), cols_(cols) {}

    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> cost_;  // reduced costs, last entry is -objective
    std::size_t cols_;

    void pivot(std::size_t r, std::size_t c)
    {
        auto& prow = rows_[r];
        Rational inv = 1 / prow[c];
        for (auto& v : prow) {
            if (v != 0) {
                v *= inv;
            }
        }
        auto eliminate = [&](std::vector<Rational>& row) {
            if (row[c] == 0) {
                return;
            }
            Rational f = row[c];
            for (std::size_t k = 0; k <= cols_; ++k) {
                if (prow[k] != 0) {
                    row[k] -= f * prow[k];
                }
            }
        };
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i != r) {
                eliminate(rows_[i]);
            }
        }
        eliminate(cost_);
        basis_[r] = c;
    }

    void set_objective(const std::vector<Rational>& c)
    {
        cost_.assign(cols_ + 1, Rational(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            cost_[k] = c[k];
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& cb = cost_[basis_[r]];
            if (cb == 0) {
                continue;
            }
            Rational f = cb;
            for (std::size_t k = 0; k <= cols_; ++k) {
                if (rows_[r][k] != 0) {
                    cost_[k] -= f * rows_[r][k];
                }
            }
        }
    }

    // Returns false when the objective is unbounded below.
    bool optimize(const std::vector<bool>& allowed)
    {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t k = 0; k < cols_; ++k) {
                if (allowed[k] && cost_[k] < 0) {
                    enter = k;
                    break;
                }
            }
            if (!enter) {
                return true;
            }
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (rows_[r][*enter] <= 0) {
                    continue;
                }
                Rational ratio = rows_[r][cols_] / rows_[r][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (!leave) {
                return false;
            }
            pivot(*leave, *enter);
        }
    }
};

}  // namespace detail

inline LpResult solve_lp(const LinearProgram& lp)
{
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.constraints.size();
    if (lp.objective.size() != n) {
        throw std::invalid_argument("objective width differs from the variable count");
    }

    // Normalize to nonnegative right-hand sides.
    std::vector<Constraint> rows = lp.constraints;
    for (auto& row : rows) {
        if (row.rhs < 0) {
            for (auto& a : row.coeffs) {
                a = -a;
            }
            row.rhs = -row.rhs;
            if (row.rel == Relation::LessEq) {
                row.rel = Relation::GreaterEq;
            } else if (row.rel == Relation::GreaterEq) {
                row.rel = Relation::LessEq;
            }
        }
    }

    std::size_t slack_count = 0, art_count = 0;
    for (const auto& row : rows) {
        slack_count += row.rel != Relation::Equal;
        art_count += row.rel != Relation::LessEq;
    }
    const std::size_t cols = n + slack_count + art_count;
    detail::Tableau tab(m, cols);
    tab.basis_.assign(m, 0);
    std::vector<bool> is_art(cols, false);

    std::size_t next_slack = n, next_art = n + slack_count;
    for (std::size_t r = 0; r < m; ++r) {
        auto& trow = tab.rows_[r];
        for (std::size_t k = 0; k < n; ++k) {
            trow[k] = rows[r].coeffs[k];
        }
        trow[cols] = rows[r].rhs;
        switch (rows[r].rel) {
        case Relation::LessEq:
            trow[next_slack] = 1;
            tab.basis_[r] = next_slack++;
            break;
        case Relation::GreaterEq:
            trow[next_slack++] = -1;
            trow[next_art] = 1;
            is_art[next_art] = true;
            tab.basis_[r] = next_art++;
            break;
        case Relation::Equal:
            trow[next_art] = 1;
            is_art[next_art] = true;
            tab.basis_[r] = next_art++;
            break;
        }
    }

    std::vector<bool> allowed(cols, true);
    if (art_count > 0) {
        std::vector<Rational> phase1(cols, Rational(0));
        for (std::size_t k = 0; k < cols; ++k) {
            if (is_art[k]) {
                phase1[k] = 1;
            }
        }
        tab.set_objective(phase1);
        tab.optimize(allowed);
        if (tab.cost_[cols] != 0) {
            return LpResult{LpStatus::Infeasible, Rational(0), {}};
        }
        // Drive remaining artificials out of the basis; rows where that is
        // impossible are redundant and dropped.
        for (std::size_t r = 0; r < tab.rows_.size();) {
            if (!is_art[tab.basis_[r]]) {
                ++r;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t k = 0; k < cols; ++k) {
                if (!is_art[k] && tab.rows_[r][k] != 0) {
                    col = k;
                    break;
                }
            }
            if (col) {
                tab.pivot(r, *col);
                ++r;
            } else {
                tab.rows_.erase(tab.rows_.begin() + static_cast<std::ptrdiff_t>(r));
                tab.basis_.erase(tab.basis_.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
        for (std::size_t k = 0; k < cols; ++k) {
            allowed[k] = !is_art[k];
        }
    }

    std::vector<Rational> phase2(cols, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        phase2[k] = lp.objective[k];
    }
    tab.set_objective(phase2);
    if (!tab.optimize(allowed)) {
        return LpResult{LpStatus::Unbounded, Rational(0), {}};
    }

    LpResult out{LpStatus::Optimal, -tab.cost_[cols], std::vector<Rational>(n, Rational(0))};
    for (std::size_t r = 0; r < tab.rows_.size(); ++r) {
        if (tab.basis_[r] < n) {
            out.x[tab.basis_[r]] = tab.rows_[r][cols];
        }
    }
    return out;
}

// Lexicographically smallest point among the optimal solutions: the optimum
// is pinned as an equality and x_0, x_1, ... are minimized in turn.
inline LpResult solve_lp_lexmin(const LinearProgram& lp)
{
    LpResult first = solve_lp(lp);
    if (first.status != LpStatus::Optimal) {
        return first;
    }
    LinearProgram pinned = lp;
    pinned.add(lp.objective, Relation::Equal, first.value);
    std::vector<Rational> point(lp.num_vars, Rational(0));
    for (std::size_t i = 0; i < lp.num_vars; ++i) {
        LinearProgram step = pinned;
        step.objective.assign(lp.num_vars, Rational(0));
        step.objective[i] = 1;
        LpResult r = solve_lp(step);
        if (r.status != LpStatus::Optimal) {
            throw std::logic_error("lexicographic refinement lost feasibility");
        }
        point[i] = r.value;
        std::vector<Rational> unit(lp.num_vars, Rational(0));
        unit[i] = 1;
        pinned.add(std::move(unit), Relation::Equal, r.value);
    }
    return LpResult{LpStatus::Optimal, first.value, std::move(point)};
}

}  // namespace jetlct
