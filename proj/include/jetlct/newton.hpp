#pragma once

// Newton polyhedron P_I = conv{exponents of monomials in I} of a monomial
// ideal and its polar P_I° = {u : <u, v> >= 1 for all v in P_I}.
//
// The log canonical threshold of (A^n, V(I)) is min{sum_i u_i : u in P_I°},
// equivalently sup{r > 0 : (1,...,1) in r P_I}.
//
// Only the minimal generators b_j enter the polar program. Since I is an
// ideal, P_I = conv{b_j} + R_{>=0}^n. For u >= 0 a point v = sum_j l_j b_j + s
// (l convex, s >= 0) has <u, v> >= sum_j l_j <u, b_j>, so <u, b_j> >= 1 for
// all j already forces <u, v> >= 1 on all of P_I. Conversely u in P_I° must
// be >= 0, otherwise moving v along a ray of R_{>=0}^n breaks the bound.

#include "jetlct/polynomial.hpp"
#include "jetlct/simplex.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jetlct {

struct UnitIdeal : std::invalid_argument {
    UnitIdeal() : std::invalid_argument("the unit ideal defines the empty scheme") {}
};

// {u in R^n : u >= 0, B u >= 1}, rows of B being the minimal generators.
struct PolarProgram {
    std::size_t n = 0;
    std::vector<Exponents> rows;

    LinearProgram min_coordinate_sum() const
    {
        LinearProgram lp(n);
        lp.objective.assign(n, Rational(1));
        for (const auto& b : rows) {
            lp.add(std::vector<Rational>(b.begin(), b.end()), Relation::GreaterEq, Rational(1));
        }
        return lp;
    }

    bool contains(const std::vector<Rational>& u) const
    {
        if (u.size() != n) {
            return false;
        }
        for (const auto& ui : u) {
            if (ui < 0) {
                return false;
            }
        }
        for (const auto& b : rows) {
            Rational s(0);
            for (std::size_t i = 0; i < n; ++i) {
                s += u[i] * b[i];
            }
            if (s < 1) {
                return false;
            }
        }
        return true;
    }
};

struct LctCertificate {
    Rational lct;
    std::vector<Rational> vertex;     // optimal point of the polar program
    std::vector<std::size_t> tight_rows;  // generators with <vertex, b_j> = 1
};

inline PolarProgram polar_program(const MonomialIdeal& mi)
{
    if (mi.is_unit()) {
        throw UnitIdeal();
    }
    return PolarProgram{mi.ambient_dim(), mi.generators()};
}

// Replaces every coordinate above 1 by 1. Keeps polar membership because
// each generator row is a nonzero vector of nonnegative integers.
inline std::vector<Rational> clamp_to_unit_box(std::vector<Rational> u)
{
    for (auto& x : u) {
        if (x > 1) {
            x = 1;
        }
    }
    return u;
}

// Exact LCT with the lexicographically smallest optimal vertex as certificate.
inline LctCertificate lct_monomial(const MonomialIdeal& mi)
{
    PolarProgram prog = polar_program(mi);
    LpResult res = solve_lp_lexmin(prog.min_coordinate_sum());
    if (res.status != LpStatus::Optimal) {
        throw std::logic_error("polar program of a proper monomial ideal must have an optimum");
    }
    // Clamping a coordinate above 1 would lower the objective, so an
    // optimal vertex already sits in [0,1]^n.
    std::vector<Rational> vertex = clamp_to_unit_box(res.x);
    if (vertex != res.x) {
        throw std::logic_error("optimal polar vertex left the unit box");
    }
    LctCertificate cert{res.value, std::move(vertex), {}};
    for (std::size_t j = 0; j < prog.rows.size(); ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < prog.n; ++i) {
            s += cert.vertex[i] * prog.rows[j][i];
        }
        if (s == 1) {
            cert.tight_rows.push_back(j);
        }
    }
    return cert;
}

// +inf for the unit ideal (Y empty), the exact LCT otherwise.
inline Threshold lct_threshold(const MonomialIdeal& mi)
{
    if (mi.is_unit()) {
        return Threshold::infinite();
    }
    return Threshold(lct_monomial(mi).lct);
}

// Decides (1,...,1) in r P_I through the feasibility of
//   lambda >= 0, sum lambda = 1, s >= 0, sum_j lambda_j b_j + s = e / r.
inline bool point_in_scaled_polytope(const MonomialIdeal& mi, const Rational& r)
{
    if (r <= 0) {
        throw std::invalid_argument("scale factor must be positive");
    }
    const std::size_t n = mi.ambient_dim();
    const std::size_t g = mi.generators().size();
    LinearProgram lp(g + n);
    std::vector<Rational> convex(g + n, Rational(0));
    std::fill(convex.begin(), convex.begin() + static_cast<std::ptrdiff_t>(g), Rational(1));
    lp.add(std::move(convex), Relation::Equal, Rational(1));
    const Rational target = 1 / r;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(g + n, Rational(0));
        for (std::size_t j = 0; j < g; ++j) {
            row[j] = mi.generators()[j][i];
        }
        row[g + i] = 1;
        lp.add(std::move(row), Relation::Equal, target);
    }
    return solve_lp(lp).status == LpStatus::Optimal;
}

}  // namespace jetlct
