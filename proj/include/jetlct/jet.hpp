#pragma once

// Equations of the m-th jet scheme of an affine scheme V(I) in A^n.
//
// Jet variables X_i^(j), 0 <= i < n, 0 <= j <= m, are flattened to the index
// i*(m+1) + j. Two presentations of the same scheme are built:
//
//   Derivation:  the generator (alpha, j) is D^j(f_alpha), where D is the
//                derivation with D(X_i^(j)) = X_i^(j+1) and X_i^(m+1) = 0.
//   Coefficient: the generator (alpha, j) is the coefficient of t^j in
//                f_alpha(sum_j X_i^(j) t^j) mod t^(m+1).
//
// They differ by the substitution X^(j) <-> j! X^(j), so they agree over Q
// and over F_p for p > m; only the coefficient form is valid in every
// characteristic.

#include "jetlct/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace jetlct {

enum class JetConvention { Derivation, Coefficient };

inline const char* to_string(JetConvention c) { return c == JetConvention::Derivation ? "derivation" : "coefficient"; }

struct JetVar {
    std::size_t base;
    std::size_t order;

    std::size_t flat(std::size_t level) const { return base * (level + 1) + order; }
    static JetVar unflatten(std::size_t index, std::size_t level) { return {index / (level + 1), index % (level + 1)}; }
};

inline std::string jet_variable_name(const std::string& base, std::size_t order)
{
    if (order <= 3) {
        return base + std::string(order, '\'');
    }
    return base + "^(" + std::to_string(order) + ")";
}

inline std::vector<std::string> jet_variable_names(const std::vector<std::string>& base, std::size_t level)
{
    std::vector<std::string> out;
    out.reserve(base.size() * (level + 1));
    for (const auto& b : base) {
        for (std::size_t j = 0; j <= level; ++j) {
            out.push_back(jet_variable_name(b, j));
        }
    }
    return out;
}

// Image of a polynomial in n variables inside the level-m jet ring, via
// X_i -> X_i^(0).
inline Polynomial lift_to_jets(const Polynomial& f, std::size_t level)
{
    const std::size_t n = f.ambient_dim();
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Exponents e(n * (level + 1), 0);
        for (std::size_t i = 0; i < n; ++i) {
            e[JetVar{i, 0}.flat(level)] = t.exps[i];
        }
        terms.push_back(Term{t.coef, std::move(e)});
    }
    return Polynomial::from_terms(n * (level + 1), std::move(terms));
}

// One application of D on the level-m jet ring. Top-order variables map to 0
// inside the Leibniz sum, so the result never leaves level m.
inline Polynomial derive_once(const Polynomial& p, std::size_t level)
{
    const std::size_t dim = p.ambient_dim();
    if (dim % (level + 1) != 0) {
        throw DimensionMismatch("polynomial does not live in a level-" + std::to_string(level) + " jet ring");
    }
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        for (std::size_t k = 0; k < dim; ++k) {
            if (t.exps[k] == 0) {
                continue;
            }
            auto var = JetVar::unflatten(k, level);
            if (var.order == level) {
                continue;
            }
            Exponents e = t.exps;
            e[k] -= 1;
            e[k + 1] += 1;
            out.push_back(Term{t.coef * t.exps[k], std::move(e)});
        }
    }
    return Polynomial::from_terms(dim, std::move(out));
}

// Coefficients of t^0..t^m of f(gamma) where gamma_i = sum_j X_i^(j) t^j.
inline std::vector<Polynomial> arc_coefficients(const Polynomial& f, std::size_t level)
{
    const std::size_t n = f.ambient_dim();
    const std::size_t dim = n * (level + 1);
    using Series = std::vector<Polynomial>;
    auto series_mul = [&](const Series& a, const Series& b) {
        Series c(level + 1, Polynomial(dim));
        for (std::size_t i = 0; i <= level; ++i) {
            if (a[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= level; ++j) {
                if (!b[j].is_zero()) {
                    c[i + j] = c[i + j] + a[i] * b[j];
                }
            }
        }
        return c;
    };
    auto one = [&] {
        Series s(level + 1, Polynomial(dim));
        s[0] = Polynomial::constant(dim, Rational(1));
        return s;
    };

    // powers[i][e] = gamma_i^e, built on demand.
    std::vector<std::vector<Series>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        Series gamma(level + 1, Polynomial(dim));
        for (std::size_t j = 0; j <= level; ++j) {
            gamma[j] = Polynomial::variable(dim, JetVar{i, j}.flat(level));
        }
        powers[i].push_back(one());
        powers[i].push_back(std::move(gamma));
    }
    auto power = [&](std::size_t i, std::uint32_t e) -> const Series& {
        while (powers[i].size() <= e) {
            powers[i].push_back(series_mul(powers[i].back(), powers[i][1]));
        }
        return powers[i][e];
    };

    Series total(level + 1, Polynomial(dim));
    for (const auto& t : f.terms()) {
        Series s = one();
        for (std::size_t i = 0; i < n; ++i) {
            if (t.exps[i] > 0) {
                s = series_mul(s, power(i, t.exps[i]));
            }
        }
        for (std::size_t j = 0; j <= level; ++j) {
            total[j] = total[j] + poly_scale(s[j], t.coef);
        }
    }
    return total;
}

struct JetSystem {
    Ideal source;
    std::size_t level;
    JetConvention convention;
    std::vector<std::string> variables;  // flattened jet variable names
    std::vector<Polynomial> generators;  // generator (alpha, j) at index alpha*(level+1) + j

    std::size_t jet_dim() const { return source.ambient_dim() * (level + 1); }
    const Polynomial& generator(std::size_t alpha, std::size_t j) const { return generators[alpha * (level + 1) + j]; }
};

inline JetSystem build_jet_system(const Ideal& ideal, std::size_t level, JetConvention convention)
{
    JetSystem sys{ideal, level, convention, jet_variable_names(ideal.names(), level), {}};
    sys.generators.reserve(ideal.generators().size() * (level + 1));
    for (const auto& f : ideal.generators()) {
        if (convention == JetConvention::Derivation) {
            Polynomial g = lift_to_jets(f, level);
            sys.generators.push_back(g);
            for (std::size_t j = 1; j <= level; ++j) {
                g = derive_once(g, level);
                sys.generators.push_back(g);
            }
        } else {
            auto coeffs = arc_coefficients(f, level);
            sys.generators.insert(sys.generators.end(), coeffs.begin(), coeffs.end());
        }
    }
    return sys;
}

// V(I) x V(J) inside A^(n'+n''): generators of I and J on disjoint variable
// blocks. Clashing names in the second block get a trailing underscore.
inline Ideal product_ideal(const Ideal& first, const Ideal& second)
{
    const std::size_t n1 = first.ambient_dim();
    const std::size_t n2 = second.ambient_dim();
    std::vector<std::string> names = first.names();
    for (auto name : second.names()) {
        while (std::find(names.begin(), names.end(), name) != names.end()) {
            name += '_';
        }
        names.push_back(name);
    }
    std::vector<Polynomial> gens;
    auto embed = [&](const Polynomial& f, std::size_t offset) {
        std::vector<Term> terms;
        for (const auto& t : f.terms()) {
            Exponents e(n1 + n2, 0);
            std::copy(t.exps.begin(), t.exps.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
            terms.push_back(Term{t.coef, std::move(e)});
        }
        return Polynomial::from_terms(n1 + n2, std::move(terms));
    };
    for (const auto& f : first.generators()) {
        gens.push_back(embed(f, 0));
    }
    for (const auto& f : second.generators()) {
        gens.push_back(embed(f, n1));
    }
    return Ideal(std::move(names), std::move(gens));
}

inline MonomialIdeal product_ideal(const MonomialIdeal& first, const MonomialIdeal& second)
{
    const std::size_t n1 = first.ambient_dim();
    const std::size_t n2 = second.ambient_dim();
    std::vector<Exponents> gens;
    for (const auto& g : first.generators()) {
        Exponents e(n1 + n2, 0);
        std::copy(g.begin(), g.end(), e.begin());
        gens.push_back(std::move(e));
    }
    for (const auto& g : second.generators()) {
        Exponents e(n1 + n2, 0);
        std::copy(g.begin(), g.end(), e.begin() + static_cast<std::ptrdiff_t>(n1));
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(n1 + n2, std::move(gens));
}

// Jets of a product subscheme. Because the jet variables of the second
// factor occupy a contiguous block after those of the first, this system is
// literally the concatenation of the two factor systems after shifting.
inline JetSystem jet_of_product(const Ideal& first, const Ideal& second, std::size_t level,
                                JetConvention convention = JetConvention::Derivation)
{
    return build_jet_system(product_ideal(first, second), level, convention);
}

// Render one jet polynomial with the system's jet variable names.
inline std::string render(const Polynomial& p, const JetSystem& sys) { return render(p, sys.variables); }

}  // namespace jetlct
