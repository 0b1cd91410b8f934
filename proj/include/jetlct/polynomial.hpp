#pragma once

// Multivariate polynomials with exact rational coefficients, ideals given by
// generators, and monomial ideals kept as antichains of exponent vectors.

#include "jetlct/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jetlct {

using Exponents = std::vector<std::uint32_t>;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotMonomial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::uint64_t total_degree(std::span<const std::uint32_t> e)
{
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// a | b componentwise.
inline bool divides(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

// Lower total degree first; within a degree, larger powers of earlier
// variables first, so x + y renders in that order.
inline bool grlex_less(const Exponents& a, const Exponents& b)
{
    auto da = total_degree(a);
    auto db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    return b < a;
}

struct Term {
    Rational coef;
    Exponents exps;

    friend bool operator==(const Term& a, const Term& b) { return a.coef == b.coef && a.exps == b.exps; }
};

class Polynomial {
public:
    explicit Polynomial(std::size_t ambient_dim = 0) : n_(ambient_dim) {}

    // Sorts, merges equal monomials and drops zero coefficients.
    static Polynomial from_terms(std::size_t ambient_dim, std::vector<Term> terms)
    {
        for (const auto& t : terms) {
            if (t.exps.size() != ambient_dim) {
                throw DimensionMismatch("term has " + std::to_string(t.exps.size()) + " exponents, expected " +
                                        std::to_string(ambient_dim));
            }
        }
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_less(a.exps, b.exps); });
        Polynomial p(ambient_dim);
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
                p.terms_.back().coef += t.coef;
                if (p.terms_.back().coef == 0) {
                    p.terms_.pop_back();
                }
            } else if (t.coef != 0) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    static Polynomial constant(std::size_t ambient_dim, const Rational& c)
    {
        return from_terms(ambient_dim, {Term{c, Exponents(ambient_dim, 0)}});
    }

    static Polynomial variable(std::size_t ambient_dim, std::size_t index, std::uint32_t power = 1)
    {
        if (index >= ambient_dim) {
            throw std::out_of_range("variable index out of range");
        }
        Exponents e(ambient_dim, 0);
        e[index] = power;
        return from_terms(ambient_dim, {Term{Rational(1), std::move(e)}});
    }

    static Polynomial monomial(const Exponents& e, const Rational& c = Rational(1))
    {
        return from_terms(e.size(), {Term{c, e}});
    }

    std::size_t ambient_dim() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exps) == 0); }

    Rational constant_term() const
    {
        if (!terms_.empty() && total_degree(terms_.front().exps) == 0) {
            return terms_.front().coef;
        }
        return Rational(0);
    }

    // Smallest total degree among the terms (the order of vanishing at the
    // origin). Undefined for the zero polynomial.
    std::uint64_t min_degree() const
    {
        if (terms_.empty()) {
            throw std::logic_error("min_degree of the zero polynomial");
        }
        return total_degree(terms_.front().exps);
    }

    std::uint64_t degree() const
    {
        if (terms_.empty()) {
            throw std::logic_error("degree of the zero polynomial");
        }
        return total_degree(terms_.back().exps);
    }

    Rational evaluate(std::span<const Rational> point) const
    {
        if (point.size() != n_) {
            throw DimensionMismatch("evaluation point has wrong dimension");
        }
        Rational acc(0);
        for (const auto& t : terms_) {
            Rational v = t.coef;
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::uint32_t k = 0; k < t.exps[i]; ++k) {
                    v *= point[i];
                }
            }
            acc += v;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
    std::size_t n_;
    std::vector<Term> terms_;
};

inline void require_same_dim(const Polynomial& p, const Polynomial& q)
{
    if (p.ambient_dim() != q.ambient_dim()) {
        throw DimensionMismatch("polynomials live in " + std::to_string(p.ambient_dim()) + " and " +
                                std::to_string(q.ambient_dim()) + " variables");
    }
}

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q)
{
    require_same_dim(p, q);
    std::vector<Term> terms = p.terms();
    terms.insert(terms.end(), q.terms().begin(), q.terms().end());
    return Polynomial::from_terms(p.ambient_dim(), std::move(terms));
}

inline Polynomial poly_scale(const Polynomial& p, const Rational& c)
{
    std::vector<Term> terms = p.terms();
    for (auto& t : terms) {
        t.coef *= c;
    }
    return Polynomial::from_terms(p.ambient_dim(), std::move(terms));
}

inline Polynomial poly_sub(const Polynomial& p, const Polynomial& q) { return poly_add(p, poly_scale(q, Rational(-1))); }

inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q)
{
    require_same_dim(p, q);
    std::map<Exponents, Rational> acc;
    for (const auto& a : p.terms()) {
        for (const auto& b : q.terms()) {
            Exponents e(a.exps.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = a.exps[i] + b.exps[i];
            }
            acc[e] += a.coef * b.coef;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc) {
        terms.push_back(Term{c, e});
    }
    return Polynomial::from_terms(p.ambient_dim(), std::move(terms));
}

inline Polynomial poly_pow(const Polynomial& p, unsigned k)
{
    Polynomial out = Polynomial::constant(p.ambient_dim(), Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        out = poly_mul(out, p);
    }
    return out;
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return poly_add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return poly_sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return poly_mul(p, q); }

// Names used when an ideal carries no variable names of its own.
inline std::vector<std::string> default_variable_names(std::size_t n)
{
    static const char* small[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(n <= 4 ? std::string(small[i]) : "x" + std::to_string(i + 1));
    }
    return names;
}

inline std::string render_monomial(const Exponents& e, std::span<const std::string> names)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += names[i];
        if (e[i] > 1) {
            out += '^' + std::to_string(e[i]);
        }
    }
    return out;
}

inline std::string render(const Polynomial& p, std::span<const std::string> names)
{
    if (names.size() != p.ambient_dim()) {
        throw DimensionMismatch("wrong number of variable names for rendering");
    }
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool negative = t.coef < 0;
        Rational mag = abs(t.coef);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono = render_monomial(t.exps, names);
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

inline std::string render(const Polynomial& p) { return render(p, default_variable_names(p.ambient_dim())); }

class Ideal {
public:
    Ideal(std::vector<std::string> names, std::vector<Polynomial> generators)
        : names_(std::move(names)), gens_(std::move(generators))
    {
        if (gens_.empty()) {
            throw std::invalid_argument("an ideal needs at least one generator");
        }
        for (const auto& g : gens_) {
            if (g.ambient_dim() != names_.size()) {
                throw DimensionMismatch("generator dimension differs from the variable count");
            }
            if (g.is_zero()) {
                throw std::invalid_argument("zero generator");
            }
        }
    }

    Ideal(std::size_t n, std::vector<Polynomial> generators) : Ideal(default_variable_names(n), std::move(generators)) {}

    std::size_t ambient_dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.names_ == b.names_ && a.gens_ == b.gens_; }

private:
    std::vector<std::string> names_;
    std::vector<Polynomial> gens_;
};

// One generator per line.
inline std::string render(const Ideal& ideal)
{
    std::string out;
    for (const auto& g : ideal.generators()) {
        out += render(g, ideal.names());
        out += '\n';
    }
    return out;
}

// A monomial ideal stored through its minimal generators. The exponent
// vectors form an antichain under divisibility and are kept sorted in
// ascending grlex order.
class MonomialIdeal {
public:
    MonomialIdeal(std::size_t n, std::vector<Exponents> generators) : n_(n)
    {
        if (generators.empty()) {
            throw std::invalid_argument("a monomial ideal needs at least one generator");
        }
        for (const auto& g : generators) {
            if (g.size() != n) {
                throw DimensionMismatch("exponent vector has wrong length");
            }
        }
        std::sort(generators.begin(), generators.end(), grlex_less);
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        // In ascending grlex order a divisor always precedes its multiples.
        for (auto& g : generators) {
            bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& h) { return divides(h, g); });
            if (!redundant) {
                gens_.push_back(std::move(g));
            }
        }
    }

    std::size_t ambient_dim() const { return n_; }
    const std::vector<Exponents>& generators() const { return gens_; }
    bool is_unit() const { return total_degree(gens_.front()) == 0; }

    // Sum of ideals: union of generators, re-minimalized.
    friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        if (a.n_ != b.n_) {
            throw DimensionMismatch("monomial ideals in different rings");
        }
        std::vector<Exponents> all = a.gens_;
        all.insert(all.end(), b.gens_.begin(), b.gens_.end());
        return MonomialIdeal(a.n_, std::move(all));
    }

    // True when every generator of other lies in this ideal.
    bool contains(const MonomialIdeal& other) const
    {
        return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Exponents& g) {
            return std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& h) { return divides(h, g); });
        });
    }

    Ideal to_ideal() const
    {
        std::vector<Polynomial> polys;
        for (const auto& g : gens_) {
            polys.push_back(Polynomial::monomial(g));
        }
        return Ideal(n_, std::move(polys));
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.n_ == b.n_ && a.gens_ == b.gens_; }

private:
    std::size_t n_;
    std::vector<Exponents> gens_;
};

inline std::string render(const MonomialIdeal& mi)
{
    auto names = default_variable_names(mi.ambient_dim());
    std::string out = "(";
    for (std::size_t j = 0; j < mi.generators().size(); ++j) {
        if (j) {
            out += ", ";
        }
        std::string mono = render_monomial(mi.generators()[j], names);
        out += mono.empty() ? "1" : mono;
    }
    return out + ")";
}

// Succeeds iff every generator is a single term; coefficients are irrelevant
// to the ideal and dropped.
inline MonomialIdeal as_monomial_ideal(const Ideal& ideal)
{
    std::vector<Exponents> exps;
    for (const auto& g : ideal.generators()) {
        if (g.terms().size() != 1) {
            throw NotMonomial("generator " + render(g, ideal.names()) + " is not a monomial");
        }
        exps.push_back(g.terms().front().exps);
    }
    return MonomialIdeal(ideal.ambient_dim(), std::move(exps));
}

inline std::optional<MonomialIdeal> try_monomial_ideal(const Ideal& ideal)
{
    try {
        return as_monomial_ideal(ideal);
    } catch (const NotMonomial&) {
        return std::nullopt;
    }
}

// Largest q with I contained in the q-th power of the maximal ideal at the
// origin. Zero exactly when some generator has a nonzero constant term.
inline std::uint64_t multiplicity_at_origin(const Ideal& ideal)
{
    std::uint64_t q = UINT64_MAX;
    for (const auto& g : ideal.generators()) {
        q = std::min(q, g.min_degree());
    }
    return q;
}

inline std::uint64_t multiplicity_at_origin(const MonomialIdeal& mi)
{
    std::uint64_t q = UINT64_MAX;
    for (const auto& g : mi.generators()) {
        q = std::min(q, total_degree(g));
    }
    return q;
}

}  // namespace jetlct
