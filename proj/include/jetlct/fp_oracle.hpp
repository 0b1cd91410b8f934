#pragma once

// Exact F_p-point counts of jet schemes and the dimension estimates built on
// them. This is the independent check for everything computed exactly over
// Q elsewhere, and the only route for ideals that are not monomial.
//
// Counting walks the tower Y_m -> Y_{m-1} -> ... -> Y_0: the equations are
// taken level by level (all t^0 coefficients, then all t^1 coefficients, ...)
// and a depth-first search assigns jet coordinates only when an equation
// needs them. At every node the current equation is reduced modulo the
// assignment, and
//
//   * a vanishing residual moves on to the next equation,
//   * a nonzero constant prunes the branch,
//   * a univariate residual fixes its variable to each root in turn,
//   * a residual c*v + (terms without v), c a nonzero constant, where v
//     occurs in no later equation, determines v and retires it,
//   * otherwise the lowest-order variable of the residual is branched on.
//
// Coordinates never touched are free and contribute a factor p each.
// Additionally, once a base point x0 is fixed with a Jacobian of full row
// rank g mod p, every higher level is an affine system J(x0) y = c with
// exactly p^(n-g) solutions, so that branch contributes p^((n-g) m).

#include "jetlct/fp.hpp"
#include "jetlct/jet.hpp"
#include "jetlct/parser.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jetlct {

struct CountOptions {
    std::uint64_t budget = 100'000'000;  // search nodes, summed over all levels
    JetConvention convention = JetConvention::Coefficient;
    bool smooth_shortcut = true;
};

struct LevelCount {
    std::size_t level = 0;
    BigInt count;
    std::optional<std::int64_t> est_dim;  // round(log_p count); absent when count = 0
    std::optional<Rational> normalized;   // est_dim / (level + 1)
    std::uint64_t nodes = 0;
};

struct FpCountReport {
    std::uint32_t prime = 0;
    bool fiber_over_origin = false;
    std::vector<LevelCount> levels;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(FpCountReport partial)
        : std::runtime_error("point-count budget exhausted after " + std::to_string(partial.levels.size()) +
                             " complete level(s)"),
          partial_(std::move(partial))
    {
    }
    const FpCountReport& partial() const { return partial_; }

private:
    FpCountReport partial_;
};

// round(log_p count), or nothing for count = 0.
inline std::optional<std::int64_t> estimate_dimension(const BigInt& count, std::uint32_t p)
{
    if (count <= 0) {
        return std::nullopt;
    }
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, count.get_mpz_t());
    double lg = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    return static_cast<std::int64_t>(std::llround(lg / std::log(static_cast<double>(p))));
}

// Exponent d fitted to two counts modelled as c * p^d and c * q^d with a
// shared leading coefficient c.
inline std::optional<std::int64_t> ratio_dimension(const BigInt& count_p, std::uint32_t p, const BigInt& count_q,
                                                   std::uint32_t q)
{
    if (count_p <= 0 || count_q <= 0 || p == q) {
        return std::nullopt;
    }
    auto log_of = [](const BigInt& c) {
        long exp2 = 0;
        double mant = mpz_get_d_2exp(&exp2, c.get_mpz_t());
        return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    };
    double d = (log_of(count_q) - log_of(count_p)) / (std::log(double(q)) - std::log(double(p)));
    return static_cast<std::int64_t>(std::llround(d));
}

namespace detail {

struct CompiledTerm {
    std::uint32_t coef;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (flat variable, exponent), sorted
};

struct CompiledEquation {
    std::size_t level;
    std::vector<CompiledTerm> terms;
};

inline CompiledEquation compile(const FpPolynomial& f, std::size_t level)
{
    CompiledEquation eq{level, {}};
    for (const auto& t : f.terms) {
        CompiledTerm ct{t.coef, {}};
        for (std::size_t v = 0; v < t.exps.size(); ++v) {
            if (t.exps[v]) {
                ct.factors.emplace_back(static_cast<std::uint32_t>(v), t.exps[v]);
            }
        }
        eq.terms.push_back(std::move(ct));
    }
    return eq;
}

class JetCounter {
public:
    static constexpr std::int64_t kUnassigned = -1;
    static constexpr std::int64_t kRetired = -2;

    JetCounter(const PrimeField& field, std::size_t n, std::size_t ring_level, const std::vector<FpPolynomial>& base,
               const std::vector<CompiledEquation>& equations, std::uint64_t budget)
        : field_(field), n_(n), ring_level_(ring_level), base_(base), eqs_(equations), budget_(budget)
    {
    }

    // Number of F_p-points of the level-m system (optionally over the origin).
    BigInt count(std::size_t level, bool fiber_over_origin, bool shortcut)
    {
        level_ = level;
        shortcut_ = shortcut;
        num_eqs_ = 0;
        while (num_eqs_ < eqs_.size() && eqs_[num_eqs_].level <= level) {
            ++num_eqs_;
        }
        level0_end_ = 0;
        while (level0_end_ < eqs_.size() && eqs_[level0_end_].level == 0) {
            ++level0_end_;
        }
        values_.assign(n_ * (ring_level_ + 1), kUnassigned);
        last_use_.assign(values_.size(), 0);
        used_.assign(values_.size(), false);
        for (std::size_t e = 0; e < num_eqs_; ++e) {
            for (const auto& t : eqs_[e].terms) {
                for (auto [v, _] : t.factors) {
                    last_use_[v] = e;
                    used_[v] = true;
                }
            }
        }
        fixed_ = 0;
        if (fiber_over_origin) {
            for (std::size_t i = 0; i < n_; ++i) {
                values_[flat(i, 0)] = 0;
            }
            fixed_ = n_;
        }
        total_ = 0;
        visit(0);
        return total_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t flat(std::size_t base, std::size_t order) const { return base * (ring_level_ + 1) + order; }
    std::size_t order_of(std::size_t v) const { return v % (ring_level_ + 1); }

    struct Residual {
        std::uint32_t coef;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
    };

    std::vector<Residual> reduce(const CompiledEquation& eq) const
    {
        std::vector<Residual> out;
        for (const auto& t : eq.terms) {
            std::uint32_t c = t.coef;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> rest;
            for (auto [v, e] : t.factors) {
                std::int64_t val = values_[v];
                if (val >= 0) {
                    c = field_.mul(c, field_.pow(static_cast<std::uint32_t>(val), e));
                    if (c == 0) {
                        break;
                    }
                } else {
                    rest.emplace_back(v, e);
                }
            }
            if (c == 0) {
                continue;
            }
            auto it = std::find_if(out.begin(), out.end(), [&](const Residual& r) { return r.factors == rest; });
            if (it == out.end()) {
                out.push_back(Residual{c, std::move(rest)});
            } else {
                it->coef = field_.add(it->coef, c);
            }
        }
        std::erase_if(out, [](const Residual& r) { return r.coef == 0; });
        return out;
    }

    void assign(std::size_t v, std::int64_t value)
    {
        values_[v] = value;
        ++fixed_;
    }
    void release(std::size_t v)
    {
        values_[v] = kUnassigned;
        --fixed_;
    }

    bool smooth_base_point() const
    {
        std::vector<std::uint32_t> x0(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            std::int64_t v = values_[flat(i, 0)];
            if (v < 0) {
                return false;
            }
            x0[i] = static_cast<std::uint32_t>(v);
        }
        std::vector<std::vector<std::uint32_t>> jac;
        for (const auto& f : base_) {
            std::vector<std::uint32_t> row(n_);
            for (std::size_t i = 0; i < n_; ++i) {
                row[i] = f.partial_at(i, x0, field_);
            }
            jac.push_back(std::move(row));
        }
        return rank_mod_p(std::move(jac), field_) == base_.size();
    }

    void visit(std::size_t e)
    {
        if (++nodes_ > budget_) {
            throw std::length_error("budget");
        }
        const std::uint32_t p = field_.prime();
        if (shortcut_ && e == level0_end_ && level_ > 0 && smooth_base_point()) {
            total_ += jetlct::pow(BigInt(p), (n_ - base_.size()) * level_);
            return;
        }
        if (e == num_eqs_) {
            const std::size_t vars = n_ * (level_ + 1);
            total_ += jetlct::pow(BigInt(p), vars - fixed_);
            return;
        }
        auto res = reduce(eqs_[e]);
        if (res.empty()) {
            visit(e + 1);
            return;
        }
        if (res.size() == 1 && res.front().factors.empty()) {
            return;
        }

        std::vector<std::uint32_t> vars;
        for (const auto& r : res) {
            for (auto [v, _] : r.factors) {
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
                    vars.push_back(v);
                }
            }
        }

        if (vars.size() == 1) {
            const std::uint32_t v = vars.front();
            std::uint32_t max_deg = 0;
            for (const auto& r : res) {
                max_deg = std::max(max_deg, r.factors.empty() ? 0u : r.factors.front().second);
            }
            if (max_deg == 1) {
                std::uint32_t a = 0, b = 0;
                for (const auto& r : res) {
                    (r.factors.empty() ? b : a) = r.coef;
                }
                assign(v, field_.mul(field_.neg(b), field_.inv(a)));
                visit(e + 1);
                release(v);
                return;
            }
            for (std::uint32_t x = 0; x < p; ++x) {
                std::uint32_t acc = 0;
                for (const auto& r : res) {
                    std::uint32_t term = r.coef;
                    if (!r.factors.empty()) {
                        term = field_.mul(term, field_.pow(x, r.factors.front().second));
                    }
                    acc = field_.add(acc, term);
                }
                if (acc == 0) {
                    assign(v, x);
                    visit(e + 1);
                    release(v);
                }
            }
            return;
        }

        for (std::uint32_t v : vars) {
            if (last_use_[v] != e) {
                continue;
            }
            bool linear_with_constant_coef = false;
            bool elsewhere = false;
            for (const auto& r : res) {
                for (auto [w, d] : r.factors) {
                    if (w != v) {
                        continue;
                    }
                    if (d == 1 && r.factors.size() == 1) {
                        linear_with_constant_coef = true;
                    } else {
                        elsewhere = true;
                    }
                }
            }
            if (linear_with_constant_coef && !elsewhere) {
                values_[v] = kRetired;
                ++fixed_;
                visit(e + 1);
                release(v);
                return;
            }
        }

        std::uint32_t pick = vars.front();
        for (std::uint32_t v : vars) {
            if (order_of(v) < order_of(pick) || (order_of(v) == order_of(pick) && v < pick)) {
                pick = v;
            }
        }
        for (std::uint32_t x = 0; x < p; ++x) {
            assign(pick, x);
            visit(e);
            release(pick);
        }
    }

    const PrimeField& field_;
    std::size_t n_;
    std::size_t ring_level_;
    const std::vector<FpPolynomial>& base_;
    const std::vector<CompiledEquation>& eqs_;
    std::uint64_t budget_;

    std::size_t level_ = 0;
    bool shortcut_ = true;
    std::size_t num_eqs_ = 0;
    std::size_t level0_end_ = 0;
    std::vector<std::int64_t> values_;
    std::vector<std::size_t> last_use_;
    std::vector<bool> used_;
    std::size_t fixed_ = 0;
    BigInt total_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Counts F_p-points of Y_0, ..., Y_{m_max} (or of the fibers over the
// origin). Derivation-convention systems need p > m_max since D^j carries a
// factor j!; the coefficient convention works for every prime.
inline FpCountReport count_jet_points(const Ideal& ideal, std::uint32_t p, std::size_t m_max, bool fiber_over_origin,
                                      const CountOptions& opts = {})
{
    PrimeField field(p);
    if (opts.convention == JetConvention::Derivation && p <= m_max) {
        throw std::invalid_argument("derivation-convention counts need p > level");
    }
    const std::size_t n = ideal.ambient_dim();
    const std::size_t g = ideal.generators().size();

    std::vector<FpPolynomial> base;
    for (const auto& f : ideal.generators()) {
        base.push_back(FpPolynomial::reduce(f, field));
    }
    JetSystem sys = build_jet_system(ideal, m_max, opts.convention);
    std::vector<detail::CompiledEquation> eqs;
    for (std::size_t j = 0; j <= m_max; ++j) {
        for (std::size_t alpha = 0; alpha < g; ++alpha) {
            eqs.push_back(detail::compile(FpPolynomial::reduce(sys.generator(alpha, j), field), j));
        }
    }

    FpCountReport report{p, fiber_over_origin, {}};
    detail::JetCounter counter(field, n, m_max, base, eqs, opts.budget);
    for (std::size_t m = 0; m <= m_max; ++m) {
        const std::uint64_t before = counter.nodes();
        LevelCount lc;
        lc.level = m;
        try {
            lc.count = counter.count(m, fiber_over_origin, opts.smooth_shortcut);
        } catch (const std::length_error&) {
            throw BudgetExceeded(std::move(report));
        }
        lc.nodes = counter.nodes() - before;
        lc.est_dim = estimate_dimension(lc.count, p);
        if (lc.est_dim) {
            lc.normalized = make_rational(*lc.est_dim, static_cast<long>(m) + 1);
        }
        report.levels.push_back(std::move(lc));
    }
    return report;
}

struct Inconclusive : std::runtime_error {
    Inconclusive() : std::runtime_error("no level has a dimension estimate shared by all primes") {}
};

struct LctEstimate {
    std::size_t ambient_dim = 0;
    std::size_t m_max = 0;
    std::vector<FpCountReport> reports;
    std::vector<std::size_t> agreeing_levels;
    std::vector<std::size_t> disagreeing_levels;
    std::optional<std::size_t> best_level;  // level attaining the max of est_dim/(m+1)
    Threshold estimate;                      // n - max est_dim/(m+1) over agreeing levels
    double approx = 0.0;
    std::vector<std::optional<std::int64_t>> ratio_dims;  // from the first two primes; diagnostic only
    std::optional<Threshold> ratio_estimate;                // n - max ratio_dims(m)/(m+1)
};

// n - max_m est_dim(m)/(m+1) over the levels whose estimates coincide for
// every prime. An estimate: the true supremum may need levels beyond m_max.
inline LctEstimate estimate_lct(const Ideal& ideal, const std::vector<std::uint32_t>& primes, std::size_t m_max,
                                bool fiber_over_origin, const CountOptions& opts = {})
{
    if (primes.empty()) {
        throw std::invalid_argument("at least one prime is required");
    }
    LctEstimate out;
    out.ambient_dim = ideal.ambient_dim();
    out.m_max = m_max;
    for (auto p : primes) {
        out.reports.push_back(count_jet_points(ideal, p, m_max, fiber_over_origin, opts));
    }
    if (out.reports.size() >= 2) {
        const auto& a = out.reports[0];
        const auto& b = out.reports[1];
        for (std::size_t m = 0; m <= m_max; ++m) {
            out.ratio_dims.push_back(ratio_dimension(a.levels[m].count, a.prime, b.levels[m].count, b.prime));
        }
        std::optional<Rational> top;
        for (std::size_t m = 0; m <= m_max; ++m) {
            if (const auto& d = out.ratio_dims[m]) {
                Rational norm = make_rational(*d, static_cast<long>(m) + 1);
                top = top ? std::max(*top, norm) : norm;
            }
        }
        out.ratio_estimate = top ? Threshold(Rational(static_cast<long>(out.ambient_dim)) - *top) : Threshold::infinite();
    }
    std::optional<Rational> best;
    bool any_agree = false;
    for (std::size_t m = 0; m <= m_max; ++m) {
        const auto& ref = out.reports.front().levels[m].est_dim;
        bool agree = std::all_of(out.reports.begin(), out.reports.end(),
                                 [&](const FpCountReport& r) { return r.levels[m].est_dim == ref; });
        if (!agree) {
            out.disagreeing_levels.push_back(m);
            continue;
        }
        any_agree = true;
        out.agreeing_levels.push_back(m);
        if (ref) {
            Rational norm = make_rational(*ref, static_cast<long>(m) + 1);
            if (!best || norm > *best) {
                best = norm;
                out.best_level = m;
            }
        }
    }
    if (!any_agree) {
        throw Inconclusive();
    }
    if (best) {
        out.estimate = Threshold(Rational(static_cast<long>(out.ambient_dim)) - *best);
        out.approx = out.estimate.value().get_d();
    } else {
        out.estimate = Threshold::infinite();
        out.approx = INFINITY;
    }
    return out;
}

struct RecursionCheck {
    bool holds = false;
    std::vector<std::optional<std::int64_t>> est_dims;
};

// est_dim(m) = est_dim(m - shift) + increment for shift <= m <= m_max.
inline RecursionCheck recursion_check(const Ideal& ideal, std::uint32_t p, std::size_t m_max, std::size_t shift,
                                      std::int64_t increment, const CountOptions& opts = {})
{
    if (m_max < shift) {
        throw std::invalid_argument("level range too short for the recursion");
    }
    FpCountReport rep = count_jet_points(ideal, p, m_max, false, opts);
    RecursionCheck out;
    out.holds = true;
    for (const auto& lc : rep.levels) {
        out.est_dims.push_back(lc.est_dim);
    }
    for (std::size_t m = shift; m <= m_max; ++m) {
        const auto& hi = out.est_dims[m];
        const auto& lo = out.est_dims[m - shift];
        if (!hi || !lo || *hi != *lo + increment) {
            out.holds = false;
        }
    }
    return out;
}

// The cusp u^2 = v^3: Y_m over the origin is Y_{m-6} x A^7 for m > 5.
inline RecursionCheck cusp_recursion_check(std::uint32_t p, std::size_t m_max, const CountOptions& opts = {})
{
    return recursion_check(parse_ideal("u^2 - v^3"), p, m_max, 6, 7, opts);
}

}  // namespace jetlct
