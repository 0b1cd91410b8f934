#pragma once

// Exact dimensions of jet schemes of monomial subschemes Y = V(I) of A^n.
//
// Y_m is covered by the strata Z_a, 0 <= a_i <= m+1, of jets whose i-th
// coordinate has t-order exactly a_i (order m+1 meaning the coordinate is
// zero). Z_a is nonempty iff <a, b> >= m+1 for every minimal generator b,
// and then dim Z_a = (m+1)n - sum_i a_i. So dim Y_m comes from a covering
// integer program. Requiring a_i >= 1 restricts to jets over the origin.

#include "jetlct/branch_bound.hpp"
#include "jetlct/newton.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetlct {

struct CertificateLevelTooLarge : std::runtime_error {
    explicit CertificateLevelTooLarge(const BigInt& level)
        : std::runtime_error("certificate level " + level.get_str() + " exceeds the level cap"), level(level)
    {
    }
    BigInt level;
};

struct OriginNotInY : std::invalid_argument {
    OriginNotInY() : std::invalid_argument("the origin does not lie on Y") {}
};

struct NotPrincipal : std::invalid_argument {
    NotPrincipal() : std::invalid_argument("expected a principal monomial ideal") {}
};

struct StratumIP {
    MonomialIdeal ideal;
    std::size_t level;
    bool fiber_over_origin;

    CoveringProgram program() const
    {
        const std::size_t n = ideal.ambient_dim();
        CoveringProgram prog;
        for (const auto& b : ideal.generators()) {
            prog.rows.emplace_back(b.begin(), b.end());
        }
        prog.rhs = static_cast<std::int64_t>(level) + 1;
        prog.lower.assign(n, fiber_over_origin ? 1 : 0);
        prog.upper.assign(n, static_cast<std::int64_t>(level) + 1);
        return prog;
    }
};

struct JetDimReport {
    std::size_t level = 0;
    Dimension dim;
    std::vector<std::int64_t> argmin;  // orders a_i of a top-dimensional stratum
    std::optional<Rational> normalized;  // dim / (level + 1); absent for -inf
};

inline JetDimReport jet_dim_monomial(const MonomialIdeal& mi, std::size_t level, bool fiber_over_origin = false)
{
    JetDimReport rep;
    rep.level = level;
    if (mi.is_unit()) {
        return rep;  // Y is empty, and so is every Y_m
    }
    StratumIP ip{mi, level, fiber_over_origin};
    auto sol = solve_covering(ip.program());
    if (!sol) {
        return rep;
    }
    const auto n = static_cast<std::int64_t>(mi.ambient_dim());
    const auto m1 = static_cast<std::int64_t>(level) + 1;
    rep.dim = Dimension(m1 * n - sol->value);
    rep.argmin = sol->point;
    rep.normalized = make_rational(rep.dim.value(), m1);
    return rep;
}

struct JetLctResult {
    Rational lct;
    std::vector<Rational> vertex;
    std::size_t certificate_level = 0;  // m* with m*+1 = lcm of the vertex denominators
    JetDimReport certificate;
    std::vector<JetDimReport> sweep;    // levels 0..sweep_max
    std::vector<std::size_t> bound_violations;  // levels with dim Y_m > (m+1)(n - lct)
};

// Least common multiple of the denominators of a rational vector.
inline BigInt denominator_lcm(const std::vector<Rational>& v)
{
    BigInt out(1);
    for (const auto& x : v) {
        out = lcm(out, x.get_den());
    }
    return out;
}

// The LCT read off from jet dimensions: n - dim Y_{m*}/(m*+1) at the level
// where (m*+1) u* is integral, compared against the polar LP, plus the
// inequality dim Y_m <= (m+1)(n - lct) on levels 0..sweep_max.
inline JetLctResult lct_via_jets(const MonomialIdeal& mi, std::size_t sweep_max, std::size_t certificate_cap)
{
    LctCertificate cert = lct_monomial(mi);
    const BigInt period = denominator_lcm(cert.vertex);
    if (period > BigInt(static_cast<unsigned long>(certificate_cap))) {
        throw CertificateLevelTooLarge(period - 1);
    }
    const std::size_t mstar = period.get_ui() - 1;
    const auto n = static_cast<long>(mi.ambient_dim());

    JetLctResult out{cert.lct, cert.vertex, mstar, jet_dim_monomial(mi, mstar), {}, {}};
    Rational from_jets = Rational(n) - *out.certificate.normalized;
    if (from_jets != cert.lct) {
        throw std::logic_error("jet dimension at the certificate level gives " + to_string(from_jets) +
                               " but the polar program gives " + to_string(cert.lct));
    }
    for (std::size_t m = 0; m <= sweep_max; ++m) {
        JetDimReport rep = jet_dim_monomial(mi, m);
        Rational cap = Rational(static_cast<long>(m) + 1) * (Rational(n) - cert.lct);
        if (!rep.dim.is_empty() && Rational(rep.dim.value()) > cap) {
            out.bound_violations.push_back(m);
        }
        out.sweep.push_back(std::move(rep));
    }
    return out;
}

inline JetLctResult lct_via_jets(const MonomialIdeal& mi, std::size_t m_max) { return lct_via_jets(mi, m_max, m_max); }

struct FiberLctResult {
    Rational value;           // n - max_m fiber_dim(m)/(m+1)
    std::size_t best_level = 0;
    std::vector<JetDimReport> fibers;
};

// n - sup_m dim (rho_m)^{-1}(0) / (m+1), with the supremum taken over
// m <= m_max. Never below the LCT and within n/(m_max+1) of it.
inline FiberLctResult lct_origin_via_fibers(const MonomialIdeal& mi, std::size_t m_max)
{
    if (mi.is_unit()) {
        throw OriginNotInY();
    }
    FiberLctResult out;
    Rational best(-1);
    for (std::size_t m = 0; m <= m_max; ++m) {
        JetDimReport rep = jet_dim_monomial(mi, m, true);
        if (rep.normalized && *rep.normalized > best) {
            best = *rep.normalized;
            out.best_level = m;
        }
        out.fibers.push_back(std::move(rep));
    }
    out.value = Rational(static_cast<long>(mi.ambient_dim())) - best;
    return out;
}

struct DivisorFiberCheck {
    bool holds = false;
    std::uint64_t multiplicity = 0;
    Dimension fiber_dim;
    std::int64_t bound = 0;  // n m - floor(m / multiplicity)
};

// dim (rho_m^D)^{-1}(0) <= n m - floor(m / mult_0 D) for a monomial divisor D.
inline DivisorFiberCheck check_divisor_fiber_bound(const MonomialIdeal& mi, std::size_t level)
{
    if (mi.generators().size() != 1) {
        throw NotPrincipal();
    }
    if (mi.is_unit()) {
        throw OriginNotInY();
    }
    DivisorFiberCheck out;
    out.multiplicity = multiplicity_at_origin(mi);
    const auto n = static_cast<std::int64_t>(mi.ambient_dim());
    const auto m = static_cast<std::int64_t>(level);
    out.bound = n * m - m / static_cast<std::int64_t>(out.multiplicity);
    out.fiber_dim = jet_dim_monomial(mi, level, true).dim;
    out.holds = out.fiber_dim.is_empty() || out.fiber_dim.value() <= out.bound;
    return out;
}

}  // namespace jetlct
