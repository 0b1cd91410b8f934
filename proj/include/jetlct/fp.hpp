#pragma once

// Arithmetic in F_p for small primes and reduction of rational polynomials.

#include "jetlct/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jetlct {

inline bool is_prime(std::uint64_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p)
    {
        if (!is_prime(p)) {
            throw std::invalid_argument(std::to_string(p) + " is not prime");
        }
        if (p > 65521) {
            throw std::invalid_argument("prime too large for the point counter");
        }
    }

    std::uint32_t prime() const { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const
    {
        std::uint32_t r = 1 % p_;
        while (e) {
            if (e & 1) {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const
    {
        if (a % p_ == 0) {
            throw std::domain_error("inverse of zero in F_p");
        }
        return pow(a, p_ - 2);
    }

    std::uint32_t reduce(const BigInt& z) const
    {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
        return static_cast<std::uint32_t>(r.get_ui());
    }

    std::uint32_t reduce(const Rational& q) const
    {
        std::uint32_t den = reduce(q.get_den());
        if (den == 0) {
            throw std::domain_error("coefficient " + to_string(q) + " has a denominator divisible by " +
                                    std::to_string(p_));
        }
        return mul(reduce(q.get_num()), inv(den));
    }

private:
    std::uint32_t p_;
};

struct FpTerm {
    std::uint32_t coef;
    Exponents exps;
};

// Polynomial over F_p with the same monomial layout as Polynomial; no zero
// coefficients.
struct FpPolynomial {
    std::uint32_t prime = 2;
    std::size_t ambient_dim = 0;
    std::vector<FpTerm> terms;

    static FpPolynomial reduce(const Polynomial& f, const PrimeField& field)
    {
        FpPolynomial out{field.prime(), f.ambient_dim(), {}};
        for (const auto& t : f.terms()) {
            std::uint32_t c = field.reduce(t.coef);
            if (c != 0) {
                out.terms.push_back(FpTerm{c, t.exps});
            }
        }
        return out;
    }

    bool is_zero() const { return terms.empty(); }

    std::uint32_t evaluate(const std::vector<std::uint32_t>& point, const PrimeField& field) const
    {
        std::uint32_t acc = 0;
        for (const auto& t : terms) {
            std::uint32_t v = t.coef;
            for (std::size_t i = 0; i < ambient_dim; ++i) {
                if (t.exps[i]) {
                    v = field.mul(v, field.pow(point[i], t.exps[i]));
                }
            }
            acc = field.add(acc, v);
        }
        return acc;
    }

    // d/dx_i evaluated at a point.
    std::uint32_t partial_at(std::size_t i, const std::vector<std::uint32_t>& point, const PrimeField& field) const
    {
        std::uint32_t acc = 0;
        for (const auto& t : terms) {
            if (t.exps[i] == 0) {
                continue;
            }
            std::uint32_t v = field.mul(t.coef, field.reduce(BigInt(t.exps[i])));
            for (std::size_t k = 0; k < ambient_dim; ++k) {
                std::uint32_t e = k == i ? t.exps[k] - 1 : t.exps[k];
                if (e) {
                    v = field.mul(v, field.pow(point[k], e));
                }
            }
            acc = field.add(acc, v);
        }
        return acc;
    }
};

// Rank of a matrix over F_p (rows are copied).
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        std::uint32_t inv = field.inv(rows[rank][c]);
        for (auto& v : rows[rank]) {
            v = field.mul(v, inv);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][c] != 0) {
                std::uint32_t f = rows[r][c];
                for (std::size_t k = 0; k < cols; ++k) {
                    rows[r][k] = field.sub(rows[r][k], field.mul(f, rows[rank][k]));
                }
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace jetlct
