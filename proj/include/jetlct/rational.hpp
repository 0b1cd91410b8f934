#pragma once

// Exact integers and rationals backed by GMP, plus the extended values used
// for thresholds (+inf when Y is empty) and dimensions (-inf for the empty set).

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jetlct {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: " + s);
    }
}

inline BigInt floor_of(const Rational& r)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline BigInt ceil_of(const Rational& r)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline BigInt pow(const BigInt& base, unsigned long e)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// A log canonical threshold: a positive rational, or +inf when Y does not
// meet the locus of interest.
class Threshold {
public:
    Threshold() = default;
    explicit Threshold(Rational v) : value_(std::move(v)) {}

    static Threshold infinite()
    {
        Threshold t;
        t.infinite_ = true;
        return t;
    }

    bool is_infinite() const { return infinite_; }
    const Rational& value() const
    {
        if (infinite_) {
            throw std::logic_error("infinite threshold has no finite value");
        }
        return value_;
    }

    friend Threshold operator+(const Threshold& a, const Threshold& b)
    {
        if (a.infinite_ || b.infinite_) {
            return infinite();
        }
        return Threshold(a.value_ + b.value_);
    }
    friend bool operator==(const Threshold& a, const Threshold& b)
    {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ == b.infinite_;
        }
        return a.value_ == b.value_;
    }
    friend bool operator<=(const Threshold& a, const Threshold& b)
    {
        if (b.infinite_) {
            return true;
        }
        if (a.infinite_) {
            return false;
        }
        return a.value_ <= b.value_;
    }
    friend bool operator>=(const Threshold& a, const Threshold& b) { return b <= a; }

    std::string str() const { return infinite_ ? "inf" : to_string(value_); }

private:
    Rational value_{0};
    bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const Threshold& t) { return os << t.str(); }

// Dimension of a constructible set; the empty set has dimension -inf.
class Dimension {
public:
    Dimension() = default;
    explicit Dimension(std::int64_t d) : value_(d), empty_(false) {}

    static Dimension empty() { return Dimension(); }

    bool is_empty() const { return empty_; }
    std::int64_t value() const
    {
        if (empty_) {
            throw std::logic_error("dimension of the empty set is -inf");
        }
        return value_;
    }

    friend bool operator==(const Dimension& a, const Dimension& b)
    {
        return a.empty_ == b.empty_ && (a.empty_ || a.value_ == b.value_);
    }
    friend bool operator<(const Dimension& a, const Dimension& b)
    {
        if (a.empty_) {
            return !b.empty_;
        }
        return !b.empty_ && a.value_ < b.value_;
    }

    std::string str() const { return empty_ ? "-inf" : std::to_string(value_); }

private:
    std::int64_t value_ = 0;
    bool empty_ = true;
};

inline std::ostream& operator<<(std::ostream& os, const Dimension& d) { return os << d.str(); }

}  // namespace jetlct
