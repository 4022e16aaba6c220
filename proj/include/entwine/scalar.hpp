#pragma once

// Exact scalars: arbitrary-precision rationals or a prime field F_p.
//
// Every scalar is an mpq_class. Over F_p the value is kept as an integer
// representative in [0, p), so the same storage serves both fields and all
// arithmetic goes through the Field that owns the surrounding matrix.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entwine {

/// Malformed input: dimension mismatch, index out of range, bad literal.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction that must succeed by theory failed its own re-check.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using Scalar = mpq_class;

class Field {
public:
    static Field rationals() { return Field(0); }

    static Field prime(std::uint64_t p)
    {
        if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw input_error("modulus " + std::to_string(p) +
                              " is not a prime below 2^31");
        return Field(static_cast<std::uint32_t>(p));
    }

    bool is_rational() const { return p_ == 0; }
    std::uint32_t modulus() const { return p_; }

    friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

    std::string name() const
    {
        return is_rational() ? "Q" : "F_" + std::to_string(p_);
    }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    Scalar from_int(long v) const { return reduce(Scalar(v)); }

    /// Brings an arbitrary rational into this field (denominator inverted mod p).
    Scalar reduce(const Scalar &q) const
    {
        if (is_rational())
            return q;
        mpz_class p(p_);
        mpz_class n = q.get_num() % p;
        if (n < 0)
            n += p;
        mpz_class d = q.get_den() % p;
        if (d == 0)
            throw input_error("denominator vanishes modulo " + std::to_string(p_));
        if (d != 1) {
            mpz_class dinv;
            mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
            n = (n * dinv) % p;
        }
        return Scalar(n);
    }

    Scalar add(const Scalar &a, const Scalar &b) const
    {
        Scalar r = a + b;
        if (!is_rational() && r >= p_)
            r -= p_;
        return r;
    }

    Scalar sub(const Scalar &a, const Scalar &b) const
    {
        Scalar r = a - b;
        if (!is_rational() && r < 0)
            r += p_;
        return r;
    }

    Scalar neg(const Scalar &a) const
    {
        if (is_rational() || a == 0)
            return -a;
        return Scalar(p_) - a;
    }

    Scalar mul(const Scalar &a, const Scalar &b) const
    {
        if (is_rational())
            return a * b;
        mpz_class r = (a.get_num() * b.get_num()) % mpz_class(p_);
        return Scalar(r);
    }

    Scalar inv(const Scalar &a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero");
        if (is_rational())
            return 1 / a;
        mpz_class r;
        mpz_class p(p_);
        mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
        return Scalar(r);
    }

    Scalar div(const Scalar &a, const Scalar &b) const { return mul(a, inv(b)); }

    /// Parses a canonical literal: "a" or "a/b" (b > 1, gcd 1) over Q;
    /// a decimal integer 0 <= x < p over F_p.
    Scalar parse(std::string_view s) const
    {
        auto bad = [&](const char *why) {
            return input_error("bad scalar literal \"" + std::string(s) + "\": " + why);
        };
        auto digits = [](std::string_view t) {
            if (t.empty())
                return false;
            for (char ch : t)
                if (ch < '0' || ch > '9')
                    return false;
            return !(t.size() > 1 && t[0] == '0');
        };
        if (!is_rational()) {
            if (!digits(s))
                throw bad("expected a reduced residue");
            mpz_class v(std::string(s), 10);
            if (v >= p_)
                throw bad("residue out of range");
            return Scalar(v);
        }
        std::string_view num = s, den;
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            num = s.substr(0, slash);
            den = s.substr(slash + 1);
            if (!digits(den))
                throw bad("malformed denominator");
        }
        bool negative = !num.empty() && num[0] == '-';
        if (negative)
            num.remove_prefix(1);
        if (!digits(num))
            throw bad("malformed numerator");
        mpz_class n(std::string(num), 10);
        if (negative && n == 0)
            throw bad("negative zero");
        if (negative)
            n = -n;
        if (den.empty())
            return Scalar(n);
        mpz_class d(std::string(den), 10);
        if (d <= 1)
            throw bad("denominator must exceed 1");
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (g != 1)
            throw bad("fraction not in lowest terms");
        return Scalar(n, d);
    }

    std::string format(const Scalar &a) const { return a.get_str(); }

    /// Uniform in [-range, range] over Q, uniform residue over F_p.
    template <class Rng> Scalar random(Rng &rng, long range = 3) const
    {
        if (is_rational()) {
            std::uniform_int_distribution<long> d(-range, range);
            return Scalar(d(rng));
        }
        std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
        return Scalar(d(rng));
    }

private:
    explicit Field(std::uint32_t p) : p_(p) {}

    static bool is_prime(std::uint64_t p)
    {
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }

    std::uint32_t p_;
};

} // namespace entwine
