#pragma once

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "rvf/errors.hpp"
#include "rvf/rational.hpp"

namespace rvf {

/// Deterministic primality by trial division (desk scale).
bool is_prime(std::uint64_t n);

/// Throws NotPrime unless p is a prime >= 5 (2 and 3 are rejected: the
/// coefficient ring must contain 1/6).
void require_prime_ge5(std::uint64_t p);

/// Element of F_p with a runtime modulus. A default-constructed value is
/// the zero of no particular field (p == 0) and adopts the modulus of the
/// first operand it meets, so generic code can start accumulators from C{}.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

    static Fp from_int(long long x, std::uint64_t prime) {
        long long r = x % static_cast<long long>(prime);
        if (r < 0) r += static_cast<long long>(prime);
        return Fp(static_cast<std::uint64_t>(r), prime);
    }
    /// Same-field constant: embeds x into the field `like` lives in.
    static Fp embed(long long x, const Fp& like) { return from_int(x, like.p); }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    friend std::uint64_t common_modulus(const Fp& a, const Fp& b) {
        if (a.p == 0) return b.p;
        if (b.p == 0) return a.p;
        assert(a.p == b.p);
        return a.p;
    }

    Fp operator+(const Fp& o) const {
        std::uint64_t m = common_modulus(*this, o);
        if (m == 0) return Fp();
        std::uint64_t s = v + o.v;
        if (s >= m) s -= m;
        return Fp(s, m);
    }
    Fp operator-(const Fp& o) const {
        std::uint64_t m = common_modulus(*this, o);
        if (m == 0) return Fp();
        return Fp(v + m - o.v, m);
    }
    Fp operator*(const Fp& o) const {
        std::uint64_t m = common_modulus(*this, o);
        if (m == 0) return Fp();
        return Fp(static_cast<std::uint64_t>(
                      static_cast<unsigned __int128>(v) * o.v % m),
                  m);
    }
    Fp operator-() const {
        if (p == 0) return Fp();
        return Fp(v == 0 ? 0 : p - v, p);
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const {
        if (v == 0 && o.v == 0) return true;
        return v == o.v && common_modulus(*this, o) != 0;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp pow(std::uint64_t e) const {
        Fp base = *this, out(1 % p, p);
        while (e) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    /// Multiplicative inverse; throws ZeroInverse at 0.
    Fp inv() const {
        if (v == 0) throw ZeroInverse("inverse of zero in F_p");
        return pow(p - 2);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }

    std::string str() const { return std::to_string(v); }
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// Image of a rational in F_p. Throws NonIntegralCoefficient when the
/// denominator is divisible by p.
Fp reduce_mod_p(const Rational& r, std::uint64_t p);

} // namespace rvf
