#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rvf/errors.hpp"

namespace rvf {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Backed by GMP's mpq.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(BigInt(static_cast<long>(n))) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw ZeroInverse("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long long num, long long den)
        : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

    /// Same-signature constant embedding as the finite-field types.
    static Rational embed(long long x, const Rational&) { return Rational(x); }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw ZeroInverse("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    Rational inverse() const {
        if (is_zero()) throw ZeroInverse("inverse of zero rational");
        return Rational(den(), num());
    }

    /// "num" when integral, "num/den" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational operator*(long long k, const Rational& r) { return Rational(k) * r; }
std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(n, k) as an exact integer.
BigInt binomial(unsigned long n, unsigned long k);

/// n-th Bernoulli number via the defining recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
/// Results are cached; thread-safe.
Rational bernoulli(unsigned n);

/// sigma_mu(n) = sum of d^mu over divisors d of n.
BigInt divisor_sigma(unsigned mu, const BigInt& n);
BigInt divisor_sigma(unsigned mu, unsigned long n);

} // namespace rvf
