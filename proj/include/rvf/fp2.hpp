#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rvf/fp.hpp"

namespace rvf {

/// Element a + b*s of F_{p^2} = F_p[s]/(s^2 - n), where n is the smallest
/// positive quadratic non-residue mod p. Fixing n makes printed roots
/// reproducible. Default-constructed value is an unattached zero, as in Fp.
struct Fp2 {
    std::uint64_t a = 0, b = 0;
    std::uint64_t p = 0, n = 0;

    Fp2() = default;
    Fp2(std::uint64_t a_, std::uint64_t b_, std::uint64_t p_, std::uint64_t n_)
        : a(a_ % p_), b(b_ % p_), p(p_), n(n_) {}

    static Fp2 embed(long long x, const Fp2& like) {
        Fp r = Fp::from_int(x, like.p);
        return Fp2(r.v, 0, like.p, like.n);
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_one() const { return a == 1 && b == 0; }
    bool in_base_field() const { return b == 0; }

    friend const Fp2& pick_attached(const Fp2& x, const Fp2& y) {
        return x.p ? x : y;
    }

    Fp2 operator+(const Fp2& o) const {
        const Fp2& f = pick_attached(*this, o);
        if (f.p == 0) return Fp2();
        return Fp2((a + o.a) % f.p, (b + o.b) % f.p, f.p, f.n);
    }
    Fp2 operator-(const Fp2& o) const {
        const Fp2& f = pick_attached(*this, o);
        if (f.p == 0) return Fp2();
        return Fp2((a + f.p - o.a % f.p) % f.p, (b + f.p - o.b % f.p) % f.p, f.p, f.n);
    }
    Fp2 operator-() const {
        if (p == 0) return Fp2();
        return Fp2(a ? p - a : 0, b ? p - b : 0, p, n);
    }
    Fp2 operator*(const Fp2& o) const {
        const Fp2& f = pick_attached(*this, o);
        if (f.p == 0) return Fp2();
        auto mul = [&](std::uint64_t x, std::uint64_t y) {
            return static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(x) * y % f.p);
        };
        // (a + bs)(c + ds) = (ac + n bd) + (ad + bc) s
        std::uint64_t ra = (mul(a, o.a) + mul(f.n, mul(b, o.b))) % f.p;
        std::uint64_t rb = (mul(a, o.b) + mul(b, o.a)) % f.p;
        return Fp2(ra, rb, f.p, f.n);
    }

    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

    bool operator==(const Fp2& o) const {
        if (is_zero() && o.is_zero()) return true;
        return a == o.a && b == o.b;
    }
    bool operator!=(const Fp2& o) const { return !(*this == o); }
    bool operator<(const Fp2& o) const {  // ordering for canonical printing
        return a != o.a ? a < o.a : b < o.b;
    }

    Fp2 pow(std::uint64_t e) const {
        Fp2 base = *this, out = Fp2(1, 0, p, n);
        while (e) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    /// Conjugate a - b*s; equals the Frobenius x -> x^p.
    Fp2 frobenius() const { return Fp2(a, b ? p - b : 0, p, n); }

    /// Norm a^2 - n b^2 in F_p; zero only at zero since n is a non-residue.
    Fp norm() const {
        Fp aa(a, p), bb(b, p), nn(n, p);
        return aa * aa - nn * bb * bb;
    }

    Fp2 inv() const {
        if (is_zero()) throw ZeroInverse("inverse of zero in F_{p^2}");
        Fp ninv = norm().inv();
        Fp2 conj = frobenius();
        Fp2 scale(ninv.v, 0, p, n);
        return conj * scale;
    }
    Fp2 operator/(const Fp2& o) const { return *this * o.inv(); }

    /// "a + b s" with zero parts omitted ("0" for zero).
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Fp2& x);

/// The quadratic extension F_p[s]/(s^2 - n), n the smallest non-residue.
class Fp2Field {
public:
    explicit Fp2Field(std::uint64_t p);  // throws NotPrime for p < 5 or composite

    std::uint64_t p() const { return p_; }
    std::uint64_t non_residue() const { return n_; }

    Fp2 make(std::uint64_t a, std::uint64_t b) const { return Fp2(a, b, p_, n_); }
    Fp2 from_base(const Fp& x) const { return Fp2(x.v, 0, p_, n_); }
    Fp2 from_int(long long x) const { return Fp2(Fp::from_int(x, p_).v, 0, p_, n_); }
    Fp2 zero() const { return make(0, 0); }
    Fp2 one() const { return make(1, 0); }

    /// All p^2 elements, (a, b) in row-major order.
    std::vector<Fp2> all_elements() const;

private:
    std::uint64_t p_, n_;
};

/// Smallest positive quadratic non-residue mod p (p >= 5 prime).
std::uint64_t smallest_non_residue(std::uint64_t p);

} // namespace rvf
