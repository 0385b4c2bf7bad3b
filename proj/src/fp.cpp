#include "rvf/fp.hpp"
#include "rvf/fp2.hpp"

#include <ostream>

namespace rvf {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

void require_prime_ge5(std::uint64_t p) {
    if (p < 5 || !is_prime(p))
        throw NotPrime("need a prime p >= 5, got " + std::to_string(p));
}

std::ostream& operator<<(std::ostream& os, const Fp& x) {
    return os << x.v;
}

Fp reduce_mod_p(const Rational& r, std::uint64_t p) {
    BigInt pz(static_cast<unsigned long>(p));
    BigInt den = r.den();
    if (den % pz == 0)
        throw NonIntegralCoefficient("denominator " + den.get_str() +
                                     " divisible by p = " + std::to_string(p));
    BigInt num = r.num() % pz;
    if (num < 0) num += pz;
    Fp n(num.get_ui(), p);
    BigInt dm = den % pz;
    Fp d(dm.get_ui(), p);
    return n * d.inv();
}

std::uint64_t smallest_non_residue(std::uint64_t p) {
    for (std::uint64_t c = 2; c < p; ++c) {
        if (Fp(c, p).pow((p - 1) / 2).v != 1) return c;
    }
    throw Error("no quadratic non-residue found mod " + std::to_string(p));
}

std::string Fp2::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (a != 0) out += std::to_string(a);
    if (b != 0) {
        if (!out.empty()) out += " + ";
        if (b != 1) out += std::to_string(b);
        out += "s";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Fp2& x) {
    return os << x.str();
}

Fp2Field::Fp2Field(std::uint64_t p) : p_(p) {
    require_prime_ge5(p);
    n_ = smallest_non_residue(p);
}

std::vector<Fp2> Fp2Field::all_elements() const {
    std::vector<Fp2> out;
    out.reserve(p_ * p_);
    for (std::uint64_t a = 0; a < p_; ++a)
        for (std::uint64_t b = 0; b < p_; ++b) out.push_back(make(a, b));
    return out;
}

} // namespace rvf
