#pragma once

#include <string>
#include <vector>

#include "rvf/errors.hpp"
#include "rvf/fp.hpp"
#include "rvf/fp2.hpp"

namespace rvf {

/// Univariate polynomial over a finite field (F_p or F_{p^2}); coefficient
/// of t^i at index i, no trailing zeros, zero polynomial is empty.
template <typename K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UniPoly constant(K c) { return UniPoly(std::vector<K>{std::move(c)}); }
    /// t - root
    static UniPoly linear_root(const K& root) {
        return UniPoly(std::vector<K>{-root, K::embed(1, root)});
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K{}; }
    const K& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<K> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
        return UniPoly(std::move(out));
    }
    UniPoly operator-(const UniPoly& o) const {
        std::vector<K> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
        return UniPoly(std::move(out));
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<K> out(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(out));
    }
    UniPoly scaled(const K& s) const {
        std::vector<K> out = c_;
        for (K& x : out) x = x * s;
        return UniPoly(std::move(out));
    }

    bool operator==(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inv());
    }

    K eval(const K& x) const {
        K acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            K k = c_[i];
            K scale = K::embed(static_cast<long long>(i), k);
            out[i - 1] = k * scale;
        }
        return UniPoly(std::move(out));
    }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        if (d.is_zero()) throw ZeroInverse("division by the zero polynomial");
        UniPoly rem = *this;
        std::vector<K> q;
        if (rem.degree() >= d.degree())
            q.assign(rem.degree() - d.degree() + 1, K{});
        K dinv = d.leading().inv();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            long shift = rem.degree() - d.degree();
            K factor = rem.leading() * dinv;
            q[shift] = factor;
            std::vector<K> sub(shift + d.c_.size());
            for (std::size_t i = 0; i < d.c_.size(); ++i) sub[shift + i] = d.c_[i] * factor;
            rem = rem - UniPoly(std::move(sub));
        }
        return {UniPoly(std::move(q)), rem};
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic gcd by the Euclidean algorithm.
template <typename K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        a = b;
        b = r;
    }
    return a.monic();
}

template <typename K>
bool is_squarefree(const UniPoly<K>& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

/// "t^2 + 10t" style: descending powers, unit coefficients omitted,
/// residues printed in [0, p). F_{p^2} coefficients appear in parentheses.
template <typename K>
std::string to_string(const UniPoly<K>& f, const std::string& var = "t") {
    if (f.is_zero()) return "0";
    std::string out;
    for (long i = f.degree(); i >= 0; --i) {
        K c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c.str();
        bool unit = (cs == "1");
        if (i == 0) {
            out += cs.find(' ') == std::string::npos ? cs : "(" + cs + ")";
            continue;
        }
        if (!unit) {
            out += cs.find(' ') == std::string::npos ? cs : "(" + cs + ")";
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace rvf
