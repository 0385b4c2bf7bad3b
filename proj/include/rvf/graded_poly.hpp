#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rvf/errors.hpp"
#include "rvf/fp.hpp"
#include "rvf/fp2.hpp"
#include "rvf/rational.hpp"

namespace rvf {

/// Exponent triple of the monomial e2^i e4^j e6^k. Weighted degree gives
/// e2, e4, e6 the weights 2, 4, 6. Ordering is lexicographic in (i, j, k);
/// it fixes leading terms for division and the printing order.
struct Exponents {
    std::uint32_t i = 0, j = 0, k = 0;

    long weight() const { return 2L * i + 4L * j + 6L * k; }
    auto operator<=>(const Exponents&) const = default;
};

namespace detail {
inline Rational coeff_times_int(const Rational& c, long long k) { return c * Rational(k); }
inline Fp coeff_times_int(const Fp& c, long long k) { return c * Fp::embed(k, c); }
} // namespace detail

/// Sparse polynomial in e2, e4, e6 over Q or F_p. Zero coefficients are
/// never stored. Homogeneity (in the weighted grading) is a queryable
/// property, not an assumption.
template <typename C>
class GradedPoly {
public:
    using TermMap = std::map<Exponents, C>;

    GradedPoly() = default;

    static GradedPoly monomial(Exponents e, C coeff) {
        GradedPoly p;
        p.add_term(e, std::move(coeff));
        return p;
    }
    static GradedPoly constant(C coeff) { return monomial({0, 0, 0}, std::move(coeff)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    C coeff(Exponents e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    void add_term(Exponents e, C c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GradedPoly operator+(const GradedPoly& o) const {
        GradedPoly out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }
    GradedPoly operator-(const GradedPoly& o) const {
        GradedPoly out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
        return out;
    }
    GradedPoly operator-() const {
        GradedPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }
    GradedPoly operator*(const GradedPoly& o) const {
        GradedPoly out;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                out.add_term({e1.i + e2.i, e1.j + e2.j, e1.k + e2.k}, c1 * c2);
        return out;
    }
    GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }
    GradedPoly& operator-=(const GradedPoly& o) { return *this = *this - o; }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    GradedPoly scaled(const C& s) const {
        GradedPoly out;
        if (s.is_zero()) return out;
        for (const auto& [e, c] : terms_) out.add_term(e, c * s);
        return out;
    }
    GradedPoly times_int(long long k) const {
        GradedPoly out;
        for (const auto& [e, c] : terms_) out.add_term(e, detail::coeff_times_int(c, k));
        return out;
    }

    bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    /// Max weighted degree of a term; -1 for the zero polynomial.
    long weighted_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.weight());
        return d;
    }

    /// Degree if homogeneous, nullopt otherwise. Zero counts as homogeneous
    /// of every degree and reports -1.
    std::optional<long> homogeneous_degree() const {
        if (terms_.empty()) return -1;
        long d = terms_.begin()->first.weight();
        for (const auto& [e, c] : terms_)
            if (e.weight() != d) return std::nullopt;
        return d;
    }
    bool is_homogeneous() const { return homogeneous_degree().has_value(); }

    bool depends_on_e2() const {
        for (const auto& [e, c] : terms_)
            if (e.i > 0) return true;
        return false;
    }

    /// Partial derivative; var is 2, 4 or 6.
    GradedPoly partial(int var) const {
        GradedPoly out;
        for (const auto& [e, c] : terms_) {
            Exponents d = e;
            std::uint32_t exp = 0;
            switch (var) {
                case 2: exp = e.i; if (exp) d.i--; break;
                case 4: exp = e.j; if (exp) d.j--; break;
                case 6: exp = e.k; if (exp) d.k--; break;
                default: throw InvalidArgument("partial: var must be 2, 4 or 6");
            }
            if (exp) out.add_term(d, detail::coeff_times_int(c, exp));
        }
        return out;
    }

    /// Leading term in the lex order (largest exponent triple).
    std::pair<Exponents, C> leading_term() const {
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    /// Evaluation at a point; K must support embedding of C's values.
    template <typename K>
    K evaluate(const K& x2, const K& x4, const K& x6) const;

private:
    TermMap terms_;
};

/// Exact quotient P / Q; throws InexactDivision when Q does not divide P.
template <typename C>
GradedPoly<C> exact_div(const GradedPoly<C>& num, const GradedPoly<C>& den) {
    if (den.is_zero()) throw InexactDivision("division by the zero polynomial");
    GradedPoly<C> quotient;
    GradedPoly<C> rem = num;
    auto [de, dc] = den.leading_term();
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading_term();
        if (re.i < de.i || re.j < de.j || re.k < de.k)
            throw InexactDivision("leading term not divisible");
        Exponents q{re.i - de.i, re.j - de.j, re.k - de.k};
        C qc = rc / dc;
        GradedPoly<C> step = GradedPoly<C>::monomial(q, qc);
        quotient += step;
        rem -= step * den;
    }
    return quotient;
}

/// True iff den divides num exactly.
template <typename C>
bool divides(const GradedPoly<C>& den, const GradedPoly<C>& num) {
    try {
        exact_div(num, den);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

namespace detail {
std::string coeff_str(const Rational& c, bool* negative);
std::string coeff_str(const Fp& c, bool* negative);
} // namespace detail

/// Canonical rendering, terms in descending lex order of (i, j, k):
/// "2e4^3 + 3e6^2", "441/691*e4^3 + ...". Mod-p coefficients print as
/// residues in [0, p).
template <typename C>
std::string to_string(const GradedPoly<C>& poly) {
    if (poly.is_zero()) return "0";
    std::string out;
    const auto& terms = poly.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = false;
        std::string cs = detail::coeff_str(c, &negative);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        auto add_var = [&](const char* name, std::uint32_t exp) {
            if (exp == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (exp > 1) vars += "^" + std::to_string(exp);
        };
        add_var("e2", e.i);
        add_var("e4", e.j);
        add_var("e6", e.k);
        if (vars.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += vars;
        } else {
            out += cs + "*" + vars;
        }
    }
    return out;
}

// Convenience monomial builders over a given coefficient domain.
template <typename C>
GradedPoly<C> e2_poly(C unit) { return GradedPoly<C>::monomial({1, 0, 0}, std::move(unit)); }
template <typename C>
GradedPoly<C> e4_poly(C unit) { return GradedPoly<C>::monomial({0, 1, 0}, std::move(unit)); }
template <typename C>
GradedPoly<C> e6_poly(C unit) { return GradedPoly<C>::monomial({0, 0, 1}, std::move(unit)); }

inline Fp embed_coeff(const Fp& c, const Fp& like) { return c; }
inline Fp2 embed_coeff(const Fp& c, const Fp2& like) {
    return Fp2(c.v, 0, like.p, like.n);
}
inline Rational embed_coeff(const Rational& c, const Rational&) { return c; }

template <typename C>
template <typename K>
K GradedPoly<C>::evaluate(const K& x2, const K& x4, const K& x6) const {
    std::uint32_t mi = 0, mj = 0, mk = 0;
    for (const auto& [e, c] : terms_) {
        mi = std::max(mi, e.i);
        mj = std::max(mj, e.j);
        mk = std::max(mk, e.k);
    }
    auto powers = [](const K& x, std::uint32_t m) {
        std::vector<K> t(m + 1);
        t[0] = K::embed(1, x);
        for (std::uint32_t a = 1; a <= m; ++a) t[a] = t[a - 1] * x;
        return t;
    };
    std::vector<K> p2 = powers(x2, mi), p4 = powers(x4, mj), p6 = powers(x6, mk);
    K acc{};
    for (const auto& [e, c] : terms_) {
        K term = p2[e.i] * p4[e.j] * p6[e.k];
        acc += term * embed_coeff(c, x2);
    }
    return acc;
}

} // namespace rvf
