#pragma once

#include <array>
#include <optional>

#include "rvf/graded_poly.hpp"

namespace rvf {

/// Coefficient domains. A derivation or decomposition needs field constants
/// (1/12 and friends); the domain object supplies them.
struct RationalDomain {
    using Elem = Rational;
    Rational from_int(long long x) const { return Rational(x); }
    Rational inv_int(long long x) const { return Rational(1, x); }
};

struct PrimeDomain {
    std::uint64_t p;
    using Elem = Fp;
    explicit PrimeDomain(std::uint64_t prime) : p(prime) { require_prime_ge5(prime); }
    Fp from_int(long long x) const { return Fp::from_int(x, p); }
    Fp inv_int(long long x) const { return Fp::from_int(x, p).inv(); }
};

/// A derivation of the polynomial ring in e2, e4, e6, determined by the
/// images of the three generators (Leibniz extension).
template <typename C>
struct Derivation {
    GradedPoly<C> img2, img4, img6;

    const GradedPoly<C>& image(int var) const {
        switch (var) {
            case 2: return img2;
            case 4: return img4;
            default: return img6;
        }
    }

    bool operator==(const Derivation& o) const {
        return img2 == o.img2 && img4 == o.img4 && img6 == o.img6;
    }
    bool operator!=(const Derivation& o) const { return !(*this == o); }

    Derivation operator+(const Derivation& o) const {
        return {img2 + o.img2, img4 + o.img4, img6 + o.img6};
    }
    Derivation operator-(const Derivation& o) const {
        return {img2 - o.img2, img4 - o.img4, img6 - o.img6};
    }
    /// Module multiple f*D, still a derivation.
    Derivation scaled_by(const GradedPoly<C>& f) const {
        return {f * img2, f * img4, f * img6};
    }

    bool is_zero() const { return img2.is_zero() && img4.is_zero() && img6.is_zero(); }

    /// Degree d such that the images of e2, e4, e6 are homogeneous of
    /// degrees d+2, d+4, d+6; nullopt when inhomogeneous. Zero images are
    /// compatible with any degree.
    std::optional<long> homogeneous_degree() const {
        std::optional<long> d;
        const std::array<std::pair<const GradedPoly<C>*, long>, 3> parts{
            {{&img2, 2L}, {&img4, 4L}, {&img6, 6L}}};
        for (auto [poly, w] : parts) {
            if (poly->is_zero()) continue;
            auto h = poly->homogeneous_degree();
            if (!h) return std::nullopt;
            long dd = *h - w;
            if (d && *d != dd) return std::nullopt;
            d = dd;
        }
        return d ? d : std::optional<long>(0);
    }
};

/// Leibniz-rule application D(P) = sum_i D(e_i) dP/de_i.
template <typename C>
GradedPoly<C> apply(const Derivation<C>& d, const GradedPoly<C>& poly) {
    return d.img2 * poly.partial(2) + d.img4 * poly.partial(4) + d.img6 * poly.partial(6);
}

/// [D1, D2], defined by its images D1(D2(e_i)) - D2(D1(e_i)).
template <typename C>
Derivation<C> bracket(const Derivation<C>& d1, const Derivation<C>& d2) {
    return {apply(d1, d2.img2) - apply(d2, d1.img2),
            apply(d1, d2.img4) - apply(d2, d1.img4),
            apply(d1, d2.img6) - apply(d2, d1.img6)};
}

/// k-fold iterated images of D. The triple defines a derivation only for
/// k = 1, or k = p over F_p; leibniz_certified records whether the Leibniz
/// rule held on the sample products e2*e4 and e4*e6.
template <typename C>
struct DerivationPower {
    Derivation<C> images;
    bool leibniz_certified = false;
};

template <typename C>
GradedPoly<C> apply_iterated(const Derivation<C>& d, GradedPoly<C> poly, unsigned k) {
    for (unsigned t = 0; t < k; ++t) poly = apply(d, poly);
    return poly;
}

/// A unit coefficient in D's field, taken from any stored coefficient.
template <typename C>
C unit_of(const Derivation<C>& d) {
    for (const GradedPoly<C>* poly : {&d.img2, &d.img4, &d.img6})
        for (const auto& [e, c] : poly->terms()) return c / c;
    throw InvalidArgument("cannot infer the coefficient field of the zero derivation");
}

template <typename C>
DerivationPower<C> derivation_power(const Derivation<C>& d, unsigned k) {
    if (k < 1) throw InvalidArgument("derivation_power: k must be >= 1");
    DerivationPower<C> out;
    GradedPoly<C> e2 = GradedPoly<C>::monomial({1, 0, 0}, unit_of(d));
    GradedPoly<C> e4 = GradedPoly<C>::monomial({0, 1, 0}, unit_of(d));
    GradedPoly<C> e6 = GradedPoly<C>::monomial({0, 0, 1}, unit_of(d));
    out.images.img2 = apply_iterated(d, e2, k);
    out.images.img4 = apply_iterated(d, e4, k);
    out.images.img6 = apply_iterated(d, e6, k);
    // Leibniz sample check: iterate on a product vs. extend from the images.
    auto sample_ok = [&](const GradedPoly<C>& x, const GradedPoly<C>& xi,
                         const GradedPoly<C>& y, const GradedPoly<C>& yi) {
        return apply_iterated(d, x * y, k) == xi * y + x * yi;
    };
    out.leibniz_certified = sample_ok(e2, out.images.img2, e4, out.images.img4) &&
                            sample_ok(e4, out.images.img4, e6, out.images.img6);
    return out;
}

/// The four named vector fields over a domain:
///   ramanujan      R = (e2^2-e4)/12 d/de2 + (e2 e4-e6)/3 d/de4 + (e2 e6-e4^2)/2 d/de6
///   lowering       F = -12 d/de2
///   euler          H = 2 e2 d/de2 + 4 e4 d/de4 + 6 e6 d/de6
///   ramanujan_serre  ∂ = -4 e6 d/de4 - 6 e4^2 d/de6   (with ∂(e2) = 0)
/// Construction certifies 12 R(x) = ∂(x) + e2 H(x) for x in {e4, e6}; on the
/// subring generated by e4, e6 this is the identity 12 R = ∂ + e2 H.
template <typename D>
struct FieldSet {
    using C = typename D::Elem;
    Derivation<C> ramanujan, lowering, euler, ramanujan_serre;
};

template <typename D>
FieldSet<D> make_fields(const D& dom) {
    using C = typename D::Elem;
    using P = GradedPoly<C>;
    auto mono = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k, long long num,
                    long long den) {
        return P::monomial({i, j, k}, dom.from_int(num) * dom.inv_int(den));
    };
    FieldSet<D> f;
    f.ramanujan.img2 = mono(2, 0, 0, 1, 12) + mono(0, 1, 0, -1, 12);
    f.ramanujan.img4 = mono(1, 1, 0, 1, 3) + mono(0, 0, 1, -1, 3);
    f.ramanujan.img6 = mono(1, 0, 1, 1, 2) + mono(0, 2, 0, -1, 2);
    f.lowering.img2 = P::constant(dom.from_int(-12));
    f.euler.img2 = mono(1, 0, 0, 2, 1);
    f.euler.img4 = mono(0, 1, 0, 4, 1);
    f.euler.img6 = mono(0, 0, 1, 6, 1);
    f.ramanujan_serre.img4 = mono(0, 0, 1, -4, 1);
    f.ramanujan_serre.img6 = mono(0, 2, 0, -6, 1);

    P e2 = mono(1, 0, 0, 1, 1);
    for (int var : {4, 6}) {
        P lhs = f.ramanujan.image(var).times_int(12);
        P rhs = f.ramanujan_serre.image(var) + e2 * f.euler.image(var);
        if (lhs != rhs) throw Error("field construction failed its own certificate");
    }
    return f;
}

/// X written as r1*R + r2*F + r3*H with polynomial coefficients.
template <typename C>
struct BasisDecomposition {
    GradedPoly<C> r1, r2, r3;
    bool certified = false;  // r1*R + r2*F + r3*H re-expands to X exactly
};

/// Solves the 3x3 system for (r1, r2, r3) by Cramer's rule. The determinant
/// is 24(e4^3 - e6^2); each coefficient exists as a polynomial iff the
/// corresponding Cramer numerator is exactly divisible by it, otherwise
/// NotPolynomial is thrown.
template <typename D>
BasisDecomposition<typename D::Elem> basis_decompose(
    const Derivation<typename D::Elem>& x, const D& dom) {
    using C = typename D::Elem;
    using P = GradedPoly<C>;
    FieldSet<D> f = make_fields(dom);

    // Column vectors of the system M (r1,r2,r3)^T = (X(e2),X(e4),X(e6))^T.
    std::array<std::array<P, 3>, 3> m;
    const int vars[3] = {2, 4, 6};
    for (int row = 0; row < 3; ++row) {
        int var = vars[row];
        m[row] = {f.ramanujan.image(var), f.lowering.image(var), f.euler.image(var)};
    }
    std::array<P, 3> rhs = {x.img2, x.img4, x.img6};

    auto det3 = [](const std::array<std::array<P, 3>, 3>& a) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };

    P det = det3(m);
    P expected = (P::monomial({0, 3, 0}, dom.from_int(24)) +
                  P::monomial({0, 0, 2}, dom.from_int(-24)));
    if (det != expected) throw Error("basis matrix determinant mismatch");

    BasisDecomposition<C> out;
    std::array<P*, 3> slots = {&out.r1, &out.r2, &out.r3};
    for (int col = 0; col < 3; ++col) {
        auto mc = m;
        for (int row = 0; row < 3; ++row) mc[row][col] = rhs[row];
        P numerator = det3(mc);
        try {
            *slots[col] = exact_div(numerator, det);
        } catch (const InexactDivision&) {
            throw NotPolynomial(
                "decomposition coefficient is not polynomial (numerator not "
                "divisible by 24(e4^3 - e6^2))");
        }
    }
    Derivation<C> rebuilt = f.ramanujan.scaled_by(out.r1) + f.lowering.scaled_by(out.r2) +
                            f.euler.scaled_by(out.r3);
    out.certified = rebuilt == x;
    if (!out.certified) throw Error("basis decomposition failed to re-expand");
    return out;
}

} // namespace rvf
