#include "rvf/supersingular.hpp"

#include <algorithm>

#include "rvf/ppower.hpp"

namespace rvf {

namespace {

struct Stripped {
    unsigned mult4 = 0, mult6 = 0;
    GradedPoly<Fp> cofactor;
};

// Exact e4/e6 multiplicities by repeated monomial division.
Stripped strip_e4_e6(const GradedPoly<Fp>& poly) {
    Stripped out;
    out.cofactor = poly;
    auto min_exp = [](const GradedPoly<Fp>& q, bool e4) {
        std::uint32_t mn = UINT32_MAX;
        for (const auto& [e, c] : q.terms()) mn = std::min(mn, e4 ? e.j : e.k);
        return mn;
    };
    out.mult4 = min_exp(out.cofactor, true);
    out.mult6 = min_exp(out.cofactor, false);
    if (out.mult4 || out.mult6) {
        GradedPoly<Fp> reduced;
        for (const auto& [e, c] : out.cofactor.terms())
            reduced.add_term({e.i, e.j - out.mult4, e.k - out.mult6}, c);
        out.cofactor = reduced;
    }
    return out;
}

// The cofactor of weight 12m has only monomials e4^{3k} e6^{2(m-k)}; this
// returns (c_0, ..., c_m) as the univariate shadow sum_k c_k u^k.
UniPoly<Fp> cofactor_shadow(const GradedPoly<Fp>& cof, unsigned m, std::uint64_t p) {
    std::vector<Fp> c(m + 1, Fp(0, p));
    for (const auto& [e, coeff] : cof.terms()) {
        if (e.i != 0 || e.j % 3 != 0 || e.k % 2 != 0)
            throw Error("cofactor is not a polynomial in e4^3 and e6^2");
        c[e.j / 3] = coeff;
    }
    return UniPoly<Fp>(std::move(c));
}

} // namespace

FactorizationData factor_exponents(const GradedPoly<Fp>& poly, std::uint64_t p) {
    if (poly.is_zero()) throw InvalidArgument("factor_exponents: zero polynomial");
    if (poly.depends_on_e2()) throw NotBivariate("polynomial involves e2");
    auto deg = poly.homogeneous_degree();
    if (!deg) throw NotHomogeneous("polynomial is not homogeneous");

    FactorizationData data;
    data.p = p;
    Stripped s = strip_e4_e6(poly);
    data.delta = s.mult4;
    data.epsilon = s.mult6;
    long rest = *deg - 4L * data.delta - 6L * data.epsilon;
    if (rest % 12 != 0) throw Error("stripped cofactor degree not divisible by 12");
    data.m = static_cast<unsigned>(rest / 12);
    data.degree_identity =
        *deg == 12L * data.m + 4L * data.delta + 6L * data.epsilon;

    data.shadow = cofactor_shadow(s.cofactor, data.m, p);
    data.leading = data.shadow.coeff(data.m);

    // Roots over F_{p^2} by exhaustive search, with deflation for
    // multiplicities.
    Fp2Field field(p);
    std::vector<Fp2> lifted;
    for (const Fp& c : data.shadow.coeffs()) lifted.push_back(field.from_base(c));
    UniPoly<Fp2> f(std::move(lifted));
    for (const Fp2& x : field.all_elements()) {
        if (f.degree() < 1) break;
        unsigned mult = 0;
        while (!f.is_zero() && f.eval(x).is_zero()) {
            auto [q, r] = f.divrem(UniPoly<Fp2>::linear_root(x));
            if (!r.is_zero()) break;
            f = q;
            ++mult;
        }
        if (mult) data.roots.emplace_back(x, mult);
    }
    std::sort(data.roots.begin(), data.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    unsigned total = 0;
    for (const auto& [r, mult] : data.roots) total += mult;
    data.splits = (total == data.m) && f.degree() == 0;
    return data;
}

ExponentQuadruple expected_exponents(std::uint64_t p) {
    require_prime_ge5(p);
    switch (p % 12) {
        case 1: return {0, 0, 2, 1};
        case 5: return {1, 0, 0, 1};
        case 7: return {0, 1, 2, 0};
        default: return {1, 1, 0, 0};  // p = 11 mod 12
    }
}

CoprimalityReport coprimality_and_squarefree(std::uint64_t p) {
    const ABPair& ab = compute_ab(p);
    FactorizationData fa = factor_exponents(ab.a_mod, p);
    FactorizationData fb = factor_exponents(ab.b_mod, p);

    CoprimalityReport rep;
    rep.p = p;
    // A splits over F_{p^2} (its roots are Moebius images of supersingular
    // j-invariants); simple roots there certify squarefreeness.
    rep.a_squarefree = fa.splits && fa.all_roots_simple() && fa.delta <= 1 &&
                       fa.epsilon <= 1 && fa.degree_identity &&
                       is_squarefree(fa.shadow);

    // A common cubic-quadratic factor of A and B would be e4^3 - alpha e6^2
    // for one of A's roots alpha, so it suffices that B's cofactor does not
    // vanish at any alpha. B itself need not split over F_{p^2}.
    Fp2Field field(p);
    std::vector<Fp2> b_shadow_lifted;
    for (const Fp& c : fb.shadow.coeffs()) b_shadow_lifted.push_back(field.from_base(c));
    UniPoly<Fp2> b_shadow(std::move(b_shadow_lifted));
    rep.roots_disjoint = true;
    for (const auto& [alpha, mult] : fa.roots)
        if (b_shadow.eval(alpha).is_zero()) rep.roots_disjoint = false;

    rep.supports_disjoint = !(fa.delta > 0 && fb.delta > 0) &&
                            !(fa.epsilon > 0 && fb.epsilon > 0);
    ExponentQuadruple want = expected_exponents(p);
    rep.exponents_match = fa.delta == want.delta && fa.epsilon == want.epsilon &&
                          fb.delta == want.delta_prime &&
                          fb.epsilon == want.epsilon_prime && fb.degree_identity;
    return rep;
}

namespace {

std::vector<Fp2> sorted_roots_over_fp2(const UniPoly<Fp>& f, std::uint64_t p) {
    Fp2Field field(p);
    std::vector<Fp2> lifted;
    for (const Fp& c : f.coeffs()) lifted.push_back(field.from_base(c));
    UniPoly<Fp2> g(std::move(lifted));
    std::vector<Fp2> roots;
    for (const Fp2& x : field.all_elements())
        if (g.eval(x).is_zero()) roots.push_back(x);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

SupersingularPolynomial ss_from_a(std::uint64_t p) {
    const ABPair& ab = compute_ab(p);
    FactorizationData fa = factor_exponents(ab.a_mod, p);

    UniPoly<Fp> t(std::vector<Fp>{Fp(0, p), Fp(1, p)});
    UniPoly<Fp> t_1728(std::vector<Fp>{-Fp::from_int(1728, p), Fp(1, p)});

    // f(t) = 1728^{-m} sum_k c_k t^k (t - 1728)^{m-k}
    UniPoly<Fp> f;
    for (unsigned k = 0; k <= fa.m; ++k) {
        Fp ck = ab.a_mod.coeff({0, fa.delta + 3 * k, fa.epsilon + 2 * (fa.m - k)});
        if (ck.is_zero()) continue;
        UniPoly<Fp> term = UniPoly<Fp>::constant(ck);
        for (unsigned t_pow = 0; t_pow < k; ++t_pow) term = term * t;
        for (unsigned s_pow = 0; s_pow < fa.m - k; ++s_pow) term = term * t_1728;
        f = f + term;
    }
    Fp scale = Fp::from_int(1728, p).inv().pow(fa.m);
    f = f.scaled(scale);

    SupersingularPolynomial ss;
    ss.p = p;
    UniPoly<Fp> full = f;
    for (unsigned i = 0; i < fa.delta; ++i) full = full * t;
    for (unsigned i = 0; i < fa.epsilon; ++i) full = full * t_1728;
    ss.poly = full.monic();
    ss.j_values = sorted_roots_over_fp2(ss.poly, p);
    return ss;
}

namespace {

template <typename K>
K hasse_impl(const K& a, const K& b, std::uint64_t p) {
    // Coefficient of x^{p-1} in (x^3 + a x + b)^n, n = (p-1)/2: the
    // multinomial terms with i + j + k = n and 3i + j = 2n, i.e.
    // j = 2n - 3i, k = 2i - n.
    std::uint64_t n = (p - 1) / 2;
    std::vector<Fp> fact(n + 1);
    fact[0] = Fp(1, p);
    for (std::uint64_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * Fp(i, p);

    std::uint64_t i_lo = (n + 1) / 2, i_hi = (2 * n) / 3;
    K one = K::embed(1, a);
    std::uint64_t max_j = i_lo <= i_hi ? 2 * n - 3 * i_lo : 0;
    std::uint64_t max_k = i_lo <= i_hi ? 2 * i_hi - n : 0;
    std::vector<K> pa(max_j + 1, one), pb(max_k + 1, one);
    for (std::uint64_t e = 1; e <= max_j; ++e) pa[e] = pa[e - 1] * a;
    for (std::uint64_t e = 1; e <= max_k; ++e) pb[e] = pb[e - 1] * b;

    K acc{};
    for (std::uint64_t i = i_lo; i <= i_hi && i <= n; ++i) {
        std::uint64_t j = 2 * n - 3 * i, k = 2 * i - n;
        Fp coef = fact[n] * (fact[i] * fact[j] * fact[k]).inv();
        acc += pa[j] * pb[k] * embed_coeff(coef, a);
    }
    return acc;
}

} // namespace

Fp hasse_invariant(const Fp& a, const Fp& b) {
    std::uint64_t p = a.p ? a.p : b.p;
    if (p == 0) throw InvalidArgument("hasse_invariant: no field attached");
    return hasse_impl(Fp(a.v, p), Fp(b.v, p), p);
}
Fp2 hasse_invariant(const Fp2& a, const Fp2& b) {
    const Fp2& attached = a.p ? a : b;
    if (attached.p == 0) throw InvalidArgument("hasse_invariant: no field attached");
    Fp2 aa(a.a, a.b, attached.p, attached.n);
    Fp2 bb(b.a, b.b, attached.p, attached.n);
    return hasse_impl(aa, bb, attached.p);
}

std::pair<Fp2, Fp2> curve_for_j(const Fp2& j0) {
    Fp2 zero = Fp2(0, 0, j0.p, j0.n);
    Fp2 one = Fp2(1, 0, j0.p, j0.n);
    Fp2 j1728 = Fp2::embed(1728, j0);
    if (j0.is_zero()) return {zero, one};
    if (j0 == j1728) return {one, zero};
    Fp2 d = j1728 - j0;
    return {Fp2::embed(3, j0) * j0 * d, Fp2::embed(2, j0) * j0 * d * d};
}

SupersingularPolynomial ss_deuring(std::uint64_t p, std::uint64_t bound) {
    require_prime_ge5(p);
    if (p > bound)
        throw BoundExceeded("enumeration oracle capped at p <= " +
                            std::to_string(bound));
    Fp2Field field(p);
    SupersingularPolynomial ss;
    ss.p = p;
    for (const Fp2& j0 : field.all_elements()) {
        auto [a, b] = curve_for_j(j0);
        if (hasse_invariant(a, b).is_zero()) ss.j_values.push_back(j0);
    }
    std::sort(ss.j_values.begin(), ss.j_values.end());

    UniPoly<Fp2> prod = UniPoly<Fp2>::constant(field.one());
    for (const Fp2& j0 : ss.j_values) prod = prod * UniPoly<Fp2>::linear_root(j0);
    std::vector<Fp> coerced;
    for (const Fp2& c : prod.coeffs()) {
        if (!c.in_base_field())
            throw CoercionFailure("supersingular polynomial coefficient outside F_p");
        coerced.emplace_back(c.a, p);
    }
    ss.poly = UniPoly<Fp>(std::move(coerced));
    return ss;
}

Fp j_map(const Fp& b, const Fp& c) {
    Fp b3 = b * b * b;
    Fp d = b3 - c * c;
    if (d.is_zero()) throw OnDiscriminant("j undefined where e4^3 = e6^2");
    return Fp::embed(1728, b) * b3 * d.inv();
}

Fp2 j_map(const Fp2& b, const Fp2& c) {
    Fp2 b3 = b * b * b;
    Fp2 d = b3 - c * c;
    if (d.is_zero()) throw OnDiscriminant("j undefined where e4^3 = e6^2");
    return Fp2::embed(1728, b) * b3 * d.inv();
}

LocusReport locus_polynomial(std::uint64_t p) {
    const ABPair& ab = compute_ab(p);
    GradedPoly<Fp> e4sq = GradedPoly<Fp>::monomial({0, 2, 0}, Fp(1, p));
    GradedPoly<Fp> e6 = e6_poly(Fp(1, p));

    LocusReport rep;
    rep.p = p;
    switch (p % 12) {
        case 1: rep.f_p = ab.a_mod; break;
        case 5: rep.f_p = e4sq * ab.a_mod; break;
        case 7: rep.f_p = e6 * ab.a_mod; break;
        default: rep.f_p = e4sq * e6 * ab.a_mod; break;
    }

    // Radical: cap the e4/e6 multiplicities at one; the cubic-quadratic
    // cofactor is squarefree whenever A is.
    Stripped sf = strip_e4_e6(rep.f_p);
    Stripped sa = strip_e4_e6(ab.a_mod);
    FactorizationData fa = factor_exponents(ab.a_mod, p);
    bool cofactors_equal = sf.cofactor == sa.cofactor;
    bool cofactor_squarefree = fa.splits && fa.all_roots_simple();
    bool capped_match = std::min(sf.mult4, 1u) == sa.mult4 &&
                        std::min(sf.mult6, 1u) == sa.mult6;
    rep.radical_is_a = cofactors_equal && cofactor_squarefree && capped_match;
    return rep;
}

PointCrosscheckReport supersingular_point_crosscheck(std::uint64_t p) {
    PointCrosscheckReport rep;
    rep.p = p;
    if (p > kPointScanBound) return rep;
    rep.ran = true;
    const ABPair& ab = compute_ab(p);
    Fp2Field field(p);
    std::vector<Fp2> elems = field.all_elements();
    for (const Fp2& b : elems) {
        Fp2 b3 = b * b * b;
        for (const Fp2& c : elems) {
            if (b3 == c * c) continue;
            ++rep.points;
            bool on_locus = ab.a_mod.evaluate(field.zero(), b, c).is_zero();
            ShortWeierstrassCurve<Fp2> e =
                curve_from_point<Fp2>({field.zero(), b, c});
            bool ss = hasse_invariant(e.A, e.B).is_zero();
            if (on_locus != ss) ++rep.mismatches;
        }
    }
    return rep;
}

TransversalityReport transversality_scan(std::uint64_t p) {
    TransversalityReport rep;
    rep.p = p;
    rep.symbolic_coprime = coprimality_and_squarefree(p).passed();
    if (p > kPointScanBound) return rep;
    rep.scan_ran = true;
    const ABPair& ab = compute_ab(p);
    Fp2Field field(p);
    std::vector<Fp2> elems = field.all_elements();
    for (const Fp2& b : elems) {
        Fp2 b3 = b * b * b;
        for (const Fp2& c : elems) {
            if (b3 == c * c) continue;
            if (!ab.a_mod.evaluate(field.zero(), b, c).is_zero()) continue;
            ++rep.locus_points;
            if (ab.b_mod.evaluate(field.zero(), b, c).is_zero()) ++rep.b_vanishings;
        }
    }
    return rep;
}

LocusFieldReport locus_field_check(std::uint64_t p) {
    const ABPair& ab = compute_ab(p);
    Derivation<Fp> rp = rp_closed(p);
    Fp inv12 = Fp::from_int(12, p).inv();
    GradedPoly<Fp> e4 = e4_poly(Fp(1, p));
    GradedPoly<Fp> e6 = e6_poly(Fp(1, p));
    GradedPoly<Fp> b_sq_over_12 = (ab.b_mod * ab.b_mod).scaled(inv12);

    // X = R^p + (B/12)^2 F; only the e2 image changes.
    GradedPoly<Fp> x2 = rp.img2 - b_sq_over_12;
    const GradedPoly<Fp>& x4 = rp.img4;
    const GradedPoly<Fp>& x6 = rp.img6;

    LocusFieldReport rep;
    rep.p = p;
    auto divisible = [&](const GradedPoly<Fp>& q) {
        return q.is_zero() || divides(ab.a_mod, q);
    };
    rep.images_divisible_by_a = divisible(x2) && divisible(x4) && divisible(x6);
    rep.e2_image_formula = x2 == -(e4 * ab.a_mod * ab.a_mod).scaled(inv12);
    GradedPoly<Fp> disc;
    disc.add_term({0, 3, 0}, Fp(1, p));
    disc.add_term({0, 0, 2}, Fp::from_int(-1, p));
    rep.combination_identity =
        (e6 * x4).times_int(6) - (e4 * x6).times_int(4) ==
        (ab.a_mod * ab.a_mod * disc).times_int(2);
    return rep;
}

ComponentCountReport component_count_check(std::uint64_t p) {
    FactorizationData fa = factor_exponents(compute_ab(p).a_mod, p);
    SupersingularPolynomial ss = ss_from_a(p);
    ComponentCountReport rep;
    rep.p = p;
    rep.m = fa.m;
    rep.delta = fa.delta;
    rep.epsilon = fa.epsilon;
    rep.ss_degree = ss.poly.degree();
    return rep;
}

JConsistencyReport j_consistency_check(std::uint64_t p) {
    JConsistencyReport rep;
    rep.p = p;
    if (p > kJConsistencyBound) return rep;
    rep.ran = true;
    Fp2Field field(p);
    std::vector<Fp2> elems = field.all_elements();
    for (const Fp2& b : elems) {
        Fp2 b3 = b * b * b;
        for (const Fp2& c : elems) {
            if (b3 == c * c) continue;
            ++rep.points;
            ShortWeierstrassCurve<Fp2> e =
                curve_from_point<Fp2>({field.zero(), b, c});
            if (j_invariant(e) != j_map(b, c)) ++rep.mismatches;
        }
    }
    return rep;
}

} // namespace rvf
