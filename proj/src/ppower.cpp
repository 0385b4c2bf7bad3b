#include "rvf/ppower.hpp"

#include <map>
#include <mutex>

namespace rvf {

namespace {

GradedPoly<Fp> discriminant_poly(std::uint64_t p) {
    // e4^3 - e6^2
    GradedPoly<Fp> d;
    d.add_term({0, 3, 0}, Fp(1, p));
    d.add_term({0, 0, 2}, Fp::from_int(-1, p));
    return d;
}

/// (B - e2 A)/12, the first integral of R mod p.
GradedPoly<Fp> first_integral(const ABPair& ab) {
    std::uint64_t p = ab.p;
    GradedPoly<Fp> e2 = e2_poly(Fp(1, p));
    return (ab.b_mod - e2 * ab.a_mod).scaled(Fp::from_int(12, p).inv());
}

} // namespace

Derivation<Fp> rp_closed(std::uint64_t p) {
    const ABPair& ab = compute_ab(p);
    const GradedPoly<Fp>& a = ab.a_mod;
    const GradedPoly<Fp>& b = ab.b_mod;
    GradedPoly<Fp> e4 = e4_poly(Fp(1, p));
    GradedPoly<Fp> e6 = e6_poly(Fp(1, p));

    Derivation<Fp> d;
    d.img2 = (b * b - e4 * a * a).scaled(Fp::from_int(12, p).inv());
    d.img4 = (a * (e4 * b - e6 * a)).scaled(Fp::from_int(3, p).inv());
    d.img6 = (a * (e6 * b - e4 * e4 * a)).scaled(Fp::from_int(2, p).inv());

    // Same derivation in the (R, F, H) basis; certify the equivalence.
    PrimeDomain dom(p);
    FieldSet<PrimeDomain> f = make_fields(dom);
    ExpectedDecomposition r = closed_decomposition(p);
    Derivation<Fp> expanded = f.ramanujan.scaled_by(r.r1) + f.lowering.scaled_by(r.r2) +
                              f.euler.scaled_by(r.r3);
    if (expanded != d) throw Error("closed form and basis form of R^p disagree");
    return d;
}

ExpectedDecomposition closed_decomposition(std::uint64_t p) {
    const ABPair& ab = compute_ab(p);
    GradedPoly<Fp> integral = first_integral(ab);
    ExpectedDecomposition r;
    r.r1 = ab.a_mod * ab.a_mod;
    r.r2 = -(integral * integral);
    r.r3 = ab.a_mod * integral;
    return r;
}

Derivation<Fp> rp_iterated(std::uint64_t p, unsigned bound) {
    require_prime_ge5(p);
    if (p > bound)
        throw BoundExceeded("iterated p-th power capped at p <= " +
                            std::to_string(bound));
    PrimeDomain dom(p);
    FieldSet<PrimeDomain> f = make_fields(dom);
    DerivationPower<Fp> power = derivation_power(f.ramanujan, static_cast<unsigned>(p));
    if (!power.leibniz_certified)
        throw Error("p-fold iterate of R failed the Leibniz sample check");
    return power.images;
}

const PthPowerResult& pth_power(std::uint64_t p) {
    static std::map<std::uint64_t, PthPowerResult> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;

    require_prime_ge5(p);
    if (p > kIterationBound)
        throw BoundExceeded("full p-th power bundle needs the iterate; capped at p <= " +
                            std::to_string(kIterationBound));
    PthPowerResult res;
    res.p = p;
    res.closed = rp_closed(p);
    PrimeDomain dom(p);
    FieldSet<PrimeDomain> f = make_fields(dom);
    DerivationPower<Fp> power = derivation_power(f.ramanujan, static_cast<unsigned>(p));
    res.iterated = power.images;
    res.leibniz_certified = power.leibniz_certified;
    res.equal = res.closed == res.iterated;
    res.decomposition = basis_decompose(res.iterated, dom);
    return cache.emplace(p, std::move(res)).first->second;
}

FirstIntegralReport first_integral_check(std::uint64_t p) {
    const ABPair& ab = compute_ab(p);
    PrimeDomain dom(p);
    FieldSet<PrimeDomain> f = make_fields(dom);
    GradedPoly<Fp> e2 = e2_poly(Fp(1, p));

    FirstIntegralReport rep;
    rep.p = p;
    rep.annihilated = apply(f.ramanujan, ab.b_mod - e2 * ab.a_mod).is_zero();
    auto da = ab.a_mod.homogeneous_degree();
    auto db = ab.b_mod.homogeneous_degree();
    rep.degrees_congruent = da && db &&
                            static_cast<std::uint64_t>(*da) % p == p - 1 &&
                            static_cast<std::uint64_t>(*db) % p == 1;
    rep.r_of_a_identity = apply(f.ramanujan, ab.a_mod) == first_integral(ab);
    return rep;
}

CurvatureReport p_curvature_witness(std::uint64_t p) {
    const ABPair& ab = compute_ab(p);
    CurvatureReport rep;
    rep.p = p;
    const BasisDecomposition<Fp>* decomp = nullptr;
    BasisDecomposition<Fp> local;
    if (p <= kIterationBound) {
        decomp = &pth_power(p).decomposition;
    } else {
        PrimeDomain dom(p);
        local = basis_decompose(rp_closed(p), dom);
        decomp = &local;
    }
    rep.f_or_h_component_nonzero = !decomp->r2.is_zero() || !decomp->r3.is_zero();
    if (!decomp->r3.is_zero())
        rep.witness = "r3 = " + to_string(decomp->r3);
    else if (!decomp->r2.is_zero())
        rep.witness = "r2 = " + to_string(decomp->r2);
    GradedPoly<Fp> e2 = e2_poly(Fp(1, p));
    rep.witness_nonzero = !(ab.b_mod - e2 * ab.a_mod).is_zero();
    return rep;
}

CoefficientSystemReport coefficient_system_check(std::uint64_t p) {
    PrimeDomain dom(p);
    FieldSet<PrimeDomain> f = make_fields(dom);
    const BasisDecomposition<Fp>& d = pth_power(p).decomposition;
    CoefficientSystemReport rep;
    rep.p = p;
    rep.r_r1_is_2r3 = apply(f.ramanujan, d.r1) == d.r3.times_int(2);
    rep.r_r2_is_zero = apply(f.ramanujan, d.r2).is_zero();
    rep.r_r3_is_neg_r2 = apply(f.ramanujan, d.r3) == -d.r2;
    return rep;
}

namespace {

template <typename K>
bool zero_set_matches(const Derivation<Fp>& rp, const std::vector<K>& elems) {
    for (const K& a : elems) {
        for (const K& b : elems) {
            K b3 = b * b * b;
            for (const K& c : elems) {
                bool on_cone = (b3 == c * c);
                bool vanishes = rp.img2.evaluate(a, b, c).is_zero() &&
                                rp.img4.evaluate(a, b, c).is_zero() &&
                                rp.img6.evaluate(a, b, c).is_zero();
                if (on_cone != vanishes) return false;
            }
        }
    }
    return true;
}

} // namespace

SingularSetReport singular_set_checks(std::uint64_t p) {
    Derivation<Fp> rp = rp_closed(p);
    GradedPoly<Fp> disc = discriminant_poly(p);

    SingularSetReport rep;
    rep.p = p;
    rep.divisible = true;
    for (int var : {2, 4, 6}) {
        const GradedPoly<Fp>& img = rp.image(var);
        if (!img.is_zero() && !divides(disc, img)) rep.divisible = false;
    }

    if (p <= kEnumerationBoundFp) {
        rep.fp_scan_ran = true;
        std::vector<Fp> elems;
        for (std::uint64_t v = 0; v < p; ++v) elems.emplace_back(v, p);
        rep.fp_zero_set_matches = zero_set_matches(rp, elems);
    }
    if (p <= kEnumerationBoundFp2) {
        rep.fp2_scan_ran = true;
        Fp2Field field(p);
        rep.fp2_zero_set_matches = zero_set_matches(rp, field.all_elements());
    }
    return rep;
}

} // namespace rvf
