#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rvf/supersingular.hpp"

using namespace rvf;

namespace {

// Reference Hasse coefficient by naive polynomial powering; keeps the
// multinomial shortcut honest.
template <typename K>
K hasse_by_powering(const K& a, const K& b, std::uint64_t p) {
    K one = K::embed(1, a);
    UniPoly<K> cubic(std::vector<K>{b, a, K{}, one});  // x^3 + a x + b
    UniPoly<K> power = UniPoly<K>::constant(one);
    for (std::uint64_t t = 0; t < (p - 1) / 2; ++t) power = power * cubic;
    return power.coeff(p - 1);
}

} // namespace

TEST_CASE("factorization shape of A for small primes") {
    // p = 5: A = e4
    FactorizationData f5 = factor_exponents(compute_ab(5).a_mod, 5);
    CHECK(f5.delta == 1);
    CHECK(f5.epsilon == 0);
    CHECK(f5.m == 0);
    CHECK(f5.degree_identity);

    // p = 11: A = e4 e6
    FactorizationData f11 = factor_exponents(compute_ab(11).a_mod, 11);
    CHECK(f11.delta == 1);
    CHECK(f11.epsilon == 1);
    CHECK(f11.m == 0);

    // p = 13: A = 6 e4^3 + 8 e6^2; unique alpha with 6 alpha = -8
    FactorizationData f13 = factor_exponents(compute_ab(13).a_mod, 13);
    CHECK(f13.delta == 0);
    CHECK(f13.epsilon == 0);
    CHECK(f13.m == 1);
    CHECK(f13.leading == Fp(6, 13));
    REQUIRE(f13.roots.size() == 1);
    CHECK(f13.roots[0].first.in_base_field());
    CHECK(Fp(6, 13) * Fp(f13.roots[0].first.a, 13) == Fp::from_int(-8, 13));
    CHECK(f13.roots[0].second == 1);
    CHECK(f13.splits);
}

TEST_CASE("factorization rejects bad inputs") {
    GradedPoly<Fp> with_e2 = e2_poly(Fp(1, 5));
    CHECK_THROWS_AS(factor_exponents(with_e2, 5), NotBivariate);
    GradedPoly<Fp> inhom = e4_poly(Fp(1, 5)) + e6_poly(Fp(1, 5));
    CHECK_THROWS_AS(factor_exponents(inhom, 5), NotHomogeneous);
    CHECK_THROWS_AS(factor_exponents(GradedPoly<Fp>(), 5), InvalidArgument);
}

TEST_CASE("factorization roots are Frobenius stable") {
    for (std::uint64_t p : {13, 37, 73}) {
        FactorizationData f = factor_exponents(compute_ab(p).a_mod, p);
        CHECK(f.splits);
        CHECK(f.frobenius_stable());
    }
}

TEST_CASE("expected exponents by residue class") {
    ExponentQuadruple q13 = expected_exponents(13);  // 1 mod 12
    CHECK(q13.delta == 0);
    CHECK(q13.epsilon == 0);
    CHECK(q13.delta_prime == 2);
    CHECK(q13.epsilon_prime == 1);

    ExponentQuadruple q5 = expected_exponents(5);
    CHECK(q5.delta == 1);
    CHECK(q5.epsilon == 0);
    CHECK(q5.delta_prime == 0);
    CHECK(q5.epsilon_prime == 1);

    ExponentQuadruple q7 = expected_exponents(7);
    CHECK(q7.delta == 0);
    CHECK(q7.epsilon == 1);
    CHECK(q7.delta_prime == 2);
    CHECK(q7.epsilon_prime == 0);

    ExponentQuadruple q11 = expected_exponents(11);
    CHECK(q11.delta == 1);
    CHECK(q11.epsilon == 1);
    CHECK(q11.delta_prime == 0);
    CHECK(q11.epsilon_prime == 0);
}

TEST_CASE("coprimality and squarefreeness") {
    for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23}) {
        CoprimalityReport r = coprimality_and_squarefree(p);
        CHECK(r.a_squarefree);
        CHECK(r.roots_disjoint);
        CHECK(r.supports_disjoint);
        CHECK(r.exponents_match);
    }
}

TEST_CASE("coprimality holds even when B does not split over F_{p^2}") {
    // at p = 41 the cofactor of B has no quadratic roots at all
    FactorizationData fb = factor_exponents(compute_ab(41).b_mod, 41);
    CHECK(!fb.splits);
    CoprimalityReport r = coprimality_and_squarefree(41);
    CHECK(r.a_squarefree);
    CHECK(r.roots_disjoint);
    CHECK(r.supports_disjoint);
    CHECK(r.exponents_match);
}

TEST_CASE("supersingular polynomial from A, spot values") {
    CHECK(to_string(ss_from_a(5).poly) == "t");
    CHECK(to_string(ss_from_a(7).poly) == "t + 1");
    CHECK(to_string(ss_from_a(11).poly) == "t^2 + 10t");
    CHECK(to_string(ss_from_a(13).poly) == "t + 8");

    SupersingularPolynomial ss13 = ss_from_a(13);
    REQUIRE(ss13.j_values.size() == 1);
    CHECK(ss13.j_values[0].a == 5);
    CHECK(ss13.j_values[0].in_base_field());
}

TEST_CASE("hasse invariant examples for p = 5") {
    // j = 0 curve y^2 = x^3 + 1: (x^3+1)^2 has zero x^4 coefficient
    Fp zero(0, 5), one(1, 5);
    CHECK(hasse_invariant(zero, one).is_zero());
    // y^2 = x^3 + x: (x^3+x)^2 has x^4 coefficient 2
    CHECK(hasse_invariant(one, zero) == Fp(2, 5));
}

TEST_CASE("hasse invariant agrees with naive powering") {
    for (std::uint64_t p : {5, 7, 11, 13}) {
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b)
                CHECK(hasse_invariant(Fp(a, p), Fp(b, p)) ==
                      hasse_by_powering(Fp(a, p), Fp(b, p), p));
        Fp2Field field(p);
        // sample the quadratic extension
        for (std::uint64_t a = 0; a < p; ++a) {
            Fp2 x = field.make(a, (a + 1) % p);
            Fp2 y = field.make((2 * a) % p, a);
            CHECK(hasse_invariant(x, y) == hasse_by_powering(x, y, p));
        }
    }
}

TEST_CASE("deuring enumeration oracle") {
    SupersingularPolynomial d11 = ss_deuring(11);
    CHECK(to_string(d11.poly) == "t^2 + 10t");  // roots 0 and 1728 = 1
    REQUIRE(d11.j_values.size() == 2);
    CHECK(d11.j_values[0].a == 0);
    CHECK(d11.j_values[1].a == 1);

    CHECK_THROWS_AS(ss_deuring(103), BoundExceeded);
}

TEST_CASE("the two supersingular constructions agree") {
    for (std::uint64_t p = 5; p <= 31; ++p) {
        if (!is_prime(p)) continue;
        SupersingularPolynomial a = ss_from_a(p);
        SupersingularPolynomial d = ss_deuring(p);
        CHECK(a.poly == d.poly);
        CHECK(a.j_values == d.j_values);
        CHECK(a.poly.is_monic());
        CHECK(is_squarefree(a.poly));
    }
}

TEST_CASE("supersingular roots are Frobenius stable") {
    for (std::uint64_t p : {23, 37, 47}) {
        SupersingularPolynomial ss = ss_from_a(p);
        for (const Fp2& j0 : ss.j_values) {
            Fp2 conj = j0.frobenius();
            bool found = false;
            for (const Fp2& other : ss.j_values) found = found || other == conj;
            CHECK(found);
        }
        CHECK(ss.poly.degree() == static_cast<long>(ss.j_values.size()));
    }
}

TEST_CASE("j map") {
    Fp one(1, 7), zero(0, 7);
    CHECK(j_map(one, zero) == Fp::from_int(1728, 7));
    CHECK(j_map(zero, one) == Fp(0, 7));
    CHECK_THROWS_AS(j_map(one, one), OnDiscriminant);

    Fp2Field field(7);
    CHECK(j_map(field.one(), field.zero()) == field.from_int(1728));
}

TEST_CASE("curve from a moduli point") {
    // (0, 0, 864) -> A = 0, B = 1
    Fp2Field field(11);
    ModuliPoint<Fp2> pt{field.zero(), field.zero(), field.from_int(864)};
    ShortWeierstrassCurve<Fp2> e = curve_from_point(pt);
    CHECK(e.A.is_zero());
    CHECK(e.B == field.one());

    // the e2 coordinate is absorbed by the translation
    ModuliPoint<Fp2> pt2{field.from_int(3), field.zero(), field.from_int(864)};
    ShortWeierstrassCurve<Fp2> e2 = curve_from_point(pt2);
    CHECK(e2.A == e.A);
    CHECK(e2.B == e.B);

    ModuliPoint<Fp2> bad{field.zero(), field.one(), field.one()};
    CHECK_THROWS_AS(curve_from_point(bad), OnDiscriminant);
}

TEST_CASE("j consistency, exhaustive for p = 5 and 7") {
    for (std::uint64_t p : {5, 7}) {
        JConsistencyReport r = j_consistency_check(p);
        CHECK(r.ran);
        CHECK(r.mismatches == 0);
        CHECK(r.points > 0);
    }
    CHECK(!j_consistency_check(11).ran);
}

TEST_CASE("locus polynomial cases") {
    // p = 5 (5 mod 12): f_p = e4^2 A = e4^3
    LocusReport r5 = locus_polynomial(5);
    CHECK(r5.f_p == GradedPoly<Fp>::monomial({0, 3, 0}, Fp(1, 5)));
    CHECK(r5.radical_is_a);

    // p = 7 (7 mod 12): f_p = e6 A = e6^2
    LocusReport r7 = locus_polynomial(7);
    CHECK(r7.f_p == GradedPoly<Fp>::monomial({0, 0, 2}, Fp(1, 7)));
    CHECK(r7.radical_is_a);

    // p = 13 (1 mod 12): f_p = A
    LocusReport r13 = locus_polynomial(13);
    CHECK(r13.f_p == compute_ab(13).a_mod);
    CHECK(r13.radical_is_a);

    // p = 11 (11 mod 12): f_p = e4^2 e6 A
    LocusReport r11 = locus_polynomial(11);
    GradedPoly<Fp> want = GradedPoly<Fp>::monomial({0, 2, 1}, Fp(1, 11)) *
                          compute_ab(11).a_mod;
    CHECK(r11.f_p == want);
    CHECK(r11.radical_is_a);
}

TEST_CASE("supersingular point crosscheck") {
    // p = 5, (b, c) = (0, 1): A vanishes and the curve is supersingular
    const ABPair& ab = compute_ab(5);
    Fp2Field field(5);
    CHECK(ab.a_mod.evaluate(field.zero(), field.zero(), field.one()).is_zero());
    ShortWeierstrassCurve<Fp2> e =
        curve_from_point<Fp2>({field.zero(), field.zero(), field.one()});
    CHECK(hasse_invariant(e.A, e.B).is_zero());

    // (b, c) = (1, 0): A(1, 0) = 1 and j = 1728 is ordinary at p = 5
    CHECK(!ab.a_mod.evaluate(field.zero(), field.one(), field.zero()).is_zero());
    ShortWeierstrassCurve<Fp2> e2 =
        curve_from_point<Fp2>({field.zero(), field.one(), field.zero()});
    CHECK(!hasse_invariant(e2.A, e2.B).is_zero());

    for (std::uint64_t p : {5, 7}) {
        PointCrosscheckReport r = supersingular_point_crosscheck(p);
        CHECK(r.ran);
        CHECK(r.mismatches == 0);
    }
    CHECK(!supersingular_point_crosscheck(17).ran);
}

TEST_CASE("transversality") {
    for (std::uint64_t p : {5, 7, 11}) {
        TransversalityReport r = transversality_scan(p);
        CHECK(r.symbolic_coprime);
        CHECK(r.scan_ran);
        CHECK(r.locus_points > 0);
        CHECK(r.b_vanishings == 0);
    }
    TransversalityReport big = transversality_scan(37);
    CHECK(big.symbolic_coprime);
    CHECK(!big.scan_ran);
}

TEST_CASE("locus vector field checks") {
    for (std::uint64_t p : {5, 7, 11, 13, 17}) {
        LocusFieldReport r = locus_field_check(p);
        CHECK(r.images_divisible_by_a);
        CHECK(r.e2_image_formula);
        CHECK(r.combination_identity);
    }
}

TEST_CASE("component counts up to 199") {
    for (std::uint64_t p = 5; p <= 199; ++p) {
        if (!is_prime(p)) continue;
        ComponentCountReport r = component_count_check(p);
        CHECK(r.passed());
    }
    // n_5 = 1, n_11 = 2, n_13 = 1
    CHECK(component_count_check(5).ss_degree == 1);
    CHECK(component_count_check(11).ss_degree == 2);
    CHECK(component_count_check(13).ss_degree == 1);
}

TEST_CASE("locus radical certificate up to 199") {
    for (std::uint64_t p = 5; p <= 199; ++p) {
        if (!is_prime(p)) continue;
        CHECK(locus_polynomial(p).radical_is_a);
    }
}

TEST_CASE("unipoly basics") {
    Fp one(1, 7);
    UniPoly<Fp> t(std::vector<Fp>{Fp(0, 7), one});
    UniPoly<Fp> f = t * t + t.scaled(Fp(3, 7)) + UniPoly<Fp>::constant(Fp(2, 7));
    CHECK(f.degree() == 2);
    CHECK(f.eval(Fp(1, 7)) == Fp(6, 7));
    auto [q, r] = f.divrem(t + UniPoly<Fp>::constant(one));
    CHECK(r.is_zero());  // f = (t+1)(t+2)
    CHECK(q == t + UniPoly<Fp>::constant(Fp(2, 7)));

    CHECK(is_squarefree(f));
    CHECK(!is_squarefree(f * f));
    CHECK(poly_gcd(f * f, f.derivative() * f).degree() >= 1);
    CHECK(to_string(f) == "t^2 + 3t + 2");
}
