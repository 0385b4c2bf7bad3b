#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rvf/derivation.hpp"
#include "rvf/graded_poly.hpp"

using namespace rvf;

namespace {

template <typename C, typename Coeff>
GradedPoly<C> random_poly(std::mt19937_64& rng, int max_terms, Coeff make_coeff) {
    GradedPoly<C> poly;
    int n = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < n; ++t) {
        Exponents e{static_cast<std::uint32_t>(rng() % 4),
                    static_cast<std::uint32_t>(rng() % 4),
                    static_cast<std::uint32_t>(rng() % 4)};
        poly.add_term(e, make_coeff());
    }
    return poly;
}

GradedPoly<Rational> random_qpoly(std::mt19937_64& rng, int max_terms = 5) {
    return random_poly<Rational>(rng, max_terms, [&]() {
        return Rational(static_cast<long long>(rng() % 21) - 10);
    });
}

GradedPoly<Fp> random_fppoly(std::mt19937_64& rng, std::uint64_t p, int max_terms = 5) {
    return random_poly<Fp>(rng, max_terms, [&]() { return Fp(rng() % p, p); });
}

} // namespace

TEST_CASE("monomial arithmetic and zero handling") {
    GradedPoly<Rational> e2 = e2_poly(Rational(1));
    GradedPoly<Rational> e4 = e4_poly(Rational(1));
    GradedPoly<Rational> prod = e2 * e4;
    CHECK(prod.term_count() == 1);
    CHECK(prod.coeff({1, 1, 0}) == Rational(1));

    CHECK((prod - prod).is_zero());
    CHECK((e2 + (-e2)).is_zero());
    GradedPoly<Rational> s = e2 + e4;
    CHECK(s.term_count() == 2);
    CHECK(s.weighted_degree() == 4);
    CHECK(!s.is_homogeneous());
    CHECK(e2.is_homogeneous());
    CHECK(*e2.homogeneous_degree() == 2);
}

TEST_CASE("weighted grading") {
    Exponents e{1, 2, 3};
    CHECK(e.weight() == 2 + 8 + 18);
    GradedPoly<Rational> m = GradedPoly<Rational>::monomial(e, Rational(5));
    CHECK(m.weighted_degree() == 28);
    CHECK(GradedPoly<Rational>().weighted_degree() == -1);
}

TEST_CASE("exact division") {
    GradedPoly<Rational> disc;
    disc.add_term({0, 3, 0}, Rational(1));
    disc.add_term({0, 0, 2}, Rational(-1));

    CHECK(exact_div(disc, disc) == GradedPoly<Rational>::constant(Rational(1)));

    // over F_5: (e4 e6 + 4 e4^2)/e4 = e6 + 4 e4
    GradedPoly<Fp> num;
    num.add_term({0, 1, 1}, Fp(1, 5));
    num.add_term({0, 2, 0}, Fp(4, 5));
    GradedPoly<Fp> e4 = e4_poly(Fp(1, 5));
    GradedPoly<Fp> q = exact_div(num, e4);
    CHECK(q.coeff({0, 0, 1}) == Fp(1, 5));
    CHECK(q.coeff({0, 1, 0}) == Fp(4, 5));

    GradedPoly<Rational> e2 = e2_poly(Rational(1));
    CHECK_THROWS_AS(exact_div(e2, disc), InexactDivision);
    CHECK_THROWS_AS(exact_div(disc, GradedPoly<Rational>()), InexactDivision);
}

TEST_CASE("exact division round-trips on random products") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        GradedPoly<Rational> a = random_qpoly(rng);
        GradedPoly<Rational> b = random_qpoly(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
    for (int trial = 0; trial < 30; ++trial) {
        GradedPoly<Fp> a = random_fppoly(rng, 7);
        GradedPoly<Fp> b = random_fppoly(rng, 7);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("named fields have the stated images") {
    RationalDomain dom;
    FieldSet<RationalDomain> f = make_fields(dom);

    // R(e2) = (e2^2 - e4)/12
    CHECK(f.ramanujan.img2.coeff({2, 0, 0}) == Rational(1, 12));
    CHECK(f.ramanujan.img2.coeff({0, 1, 0}) == Rational(-1, 12));
    // F(e2) = -12, F(e4) = F(e6) = 0
    CHECK(f.lowering.img2 == GradedPoly<Rational>::constant(Rational(-12)));
    CHECK(f.lowering.img4.is_zero());
    // H scales by weight
    CHECK(f.euler.img6.coeff({0, 0, 1}) == Rational(6));
    // Serre derivative images
    CHECK(f.ramanujan_serre.img4.coeff({0, 0, 1}) == Rational(-4));
    CHECK(f.ramanujan_serre.img6.coeff({0, 2, 0}) == Rational(-6));
    CHECK(f.ramanujan_serre.img2.is_zero());
}

TEST_CASE("derivation application") {
    RationalDomain dom;
    FieldSet<RationalDomain> f = make_fields(dom);
    GradedPoly<Rational> e4cubed = GradedPoly<Rational>::monomial({0, 3, 0}, Rational(1));

    // H(e4^3) = 12 e4^3 (Euler field scales by weight)
    CHECK(apply(f.euler, e4cubed) == e4cubed.times_int(12));

    // d(e4) = -4 e6
    CHECK(apply(f.ramanujan_serre, e4_poly(Rational(1))) ==
          e6_poly(Rational(-4)));

    // 12 R(e4) - e2 H(e4) = -4 e6
    GradedPoly<Rational> e2 = e2_poly(Rational(1));
    CHECK(apply(f.ramanujan, e4_poly(Rational(1))).times_int(12) -
              e2 * apply(f.euler, e4_poly(Rational(1))) ==
          e6_poly(Rational(-4)));
}

TEST_CASE("derivations satisfy the Leibniz rule on random products") {
    RationalDomain dom;
    FieldSet<RationalDomain> f = make_fields(dom);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        GradedPoly<Rational> a = random_qpoly(rng);
        GradedPoly<Rational> b = random_qpoly(rng);
        for (const auto* d : {&f.ramanujan, &f.euler, &f.ramanujan_serre}) {
            CHECK(apply(*d, a * b) == apply(*d, a) * b + a * apply(*d, b));
        }
    }
}

TEST_CASE("bracket relations of the sl2 triple") {
    auto check_domain = [](auto dom) {
        auto f = make_fields(dom);
        CHECK(bracket(f.ramanujan, f.lowering) == f.euler);
        // [H, F] = -2F
        auto hf = bracket(f.euler, f.lowering);
        CHECK(hf.img2 == f.lowering.img2.times_int(-2));
        CHECK(hf.img4.is_zero());
        // [H, R] = 2R
        auto hr = bracket(f.euler, f.ramanujan);
        CHECK(hr.img2 == f.ramanujan.img2.times_int(2));
        CHECK(hr.img4 == f.ramanujan.img4.times_int(2));
        CHECK(hr.img6 == f.ramanujan.img6.times_int(2));
        // [D, D] = 0
        CHECK(bracket(f.ramanujan, f.ramanujan).is_zero());
    };
    check_domain(RationalDomain{});
    for (std::uint64_t p : {5, 7, 11, 13}) check_domain(PrimeDomain(p));
}

TEST_CASE("jacobi identity for (R, F, H)") {
    RationalDomain dom;
    FieldSet<RationalDomain> f = make_fields(dom);
    auto jac = bracket(f.ramanujan, bracket(f.lowering, f.euler)) +
               bracket(f.lowering, bracket(f.euler, f.ramanujan)) +
               bracket(f.euler, bracket(f.ramanujan, f.lowering));
    CHECK(jac.is_zero());
}

TEST_CASE("degree bookkeeping for the named fields") {
    PrimeDomain dom(7);
    FieldSet<PrimeDomain> f = make_fields(dom);
    CHECK(*f.ramanujan.homogeneous_degree() == 2);
    CHECK(*f.lowering.homogeneous_degree() == -2);
    CHECK(*f.euler.homogeneous_degree() == 0);
    CHECK(*f.ramanujan_serre.homogeneous_degree() == 2);

    // applying a degree-d field to a homogeneous polynomial adds d
    // (weight 12: nonzero mod 7, so the Euler image survives)
    GradedPoly<Fp> h = GradedPoly<Fp>::monomial({1, 1, 1}, Fp(3, 7));
    CHECK(*apply(f.ramanujan, h).homogeneous_degree() == 14);
    CHECK(*apply(f.lowering, h).homogeneous_degree() == 10);
    CHECK(*apply(f.euler, h).homogeneous_degree() == 12);
}

TEST_CASE("derivation powers") {
    PrimeDomain dom(5);
    FieldSet<PrimeDomain> f = make_fields(dom);

    DerivationPower<Fp> once = derivation_power(f.ramanujan, 1);
    CHECK(once.images == f.ramanujan);
    CHECK(once.leibniz_certified);

    DerivationPower<Fp> fifth = derivation_power(f.ramanujan, 5);
    CHECK(fifth.leibniz_certified);
    CHECK(fifth.images.img4.is_zero());
    // R^5(e2) = 3 e6^2 + 2 e4^3 over F_5
    CHECK(fifth.images.img2.coeff({0, 0, 2}) == Fp(3, 5));
    CHECK(fifth.images.img2.coeff({0, 3, 0}) == Fp(2, 5));

    // intermediate powers are generally not derivations
    DerivationPower<Fp> square = derivation_power(f.ramanujan, 2);
    CHECK(!square.leibniz_certified);

    CHECK_THROWS_AS(derivation_power(f.ramanujan, 0), InvalidArgument);
}

TEST_CASE("basis decomposition on basis elements and multiples") {
    PrimeDomain dom(7);
    FieldSet<PrimeDomain> f = make_fields(dom);

    BasisDecomposition<Fp> h = basis_decompose(f.euler, dom);
    CHECK(h.certified);
    CHECK(h.r1.is_zero());
    CHECK(h.r2.is_zero());
    CHECK(h.r3 == GradedPoly<Fp>::constant(Fp(1, 7)));

    GradedPoly<Fp> e4 = e4_poly(Fp(1, 7));
    BasisDecomposition<Fp> m = basis_decompose(f.ramanujan.scaled_by(e4), dom);
    CHECK(m.r1 == e4);
    CHECK(m.r2.is_zero());
    CHECK(m.r3.is_zero());
}

TEST_CASE("basis decomposition round-trips random combinations") {
    std::mt19937_64 rng(9);
    {
        RationalDomain dom;
        FieldSet<RationalDomain> f = make_fields(dom);
        for (int trial = 0; trial < 5; ++trial) {
            GradedPoly<Rational> a = random_qpoly(rng, 3);
            GradedPoly<Rational> b = random_qpoly(rng, 3);
            GradedPoly<Rational> c = random_qpoly(rng, 3);
            Derivation<Rational> x = f.ramanujan.scaled_by(a) +
                                     f.lowering.scaled_by(b) + f.euler.scaled_by(c);
            if (x.is_zero()) continue;
            BasisDecomposition<Rational> d = basis_decompose(x, dom);
            CHECK(d.certified);
            CHECK(d.r1 == a);
            CHECK(d.r2 == b);
            CHECK(d.r3 == c);
        }
    }
    for (std::uint64_t p : {5, 13}) {
        PrimeDomain dom(p);
        FieldSet<PrimeDomain> f = make_fields(dom);
        for (int trial = 0; trial < 10; ++trial) {
            GradedPoly<Fp> a = random_fppoly(rng, p, 3);
            GradedPoly<Fp> b = random_fppoly(rng, p, 3);
            GradedPoly<Fp> c = random_fppoly(rng, p, 3);
            Derivation<Fp> x = f.ramanujan.scaled_by(a) + f.lowering.scaled_by(b) +
                               f.euler.scaled_by(c);
            if (x.is_zero()) continue;
            BasisDecomposition<Fp> d = basis_decompose(x, dom);
            CHECK(d.certified);
            CHECK(d.r1 == a);
            CHECK(d.r2 == b);
            CHECK(d.r3 == c);
        }
    }
}

TEST_CASE("basis decomposition rejects fields outside the polynomial span") {
    PrimeDomain dom(5);
    // d/de4 alone: its R-coefficient is 3 e6/(e4^3 - e6^2), not polynomial.
    Derivation<Fp> x;
    x.img4 = GradedPoly<Fp>::constant(Fp(1, 5));
    CHECK_THROWS_AS(basis_decompose(x, dom), NotPolynomial);

    // d/de2 = -F/12 is inside the span
    Derivation<Fp> y;
    y.img2 = GradedPoly<Fp>::constant(Fp(1, 5));
    BasisDecomposition<Fp> d = basis_decompose(y, dom);
    CHECK(d.certified);
    CHECK(d.r2 == GradedPoly<Fp>::constant(Fp::from_int(12, 5).inv() * Fp::from_int(-1, 5)));
}

TEST_CASE("polynomial printing is canonical") {
    GradedPoly<Fp> b;
    b.add_term({0, 3, 0}, Fp(5, 11));
    b.add_term({0, 0, 2}, Fp(7, 11));
    CHECK(to_string(b) == "5*e4^3 + 7*e6^2");

    GradedPoly<Rational> mixed;
    mixed.add_term({1, 1, 0}, Rational(-1));
    mixed.add_term({0, 0, 1}, Rational(1, 3));
    CHECK(to_string(mixed) == "-e2*e4 + 1/3*e6");
    CHECK(to_string(GradedPoly<Rational>()) == "0");
}

TEST_CASE("point evaluation agrees with expansion") {
    std::mt19937_64 rng(21);
    Fp2Field field(5);
    for (int trial = 0; trial < 10; ++trial) {
        GradedPoly<Fp> poly = random_fppoly(rng, 5);
        Fp x2(rng() % 5, 5), x4(rng() % 5, 5), x6(rng() % 5, 5);
        Fp direct = poly.evaluate(x2, x4, x6);
        Fp acc(0, 5);
        for (const auto& [e, c] : poly.terms()) {
            Fp term = c;
            for (std::uint32_t t = 0; t < e.i; ++t) term *= x2;
            for (std::uint32_t t = 0; t < e.j; ++t) term *= x4;
            for (std::uint32_t t = 0; t < e.k; ++t) term *= x6;
            acc += term;
        }
        CHECK(direct == acc);

        // F_{p^2} evaluation restricted to base-field points matches
        Fp2 v = poly.evaluate(field.from_base(x2), field.from_base(x4),
                              field.from_base(x6));
        CHECK(v.in_base_field());
        CHECK(v.a == direct.v);
    }
}
