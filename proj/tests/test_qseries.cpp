#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rvf/derivation.hpp"
#include "rvf/qseries.hpp"

using namespace rvf;

namespace {

QSeries<Rational> random_series(std::mt19937_64& rng, std::size_t terms) {
    std::vector<Rational> c(terms);
    for (auto& x : c)
        x = Rational(static_cast<long long>(rng() % 41) - 20,
                     1 + static_cast<long long>(rng() % 7));
    return QSeries<Rational>(std::move(c));
}

GradedPoly<Rational> random_poly(std::mt19937_64& rng, int max_terms) {
    GradedPoly<Rational> poly;
    int n = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < n; ++t) {
        Exponents e{static_cast<std::uint32_t>(rng() % 3),
                    static_cast<std::uint32_t>(rng() % 3),
                    static_cast<std::uint32_t>(rng() % 3)};
        poly.add_term(e, Rational(static_cast<long long>(rng() % 19) - 9));
    }
    return poly;
}

} // namespace

TEST_CASE("eisenstein expansions match the classical coefficients") {
    QSeries<Rational> e2 = eisenstein(2, 3);
    CHECK(e2[0] == Rational(1));
    CHECK(e2[1] == Rational(-24));
    CHECK(e2[2] == Rational(-72));  // -24 sigma_1(2)

    QSeries<Rational> e4 = eisenstein(4, 3);
    CHECK(e4[1] == Rational(240));
    CHECK(e4[2] == Rational(2160));  // 240 sigma_3(2)

    QSeries<Rational> e6 = eisenstein(6, 2);
    CHECK(e6[1] == Rational(-504));

    CHECK_THROWS_AS(eisenstein(3, 5), InvalidArgument);
    CHECK_THROWS_AS(eisenstein(4, 0), InvalidArgument);
}

TEST_CASE("theta operator") {
    QSeries<Rational> one = QSeries<Rational>::one(3, Rational(1));
    CHECK(theta(one).is_zero_to_precision());

    QSeries<Rational> q(std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(match_to_precision(theta(q), q).equal);

    QSeries<Rational> e4 = eisenstein(4, 3);
    QSeries<Rational> t = theta(e4);
    CHECK(t[0] == Rational(0));
    CHECK(t[1] == Rational(240));
    CHECK(t[2] == Rational(4320));
}

TEST_CASE("series arithmetic and precision bookkeeping") {
    QSeries<Rational> a(std::vector<Rational>{Rational(1), Rational(1), Rational(0)});
    QSeries<Rational> b(std::vector<Rational>{Rational(1), Rational(-1), Rational(0)});
    QSeries<Rational> prod = a * b;
    CHECK(prod.precision() == 3);
    CHECK(prod[0] == Rational(1));
    CHECK(prod[1] == Rational(0));
    CHECK(prod[2] == Rational(-1));

    // E2 * E4 to precision 2: 1 + 216 q
    QSeries<Rational> e2e4 = eisenstein(2, 2) * eisenstein(4, 2);
    CHECK(e2e4[1] == Rational(216));

    // f + 0 = f
    QSeries<Rational> z = QSeries<Rational>::zero(3);
    CHECK(match_to_precision(a + z, a).equal);

    // min-precision rule
    QSeries<Rational> shorter(std::vector<Rational>{Rational(2)});
    CHECK((a * shorter).precision() == 1);
    CHECK_THROWS_AS(a * QSeries<Rational>(), PrecisionZero);
}

TEST_CASE("equality reporting carries precision") {
    QSeries<Rational> a = eisenstein(4, 8);
    QSeries<Rational> b = eisenstein(4, 6);
    SeriesMatch m = match_to_precision(a, b);
    CHECK(m.equal);
    CHECK(m.precision == 6);
    auto c = b;
    c.at(5) += Rational(1);
    SeriesMatch mm = match_to_precision(a, c);
    CHECK(!mm.equal);
    CHECK(mm.first_mismatch == 5);
}

TEST_CASE("theta satisfies the Leibniz rule on random series") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        QSeries<Rational> f = random_series(rng, 20);
        QSeries<Rational> g = random_series(rng, 20);
        CHECK(match_to_precision(theta(f * g), theta(f) * g + f * theta(g)).equal);
    }
}

TEST_CASE("phi evaluation") {
    GradedPoly<Rational> e4 = e4_poly(Rational(1));
    QSeries<Rational> s = phi_eval(e4, 2);
    CHECK(s[0] == Rational(1));
    CHECK(s[1] == Rational(240));

    // e4^3 - e6^2 -> 1728 q + O(q^2)
    GradedPoly<Rational> disc;
    disc.add_term({0, 3, 0}, Rational(1));
    disc.add_term({0, 0, 2}, Rational(-1));
    QSeries<Rational> d = phi_eval(disc, 2);
    CHECK(d[0] == Rational(0));
    CHECK(d[1] == Rational(1728));

    CHECK(phi_eval(GradedPoly<Rational>::constant(Rational(1)), 3)[0] == Rational(1));
}

TEST_CASE("phi is a ring homomorphism on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        GradedPoly<Rational> a = random_poly(rng, 4);
        GradedPoly<Rational> b = random_poly(rng, 4);
        QSeries<Rational> lhs = phi_eval(a * b, 12);
        QSeries<Rational> rhs = phi_eval(a, 12) * phi_eval(b, 12);
        CHECK(match_to_precision(lhs, rhs).equal);
    }
}

TEST_CASE("ramanujan-serre derivative on weight-4 and weight-6 forms") {
    // d(E4) = -4 E6, d(E6) = -6 E4^2
    QSeries<Rational> d4 = rs_derivative(eisenstein(4, 8), 4);
    QSeries<Rational> want4 = eisenstein(6, 8).times_int(-4);
    CHECK(match_to_precision(d4, want4).equal);

    QSeries<Rational> d6 = rs_derivative(eisenstein(6, 8), 6);
    QSeries<Rational> e4 = eisenstein(4, 8);
    QSeries<Rational> want6 = (e4 * e4).times_int(-6);
    CHECK(match_to_precision(d6, want6).equal);

    QSeries<Rational> z = QSeries<Rational>::zero(5);
    CHECK(rs_derivative(z, 8).is_zero_to_precision());
}

TEST_CASE("ramanujan-serre derivative commutes with phi on homogeneous polynomials") {
    // For homogeneous P(e4, e6) of weight nu <= 24:
    //   rs_derivative(phi(P), nu) = phi(dP)
    RationalDomain dom;
    FieldSet<RationalDomain> fields = make_fields(dom);
    std::mt19937_64 rng(13);
    for (long nu = 4; nu <= 24; nu += 2) {
        GradedPoly<Rational> poly;
        for (std::uint32_t a = 0; 4L * a <= nu; ++a) {
            long rest = nu - 4L * a;
            if (rest % 6) continue;
            poly.add_term({0, a, static_cast<std::uint32_t>(rest / 6)},
                          Rational(static_cast<long long>(rng() % 9) - 4));
        }
        if (poly.is_zero()) continue;
        QSeries<Rational> lhs = rs_derivative(phi_eval(poly, 10), nu);
        QSeries<Rational> rhs = phi_eval(apply(fields.ramanujan_serre, poly), 10);
        CHECK(match_to_precision(lhs, rhs).equal);
    }
}

TEST_CASE("theta^p = theta on F_p coefficient series") {
    std::mt19937_64 rng(17);
    for (std::uint64_t p : {5, 7}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Fp> c(15);
            for (auto& x : c) x = Fp(rng() % p, p);
            QSeries<Fp> f(std::move(c));
            QSeries<Fp> iter = f;
            for (std::uint64_t t = 0; t < p; ++t) iter = theta(iter);
            CHECK(match_to_precision(iter, theta(f)).equal);
        }
    }
}

TEST_CASE("the ramanujan differential system holds") {
    RamanujanSystemReport r1 = verify_ramanujan_system(1);
    CHECK(r1.passed);
    RamanujanSystemReport r2 = verify_ramanujan_system(2);
    CHECK(r2.passed);
    RamanujanSystemReport r30 = verify_ramanujan_system(30);
    CHECK(r30.passed);
    CHECK(r30.failure.empty());
}

TEST_CASE("series reduction mod p") {
    QSeries<Fp> e4mod5 = reduce_series_mod_p(eisenstein(4, 10), 5);
    for (std::size_t n = 1; n < 10; ++n) CHECK(e4mod5[n] == Fp(0, 5));  // 240 = 0 mod 5
    CHECK(e4mod5[0] == Fp(1, 5));
}

TEST_CASE("mod-p phi evaluation rejects non-p-integral input") {
    GradedPoly<Rational> bad = GradedPoly<Rational>::constant(Rational(1, 5));
    CHECK_THROWS_AS(phi_eval_mod_p(bad, 5, 4), NonIntegralCoefficient);
    // fine at a different prime
    CHECK(phi_eval_mod_p(bad, 7, 4)[0] == reduce_mod_p(Rational(1, 5), 7));
}
