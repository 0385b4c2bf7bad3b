#include "rvf/modforms.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "rvf/derivation.hpp"

namespace rvf {

WeightBasis weight_basis(long nu) {
    if (nu < 4 || nu % 2 != 0)
        throw InvalidArgument("weight_basis: weight must be even and >= 4");
    WeightBasis basis;
    basis.weight = nu;
    for (long a = nu / 4; a >= 0; --a) {
        long rest = nu - 4 * a;
        if (rest % 6 == 0) basis.exponents.emplace_back(a, rest / 6);
    }
    return basis;
}

namespace {

// Exact Gaussian elimination; a is n x (n+1) augmented. Throws on a
// singular matrix (cannot happen for monomial expansions, which are
// linearly independent).
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw Error("singular linear system");
        std::swap(a[col], a[pivot]);
        Rational inv = a[col][col].inverse();
        for (std::size_t j = col; j <= n; ++j) a[col][j] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational f = a[row][col];
            for (std::size_t j = col; j <= n; ++j) a[row][j] -= f * a[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t row = 0; row < n; ++row) x[row] = a[row][n];
    return x;
}

} // namespace

GradedPoly<Rational> series_to_poly(const QSeries<Rational>& f, long nu) {
    WeightBasis basis = weight_basis(nu);
    std::size_t n = basis.size();
    if (f.precision() < n + 5)
        throw InsufficientPrecision("series_to_poly: need at least " +
                                    std::to_string(n + 5) + " coefficients, have " +
                                    std::to_string(f.precision()));
    std::size_t terms = f.precision();

    std::vector<QSeries<Rational>> columns;
    columns.reserve(n);
    for (auto [a, b] : basis.exponents) {
        GradedPoly<Rational> mono =
            GradedPoly<Rational>::monomial({0, a, b}, Rational(1));
        columns.push_back(phi_eval(mono, terms));
    }

    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) aug[row][col] = columns[col][row];
        aug[row][n] = f[row];
    }
    std::vector<Rational> x = solve_exact(std::move(aug));

    // Over-determined consistency check on every remaining coefficient.
    for (std::size_t row = n; row < terms; ++row) {
        Rational acc;
        for (std::size_t col = 0; col < n; ++col) acc += x[col] * columns[col][row];
        if (acc != f[row]) {
            std::ostringstream os;
            os << "series is not a weight-" << nu
               << " polynomial in E4, E6: mismatch at q^" << row;
            throw NotModularOfWeight(os.str());
        }
    }

    GradedPoly<Rational> poly;
    for (std::size_t col = 0; col < n; ++col)
        poly.add_term({0, basis.exponents[col].first, basis.exponents[col].second},
                      x[col]);
    return poly;
}

GradedPoly<Fp> reduce_poly_mod_p(const GradedPoly<Rational>& poly, std::uint64_t p) {
    GradedPoly<Fp> out;
    for (const auto& [e, c] : poly.terms()) {
        try {
            out.add_term(e, reduce_mod_p(c, p));
        } catch (const NonIntegralCoefficient&) {
            std::ostringstream os;
            os << "coefficient " << c.str() << " of e2^" << e.i << " e4^" << e.j
               << " e6^" << e.k << " is not p-integral at p = " << p;
            throw NonIntegralCoefficient(os.str());
        }
    }
    return out;
}

const ABPair& compute_ab(std::uint64_t p) {
    static std::map<std::uint64_t, ABPair> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;

    require_prime_ge5(p);
    ABPair pair;
    pair.p = p;
    long wa = static_cast<long>(p) - 1;
    long wb = static_cast<long>(p) + 1;
    pair.a = series_to_poly(eisenstein(wa, reconstruction_terms(wa)), wa);
    pair.b = series_to_poly(eisenstein(wb, reconstruction_terms(wb)), wb);
    // p-integrality is a theorem; reduction throws if it ever failed.
    pair.a_mod = reduce_poly_mod_p(pair.a, p);
    pair.b_mod = reduce_poly_mod_p(pair.b, p);

    auto degree_is = [](const GradedPoly<Fp>& poly, long d) {
        auto h = poly.homogeneous_degree();
        return h && *h == d;
    };
    if (!degree_is(pair.a_mod, wa) || !degree_is(pair.b_mod, wb))
        throw Error("A or B has the wrong homogeneous degree");
    if (phi_eval(pair.a, 1)[0] != Rational(1) || phi_eval(pair.b, 1)[0] != Rational(1))
        throw Error("A or B lost its constant-term normalization");

    return cache.emplace(p, std::move(pair)).first->second;
}

CongruenceReport verify_congruences(std::uint64_t p, std::size_t terms) {
    require_prime_ge5(p);
    if (terms < 1) throw InvalidArgument("verify_congruences: need terms >= 1");
    CongruenceReport rep;
    rep.p = p;
    rep.precision = terms;

    QSeries<Fp> e_pm1 = reduce_series_mod_p(eisenstein(p - 1, terms), p);
    QSeries<Fp> one = QSeries<Fp>::one(terms, Fp(1, p));
    SeriesMatch m1 = match_to_precision(e_pm1, one);
    rep.e_pm1_is_one = m1.equal;

    QSeries<Fp> e_pp1 = reduce_series_mod_p(eisenstein(p + 1, terms), p);
    QSeries<Fp> e2 = reduce_series_mod_p(eisenstein(2, terms), p);
    SeriesMatch m2 = match_to_precision(e_pp1, e2);
    rep.e_pp1_is_e2 = m2.equal;

    if (!m1.equal) {
        rep.failure = "E_{p-1} != 1 at q^" + std::to_string(*m1.first_mismatch);
    } else if (!m2.equal) {
        rep.failure = "E_{p+1} != E_2 at q^" + std::to_string(*m2.first_mismatch);
    }
    return rep;
}

DiffRelationReport verify_diff_relations(std::uint64_t p) {
    const ABPair& ab = compute_ab(p);
    PrimeDomain dom(p);
    FieldSet<PrimeDomain> f = make_fields(dom);
    DiffRelationReport rep;
    rep.p = p;
    rep.d_a_is_b = apply(f.ramanujan_serre, ab.a_mod) == ab.b_mod;
    GradedPoly<Fp> e4 = e4_poly(Fp(1, p));
    rep.d_b_is_neg_e4a = apply(f.ramanujan_serre, ab.b_mod) == -(e4 * ab.a_mod);
    return rep;
}

} // namespace rvf
