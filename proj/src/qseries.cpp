#include "rvf/qseries.hpp"

#include <sstream>

namespace rvf {

QSeries<Rational> eisenstein(unsigned nu, std::size_t terms) {
    if (nu < 2 || nu % 2 != 0)
        throw InvalidArgument("eisenstein: weight must be even and >= 2");
    if (terms < 1) throw InvalidArgument("eisenstein: need at least one term");
    // 1 - (2 nu / B_nu) sum_{n>=1} sigma_{nu-1}(n) q^n
    Rational factor = Rational(2LL * nu) / bernoulli(nu);
    std::vector<Rational> c(terms);
    c[0] = Rational(1);
    for (std::size_t n = 1; n < terms; ++n)
        c[n] = -factor * Rational(divisor_sigma(nu - 1, static_cast<unsigned long>(n)));
    return QSeries<Rational>(std::move(c));
}

QSeries<Fp> reduce_series_mod_p(const QSeries<Rational>& f, std::uint64_t p) {
    std::vector<Fp> out(f.precision());
    for (std::size_t n = 0; n < f.precision(); ++n) out[n] = reduce_mod_p(f[n], p);
    return QSeries<Fp>(std::move(out));
}

namespace {

template <typename C>
QSeries<C> phi_eval_generic(const GradedPoly<C>& poly, const QSeries<C>& e2,
                            const QSeries<C>& e4, const QSeries<C>& e6,
                            std::size_t terms, const C& unit) {
    std::uint32_t mi = 0, mj = 0, mk = 0;
    for (const auto& [e, c] : poly.terms()) {
        mi = std::max(mi, e.i);
        mj = std::max(mj, e.j);
        mk = std::max(mk, e.k);
    }
    auto table = [&](const QSeries<C>& base, std::uint32_t mx) {
        std::vector<QSeries<C>> t;
        t.reserve(mx + 1);
        t.push_back(QSeries<C>::one(terms, unit));
        for (std::uint32_t a = 1; a <= mx; ++a) t.push_back(t.back() * base);
        return t;
    };
    auto p2 = table(e2, mi), p4 = table(e4, mj), p6 = table(e6, mk);
    QSeries<C> acc = QSeries<C>::zero(terms);
    for (const auto& [e, c] : poly.terms())
        acc = acc + (p2[e.i] * p4[e.j] * p6[e.k]).scaled(c);
    return acc;
}

} // namespace

QSeries<Rational> phi_eval(const GradedPoly<Rational>& poly, std::size_t terms) {
    if (terms < 1) throw InvalidArgument("phi_eval: need at least one term");
    return phi_eval_generic(poly, eisenstein(2, terms), eisenstein(4, terms),
                            eisenstein(6, terms), terms, Rational(1));
}

QSeries<Fp> phi_eval_mod_p(const GradedPoly<Rational>& poly, std::uint64_t p,
                           std::size_t terms) {
    return reduce_series_mod_p(phi_eval(poly, terms), p);
}

QSeries<Fp> phi_eval(const GradedPoly<Fp>& poly, std::uint64_t p, std::size_t terms) {
    if (terms < 1) throw InvalidArgument("phi_eval: need at least one term");
    return phi_eval_generic(poly, reduce_series_mod_p(eisenstein(2, terms), p),
                            reduce_series_mod_p(eisenstein(4, terms), p),
                            reduce_series_mod_p(eisenstein(6, terms), p), terms,
                            Fp(1, p));
}

QSeries<Rational> rs_derivative(const QSeries<Rational>& f, long nu) {
    QSeries<Rational> e2 = eisenstein(2, f.precision());
    return theta(f).times_int(12) - (e2 * f).times_int(nu);
}

RamanujanSystemReport verify_ramanujan_system(std::size_t terms) {
    if (terms < 1) throw InvalidArgument("verify_ramanujan_system: need terms >= 1");
    RamanujanSystemReport rep;
    rep.precision = terms;
    QSeries<Rational> e2 = eisenstein(2, terms);
    QSeries<Rational> e4 = eisenstein(4, terms);
    QSeries<Rational> e6 = eisenstein(6, terms);
    const Rational twelfth(1, 12), third(1, 3), half(1, 2);
    struct Eq {
        const char* name;
        QSeries<Rational> lhs, rhs;
    };
    Eq eqs[] = {
        {"theta E2 = (E2^2 - E4)/12", theta(e2), (e2 * e2 - e4).scaled(twelfth)},
        {"theta E4 = (E2 E4 - E6)/3", theta(e4), (e2 * e4 - e6).scaled(third)},
        {"theta E6 = (E2 E6 - E4^2)/2", theta(e6), (e2 * e6 - e4 * e4).scaled(half)},
    };
    for (const Eq& eq : eqs) {
        SeriesMatch m = match_to_precision(eq.lhs, eq.rhs);
        if (!m.equal) {
            std::ostringstream os;
            os << eq.name << " fails at q^" << *m.first_mismatch;
            rep.failure = os.str();
            rep.passed = false;
            return rep;
        }
    }
    rep.passed = true;
    return rep;
}

} // namespace rvf
