#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rvf/errors.hpp"
#include "rvf/fp.hpp"
#include "rvf/graded_poly.hpp"
#include "rvf/rational.hpp"

namespace rvf {

/// Truncated power series in q: coefficients a_0 .. a_{N-1} with explicit
/// precision N. Arithmetic never claims more precision than its operands;
/// equality is only meaningful up to stated precision (see match_to_precision).
template <typename C>
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {}

    static QSeries zero(std::size_t precision) {
        return QSeries(std::vector<C>(precision));
    }
    static QSeries one(std::size_t precision, const C& unit) {
        QSeries s = zero(precision);
        if (precision > 0) s.c_[0] = unit;
        return s;
    }

    std::size_t precision() const { return c_.size(); }
    const C& operator[](std::size_t n) const { return c_[n]; }
    C& at(std::size_t n) { return c_[n]; }
    const std::vector<C>& coeffs() const { return c_; }

    bool is_zero_to_precision() const {
        for (const C& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    QSeries truncate(std::size_t n) const {
        QSeries out = *this;
        if (out.c_.size() > n) out.c_.resize(n);
        return out;
    }

    QSeries operator+(const QSeries& o) const {
        std::size_t n = check_min(o);
        std::vector<C> out(n);
        for (std::size_t t = 0; t < n; ++t) out[t] = c_[t] + o.c_[t];
        return QSeries(std::move(out));
    }
    QSeries operator-(const QSeries& o) const {
        std::size_t n = check_min(o);
        std::vector<C> out(n);
        for (std::size_t t = 0; t < n; ++t) out[t] = c_[t] - o.c_[t];
        return QSeries(std::move(out));
    }
    QSeries operator*(const QSeries& o) const {
        std::size_t n = check_min(o);
        std::vector<C> out(n);
        for (std::size_t a = 0; a < n; ++a) {
            if (c_[a].is_zero()) continue;
            for (std::size_t b = 0; a + b < n; ++b) out[a + b] += c_[a] * o.c_[b];
        }
        return QSeries(std::move(out));
    }
    QSeries operator-() const {
        std::vector<C> out(c_.size());
        for (std::size_t t = 0; t < c_.size(); ++t) out[t] = -c_[t];
        return QSeries(std::move(out));
    }
    QSeries scaled(const C& s) const {
        std::vector<C> out(c_.size());
        for (std::size_t t = 0; t < c_.size(); ++t) out[t] = c_[t] * s;
        return QSeries(std::move(out));
    }
    QSeries times_int(long long k) const {
        std::vector<C> out(c_.size());
        for (std::size_t t = 0; t < c_.size(); ++t)
            out[t] = detail::coeff_times_int(c_[t], k);
        return QSeries(std::move(out));
    }

    QSeries pow(unsigned e) const {
        if (e == 0) return one(precision(), unit_like());
        QSeries out = *this;
        for (unsigned t = 1; t < e; ++t) out = out * *this;
        return out;
    }

private:
    C unit_like() const {
        for (const C& c : c_)
            if (!c.is_zero()) return c / c;
        throw InvalidArgument("cannot infer the coefficient field of a zero series");
    }

    std::size_t check_min(const QSeries& o) const {
        if (c_.empty() || o.c_.empty())
            throw PrecisionZero("series operand has no known coefficients");
        return std::min(c_.size(), o.c_.size());
    }

    std::vector<C> c_;
};

/// theta = q d/dq: multiplies the n-th coefficient by n.
template <typename C>
QSeries<C> theta(const QSeries<C>& f) {
    std::vector<C> out(f.precision());
    for (std::size_t n = 0; n < f.precision(); ++n)
        out[n] = detail::coeff_times_int(f[n], static_cast<long long>(n));
    return QSeries<C>(std::move(out));
}

/// Result of comparing two series on their common known range.
struct SeriesMatch {
    bool equal = false;
    std::size_t precision = 0;                    // terms actually compared
    std::optional<std::size_t> first_mismatch;    // set when equal == false
};

template <typename C>
SeriesMatch match_to_precision(const QSeries<C>& f, const QSeries<C>& g) {
    SeriesMatch r;
    r.precision = std::min(f.precision(), g.precision());
    r.equal = true;
    for (std::size_t n = 0; n < r.precision; ++n) {
        if (f[n] != g[n]) {
            r.equal = false;
            r.first_mismatch = n;
            break;
        }
    }
    return r;
}

/// Normalized Eisenstein series E_nu = 1 - (2 nu / B_nu) sum sigma_{nu-1}(n) q^n.
QSeries<Rational> eisenstein(unsigned nu, std::size_t terms);

/// Coefficient-wise reduction; throws NonIntegralCoefficient on a
/// denominator divisible by p.
QSeries<Fp> reduce_series_mod_p(const QSeries<Rational>& f, std::uint64_t p);

/// phi: substitutes E2, E4, E6 for e2, e4, e6 with exact arithmetic.
QSeries<Rational> phi_eval(const GradedPoly<Rational>& poly, std::size_t terms);

/// Mod-p variant: evaluates over Q, then reduces. Requires denominators
/// coprime to p.
QSeries<Fp> phi_eval_mod_p(const GradedPoly<Rational>& poly, std::uint64_t p,
                           std::size_t terms);

/// phi over F_p: evaluates directly on the reduced Eisenstein expansions.
QSeries<Fp> phi_eval(const GradedPoly<Fp>& poly, std::uint64_t p, std::size_t terms);

/// Ramanujan-Serre derivative of a weight-nu series: 12 theta(f) - nu E2 f.
QSeries<Rational> rs_derivative(const QSeries<Rational>& f, long nu);

/// Coefficient-wise check of the classical differential system
///   theta E2 = (E2^2 - E4)/12,
///   theta E4 = (E2 E4 - E6)/3,
///   theta E6 = (E2 E6 - E4^2)/2.
struct RamanujanSystemReport {
    bool passed = false;
    std::size_t precision = 0;
    std::string failure;  // names the equation and coefficient, empty on pass
};
RamanujanSystemReport verify_ramanujan_system(std::size_t terms);

} // namespace rvf
