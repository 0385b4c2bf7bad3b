#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rvf/graded_poly.hpp"
#include "rvf/qseries.hpp"

namespace rvf {

/// The monomials e4^a e6^b of weight nu (4a + 6b = nu), ordered by
/// descending a. Exhaustive by construction.
struct WeightBasis {
    long weight = 0;
    std::vector<std::pair<unsigned, unsigned>> exponents;

    std::size_t size() const { return exponents.size(); }
};

WeightBasis weight_basis(long nu);

/// Series precision used when reconstructing a weight-nu form: the number
/// of weight-nu monomials is at most nu/12 + 1, and the surplus terms give
/// an over-determined consistency check.
inline std::size_t reconstruction_terms(long nu) {
    return static_cast<std::size_t>(nu / 12) + 10;
}

/// Writes a weight-nu modular form, given by its q-expansion, as the unique
/// polynomial in e4, e6. Solves exactly over Q against the expansions of the
/// basis monomials and checks every remaining available coefficient.
/// Throws InsufficientPrecision when fewer than size(basis)+5 terms are
/// known, NotModularOfWeight when the over-determined check fails.
GradedPoly<Rational> series_to_poly(const QSeries<Rational>& f, long nu);

/// Coefficient-wise reduction of a polynomial over Q into F_p.
GradedPoly<Fp> reduce_poly_mod_p(const GradedPoly<Rational>& poly, std::uint64_t p);

/// A, B are the unique polynomials with A(E4,E6) = E_{p-1}, B(E4,E6) = E_{p+1},
/// both with p-integral coefficients and constant term 1 under phi; a_mod,
/// b_mod are their reductions.
struct ABPair {
    std::uint64_t p = 0;
    GradedPoly<Rational> a, b;
    GradedPoly<Fp> a_mod, b_mod;
};

/// Memoized per prime; thread-safe, deterministic.
const ABPair& compute_ab(std::uint64_t p);

struct CongruenceReport {
    std::uint64_t p = 0;
    std::size_t precision = 0;
    bool e_pm1_is_one = false;   // E_{p-1} = 1 mod p, coefficient-wise
    bool e_pp1_is_e2 = false;    // E_{p+1} = E2 mod p
    std::string failure;
    bool passed() const { return e_pm1_is_one && e_pp1_is_e2; }
};
CongruenceReport verify_congruences(std::uint64_t p, std::size_t terms);

struct DiffRelationReport {
    std::uint64_t p = 0;
    bool d_a_is_b = false;        // ∂ Ã = B̃
    bool d_b_is_neg_e4a = false;  // ∂ B̃ = -e4 Ã
    bool passed() const { return d_a_is_b && d_b_is_neg_e4a; }
};
DiffRelationReport verify_diff_relations(std::uint64_t p);

} // namespace rvf
