#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rvf/fp2.hpp"
#include "rvf/graded_poly.hpp"
#include "rvf/modforms.hpp"
#include "rvf/unipoly.hpp"

namespace rvf {

/// Shape of a nonzero homogeneous P(e4, e6) over F_p:
///   P = leading * e4^delta * e6^epsilon * prod_i (e4^3 - alpha_i e6^2)
/// with the alpha_i in F_{p^2}. The exponents delta, epsilon are the exact
/// e4/e6 multiplicities; m counts cubic-quadratic factors, so
/// deg P = 12 m + 4 delta + 6 epsilon.
struct FactorizationData {
    std::uint64_t p = 0;
    unsigned delta = 0, epsilon = 0, m = 0;
    /// Dehomogenized cofactor: P / (e4^delta e6^epsilon) = sum c_k e4^{3k}
    /// e6^{2(m-k)} recorded as sum c_k u^k.
    UniPoly<Fp> shadow;
    /// Roots of the shadow found in F_{p^2}, with multiplicities. For the
    /// polynomial A these are all of them; in general factors of higher
    /// degree may remain.
    std::vector<std::pair<Fp2, unsigned>> roots;
    Fp leading;                     // alpha_0, in F_p
    bool splits = false;            // every root lies in F_{p^2}
    bool degree_identity = false;   // deg P = 12m + 4 delta + 6 epsilon

    bool all_roots_simple() const {
        for (const auto& [r, mult] : roots)
            if (mult != 1) return false;
        return true;
    }
    bool frobenius_stable() const {
        for (const auto& [r, mult] : roots) {
            Fp2 conj = r.frobenius();
            bool found = false;
            for (const auto& [s, mult2] : roots)
                if (s == conj && mult2 == mult) found = true;
            if (!found) return false;
        }
        return true;
    }
};

/// Throws NotBivariate if P involves e2, NotHomogeneous if P is not
/// homogeneous (or zero). Roots are found by exhaustive search over F_{p^2}.
FactorizationData factor_exponents(const GradedPoly<Fp>& poly, std::uint64_t p);

/// Exponent quadruple (delta, epsilon, delta', epsilon') determined by
/// p mod 12; see the exponent table in the README.
struct ExponentQuadruple {
    unsigned delta, epsilon, delta_prime, epsilon_prime;
};
ExponentQuadruple expected_exponents(std::uint64_t p);

struct CoprimalityReport {
    std::uint64_t p = 0;
    bool a_squarefree = false;        // distinct alpha_i, delta/epsilon <= 1
    bool roots_disjoint = false;      // no alpha_i equals a beta_j
    bool supports_disjoint = false;   // e4/e6 multiplicities never shared
    bool exponents_match = false;     // all four exponents as tabulated
    bool passed() const {
        return a_squarefree && roots_disjoint && supports_disjoint && exponents_match;
    }
};
/// gcd(A, B) = 1 and squarefreeness of A, certified through the
/// factorization shapes of both polynomials.
CoprimalityReport coprimality_and_squarefree(std::uint64_t p);

/// Monic squarefree polynomial over F_p whose roots are exactly the
/// supersingular j-invariants (which live in F_{p^2}).
struct SupersingularPolynomial {
    std::uint64_t p = 0;
    UniPoly<Fp> poly;
    std::vector<Fp2> j_values;  // sorted (a, b) lexicographically
    std::size_t count() const { return j_values.size(); }
};

/// From the factorization of A: with cofactor sum_k c_k e4^{3k} e6^{2(m-k)},
/// forms f(t) = 1728^{-m} sum_k c_k t^k (t - 1728)^{m-k} and returns the
/// monic normalization of t^delta (t - 1728)^epsilon f(t).
SupersingularPolynomial ss_from_a(std::uint64_t p);

inline constexpr std::uint64_t kDeuringBound = 101;

/// Independent enumeration: for every j0 in F_{p^2}, builds a representative
/// curve and applies the Hasse-invariant criterion (coefficient of x^{p-1}
/// in (x^3+Ax+B)^{(p-1)/2} vanishes iff supersingular). The product of
/// (t - j0) over supersingular j0 is formed in F_{p^2}[t] and coerced into
/// F_p[t]; CoercionFailure would indicate a bug since the set is
/// Frobenius-stable. Throws BoundExceeded above the oracle bound.
SupersingularPolynomial ss_deuring(std::uint64_t p, std::uint64_t bound = kDeuringBound);

/// Coefficient of x^{p-1} in (x^3 + Ax + B)^{(p-1)/2}, the Hasse invariant
/// of y^2 = x^3 + Ax + B up to a nonzero constant.
Fp hasse_invariant(const Fp& a, const Fp& b);
Fp2 hasse_invariant(const Fp2& a, const Fp2& b);

/// Representative curve y^2 = x^3 + Ax + B with j-invariant j0:
/// (0, 1) for j0 = 0, (1, 0) for j0 = 1728, otherwise
/// A = 3 j0 (1728 - j0), B = 2 j0 (1728 - j0)^2.
std::pair<Fp2, Fp2> curve_for_j(const Fp2& j0);

/// j = 1728 b^3 / (b^3 - c^2); throws OnDiscriminant when b^3 = c^2.
Fp j_map(const Fp& b, const Fp& c);
Fp2 j_map(const Fp2& b, const Fp2& c);

/// Point (a, b, c) of the moduli space: values of (e2, e4, e6) with
/// b^3 - c^2 invertible.
template <typename K>
struct ModuliPoint {
    K a, b, c;
};

template <typename K>
struct ShortWeierstrassCurve {
    K A, B;  // y^2 = x^3 + Ax + B, discriminant 4A^3 + 27B^2 nonzero
};

/// The curve y^2 = 4(x + a/12)^3 - (b/12)(x + a/12) + c/216 in short form:
/// x -> x - a/12 and y -> 2y give A = -b/48, B = c/864. Throws
/// OnDiscriminant when b^3 = c^2.
template <typename K>
ShortWeierstrassCurve<K> curve_from_point(const ModuliPoint<K>& pt) {
    K b3 = pt.b * pt.b * pt.b;
    if (b3 == pt.c * pt.c) throw OnDiscriminant("point lies on e4^3 = e6^2");
    K inv48 = K::embed(48, pt.b).inv();
    K inv864 = K::embed(864, pt.b).inv();
    return {-(pt.b * inv48), pt.c * inv864};
}

template <typename K>
K j_invariant(const ShortWeierstrassCurve<K>& e) {
    K four = K::embed(4, e.A);
    K a3 = four * e.A * e.A * e.A;
    K disc = a3 + K::embed(27, e.A) * e.B * e.B;
    if (disc.is_zero()) throw OnDiscriminant("curve is singular");
    return K::embed(1728, e.A) * a3 * disc.inv();
}

/// f_p in the four-case locus table (A, e4^2 A, e6 A, e4^2 e6 A according
/// to p mod 12), with the certificate that stripping repeated e4/e6
/// factors recovers A up to a unit.
struct LocusReport {
    std::uint64_t p = 0;
    GradedPoly<Fp> f_p;
    bool radical_is_a = false;
    bool passed() const { return radical_is_a; }
};
LocusReport locus_polynomial(std::uint64_t p);

inline constexpr std::uint64_t kPointScanBound = 13;
inline constexpr std::uint64_t kJConsistencyBound = 7;

/// Exhaustive agreement over F_{p^2}^2 between A(b, c) = 0 and
/// supersingularity of the associated curve.
struct PointCrosscheckReport {
    std::uint64_t p = 0;
    bool ran = false;
    std::uint64_t points = 0;
    std::uint64_t mismatches = 0;
    bool passed() const { return !ran || mismatches == 0; }
};
PointCrosscheckReport supersingular_point_crosscheck(std::uint64_t p);

/// (a) symbolically, gcd(A, B) = 1; (b) for p within the scan bound, at
/// every F_{p^2}-point of {A = 0} off the discriminant, B does not vanish,
/// so R is transversal to the supersingular locus there.
struct TransversalityReport {
    std::uint64_t p = 0;
    bool symbolic_coprime = false;
    bool scan_ran = false;
    std::uint64_t locus_points = 0;
    std::uint64_t b_vanishings = 0;
    bool passed() const { return symbolic_coprime && (!scan_ran || b_vanishings == 0); }
};
TransversalityReport transversality_scan(std::uint64_t p);

/// The vector field X = R^p + (B/12)^2 F vanishes exactly on the
/// supersingular locus: every image is divisible by A, the image of e2 is
/// -e4 A^2 / 12, and 6 e6 X(e4) - 4 e4 X(e6) = 2 A^2 (e4^3 - e6^2), which
/// pins the radical of the image ideal to (A).
struct LocusFieldReport {
    std::uint64_t p = 0;
    bool images_divisible_by_a = false;
    bool e2_image_formula = false;
    bool combination_identity = false;
    bool passed() const {
        return images_divisible_by_a && e2_image_formula && combination_identity;
    }
};
LocusFieldReport locus_field_check(std::uint64_t p);

/// Component count: m + delta + epsilon equals deg ss_p.
struct ComponentCountReport {
    std::uint64_t p = 0;
    unsigned m = 0, delta = 0, epsilon = 0;
    long ss_degree = 0;
    bool passed() const { return ss_degree == static_cast<long>(m + delta + epsilon); }
};
ComponentCountReport component_count_check(std::uint64_t p);

/// Exhaustive check (small p) that the j-invariant of curve_from_point
/// agrees with j_map on every valid (b, c) in F_{p^2}^2.
struct JConsistencyReport {
    std::uint64_t p = 0;
    bool ran = false;
    std::uint64_t points = 0;
    std::uint64_t mismatches = 0;
    bool passed() const { return !ran || mismatches == 0; }
};
JConsistencyReport j_consistency_check(std::uint64_t p);

} // namespace rvf
