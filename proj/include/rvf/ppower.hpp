#pragma once

#include <cstdint>
#include <string>

#include "rvf/derivation.hpp"
#include "rvf/modforms.hpp"

namespace rvf {

/// Iteration cap for the brute-force p-th power: the intermediate
/// polynomials reach weighted degree 2p+6 with O(p^2) monomials. Beyond
/// this only the closed form is offered.
inline constexpr unsigned kIterationBound = 199;

/// Closed form of R^p:
///   R^p(e2) = (B^2 - e4 A^2)/12,
///   R^p(e4) = A (e4 B - e6 A)/3,
///   R^p(e6) = A (e6 B - e4^2 A)/2      (A, B taken mod p).
/// Construction also certifies the equivalent basis form
///   R^p = A^2 R - ((B - e2 A)/12)^2 F + A ((B - e2 A)/12) H
/// by symbolic expansion.
Derivation<Fp> rp_closed(std::uint64_t p);

/// p-fold application of R to each generator over F_p; the independent
/// oracle for the closed form. Throws BoundExceeded above kIterationBound.
Derivation<Fp> rp_iterated(std::uint64_t p, unsigned bound = kIterationBound);

/// The expected decomposition coefficients (A^2, -((B-e2A)/12)^2, A(B-e2A)/12).
struct ExpectedDecomposition {
    GradedPoly<Fp> r1, r2, r3;
};
ExpectedDecomposition closed_decomposition(std::uint64_t p);

struct PthPowerResult {
    std::uint64_t p = 0;
    Derivation<Fp> closed;
    Derivation<Fp> iterated;
    BasisDecomposition<Fp> decomposition;  // of the iterated images
    bool equal = false;                    // closed == iterated, coordinate-wise
    bool leibniz_certified = false;        // p-th power is again a derivation
};

/// Full result bundle; memoized per prime. Requires p <= bound.
const PthPowerResult& pth_power(std::uint64_t p);

struct FirstIntegralReport {
    std::uint64_t p = 0;
    bool annihilated = false;         // R(B - e2 A) = 0
    bool degrees_congruent = false;   // deg A = -1, deg B = 1 (mod p)
    bool r_of_a_identity = false;     // R(A) = (B - e2 A)/12
    bool passed() const { return annihilated && degrees_congruent && r_of_a_identity; }
};
FirstIntegralReport first_integral_check(std::uint64_t p);

struct CurvatureReport {
    std::uint64_t p = 0;
    bool f_or_h_component_nonzero = false;  // (r2, r3) != (0, 0)
    bool witness_nonzero = false;           // B - e2 A != 0
    std::string witness;                    // the nonzero decomposition entry
    bool passed() const { return f_or_h_component_nonzero && witness_nonzero; }
};
/// R^p is not a function multiple of R: exhibits a nonzero F/H component
/// in the (unique) basis decomposition.
CurvatureReport p_curvature_witness(std::uint64_t p);

struct CoefficientSystemReport {
    std::uint64_t p = 0;
    bool r_r1_is_2r3 = false;
    bool r_r2_is_zero = false;
    bool r_r3_is_neg_r2 = false;
    bool passed() const { return r_r1_is_2r3 && r_r2_is_zero && r_r3_is_neg_r2; }
};
/// The decomposition coefficients satisfy R(r1) = 2 r3, R(r2) = 0,
/// R(r3) = -r2 (forced by [R, R^p] = 0).
CoefficientSystemReport coefficient_system_check(std::uint64_t p);

inline constexpr std::uint64_t kEnumerationBoundFp = 13;
inline constexpr std::uint64_t kEnumerationBoundFp2 = 7;

struct SingularSetReport {
    std::uint64_t p = 0;
    bool divisible = false;  // each image of R^p exactly divisible by e4^3 - e6^2
    bool fp_scan_ran = false;
    bool fp_zero_set_matches = false;    // over F_p^3: zero set == {b^3 = c^2}
    bool fp2_scan_ran = false;
    bool fp2_zero_set_matches = false;   // same over (F_{p^2})^3
    bool passed() const {
        return divisible && (!fp_scan_ran || fp_zero_set_matches) &&
               (!fp2_scan_ran || fp2_zero_set_matches);
    }
};
/// Divisibility for any p; point scans auto-restrict to the enumeration
/// bounds above.
SingularSetReport singular_set_checks(std::uint64_t p);

} // namespace rvf
