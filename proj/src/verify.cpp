#include "rvf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rvf/ppower.hpp"
#include "rvf/supersingular.hpp"

namespace rvf {

namespace {

struct Outcome {
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct CheckSpec {
    const char* name;
    const char* claim;
    std::function<Outcome(std::uint64_t)> run;
};

Outcome pass_fail(bool ok, const std::string& witness = "") {
    Outcome o;
    o.pass = ok;
    if (!ok) o.detail = witness;
    return o;
}

Outcome skip(const std::string& why) {
    Outcome o;
    o.skipped = true;
    o.detail = why;
    return o;
}

std::string images_string(const Derivation<Fp>& d) {
    return "R^p(e2) = " + to_string(d.img2) + "; R^p(e4) = " + to_string(d.img4) +
           "; R^p(e6) = " + to_string(d.img6);
}

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> checks = {
        {"ramanujan-system",
         "theta E2 = (E2^2-E4)/12, theta E4 = (E2 E4-E6)/3, theta E6 = (E2 E6-E4^2)/2 "
         "coefficient-wise",
         [](std::uint64_t) {
             RamanujanSystemReport r = verify_ramanujan_system(30);
             return pass_fail(r.passed, r.failure);
         }},
        {"sl2-relations",
         "[R,F] = H, [H,F] = -2F, [H,R] = 2R over F_p",
         [](std::uint64_t p) {
             PrimeDomain dom(p);
             auto f = make_fields(dom);
             bool ok = bracket(f.ramanujan, f.lowering) == f.euler &&
                       bracket(f.euler, f.lowering) ==
                           Derivation<Fp>{} - f.lowering - f.lowering &&
                       bracket(f.euler, f.ramanujan) == f.ramanujan + f.ramanujan;
             return pass_fail(ok, "bracket relation failed");
         }},
        {"congruences",
         "E_{p-1} = 1 and E_{p+1} = E2 mod p, coefficient-wise",
         [](std::uint64_t p) {
             CongruenceReport r = verify_congruences(p, 60);
             return pass_fail(r.passed(), r.failure);
         }},
        {"diff-relations",
         "dA = B and dB = -e4 A for the Serre derivative d",
         [](std::uint64_t p) {
             DiffRelationReport r = verify_diff_relations(p);
             return pass_fail(r.passed(), r.d_a_is_b ? "dB != -e4 A" : "dA != B");
         }},
        {"first-integral",
         "R annihilates B - e2 A; R(A) = (B - e2 A)/12; deg A = -1, deg B = 1 mod p",
         [](std::uint64_t p) {
             FirstIntegralReport r = first_integral_check(p);
             return pass_fail(r.passed());
         }},
        {"pth-power",
         "the p-fold iterate of R equals its closed form in A and B, coordinate-wise",
         [](std::uint64_t p) {
             if (p > kIterationBound)
                 return skip("iteration bound " + std::to_string(kIterationBound));
             const PthPowerResult& r = pth_power(p);
             return pass_fail(r.equal && r.leibniz_certified,
                              images_string(r.iterated));
         }},
        {"decomposition",
         "R^p = A^2 R - ((B - e2 A)/12)^2 F + A ((B - e2 A)/12) H",
         [](std::uint64_t p) {
             if (p > kIterationBound)
                 return skip("iteration bound " + std::to_string(kIterationBound));
             const PthPowerResult& r = pth_power(p);
             ExpectedDecomposition want = closed_decomposition(p);
             bool ok = r.decomposition.certified && r.decomposition.r1 == want.r1 &&
                       r.decomposition.r2 == want.r2 && r.decomposition.r3 == want.r3;
             return pass_fail(ok, "decomposition coefficients differ");
         }},
        {"commutant",
         "[R, R^p] = 0 and [F, R^p] = 0",
         [](std::uint64_t p) {
             if (p > kIterationBound)
                 return skip("iteration bound " + std::to_string(kIterationBound));
             PrimeDomain dom(p);
             auto f = make_fields(dom);
             const Derivation<Fp>& rp = pth_power(p).iterated;
             bool ok = bracket(f.ramanujan, rp).is_zero() &&
                       bracket(f.lowering, rp).is_zero();
             return pass_fail(ok, "a bracket with R^p is nonzero");
         }},
        {"coefficient-system",
         "the decomposition coefficients satisfy R(r1) = 2 r3, R(r2) = 0, R(r3) = -r2",
         [](std::uint64_t p) {
             if (p > kIterationBound)
                 return skip("iteration bound " + std::to_string(kIterationBound));
             return pass_fail(coefficient_system_check(p).passed());
         }},
        {"p-curvature",
         "R^p is not a function multiple of R",
         [](std::uint64_t p) {
             CurvatureReport r = p_curvature_witness(p);
             Outcome o = pass_fail(r.passed(), "decomposition has no F/H component");
             if (o.pass) o.detail = r.witness;
             return o;
         }},
        {"singular-set",
         "each image of R^p is divisible by e4^3 - e6^2, and the common zero "
         "set is exactly {e4^3 = e6^2}",
         [](std::uint64_t p) {
             SingularSetReport r = singular_set_checks(p);
             Outcome o = pass_fail(r.passed(), !r.divisible
                                                   ? "an image is not divisible"
                                                   : "zero set mismatch");
             if (o.pass && !r.fp_scan_ran)
                 o.detail = "point scans restricted to p <= " +
                            std::to_string(kEnumerationBoundFp);
             return o;
         }},
        {"table1",
         "the exponents (delta, epsilon, delta', epsilon') match the tabulated "
         "residue-class values",
         [](std::uint64_t p) {
             CoprimalityReport r = coprimality_and_squarefree(p);
             return pass_fail(r.exponents_match, "exponent quadruple differs");
         }},
        {"squarefree-coprime",
         "A is squarefree and coprime to B",
         [](std::uint64_t p) {
             CoprimalityReport r = coprimality_and_squarefree(p);
             return pass_fail(r.a_squarefree && r.roots_disjoint && r.supports_disjoint,
                              "shared or repeated factor found");
         }},
        {"supersingular-poly",
         "ss_p from A equals ss_p from curve enumeration, as monic polynomials",
         [](std::uint64_t p) {
             if (p > kDeuringBound)
                 return skip("enumeration oracle bound " + std::to_string(kDeuringBound));
             SupersingularPolynomial a = ss_from_a(p);
             SupersingularPolynomial d = ss_deuring(p);
             bool ok = a.poly == d.poly && a.j_values == d.j_values;
             return pass_fail(ok, "ss_p = " + to_string(a.poly) + " vs " +
                                      to_string(d.poly));
         }},
        {"component-count",
         "the supersingular locus has m + delta + epsilon components, the degree of ss_p",
         [](std::uint64_t p) {
             return pass_fail(component_count_check(p).passed());
         }},
        {"locus-radical",
         "stripping repeated e4/e6 factors from the locus polynomial f_p recovers A",
         [](std::uint64_t p) {
             return pass_fail(locus_polynomial(p).passed());
         }},
        {"supersingular-points",
         "A(b, c) = 0 exactly at the moduli points whose curve is supersingular",
         [](std::uint64_t p) {
             PointCrosscheckReport r = supersingular_point_crosscheck(p);
             if (!r.ran)
                 return skip("point scan bound " + std::to_string(kPointScanBound));
             return pass_fail(r.passed(), std::to_string(r.mismatches) +
                                              " mismatches over " +
                                              std::to_string(r.points) + " points");
         }},
        {"transversality",
         "gcd(A, B) = 1, and B is nonzero on the supersingular locus",
         [](std::uint64_t p) {
             TransversalityReport r = transversality_scan(p);
             Outcome o = pass_fail(r.passed(), "B vanished on the locus");
             if (o.pass && !r.scan_ran)
                 o.detail = "point scan restricted to p <= " +
                            std::to_string(kPointScanBound);
             return o;
         }},
        {"locus-field",
         "R^p + (B/12)^2 F vanishes exactly on the supersingular locus "
         "(images divisible by A; radical certificate identity)",
         [](std::uint64_t p) {
             return pass_fail(locus_field_check(p).passed());
         }},
        {"j-consistency",
         "the j-invariant of the curve at a moduli point equals 1728 b^3/(b^3 - c^2)",
         [](std::uint64_t p) {
             JConsistencyReport r = j_consistency_check(p);
             if (!r.ran)
                 return skip("exhaustive scan bound " +
                             std::to_string(kJConsistencyBound));
             return pass_fail(r.passed(), std::to_string(r.mismatches) + " mismatches");
         }},
    };
    return checks;
}

} // namespace

std::vector<std::string> available_checks() {
    std::vector<std::string> names;
    for (const CheckSpec& c : registry()) names.push_back(c.name);
    return names;
}

VerificationReport run_checks(std::uint64_t p, const std::vector<std::string>& names) {
    require_prime_ge5(p);
    for (const std::string& n : names) {
        bool known = false;
        for (const CheckSpec& c : registry()) known = known || n == c.name;
        if (!known) throw InvalidArgument("unknown check: " + n);
    }

    VerificationReport report;
    report.p = p;
    for (const CheckSpec& c : registry()) {
        if (!names.empty() &&
            std::find(names.begin(), names.end(), c.name) == names.end())
            continue;
        CheckResult res;
        res.name = c.name;
        res.claim = c.claim;
        auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = c.run(p);
            res.status = o.skipped ? CheckResult::Status::skipped
                         : o.pass  ? CheckResult::Status::pass
                                   : CheckResult::Status::fail;
            res.detail = o.detail;
        } catch (const std::exception& e) {
            res.status = CheckResult::Status::fail;
            res.detail = std::string("exception: ") + e.what();
        }
        res.ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
        report.checks.push_back(std::move(res));
    }
    return report;
}

namespace {
const char* status_str(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::pass: return "pass";
        case CheckResult::Status::fail: return "FAIL";
        default: return "skip";
    }
}
} // namespace

std::string report_to_text(const VerificationReport& report, bool with_timing) {
    std::ostringstream os;
    os << "p = " << report.p << "\n";
    for (const CheckResult& c : report.checks) {
        os << "  [" << status_str(c.status) << "] " << c.name;
        if (with_timing) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), " (%.1f ms)", c.ms);
            os << buf;
        }
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    return os.str();
}

std::string report_to_json(const VerificationReport& report, bool with_timing) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::json j{{"name", c.name},
                         {"claim", c.claim},
                         {"status", c.status == CheckResult::Status::pass ? "pass"
                                    : c.status == CheckResult::Status::fail
                                        ? "fail"
                                        : "skipped"}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        if (with_timing) j["ms"] = c.ms;
        checks.push_back(std::move(j));
    }
    nlohmann::json j{{"p", report.p},
                     {"checks", std::move(checks)},
                     {"all_passed", report.all_passed()}};
    return j.dump();
}

} // namespace rvf
