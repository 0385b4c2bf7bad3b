#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rvf/json_io.hpp"
#include "rvf/ppower.hpp"
#include "rvf/supersingular.hpp"
#include "rvf/verify.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> eisenstein_coeffs(unsigned nu, std::size_t terms) {
    rvf::QSeries<rvf::Rational> e = rvf::eisenstein(nu, terms);
    std::vector<std::string> out;
    out.reserve(e.precision());
    for (std::size_t n = 0; n < e.precision(); ++n) out.push_back(e[n].str());
    return out;
}

std::string ab_json(std::uint64_t p) {
    return rvf::ab_to_json(rvf::compute_ab(p)).dump();
}

std::string rp_json(std::uint64_t p, const std::string& method) {
    nlohmann::json j{{"p", p}, {"method", method}};
    if (method == "closed") {
        j["images"] = rvf::derivation_to_json(rvf::rp_closed(p), p);
    } else if (method == "iterate") {
        j["images"] = rvf::derivation_to_json(rvf::rp_iterated(p), p);
    } else if (method == "both") {
        const rvf::PthPowerResult& r = rvf::pth_power(p);
        j["images"] = rvf::derivation_to_json(r.iterated, p);
        j["closed_equals_iterated"] = r.equal;
    } else {
        throw rvf::InvalidArgument("method must be closed, iterate or both");
    }
    return j.dump();
}

std::string ss_json(std::uint64_t p, const std::string& method) {
    nlohmann::json j;
    if (method == "kaneko-zagier") {
        j = rvf::ss_to_json(rvf::ss_from_a(p));
    } else if (method == "deuring") {
        j = rvf::ss_to_json(rvf::ss_deuring(p));
    } else if (method == "both") {
        rvf::SupersingularPolynomial a = rvf::ss_from_a(p);
        rvf::SupersingularPolynomial d = rvf::ss_deuring(p);
        j = rvf::ss_to_json(a);
        j["methods_agree"] = (a.poly == d.poly && a.j_values == d.j_values);
    } else {
        throw rvf::InvalidArgument("method must be kaneko-zagier, deuring or both");
    }
    j["method"] = method;
    return j.dump();
}

std::string verify_json(std::uint64_t p, const std::vector<std::string>& checks) {
    return rvf::report_to_json(rvf::run_checks(p, checks), false);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for the Ramanujan vector field mod p";

    m.def("bernoulli", [](unsigned n) { return rvf::bernoulli(n).str(); },
          py::arg("n"), "n-th Bernoulli number as a rational string");
    m.def("divisor_sigma",
          [](unsigned mu, unsigned long n) {
              return rvf::divisor_sigma(mu, n).get_str();
          },
          py::arg("mu"), py::arg("n"), "sum of d^mu over divisors d of n");
    m.def("eisenstein", &eisenstein_coeffs, py::arg("nu"), py::arg("terms") = 10,
          "q-expansion coefficients of E_nu as rational strings");
    m.def("ab_json", &ab_json, py::arg("p"),
          "A, B with A(E4,E6) = E_{p-1}, B(E4,E6) = E_{p+1}, plus reductions");
    m.def("rp_json", &rp_json, py::arg("p"), py::arg("method") = "both",
          "p-th power of the Ramanujan vector field");
    m.def("ss_json", &ss_json, py::arg("p"), py::arg("method") = "both",
          "supersingular polynomial ss_p(t)");
    m.def("verify_json", &verify_json, py::arg("p"),
          py::arg("checks") = std::vector<std::string>{},
          "run the verification suite for one prime");
    m.def("available_checks", &rvf::available_checks);
    m.def("iteration_bound", [] { return rvf::kIterationBound; });
    m.def("deuring_bound", [] { return rvf::kDeuringBound; });

    py::register_exception<rvf::NotPrime>(m, "NotPrimeError");
    py::register_exception<rvf::BoundExceeded>(m, "BoundExceededError");
    py::register_exception<rvf::InvalidArgument>(m, "InvalidArgumentError");
}
