#include "rvf/json_io.hpp"

namespace rvf {

namespace {

nlohmann::json vars_array() { return nlohmann::json::array({"e2", "e4", "e6"}); }

nlohmann::json term_json(const Exponents& e, const std::string& num,
                         const std::string& den) {
    return nlohmann::json{{"exp", {e.i, e.j, e.k}}, {"num", num}, {"den", den}};
}

Exponents exp_from_json(const nlohmann::json& t) {
    const auto& e = t.at("exp");
    return {e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>(),
            e.at(2).get<std::uint32_t>()};
}

} // namespace

nlohmann::json poly_to_json(const GradedPoly<Rational>& poly) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : poly.terms())
        terms.push_back(term_json(e, c.num().get_str(), c.den().get_str()));
    return nlohmann::json{
        {"p", nullptr}, {"vars", vars_array()}, {"terms", std::move(terms)}};
}

nlohmann::json poly_to_json(const GradedPoly<Fp>& poly, std::uint64_t p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : poly.terms())
        terms.push_back(term_json(e, std::to_string(c.v), "1"));
    return nlohmann::json{{"p", p}, {"vars", vars_array()}, {"terms", std::move(terms)}};
}

std::uint64_t poly_json_modulus(const nlohmann::json& j) {
    const auto& p = j.at("p");
    return p.is_null() ? 0 : p.get<std::uint64_t>();
}

GradedPoly<Rational> poly_from_json_rational(const nlohmann::json& j) {
    if (poly_json_modulus(j) != 0)
        throw InvalidArgument("expected a characteristic-0 polynomial");
    GradedPoly<Rational> poly;
    for (const auto& t : j.at("terms")) {
        BigInt num(t.at("num").get<std::string>());
        BigInt den(t.at("den").get<std::string>());
        poly.add_term(exp_from_json(t), Rational(num, den));
    }
    return poly;
}

GradedPoly<Fp> poly_from_json_fp(const nlohmann::json& j) {
    std::uint64_t p = poly_json_modulus(j);
    if (p == 0) throw InvalidArgument("expected a mod-p polynomial");
    GradedPoly<Fp> poly;
    for (const auto& t : j.at("terms")) {
        BigInt num(t.at("num").get<std::string>());
        BigInt den(t.at("den").get<std::string>());
        poly.add_term(exp_from_json(t),
                      reduce_mod_p(Rational(num, den), p));
    }
    return poly;
}

nlohmann::json ab_to_json(const ABPair& ab) {
    return nlohmann::json{{"p", ab.p},
                          {"A", poly_to_json(ab.a)},
                          {"B", poly_to_json(ab.b)},
                          {"A_mod_p", poly_to_json(ab.a_mod, ab.p)},
                          {"B_mod_p", poly_to_json(ab.b_mod, ab.p)}};
}

nlohmann::json derivation_to_json(const Derivation<Fp>& d, std::uint64_t p) {
    return nlohmann::json{{"e2", poly_to_json(d.img2, p)},
                          {"e4", poly_to_json(d.img4, p)},
                          {"e6", poly_to_json(d.img6, p)}};
}

nlohmann::json ss_to_json(const SupersingularPolynomial& ss) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Fp& c : ss.poly.coeffs()) coeffs.push_back(c.v);
    nlohmann::json roots = nlohmann::json::array();
    for (const Fp2& j0 : ss.j_values)
        roots.push_back(nlohmann::json::array({j0.a, j0.b}));
    Fp2Field field(ss.p);
    return nlohmann::json{{"p", ss.p},
                          {"ss", {{"var", "t"}, {"coefficients", std::move(coeffs)}}},
                          {"text", to_string(ss.poly)},
                          {"roots", std::move(roots)},
                          {"non_residue", field.non_residue()}};
}

} // namespace rvf
