// rvf: exact computations around the Ramanujan vector field in
// characteristic p, with a verification suite for the identities the
// library implements.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rvf/json_io.hpp"
#include "rvf/ppower.hpp"
#include "rvf/supersingular.hpp"
#include "rvf/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

using rvf::Fp;
using rvf::GradedPoly;
using rvf::QSeries;
using rvf::Rational;

std::string series_to_text(const QSeries<Rational>& f) {
    std::string out;
    for (std::size_t n = 0; n < f.precision(); ++n) {
        const Rational& c = f[n];
        if (c.is_zero()) continue;
        Rational shown = c;
        if (out.empty()) {
            if (c < Rational(0)) {
                out += "-";
                shown = -c;
            }
        } else {
            bool neg = c < Rational(0);
            out += neg ? " - " : " + ";
            if (neg) shown = -c;
        }
        std::string cs = shown.str();
        if (cs.find('/') != std::string::npos) cs = "(" + cs + ")";
        if (n == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs;
            out += "q";
            if (n > 1) out += "^" + std::to_string(n);
        }
    }
    return out.empty() ? "0" : out;
}

nlohmann::json series_to_json(const QSeries<Rational>& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t n = 0; n < f.precision(); ++n)
        coeffs.push_back(nlohmann::json::array(
            {f[n].num().get_str(), f[n].den().get_str()}));
    return nlohmann::json{{"var", "q"}, {"coefficients", std::move(coeffs)}};
}

// "A..B" or a single number.
bool parse_prime_range(const std::string& text, std::uint64_t* lo, std::uint64_t* hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            *lo = *hi = std::stoull(text);
        } else {
            *lo = std::stoull(text.substr(0, dots));
            *hi = std::stoull(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return *lo <= *hi;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 5); p <= hi; ++p)
        if (rvf::is_prime(p)) out.push_back(p);
    return out;
}

int cmd_eisenstein(unsigned nu, std::size_t terms, const std::string& format) {
    QSeries<Rational> e = rvf::eisenstein(nu, terms);
    if (format == "json") {
        std::cout << series_to_json(e).dump() << "\n";
    } else {
        std::cout << series_to_text(e) << "\n";
    }
    return kExitOk;
}

int cmd_ab(std::uint64_t p, const std::string& format) {
    const rvf::ABPair& ab = rvf::compute_ab(p);
    if (format == "json") {
        std::cout << rvf::ab_to_json(ab).dump() << "\n";
    } else {
        std::cout << "A   = " << rvf::to_string(ab.a) << "\n"
                  << "B   = " << rvf::to_string(ab.b) << "\n"
                  << "A~  = " << rvf::to_string(ab.a_mod) << "  (mod " << p << ")\n"
                  << "B~  = " << rvf::to_string(ab.b_mod) << "  (mod " << p << ")\n";
    }
    return kExitOk;
}

int cmd_rp(std::uint64_t p, const std::string& method, const std::string& format) {
    std::optional<rvf::Derivation<Fp>> closed, iterated;
    if (method == "closed" || method == "both") closed = rvf::rp_closed(p);
    if (method == "iterate" || method == "both") iterated = rvf::rp_iterated(p);
    const rvf::Derivation<Fp>& shown = closed ? *closed : *iterated;

    if (format == "json") {
        nlohmann::json j{{"p", p},
                         {"method", method},
                         {"images", rvf::derivation_to_json(shown, p)}};
        if (closed && iterated) j["closed_equals_iterated"] = (*closed == *iterated);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "R^p(e2) = " << rvf::to_string(shown.img2) << "\n"
                  << "R^p(e4) = " << rvf::to_string(shown.img4) << "\n"
                  << "R^p(e6) = " << rvf::to_string(shown.img6) << "\n";
        if (closed && iterated)
            std::cout << "closed == iterated: "
                      << (*closed == *iterated ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_ss(std::uint64_t p, const std::string& method, const std::string& format) {
    std::optional<rvf::SupersingularPolynomial> kz, deuring;
    if (method == "kaneko-zagier" || method == "both") kz = rvf::ss_from_a(p);
    if (method == "deuring" || method == "both") deuring = rvf::ss_deuring(p);
    const rvf::SupersingularPolynomial& shown = kz ? *kz : *deuring;

    rvf::Fp2Field field(p);
    if (format == "json") {
        nlohmann::json j = rvf::ss_to_json(shown);
        j["method"] = method;
        if (kz && deuring)
            j["methods_agree"] =
                (kz->poly == deuring->poly && kz->j_values == deuring->j_values);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "ss_" << p << "(t) = " << rvf::to_string(shown.poly) << "\n";
        std::cout << "roots in F_" << p * p << " = F_" << p << "[s], s^2 = "
                  << field.non_residue() << ":";
        for (const rvf::Fp2& j0 : shown.j_values) std::cout << " " << j0.str();
        std::cout << "\n";
        if (kz && deuring)
            std::cout << "methods agree: "
                      << (kz->poly == deuring->poly ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& primes_arg, std::vector<std::string> checks,
               bool all, unsigned jobs, const std::string& format, bool no_timing) {
    std::uint64_t lo = 0, hi = 0;
    if (!parse_prime_range(primes_arg, &lo, &hi)) {
        std::cerr << "error: bad prime range '" << primes_arg << "'\n";
        return kExitUsage;
    }
    std::vector<std::uint64_t> primes = primes_in(lo, hi);
    if (primes.empty()) {
        std::cerr << "error: no primes >= 5 in " << primes_arg << "\n";
        return kExitUsage;
    }
    if (all) checks.clear();  // empty selection = full suite
    if (!all && checks.empty()) {
        std::cerr << "error: pass --all or at least one --check NAME\n";
        return kExitUsage;
    }
    for (const std::string& name : checks) {
        auto known = rvf::available_checks();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            std::cerr << "error: unknown check '" << name << "'; available:";
            for (const std::string& k : known) std::cerr << " " << k;
            std::cerr << "\n";
            return kExitUsage;
        }
    }

    // One worker per prime; output is buffered per prime and emitted in
    // ascending order regardless of completion order.
    std::vector<rvf::VerificationReport> reports(primes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= primes.size()) return;
            reports[idx] = rvf::run_checks(primes[idx], checks);
        }
    };
    unsigned n_workers = std::max(1u, std::min<unsigned>(jobs, primes.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    bool ok = true;
    for (const rvf::VerificationReport& rep : reports) {
        ok = ok && rep.all_passed();
        if (format == "json")
            std::cout << rvf::report_to_json(rep, !no_timing) << "\n";
        else
            std::cout << rvf::report_to_text(rep, !no_timing);
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for the Ramanujan vector field mod p"};
    app.require_subcommand(1);
    std::string format = "text";

    auto* eis = app.add_subcommand("eisenstein", "print a normalized Eisenstein q-expansion");
    unsigned nu = 4;
    std::size_t terms = 10;
    eis->add_option("--nu", nu, "even weight >= 2")->required();
    eis->add_option("--terms", terms, "number of q-coefficients");
    eis->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ab = app.add_subcommand("ab", "the polynomials A, B with A(E4,E6) = E_{p-1}, B(E4,E6) = E_{p+1}");
    std::uint64_t p = 5;
    ab->add_option("--p", p, "prime >= 5")->required();
    ab->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* rp = app.add_subcommand("rp", "p-th power of the Ramanujan vector field");
    std::string method = "both";
    rp->add_option("--p", p, "prime >= 5")->required();
    rp->add_option("--method", method)->check(CLI::IsMember({"closed", "iterate", "both"}));
    rp->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ss = app.add_subcommand("ss", "supersingular polynomial ss_p(t)");
    std::string ss_method = "both";
    ss->add_option("--p", p, "prime >= 5")->required();
    ss->add_option("--method", ss_method)
        ->check(CLI::IsMember({"kaneko-zagier", "deuring", "both"}));
    ss->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run the identity verification suite");
    std::string primes_arg = "5..31";
    std::vector<std::string> checks;
    bool all = false, no_timing = false;
    unsigned jobs = 1;
    verify->add_option("--primes", primes_arg, "prime range A..B (or a single prime)");
    verify->add_option("--check", checks, "check name (repeatable)");
    verify->add_flag("--all", all, "run every check");
    verify->add_option("--jobs", jobs, "parallel workers, one prime each");
    verify->add_flag("--no-timing", no_timing, "suppress per-check timings");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eis->parsed()) {
            if (nu < 2 || nu % 2 != 0) {
                std::cerr << "error: --nu must be even and >= 2\n";
                return kExitUsage;
            }
            return cmd_eisenstein(nu, terms, format);
        }
        if (ab->parsed()) return cmd_ab(p, format);
        if (rp->parsed()) return cmd_rp(p, method, format);
        if (ss->parsed()) return cmd_ss(p, ss_method, format);
        if (verify->parsed())
            return cmd_verify(primes_arg, checks, all, jobs, format, no_timing);
    } catch (const rvf::NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rvf::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rvf::BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
