#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rvf {

/// One named check against one mathematical claim. `skipped` means the
/// check's enumeration bound excludes this prime; a skip never fails a run.
struct CheckResult {
    enum class Status { pass, fail, skipped };
    std::string name;
    std::string claim;
    Status status = Status::skipped;
    std::string detail;  // witness on failure, bound note on skip
    double ms = 0.0;
};

struct VerificationReport {
    std::uint64_t p = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (c.status == CheckResult::Status::fail) return false;
        return true;
    }
};

/// Names accepted by run_checks / the CLI --check flag, in report order.
std::vector<std::string> available_checks();

/// Runs the selected checks (all when names is empty) for one prime.
/// Throws NotPrime for invalid p and InvalidArgument for unknown names.
VerificationReport run_checks(std::uint64_t p, const std::vector<std::string>& names);

std::string report_to_text(const VerificationReport& report, bool with_timing);
std::string report_to_json(const VerificationReport& report, bool with_timing);

} // namespace rvf
