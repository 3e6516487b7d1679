#pragma once

#include <string>
#include <vector>

namespace planarlim {

/// One acceptance criterion: a pass/fail verdict, a one-line summary and supporting notes.
struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string summary;
    std::vector<std::string> notes;
    double seconds = 0;
};

inline constexpr int kCriterionCount = 12;

/// Runs criterion `id` (1..12). Exceptions inside a check become a failing result.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids);

/// A published formula that does not survive a machine check, with its corrected form.
struct Discrepancy {
    std::string name;
    std::string printed;
    std::string corrected;
    bool printed_fails = false;   // the check rejects the printed form
    bool corrected_holds = false; // the check accepts the corrected form
    std::string evidence;
};
/// The three recorded discrepancies: the integrand identity for the edge-graded F0 (missing
/// "-1"), the sign of the square-root term in the quartic generating function, and the
/// constant of the quartic energy formula.
std::vector<Discrepancy> discrepancy_ledger();

/// "PASS" / "FAIL" line for a result, e.g. "criterion 3 PASS  edge extremes: ...".
std::string format_result(const CriterionResult& r);

}  // namespace planarlim
