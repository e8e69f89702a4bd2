#pragma once

#include "cobalt/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cobalt {

struct VerifyOptions {
    /// Seed of the random lift perturbations.
    unsigned long seed = 2024;
    int perturbations = 5;
    /// Wall-clock limit for the whole suite.
    double total_budget_s = 300;
};

/// One numbered acceptance criterion and the checks behind it.
struct Criterion {
    int id = 0;
    std::string title;
    /// Wall-clock limit; 0 means only the suite limit applies.
    double budget_s = 0;
    std::vector<Check> checks;
    double elapsed_s = 0;

    bool within_budget() const { return budget_s <= 0 || elapsed_s <= budget_s; }
    bool checks_pass() const;
    bool pass() const { return within_budget() && checks_pass(); }
};

using CriterionCallback = std::function<void(const Criterion&)>;

/// Runs criteria 1..10 in order, reporting each one as it finishes.
std::vector<Criterion> run_acceptance(const VerifyOptions& options, const CriterionCallback& done = {});

struct SuiteOutcome {
    std::vector<Criterion> criteria;
    double elapsed_s = 0;
    bool within_budget = true;
    bool pass() const;
};

SuiteOutcome verify_all(const VerifyOptions& options, const CriterionCallback& done = {});

/// Every check of every criterion, plus a per-criterion summary in `result`.
/// Elapsed times appear only when `timing` is set.
Report verify_all_report(const SuiteOutcome& outcome, const VerifyOptions& options, bool timing);

} // namespace cobalt
