#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmi {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail; // failure reason, or brief stats on success
    double seconds = 0.0;
};

struct AcceptanceOptions {
    bool extended = false;     // include the long-running exhaustion runs
    unsigned threads = 1;      // forwarded to the searches that accept it
    std::ostream* log = nullptr; // progress lines, one per criterion
};

// Runs the full acceptance suite in order. Exceptions inside a criterion are
// caught and reported as failures; the suite always runs to the end.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace cmi
