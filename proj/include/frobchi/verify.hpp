#pragma once

#include <string>
#include <vector>

// Reproduction checklist: every externally known value the engine is
// supposed to hit — golden expansions, closed-form chi values, sign
// criteria, the P^2 splitting and the level-2 operator comparison — each as
// a labelled pass/fail item. `frobchi verify` prints this report.

namespace frobchi {

struct VerifyItem {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass = true;
};

VerifyReport run_verification();

} // namespace frobchi
