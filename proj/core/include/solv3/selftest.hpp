#pragma once

#include <string>
#include <vector>

namespace solv3 {

struct SelfTestResult {
    bool passed = true;
    std::vector<std::string> failures;
};

// Quick internal consistency sweep: kernel identities against power series,
// group axioms, drift-flow laws, and a decision sanity check.
SelfTestResult run_selftest(unsigned seed = 1);

}  // namespace solv3
