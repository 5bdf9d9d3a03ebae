#pragma once

// Invariant sweeps over the library, run by `scrolls verify`. Each suite
// reports one result per invariant together with the first counterexample.

#include <string>
#include <vector>

namespace scrolls {

struct VerifyRange {
    int g_max = 12;
    int k_max = 10;
    int n_max = 60;
};

struct InvariantResult {
    std::string suite;
    std::string invariant;
    bool passed = true;
    long cases = 0;
    std::string counterexample;  // empty when passed
};

const std::vector<std::string>& verify_suite_names();

bool is_verify_suite(const std::string& name);

/// Throws DomainError for an unknown suite or a range below the suite's minimum.
std::vector<InvariantResult> run_verify_suite(const std::string& name, const VerifyRange& range);

}  // namespace scrolls
