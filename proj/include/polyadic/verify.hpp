#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyadic::verify {

struct Options {
    unsigned depth = 8;
    std::uint64_t seed = 42;
    std::uint64_t horizon = 200;
    unsigned cluster_n = 12; // largest width for the cluster/neighborhood suite
    double radius = 0.5;
    unsigned trials = 0; // 0 keeps each suite's own count
};

struct PropertyResult {
    std::string property;
    bool passed = true;
    std::string counterexample; // first failure witness, empty when passed
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;
    bool all_passed() const;
};

/// Names of the available suites, in their canonical order.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws unknown_suite for anything unlisted.
SuiteResult run_suite(const std::string& name, const Options& options);

/// Runs every suite.
std::vector<SuiteResult> run_all(const Options& options);

} // namespace polyadic::verify
