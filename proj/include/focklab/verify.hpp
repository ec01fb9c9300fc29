#pragma once

// Verification suites: each one sweeps an identity from the library over a
// bounded set of states and reports every failing case.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "focklab/jsonio.hpp"

namespace focklab {

struct CaseFailure {
    std::string key;
    std::string input;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    long cases = 0;
    std::vector<CaseFailure> failures;  // sorted by key

    bool ok() const { return failures.empty(); }
    json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    std::optional<int> max_size;  // overrides the suite's default |lambda| bound
    int threads = 0;              // 0: FOCKLAB_THREADS, else hardware concurrency
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view suite, const VerifyOptions& opts = {});

int worker_count(int requested = 0);

// The ten basis states the gamma suite runs on.
const std::vector<ChargedPartition>& gamma_panel();

}  // namespace focklab
