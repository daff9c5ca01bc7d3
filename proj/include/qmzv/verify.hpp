#pragma once
#include "qmzv/word_ops.hpp"

#include <string>
#include <vector>

namespace qmzv {

enum class OutputFormat { text, json };

// Shared knobs for the verification suites and the relation stream: q-adic
// precision for series checks, word-weight and index bounds, output format,
// a seed for the randomized arithmetic checks, the reading of the hbar-free
// circledast product, and the worker count for parallel enumeration.
struct RunConfig {
    int precision = 40;
    int max_weight = 4;
    int max_n = 6;
    OutputFormat output = OutputFormat::text;
    long seed = 0;
    CircledastVariant circledast_variant = CircledastVariant::plus_hbar0;
    int workers = 0;
};

// precision at least 2 and both bounds at least 1.
void validate(const RunConfig& cfg);

// One named check inside a suite; detail is empty unless the check failed.
struct CaseResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

// Suite names known to run_suites, in the order "all" executes them.
const std::vector<std::string>& verify_suite_names();

// Runs one suite by name, or every suite for "all". Unknown names raise
// std::invalid_argument listing the valid choices.
std::vector<SuiteResult> run_suites(const std::string& name, const RunConfig& cfg);

}  // namespace qmzv
