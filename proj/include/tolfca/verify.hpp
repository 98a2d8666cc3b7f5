#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tolfca/corpus.hpp"
#include "tolfca/fca.hpp"

namespace tolfca {

struct CheckConfig {
    int nmax = 6;                     // echoed corpus bound
    std::uint64_t seed = 20240915;    // base seed for all sampled checks
    int triple_samples = 200;         // sampled triples when a domain is too large
    long exhaustive_triple_budget = 2'000'000;  // max triples walked exhaustively
    int pair_sample_budget = 40000;   // max pairs walked exhaustively
    int random_relations = 1000;      // random relations per lattice for checker agreement
    int random_subsets = 32;          // random subset draws per context
};

struct ReportEntry {
    std::string lattice_id;
    std::string tolerance_id;  // "" for whole-lattice findings
    std::string check_id;
    bool pass = true;
    std::string witness;  // empty when passing
};

struct CheckSummary {
    int run = 0;
    int failed = 0;
};

struct VerificationReport {
    CheckConfig config;
    std::vector<std::string> checks;  // ids that were run
    int lattice_count = 0;
    std::vector<ReportEntry> entries;
    std::map<std::string, CheckSummary> per_check;
    int failures = 0;
    bool all_pass() const { return failures == 0; }
};

struct CheckInfo {
    std::string id;
    std::string summary;
};

// The fixed catalogue of property checks, in execution order.
const std::vector<CheckInfo>& check_registry();

// Runs the selected checks over every corpus lattice and every tolerance on
// it. Checks must be a nonempty subset of the registry ids; throws
// UnknownCheckId or EmptyInput otherwise. Deterministic for fixed inputs.
VerificationReport run_theorem_suite(const Corpus& corpus, const std::vector<std::string>& checks,
                                     const CheckConfig& config = {});

}  // namespace tolfca
