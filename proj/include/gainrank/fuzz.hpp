#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gainrank/gain_graph.hpp"
#include "gainrank/generators.hpp"
#include "gainrank/linalg.hpp"

namespace gainrank {

struct FuzzOptions {
    std::size_t n_max = 10;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    GainDomain domain = GainDomain::FourthRoots;
    /// When set, every connected underlying graph up to this order is checked with
    /// gains_per_graph random gain assignments, in addition to the random trials.
    std::optional<std::size_t> exhaustive_n;
    std::size_t gains_per_graph = 25;
    bool lemmas = true;
    unsigned threads = 0;  // 0: hardware concurrency
    double tol = kDefaultTolerance;
    /// Replaces r(G, phi) in the bound and lower-optimality checks. Test-only fault
    /// injection; leave empty in normal use.
    std::function<std::size_t(const GainGraph&)> rank_hook;
};

struct PropertyTally {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
};

struct FuzzFailure {
    std::uint64_t seed = 0;
    std::string property;
    std::string detail;
    nlohmann::json graph;
};

struct FuzzSummary {
    std::size_t instances = 0;
    std::map<std::string, PropertyTally> tallies;
    std::vector<FuzzFailure> failures;  // sorted by seed, then property

    bool ok() const { return failures.empty(); }
};

/// The random-trial instance for a given instance seed (as reported in failures).
GainGraph fuzz_instance(const FuzzOptions& options, std::uint64_t instance_seed);

/// Checks every property on one graph and folds the outcome into `summary`.
void check_instance(const GainGraph& g, std::uint64_t instance_seed, const FuzzOptions& options, FuzzSummary& summary);

/// Runs the random trials (and the exhaustive sweep when requested) across worker
/// threads. The result does not depend on the thread count.
FuzzSummary run_fuzz(const FuzzOptions& options);

nlohmann::json summary_to_json(const FuzzSummary& summary);
std::string summary_to_text(const FuzzSummary& summary);

} // namespace gainrank
