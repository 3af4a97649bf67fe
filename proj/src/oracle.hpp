#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ingest.hpp"

namespace fleetmin {

// Desk-scale size caps for the exhaustive oracles. Configuration, not
// hard constants; each operation refuses instances over its cap.
struct OracleLimits {
    int min_fleet_n = 12;
    int max_incompatible_n = 20;
    int max_matching_n = 10;
};

// Minimum number of vehicles by exhaustive backtracking over vehicle
// assignments in pickup-time order. Deliberately built without any
// matching theory so it can referee the matching-based solver.
int brute_min_fleet(const Instance& instance, int bound = OracleLimits{}.min_fleet_n);

// Maximum set of pairwise-incompatible trips by subset search with a
// greedy bound. Returns the lexicographically smallest witness among the
// maximizers.
std::pair<int, std::vector<int>> brute_max_incompatible(
    const Instance& instance, int bound = OracleLimits{}.max_incompatible_n);

// Maximum matching size by exhaustive enumeration over pickup subsets
// (memoized); independent of the Hopcroft-Karp path.
int brute_max_matching(const CompatibilityGraph& graph, int bound = OracleLimits{}.max_matching_n);

// fleet_size is n minus the maximum matching; max_incompatible comes from
// brute force. gap = fleet_size - max_incompatible: always 0 in classical
// mode on strict-metric instances, possibly nonzero under delta.
struct GapReport {
    int fleet_size = 0;
    int max_incompatible = 0;
    int gap = 0;
    std::vector<int> witness_set;
};

GapReport duality_gap(const Instance& instance, const OracleLimits& limits = {});

// Seeded random search for instances with a nonzero duality gap.
struct SearchConfig {
    int cases = 0;
    int n_min = 3;
    int n_max = 8;
    std::optional<double> delta;
    ModelKind model = ModelKind::Line1D;
    double speed = 1.0;
    double slack = 1.0;
    double horizon = 10.0;
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = use hardware concurrency
    OracleLimits limits;
};

struct SearchHit {
    Instance instance;
    int case_index = 0;
    GapReport report;
};

// Returns the hit with the smallest case index, or nothing. Deterministic
// for a given config regardless of the worker count.
std::optional<SearchHit> search_counterexample(const SearchConfig& config);

// Batch agreement check of every theorem-level identity on seeded
// strict-metric classical instances:
//   brute_min_fleet = n - max_matching = certificate size
//                   = brute_max_incompatible  (and = n - brute_max_matching
//                     when n is within that oracle's cap),
// plus weak duality and the solution/certificate verifiers.
struct CheckConfig {
    int cases = 0;
    int n_min = 1;
    int n_max = 8;
    ModelKind model = ModelKind::Euclidean;
    double speed = 1.0;
    double slack = 1.2;
    double horizon = 10.0;
    std::uint64_t seed = 0;
    int threads = 0;
    OracleLimits limits;
};

struct CheckOutcome {
    int cases_run = 0;
    int agreements = 0;
    int first_failure = 0;  // 1-based case number; 0 = none
    std::string failure_detail;

    bool all_passed() const { return agreements == cases_run; }
};

CheckOutcome check_agreement(const CheckConfig& config);

// The per-case instance used by check_agreement and search_counterexample;
// exposed so a reported case number can be reproduced in isolation.
Instance instance_for_case(const GeneratorConfig& base, std::uint64_t master_seed, int case_index,
                           int n_min, int n_max);

}  // namespace fleetmin
