#pragma once

#include <string>
#include <utility>
#include <vector>

#include "compat.hpp"

namespace fleetmin {

// A matching in the compatibility graph. successor[i] is the pickup
// matched to drop-off i (0 = unmatched); predecessor is the inverse map.
struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (dropoff i, pickup j), ascending i
    std::vector<int> successor;              // size n+1
    std::vector<int> predecessor;            // size n+1

    int size() const { return static_cast<int>(pairs.size()); }

    // Rebuilds the maps and pair list from successor[]; keeps the three
    // representations consistent.
    static Matching from_successors(int n, const std::vector<int>& successor);
};

// Maximum-cardinality matching via Hopcroft-Karp. Scan order is fixed
// (drop-offs ascending, adjacency in stored order), so the result is a
// pure function of the graph.
Matching max_matching(const CompatibilityGraph& graph);

enum class MatchingFault {
    None,
    SizeMismatch,      // maps, pairs disagree
    NonEdgePair,
    DuplicateEndpoint,
    AugmentingPath,    // matching is valid but not maximum
};

struct MatchingCheck {
    MatchingFault fault = MatchingFault::None;
    std::string detail;

    bool ok() const { return fault == MatchingFault::None; }
    explicit operator bool() const { return ok(); }
};

// Certifies the Matching invariants and maximality (via an alternating
// BFS that is independent of max_matching's phase machinery).
MatchingCheck verify_matching(const CompatibilityGraph& graph, const Matching& matching);

}  // namespace fleetmin
