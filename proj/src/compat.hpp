#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "model.hpp"

namespace fleetmin {

// Bipartite graph G = (D u P, E) over one instance: drop-off node i is
// adjacent to pickup node j exactly when a vehicle finishing trip i can
// start trip j. Indices are 1..n; adj[0] stays empty.
struct CompatibilityGraph {
    int n = 0;
    std::optional<double> delta;
    std::vector<std::vector<int>> adj;  // adj[i] = sorted pickup indices j
    std::size_t edge_count = 0;

    bool has_edge(int i, int j) const;
};

// Directed feasibility: can one vehicle run `to` right after `from`?
// Classical mode: time(d_from, p_to) <= T^p_to - T^d_from.
// Delta mode additionally caps the wait: T^p_to - T^d_from <= time + delta.
// Comparisons are exact, no epsilon.
bool compatible_directed(const TravelTimeModel& model, const Trip& from, const Trip& to,
                         std::optional<double> delta);

// Symmetric compatibility: the directed relation in at least one direction.
bool compatible_pair(const TravelTimeModel& model, const Trip& a, const Trip& b,
                     std::optional<double> delta);

// Builds the full edge set. Prunes by pickup time (any edge needs
// T^p_j >= T^d_i) but produces exactly the edges of the naive n^2 scan.
CompatibilityGraph build_graph(const Instance& instance);

}  // namespace fleetmin
