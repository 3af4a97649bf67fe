#pragma once

#include <string>
#include <vector>

#include "duality.hpp"

namespace fleetmin {

// One vehicle's schedule: trip indices in ascending drop-off time, each
// consecutive pair directed-compatible under the instance's mode.
struct Trajectory {
    std::vector<int> trip_indices;
};

struct FleetSolution {
    std::vector<Trajectory> trajectories;
    int matching_size = 0;

    int fleet_size() const { return static_cast<int>(trajectories.size()); }
};

// Splits the trips into n - |M| trajectories by starting one at every
// pickup that is not matched to an earlier drop-off and following the
// successor map. Works for any matching, maximum or not. A successor
// cycle (possible only for fully degenerate zero-duration inputs) raises
// an internal-invariant error instead of silently dropping trips.
FleetSolution decompose_trajectories(const Instance& instance, const Matching& matching);

enum class SolutionFault {
    None,
    MissingTrip,
    DuplicateTrip,
    InfeasiblePair,
    OrderViolation,
    BadIndex,
};

struct SolutionCheck {
    SolutionFault fault = SolutionFault::None;
    std::string detail;

    bool ok() const { return fault == SolutionFault::None; }
    explicit operator bool() const { return ok(); }
};

// Re-certifies a solution independently of the decomposer: partition of
// 1..n, feasible consecutive pairs, nondecreasing drop-off times.
SolutionCheck verify_solution(const Instance& instance, const FleetSolution& solution);

// Everything the pipeline produces for one instance.
struct SolveResult {
    CompatibilityGraph graph;
    Matching matching;
    FleetSolution solution;
    IncompatibleCertificate certificate;
};

// Validate -> build graph -> maximum matching -> trajectories +
// certificate. In classical mode fleet size equals certificate size; in
// delta mode the pair comes with no equality guarantee.
SolveResult solve(const Instance& instance);

}  // namespace fleetmin
