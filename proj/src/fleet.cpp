#include "fleet.hpp"

#include <sstream>

namespace fleetmin {

FleetSolution decompose_trajectories(const Instance& instance, const Matching& matching) {
    const int n = instance.size();
    FleetSolution solution;
    solution.matching_size = matching.size();

    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (matching.predecessor[start] != 0) continue;  // pickup matched to an earlier drop-off
        Trajectory traj;
        int cur = start;
        while (true) {
            if (visited[cur]) {
                std::ostringstream msg;
                msg << "successor cycle while building trajectory at trip " << cur;
                throw_internal(msg.str());
            }
            visited[cur] = 1;
            traj.trip_indices.push_back(cur);
            int next = matching.successor[cur];
            if (next == 0) break;
            cur = next;
        }
        solution.trajectories.push_back(std::move(traj));
    }

    for (int i = 1; i <= n; ++i) {
        if (!visited[i]) {
            // Every unvisited trip sits on a successor cycle: it has a
            // predecessor, so no trajectory ever starts there.
            std::ostringstream msg;
            msg << "successor cycle detected: trip " << i << " is unreachable from any trajectory start";
            throw_internal(msg.str());
        }
    }
    if (solution.fleet_size() != n - matching.size()) {
        std::ostringstream msg;
        msg << "trajectory count " << solution.fleet_size() << " != n - m = " << (n - matching.size());
        throw_internal(msg.str());
    }
    return solution;
}

SolutionCheck verify_solution(const Instance& instance, const FleetSolution& solution) {
    const int n = instance.size();
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const Trajectory& traj : solution.trajectories) {
        for (int idx : traj.trip_indices) {
            if (idx < 1 || idx > n) {
                std::ostringstream msg;
                msg << "trip index " << idx << " out of range 1.." << n;
                return SolutionCheck{SolutionFault::BadIndex, msg.str()};
            }
            if (seen[idx]++) {
                std::ostringstream msg;
                msg << "duplicate trip " << idx;
                return SolutionCheck{SolutionFault::DuplicateTrip, msg.str()};
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (!seen[i]) {
            std::ostringstream msg;
            msg << "missing trip " << i;
            return SolutionCheck{SolutionFault::MissingTrip, msg.str()};
        }
    }
    for (const Trajectory& traj : solution.trajectories) {
        for (std::size_t s = 0; s + 1 < traj.trip_indices.size(); ++s) {
            int a = traj.trip_indices[s];
            int b = traj.trip_indices[s + 1];
            if (!compatible_directed(instance.model, instance.trip(a), instance.trip(b),
                                     instance.delta)) {
                std::ostringstream msg;
                msg << "infeasible consecutive pair (" << a << "," << b << ")";
                return SolutionCheck{SolutionFault::InfeasiblePair, msg.str()};
            }
            if (instance.trip(b).dropoff_time < instance.trip(a).dropoff_time) {
                std::ostringstream msg;
                msg << "drop-off times decrease from trip " << a << " to trip " << b;
                return SolutionCheck{SolutionFault::OrderViolation, msg.str()};
            }
        }
    }
    return SolutionCheck{};
}

SolveResult solve(const Instance& instance) {
    ValidationReport report = validate_instance(instance);
    if (!report.ok()) {
        throw_invalid("invalid instance:\n" + report.to_string());
    }
    SolveResult result;
    result.graph = build_graph(instance);
    result.matching = max_matching(result.graph);
    result.solution = decompose_trajectories(instance, result.matching);
    result.certificate = certificate_from_matching(result.graph, result.matching);
    return result;
}

}  // namespace fleetmin
