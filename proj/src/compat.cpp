#include "compat.hpp"

#include <algorithm>
#include <sstream>

namespace fleetmin {

bool CompatibilityGraph::has_edge(int i, int j) const {
    const auto& row = adj[static_cast<std::size_t>(i)];
    return std::binary_search(row.begin(), row.end(), j);
}

bool compatible_directed(const TravelTimeModel& model, const Trip& from, const Trip& to,
                         std::optional<double> delta) {
    if (from.id == to.id) {
        std::ostringstream msg;
        msg << "compatibility is defined only for distinct trips (got id " << from.id << " twice)";
        throw_invalid(msg.str());
    }
    double gap = to.pickup_time - from.dropoff_time;
    double travel = model.travel_time(from.dropoff, to.pickup);
    if (travel > gap) return false;
    if (delta && gap > travel + *delta) return false;
    return true;
}

bool compatible_pair(const TravelTimeModel& model, const Trip& a, const Trip& b,
                     std::optional<double> delta) {
    return compatible_directed(model, a, b, delta) || compatible_directed(model, b, a, delta);
}

CompatibilityGraph build_graph(const Instance& instance) {
    ValidationReport report = validate_instance(instance);
    if (!report.ok()) {
        throw_invalid("cannot build graph from an invalid instance:\n" + report.to_string());
    }
    const int n = instance.size();
    CompatibilityGraph graph;
    graph.n = n;
    graph.delta = instance.delta;
    graph.adj.assign(static_cast<std::size_t>(n) + 1, {});

    // Pickup indices sorted by pickup time; for drop-off i only the suffix
    // with T^p_j >= T^d_i can carry edges.
    std::vector<int> by_pickup(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) by_pickup[static_cast<std::size_t>(j) - 1] = j;
    std::sort(by_pickup.begin(), by_pickup.end(), [&](int a, int b) {
        double ta = instance.trip(a).pickup_time;
        double tb = instance.trip(b).pickup_time;
        return ta != tb ? ta < tb : a < b;
    });

    for (int i = 1; i <= n; ++i) {
        const Trip& from = instance.trip(i);
        auto first = std::partition_point(by_pickup.begin(), by_pickup.end(), [&](int j) {
            return instance.trip(j).pickup_time < from.dropoff_time;
        });
        auto& row = graph.adj[static_cast<std::size_t>(i)];
        for (auto it = first; it != by_pickup.end(); ++it) {
            int j = *it;
            if (j == i) continue;
            if (compatible_directed(instance.model, from, instance.trip(j), instance.delta)) {
                row.push_back(j);
            }
        }
        std::sort(row.begin(), row.end());
        graph.edge_count += row.size();
    }
    return graph;
}

}  // namespace fleetmin
