#include "duality.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace fleetmin {

VertexCover koenig_cover(const CompatibilityGraph& graph, const Matching& matching) {
    const int n = graph.n;
    std::vector<char> in_z_d(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> in_z_p(static_cast<std::size_t>(n) + 1, 0);

    std::queue<int> queue;
    for (int i = 1; i <= n; ++i) {
        if (matching.successor[i] == 0) {
            in_z_d[i] = 1;
            queue.push(i);
        }
    }
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop();
        for (int j : graph.adj[i]) {
            if (matching.successor[i] == j) continue;  // alternating: leave D on unmatched edges
            if (in_z_p[j]) continue;
            in_z_p[j] = 1;
            int owner = matching.predecessor[j];
            if (owner == 0) {
                // A free pickup reachable from a free drop-off is an
                // augmenting path, so the input was not maximum.
                std::ostringstream msg;
                msg << "matching is not maximum: augmenting path reaches free pickup " << j;
                throw_invalid(msg.str());
            }
            if (!in_z_d[owner]) {
                in_z_d[owner] = 1;
                queue.push(owner);
            }
        }
    }

    VertexCover cover;
    for (int i = 1; i <= n; ++i) {
        if (!in_z_d[i]) cover.dropoff_side.push_back(i);
    }
    for (int j = 1; j <= n; ++j) {
        if (in_z_p[j]) cover.pickup_side.push_back(j);
    }
    if (cover.size() != matching.size()) {
        std::ostringstream msg;
        msg << "Koenig cover size " << cover.size() << " != matching size " << matching.size();
        throw_internal(msg.str());
    }
    return cover;
}

IndependentSet independent_set(const CompatibilityGraph& graph, const VertexCover& cover) {
    const int n = graph.n;
    std::vector<char> cov_d(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> cov_p(static_cast<std::size_t>(n) + 1, 0);
    for (int i : cover.dropoff_side) cov_d[i] = 1;
    for (int j : cover.pickup_side) cov_p[j] = 1;

    IndependentSet ind;
    for (int i = 1; i <= n; ++i) {
        if (!cov_d[i]) ind.dropoff_side.push_back(i);
    }
    for (int j = 1; j <= n; ++j) {
        if (!cov_p[j]) ind.pickup_side.push_back(j);
    }
    // Independence certification: an edge with both ends outside the
    // cover means the input was not a vertex cover at all.
    for (int i = 1; i <= n; ++i) {
        if (cov_d[i]) continue;
        for (int j : graph.adj[i]) {
            if (!cov_p[j]) {
                std::ostringstream msg;
                msg << "edge (" << i << "," << j << ") is not covered; complement is not independent";
                throw_invalid(msg.str());
            }
        }
    }
    return ind;
}

std::vector<int> extract_pairs(const IndependentSet& ind, int n) {
    if (ind.size() < n) {
        std::ostringstream msg;
        msg << "independent set of size " << ind.size() << " is smaller than n = " << n;
        throw_invalid(msg.str());
    }
    const int k = ind.size() - n;
    std::vector<char> has_d(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> has_p(static_cast<std::size_t>(n) + 1, 0);
    for (int i : ind.dropoff_side) has_d[i] = 1;
    for (int j : ind.pickup_side) has_p[j] = 1;

    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= n && static_cast<int>(picked.size()) < k; ++j) {
        if (has_d[j] && has_p[j]) picked.push_back(j);
    }
    if (static_cast<int>(picked.size()) != k) {
        throw_internal("fewer than k indices carry both nodes; counting argument violated");
    }
    return picked;
}

IncompatibleCertificate certificate_from_matching(const CompatibilityGraph& graph,
                                                  const Matching& matching) {
    VertexCover cover = koenig_cover(graph, matching);
    IndependentSet ind = independent_set(graph, cover);
    return IncompatibleCertificate{extract_pairs(ind, graph.n)};
}

IncompatibleCertificate build_certificate(const Instance& instance) {
    ValidationReport report = validate_instance(instance);
    if (!report.ok()) {
        throw_invalid("invalid instance:\n" + report.to_string());
    }
    CompatibilityGraph graph = build_graph(instance);
    Matching matching = max_matching(graph);
    return certificate_from_matching(graph, matching);
}

bool verify_certificate(const Instance& instance, const IncompatibleCertificate& cert) {
    const int n = instance.size();
    for (int idx : cert.trip_indices) {
        if (idx < 1 || idx > n) {
            std::ostringstream msg;
            msg << "certificate index " << idx << " out of range 1.." << n;
            throw_invalid(msg.str());
        }
    }
    for (std::size_t a = 0; a < cert.trip_indices.size(); ++a) {
        for (std::size_t b = a + 1; b < cert.trip_indices.size(); ++b) {
            const Trip& ta = instance.trip(cert.trip_indices[a]);
            const Trip& tb = instance.trip(cert.trip_indices[b]);
            if (compatible_pair(instance.model, ta, tb, instance.delta)) return false;
        }
    }
    return true;
}

}  // namespace fleetmin
