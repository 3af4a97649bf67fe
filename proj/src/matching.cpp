#include "matching.hpp"

#include <limits>
#include <queue>
#include <sstream>

namespace fleetmin {

namespace {
constexpr int kNil = 0;
constexpr int kInf = std::numeric_limits<int>::max();
}  // namespace

Matching Matching::from_successors(int n, const std::vector<int>& successor) {
    Matching m;
    m.successor = successor;
    m.successor.resize(static_cast<std::size_t>(n) + 1, kNil);
    m.predecessor.assign(static_cast<std::size_t>(n) + 1, kNil);
    for (int i = 1; i <= n; ++i) {
        int j = m.successor[static_cast<std::size_t>(i)];
        if (j != kNil) {
            m.pairs.emplace_back(i, j);
            m.predecessor[static_cast<std::size_t>(j)] = i;
        }
    }
    return m;
}

namespace {

// Textbook Hopcroft-Karp with index 0 as the NIL sentinel; dist[0]
// doubles as the length of the current phase's shortest augmenting path.
struct HopcroftKarp {
    const CompatibilityGraph& g;
    std::vector<int> match_d;  // drop-off -> pickup
    std::vector<int> match_p;  // pickup -> drop-off
    std::vector<int> dist;

    explicit HopcroftKarp(const CompatibilityGraph& graph)
        : g(graph),
          match_d(static_cast<std::size_t>(graph.n) + 1, kNil),
          match_p(static_cast<std::size_t>(graph.n) + 1, kNil),
          dist(static_cast<std::size_t>(graph.n) + 1, 0) {}

    bool bfs() {
        std::queue<int> queue;
        for (int i = 1; i <= g.n; ++i) {
            if (match_d[i] == kNil) {
                dist[i] = 0;
                queue.push(i);
            } else {
                dist[i] = kInf;
            }
        }
        dist[kNil] = kInf;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop();
            if (dist[i] >= dist[kNil]) continue;
            for (int j : g.adj[i]) {
                int owner = match_p[j];
                if (dist[owner] == kInf) {
                    dist[owner] = dist[i] + 1;
                    if (owner != kNil) queue.push(owner);
                }
            }
        }
        return dist[kNil] != kInf;
    }

    bool dfs(int i) {
        if (i == kNil) return true;
        for (int j : g.adj[i]) {
            int owner = match_p[j];
            if (dist[owner] == dist[i] + 1 && dfs(owner)) {
                match_d[i] = j;
                match_p[j] = i;
                return true;
            }
        }
        dist[i] = kInf;
        return false;
    }

    void run() {
        while (bfs()) {
            for (int i = 1; i <= g.n; ++i) {
                if (match_d[i] == kNil) dfs(i);
            }
        }
    }
};

}  // namespace

Matching max_matching(const CompatibilityGraph& graph) {
    HopcroftKarp hk(graph);
    hk.run();
    return Matching::from_successors(graph.n, hk.match_d);
}

namespace {

MatchingCheck fail(MatchingFault fault, const std::string& detail) {
    return MatchingCheck{fault, detail};
}

// True iff an alternating path from some unmatched drop-off reaches an
// unmatched pickup: unmatched edges D->P, matched edges P->D.
bool augmenting_path_exists(const CompatibilityGraph& graph, const Matching& m) {
    std::vector<char> seen(static_cast<std::size_t>(graph.n) + 1, 0);
    std::queue<int> queue;
    for (int i = 1; i <= graph.n; ++i) {
        if (m.successor[i] == kNil) {
            seen[i] = 1;
            queue.push(i);
        }
    }
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop();
        for (int j : graph.adj[i]) {
            int owner = m.predecessor[j];
            if (owner == kNil) return true;
            if (owner != i && !seen[owner]) {
                seen[owner] = 1;
                queue.push(owner);
            }
        }
    }
    return false;
}

}  // namespace

MatchingCheck verify_matching(const CompatibilityGraph& graph, const Matching& matching) {
    const std::size_t want = static_cast<std::size_t>(graph.n) + 1;
    if (matching.successor.size() != want || matching.predecessor.size() != want) {
        return fail(MatchingFault::SizeMismatch, "successor/predecessor maps have the wrong size");
    }
    std::vector<char> used_d(want, 0), used_p(want, 0);
    std::size_t mapped = 0;
    for (const auto& [i, j] : matching.pairs) {
        if (i < 1 || i > graph.n || j < 1 || j > graph.n) {
            return fail(MatchingFault::NonEdgePair, "pair endpoint out of range");
        }
        if (!graph.has_edge(i, j)) {
            std::ostringstream msg;
            msg << "pair (" << i << "," << j << ") is not an edge of the graph";
            return fail(MatchingFault::NonEdgePair, msg.str());
        }
        if (used_d[i]++) {
            std::ostringstream msg;
            msg << "duplicate endpoint: drop-off " << i << " used twice";
            return fail(MatchingFault::DuplicateEndpoint, msg.str());
        }
        if (used_p[j]++) {
            std::ostringstream msg;
            msg << "duplicate endpoint: pickup " << j << " used twice";
            return fail(MatchingFault::DuplicateEndpoint, msg.str());
        }
        if (matching.successor[i] != j || matching.predecessor[j] != i) {
            return fail(MatchingFault::SizeMismatch, "successor/predecessor maps disagree with pairs");
        }
    }
    for (int v = 1; v <= graph.n; ++v) {
        if (matching.successor[v] != kNil) ++mapped;
        if (matching.predecessor[v] != kNil) {
            if (matching.successor[matching.predecessor[v]] != v) {
                return fail(MatchingFault::SizeMismatch, "predecessor map entry has no matching successor");
            }
        }
    }
    if (mapped != matching.pairs.size()) {
        return fail(MatchingFault::SizeMismatch, "successor map entries do not match pair list");
    }
    if (augmenting_path_exists(graph, matching)) {
        return fail(MatchingFault::AugmentingPath, "augmenting path found; matching is not maximum");
    }
    return MatchingCheck{};
}

}  // namespace fleetmin
