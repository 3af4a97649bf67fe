#pragma once

#include <vector>

#include "matching.hpp"

namespace fleetmin {

// Vertex cover of the compatibility graph, split by side. Constructed
// covers always have |dropoff_side| + |pickup_side| = matching size.
struct VertexCover {
    std::vector<int> dropoff_side;  // sorted drop-off indices
    std::vector<int> pickup_side;   // sorted pickup indices

    int size() const { return static_cast<int>(dropoff_side.size() + pickup_side.size()); }
};

// Complement of a vertex cover: no edge joins two members.
struct IndependentSet {
    std::vector<int> dropoff_side;
    std::vector<int> pickup_side;

    int size() const { return static_cast<int>(dropoff_side.size() + pickup_side.size()); }
};

// A set K of trip indices in which every pair is incompatible. In
// classical mode its size equals n minus the maximum matching size, which
// makes it an optimality certificate for the fleet solution.
struct IncompatibleCertificate {
    std::vector<int> trip_indices;  // sorted ascending

    int size() const { return static_cast<int>(trip_indices.size()); }
};

// Constructive Koenig: with U the unmatched drop-offs and Z everything
// reachable from U by alternating paths (unmatched edges D->P, matched
// edges P->D), the cover is (D \ Z) u (P n Z). Requires a maximum
// matching; rejects anything else via the augmenting-path test.
VertexCover koenig_cover(const CompatibilityGraph& graph, const Matching& matching);

// Complements the cover over all 2n nodes and certifies independence.
IndependentSet independent_set(const CompatibilityGraph& graph, const VertexCover& cover);

// From an independent set of size n + k, picks the k smallest indices j
// with both d_j and p_j in the set. The counting argument guarantees at
// least k such indices exist.
std::vector<int> extract_pairs(const IndependentSet& ind, int n);

// Full pipeline: build_graph -> max_matching -> koenig_cover ->
// independent_set -> extract_pairs.
IncompatibleCertificate build_certificate(const Instance& instance);

// Same pipeline when graph and matching are already available.
IncompatibleCertificate certificate_from_matching(const CompatibilityGraph& graph,
                                                  const Matching& matching);

// True iff every unordered pair in the certificate is incompatible under
// the instance's mode. Checks the predicate directly; does not trust the
// construction.
bool verify_certificate(const Instance& instance, const IncompatibleCertificate& cert);

}  // namespace fleetmin
