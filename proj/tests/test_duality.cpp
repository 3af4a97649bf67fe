#include <algorithm>
#include <vector>

#include "doctest.h"
#include "duality.hpp"
#include "fixtures.hpp"
#include "ingest.hpp"
#include "rng.hpp"

using namespace fleetmin;
using namespace fleetmin::testing;

namespace {

bool cover_covers_all_edges(const CompatibilityGraph& g, const VertexCover& cover) {
    auto in = [](const std::vector<int>& v, int x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    for (int i = 1; i <= g.n; ++i) {
        for (int j : g.adj[static_cast<std::size_t>(i)]) {
            if (!in(cover.dropoff_side, i) && !in(cover.pickup_side, j)) return false;
        }
    }
    return true;
}

bool set_is_independent(const CompatibilityGraph& g, const IndependentSet& ind) {
    auto in = [](const std::vector<int>& v, int x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    for (int i : ind.dropoff_side) {
        for (int j : g.adj[static_cast<std::size_t>(i)]) {
            if (in(ind.pickup_side, j)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("koenig_cover: fixture traces") {
    auto ga = build_graph(fixture_a());
    auto cover_a = koenig_cover(ga, max_matching(ga));
    CHECK(cover_a.dropoff_side == std::vector<int>{1});
    CHECK(cover_a.pickup_side.empty());
    CHECK(cover_a.size() == 1);

    auto g1 = build_graph(single_trip_instance());
    auto cover_1 = koenig_cover(g1, max_matching(g1));
    CHECK(cover_1.size() == 0);

    auto gb = build_graph(fixture_b());
    auto cover_b = koenig_cover(gb, max_matching(gb));
    CHECK(cover_b.dropoff_side == std::vector<int>{1, 2});
    CHECK(cover_b.pickup_side.empty());
}

TEST_CASE("koenig_cover: rejects non-maximum matchings") {
    auto g = build_graph(fixture_a());
    Matching empty = Matching::from_successors(g.n, std::vector<int>(g.n + 1, 0));
    CHECK_THROWS_AS(koenig_cover(g, empty), Error);
    try {
        koenig_cover(g, empty);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidInput);
    }
}

TEST_CASE("independent_set: complements and certifies") {
    auto ga = build_graph(fixture_a());
    auto ind = independent_set(ga, koenig_cover(ga, max_matching(ga)));
    CHECK(ind.dropoff_side == std::vector<int>{2, 3});
    CHECK(ind.pickup_side == std::vector<int>{1, 2, 3});
    CHECK(ind.size() == 5);  // 2n - m = n + k = 3 + 2

    Instance two;
    two.model = TravelTimeModel::line();
    two.trips = {line_trip(1, 0, 0, 1, 1), line_trip(2, 9, 0, 8, 1)};  // no edges
    auto g2 = build_graph(two);
    auto ind2 = independent_set(g2, koenig_cover(g2, max_matching(g2)));
    CHECK(ind2.size() == 4);

    auto gb = build_graph(fixture_b());
    auto indb = independent_set(gb, koenig_cover(gb, max_matching(gb)));
    CHECK(indb.dropoff_side == std::vector<int>{3});
    CHECK(indb.pickup_side == std::vector<int>{1, 2, 3});
}

TEST_CASE("independent_set: rejects a non-cover") {
    auto g = build_graph(fixture_a());
    VertexCover not_cover;  // empty, but the graph has an edge
    CHECK_THROWS_AS(independent_set(g, not_cover), Error);
}

TEST_CASE("extract_pairs: counting construction") {
    IndependentSet ind;
    ind.dropoff_side = {2, 3};
    ind.pickup_side = {1, 2, 3};
    CHECK(extract_pairs(ind, 3) == std::vector<int>{2, 3});

    IndependentSet all;
    all.dropoff_side = {1, 2};
    all.pickup_side = {1, 2};
    CHECK(extract_pairs(all, 2) == std::vector<int>{1, 2});

    IndependentSet k0;
    k0.dropoff_side = {2};
    k0.pickup_side = {1};
    CHECK(extract_pairs(k0, 2).empty());

    IndependentSet tiny;
    tiny.pickup_side = {1};
    CHECK_THROWS_AS(extract_pairs(tiny, 2), Error);  // size < n
}

TEST_CASE("build_certificate: fixtures") {
    auto cert_a = build_certificate(fixture_a());
    CHECK(cert_a.trip_indices == std::vector<int>{2, 3});
    CHECK(verify_certificate(fixture_a(), cert_a));

    auto cert_1 = build_certificate(single_trip_instance());
    CHECK(cert_1.trip_indices == std::vector<int>{1});

    auto cert_b = build_certificate(fixture_b());
    CHECK(cert_b.trip_indices == std::vector<int>{3});
    CHECK(cert_b.size() == 1);
}

TEST_CASE("verify_certificate: accepts incompatible sets, rejects compatible pairs") {
    Instance a = fixture_a();
    CHECK(verify_certificate(a, IncompatibleCertificate{{2, 3}}));
    CHECK_FALSE(verify_certificate(a, IncompatibleCertificate{{1, 2}}));
    CHECK(verify_certificate(a, IncompatibleCertificate{{2}}));  // singleton
    CHECK(verify_certificate(a, IncompatibleCertificate{{}}));
    CHECK_THROWS_AS(verify_certificate(a, IncompatibleCertificate{{0}}), Error);
    CHECK_THROWS_AS(verify_certificate(a, IncompatibleCertificate{{4}}), Error);
}

TEST_CASE("koenig chain invariants over seeded instances") {
    for (int seed = 0; seed < 300; ++seed) {
        GeneratorConfig config;
        config.n = 1 + static_cast<int>(SplitMix64(derive_seed(31, seed)).below(14));
        config.model = (seed % 2 == 0) ? ModelKind::Euclidean : ModelKind::Manhattan;
        config.horizon = 3.0 + (seed % 6);
        config.seed = derive_seed(32, seed);
        if (seed % 6 == 5) config.delta = 0.2 * (seed % 5);
        Instance inst = generate_instance(config);
        auto g = build_graph(inst);
        auto m = max_matching(g);
        auto cover = koenig_cover(g, m);
        auto ind = independent_set(g, cover);
        CAPTURE(seed);
        REQUIRE(cover.size() == m.size());
        REQUIRE(cover_covers_all_edges(g, cover));
        REQUIRE(set_is_independent(g, ind));
        REQUIRE(ind.size() == 2 * g.n - m.size());

        auto k = extract_pairs(ind, g.n);
        REQUIRE(static_cast<int>(k.size()) == g.n - m.size());
        IncompatibleCertificate cert{k};
        REQUIRE(verify_certificate(inst, cert));  // holds in both modes
    }
}
