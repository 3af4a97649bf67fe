#include <utility>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "ingest.hpp"
#include "matching.hpp"
#include "oracle.hpp"
#include "rng.hpp"

using namespace fleetmin;
using namespace fleetmin::testing;

TEST_CASE("max_matching: fixtures") {
    auto ma = max_matching(build_graph(fixture_a()));
    CHECK(ma.size() == 1);
    CHECK(ma.pairs == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(ma.successor[1] == 2);
    CHECK(ma.predecessor[2] == 1);

    auto m1 = max_matching(build_graph(single_trip_instance()));
    CHECK(m1.size() == 0);

    auto mb = max_matching(build_graph(fixture_b()));
    CHECK(mb.size() == 2);
    CHECK(mb.pairs == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

    auto mbd = max_matching(build_graph(fixture_b(1.0)));
    CHECK(mbd.size() == 2);
    CHECK(mbd.pairs == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
}

TEST_CASE("max_matching: determinism") {
    GeneratorConfig config;
    config.n = 30;
    config.seed = 5;
    config.horizon = 4;
    Instance inst = generate_instance(config);
    auto g = build_graph(inst);
    auto first = max_matching(g);
    auto second = max_matching(g);
    CHECK(first.pairs == second.pairs);
    CHECK(first.successor == second.successor);
}

TEST_CASE("verify_matching: accepts the real thing") {
    auto g = build_graph(fixture_a());
    auto m = max_matching(g);
    auto check = verify_matching(g, m);
    CHECK(check.ok());
    CHECK(check.fault == MatchingFault::None);
}

TEST_CASE("verify_matching: empty matching on fixture A is not maximum") {
    auto g = build_graph(fixture_a());
    Matching empty = Matching::from_successors(g.n, std::vector<int>(g.n + 1, 0));
    auto check = verify_matching(g, empty);
    CHECK_FALSE(check.ok());
    CHECK(check.fault == MatchingFault::AugmentingPath);
}

TEST_CASE("verify_matching: duplicate endpoint") {
    auto g = build_graph(fixture_b());
    Matching m;
    m.pairs = {{1, 2}, {1, 3}};
    m.successor.assign(g.n + 1, 0);
    m.predecessor.assign(g.n + 1, 0);
    m.successor[1] = 2;
    m.predecessor[2] = 1;
    m.predecessor[3] = 1;
    auto check = verify_matching(g, m);
    CHECK_FALSE(check.ok());
    CHECK(check.fault == MatchingFault::DuplicateEndpoint);
}

TEST_CASE("verify_matching: non-edge pair") {
    auto g = build_graph(fixture_a());
    std::vector<int> succ(g.n + 1, 0);
    succ[2] = 1;  // (2,1) is not an edge
    auto check = verify_matching(g, Matching::from_successors(g.n, succ));
    CHECK_FALSE(check.ok());
    CHECK(check.fault == MatchingFault::NonEdgePair);
}

TEST_CASE("verify_matching: inconsistent maps") {
    auto g = build_graph(fixture_a());
    Matching m;
    m.pairs = {{1, 2}};
    m.successor.assign(g.n + 1, 0);
    m.predecessor.assign(g.n + 1, 0);
    m.successor[1] = 2;  // predecessor side missing
    auto check = verify_matching(g, m);
    CHECK_FALSE(check.ok());
    CHECK(check.fault == MatchingFault::SizeMismatch);
}

TEST_CASE("max_matching agrees with the exhaustive oracle") {
    for (int seed = 0; seed < 300; ++seed) {
        GeneratorConfig config;
        config.n = 1 + static_cast<int>(SplitMix64(derive_seed(21, seed)).below(10));
        config.model = (seed % 2 == 0) ? ModelKind::Euclidean : ModelKind::Line1D;
        config.horizon = 3.0 + (seed % 5);
        config.slack = 1.0 + 0.05 * (seed % 5);
        config.seed = derive_seed(22, seed);
        if (seed % 4 == 3) config.delta = 0.25 * (seed % 8);
        Instance inst = generate_instance(config);
        auto g = build_graph(inst);
        auto m = max_matching(g);
        CAPTURE(seed);
        REQUIRE(m.size() == brute_max_matching(g));
        REQUIRE(verify_matching(g, m).ok());
        REQUIRE(m.size() <= g.n);
        REQUIRE((m.size() == 0) == (g.edge_count == 0));
    }
}
