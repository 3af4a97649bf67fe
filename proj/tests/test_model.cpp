#include <cmath>
#include <limits>

#include "doctest.h"
#include "fixtures.hpp"
#include "model.hpp"
#include "rng.hpp"

using namespace fleetmin;
using namespace fleetmin::testing;

TEST_CASE("travel_time: analytic models") {
    CHECK(TravelTimeModel::line().travel_time({5, 0}, {12, 0}) == 7.0);
    CHECK(TravelTimeModel::euclidean().travel_time({0, 0}, {3, 4}) == 5.0);
    CHECK(TravelTimeModel::euclidean(2.0).travel_time({0, 0}, {3, 4}) == 2.5);
    CHECK(TravelTimeModel::manhattan().travel_time({0, 0}, {3, 4}) == 7.0);
    CHECK(TravelTimeModel::manhattan(2.0).travel_time({1, 1}, {-1, 2}) == 1.5);
    CHECK(TravelTimeModel::line().travel_time({4, 0}, {4, 0}) == 0.0);
}

TEST_CASE("travel_time: matrix lookup and bounds") {
    auto m = TravelTimeModel::matrix({{0, 2}, {2, 0}});
    CHECK(m.travel_time({0, 0}, {1, 0}) == 2.0);
    CHECK(m.travel_time({1, 0}, {1, 0}) == 0.0);
    CHECK_THROWS_AS(m.travel_time({0, 0}, {2, 0}), Error);  // site 2 out of range
    CHECK_THROWS_AS(m.travel_time({-1, 0}, {0, 0}), Error);
    CHECK_THROWS_AS(m.travel_time({0.5, 0}, {1, 0}), Error);  // non-integral site
}

TEST_CASE("travel_time: matrix may be asymmetric") {
    auto m = TravelTimeModel::matrix({{0, 1}, {9, 0}});
    CHECK(m.travel_time({0, 0}, {1, 0}) == 1.0);
    CHECK(m.travel_time({1, 0}, {0, 0}) == 9.0);
}

TEST_CASE("travel_time: analytic symmetry and triangle inequality") {
    SplitMix64 rng(2024);
    TravelTimeModel models[] = {TravelTimeModel::line(), TravelTimeModel::euclidean(1.7),
                                TravelTimeModel::manhattan(0.6)};
    for (int i = 0; i < 1000; ++i) {
        Location a{rng.uniform01() * 20 - 10, rng.uniform01() * 20 - 10};
        Location b{rng.uniform01() * 20 - 10, rng.uniform01() * 20 - 10};
        Location c{rng.uniform01() * 20 - 10, rng.uniform01() * 20 - 10};
        if (models[0].kind() == ModelKind::Line1D) {
            a.y = b.y = c.y = 0;
        }
        for (const auto& m : models) {
            CAPTURE(i);
            REQUIRE(m.travel_time(a, b) == m.travel_time(b, a));
            REQUIRE(m.travel_time(a, c) <= m.travel_time(a, b) + m.travel_time(b, c) + 1e-9);
            REQUIRE(m.travel_time(a, b) >= 0.0);
        }
    }
}

TEST_CASE("validate_instance: fixture A is clean under strict_metric") {
    auto report = validate_instance(fixture_a(), /*strict_metric=*/true);
    CHECK(report.ok());
    CHECK(report.to_string() == "");
}

TEST_CASE("validate_instance: dropoff before pickup") {
    Instance inst = single_trip_instance();
    inst.trips[0].pickup_time = 5;
    inst.trips[0].dropoff_time = 3;
    auto report = validate_instance(inst);
    CHECK_FALSE(report.ok());
    CHECK(report.has(ViolationKind::DropoffBeforePickup));
}

TEST_CASE("validate_instance: duplicate id") {
    Instance inst;
    inst.model = TravelTimeModel::line();
    inst.trips = {line_trip(7, 0, 0, 1, 1), line_trip(7, 2, 2, 3, 3)};
    auto report = validate_instance(inst);
    CHECK(report.has(ViolationKind::DuplicateId));
    // reported once, on the second occurrence
    int count = 0;
    for (const auto& v : report.violations) {
        if (v.kind == ViolationKind::DuplicateId) {
            ++count;
            CHECK(v.trip_index == 2);
        }
    }
    CHECK(count == 1);
}

TEST_CASE("validate_instance: empty instance, non-finite values, negative delta") {
    Instance inst;
    inst.model = TravelTimeModel::line();
    CHECK(validate_instance(inst).has(ViolationKind::EmptyInstance));

    inst = single_trip_instance();
    inst.trips[0].pickup.x = std::numeric_limits<double>::quiet_NaN();
    CHECK(validate_instance(inst).has(ViolationKind::NonFinite));

    inst = single_trip_instance();
    inst.trips[0].dropoff_time = std::numeric_limits<double>::infinity();
    CHECK(validate_instance(inst).has(ViolationKind::NonFinite));

    inst = single_trip_instance();
    inst.delta = -0.5;
    CHECK(validate_instance(inst).has(ViolationKind::NegativeDelta));

    inst = single_trip_instance();
    inst.delta = 0.0;  // zero delta is legal
    CHECK(validate_instance(inst).ok());
}

TEST_CASE("validate_instance: matrix shape and site indices") {
    Instance inst;
    inst.model = TravelTimeModel::matrix({{0, 1}, {1}});  // ragged
    inst.trips = {line_trip(1, 0, 0, 1, 1)};
    CHECK(validate_instance(inst).has(ViolationKind::MatrixShape));

    inst.model = TravelTimeModel::matrix({{0, 1}, {1, 0.5}});  // nonzero diagonal
    CHECK(validate_instance(inst).has(ViolationKind::MatrixShape));

    inst.model = TravelTimeModel::matrix({{0, -1}, {1, 0}});  // negative entry
    CHECK(validate_instance(inst).has(ViolationKind::MatrixShape));

    inst.model = TravelTimeModel::matrix({{0, 1}, {1, 0}});
    inst.trips = {line_trip(1, 0, 0, 5, 1)};  // site 5 does not exist
    CHECK(validate_instance(inst).has(ViolationKind::BadSiteIndex));

    inst.trips = {line_trip(1, 0, 0, 1, 1)};
    CHECK(validate_instance(inst).ok());
}

TEST_CASE("validate_instance: line model requires y = 0") {
    Instance inst = single_trip_instance();
    inst.trips[0].pickup.y = 0.25;
    CHECK(validate_instance(inst).has(ViolationKind::LineOffAxis));
}

TEST_CASE("validate_instance: strict_metric flags undersized durations only when asked") {
    Instance inst;
    inst.model = TravelTimeModel::line();
    // distance 10 but only 4 time units on the meter
    inst.trips = {line_trip(1, 0, 0, 10, 4)};
    CHECK(validate_instance(inst).ok());
    auto strict = validate_instance(inst, /*strict_metric=*/true);
    CHECK(strict.has(ViolationKind::MetricExcess));
}

TEST_CASE("validate_instance: idempotent and reports all problems at once") {
    Instance inst;
    inst.model = TravelTimeModel::line();
    inst.trips = {line_trip(1, 0, 5, 1, 3), line_trip(1, 0, 0, 1, 1)};
    inst.delta = -1;
    auto first = validate_instance(inst);
    auto second = validate_instance(inst);
    CHECK(first.violations.size() == second.violations.size());
    CHECK(first.has(ViolationKind::DropoffBeforePickup));
    CHECK(first.has(ViolationKind::DuplicateId));
    CHECK(first.has(ViolationKind::NegativeDelta));
    CHECK(first.violations.size() == 3);
}

TEST_CASE("zero-duration trips pass validation") {
    Instance inst;
    inst.model = TravelTimeModel::line();
    inst.trips = {line_trip(1, 2, 5, 2, 5)};
    CHECK(validate_instance(inst, true).ok());
}

TEST_CASE("splitmix64 reference sequence") {
    // First outputs for seed 1234567; pinned so generated instances stay
    // stable across platforms and future refactors.
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
    CHECK(rng.next() == 9817491932198370423ull);
    SplitMix64 zero(0);
    CHECK(zero.next() == 16294208416658607535ull);
    double u = SplitMix64(42).uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(derive_seed(5, 0) != derive_seed(5, 1));
    CHECK(derive_seed(5, 3) == derive_seed(5, 3));
}
