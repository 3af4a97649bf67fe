#pragma once

// Shared hand-checked instances. Fixture A is the classical reference
// (fleet 2, certificate {2,3}); fixture B is the delta-mode chain whose
// brute-force max incompatible set (2) exceeds its fleet size (1).

#include <optional>

#include "model.hpp"

namespace fleetmin::testing {

// 1D trip on the line model; y is always 0.
inline Trip line_trip(std::int64_t id, double px, double pt, double dx, double dt) {
    Trip t;
    t.id = id;
    t.pickup = {px, 0.0};
    t.pickup_time = pt;
    t.dropoff = {dx, 0.0};
    t.dropoff_time = dt;
    return t;
}

inline Instance fixture_a() {
    Instance instance;
    instance.model = TravelTimeModel::line();
    instance.trips = {
        line_trip(1, 0, 0, 10, 10),
        line_trip(2, 12, 13, 20, 21),
        line_trip(3, 0, 2, 5, 7),
    };
    return instance;
}

inline Instance fixture_b(std::optional<double> delta = std::nullopt) {
    Instance instance;
    instance.model = TravelTimeModel::line();
    instance.delta = delta;
    instance.trips = {
        line_trip(1, 0, 0, 1, 1),
        line_trip(2, 2, 3, 3, 4),
        line_trip(3, 4, 6, 5, 7),
    };
    return instance;
}

inline Instance single_trip_instance() {
    Instance instance;
    instance.model = TravelTimeModel::line();
    instance.trips = {line_trip(7, 0, 0, 3, 3)};
    return instance;
}

}  // namespace fleetmin::testing
