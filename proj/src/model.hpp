#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace fleetmin {

// Planar point for the analytic travel-time models. When the model is a
// matrix, x holds the site index (integral value) and y is unused.
struct Location {
    double x = 0.0;
    double y = 0.0;
};

// One historical ride: pickup at `pickup` at `pickup_time`, drop-off at
// `dropoff` at `dropoff_time`.
struct Trip {
    std::int64_t id = 0;
    Location pickup;
    double pickup_time = 0.0;
    Location dropoff;
    double dropoff_time = 0.0;
};

enum class ModelKind { Line1D, Euclidean, Manhattan, Matrix };

const char* model_kind_name(ModelKind kind);

// time(s, t): non-negative travel duration between two locations.
// Line/Euclidean/Manhattan are symmetric and satisfy the triangle
// inequality; a matrix model is whatever its table says.
class TravelTimeModel {
public:
    TravelTimeModel() : kind_(ModelKind::Line1D) {}

    static TravelTimeModel line();
    static TravelTimeModel euclidean(double speed = 1.0);
    static TravelTimeModel manhattan(double speed = 1.0);
    // Table is stored as given; shape problems are reported by
    // validate_instance rather than thrown here.
    static TravelTimeModel matrix(std::vector<std::vector<double>> table);

    ModelKind kind() const { return kind_; }
    double speed() const { return speed_; }
    std::size_t site_count() const { return sites_; }
    std::size_t row_length(std::size_t row) const { return row_lengths_[row]; }
    double matrix_entry(std::size_t from, std::size_t to) const;

    double travel_time(const Location& s, const Location& t) const;

private:
    ModelKind kind_;
    double speed_ = 1.0;
    std::size_t sites_ = 0;
    std::vector<double> table_;  // row-major sites_ x sites_
    std::vector<std::size_t> row_lengths_;  // as parsed, for shape validation
};

inline double travel_time(const TravelTimeModel& model, const Location& s, const Location& t) {
    return model.travel_time(s, t);
}

// Trips are indexed 1..n everywhere a trip index appears in this library.
struct Instance {
    std::vector<Trip> trips;
    TravelTimeModel model;
    std::optional<double> delta;  // absent = classical mode

    int size() const { return static_cast<int>(trips.size()); }
    // 1-based access.
    const Trip& trip(int index) const { return trips[static_cast<std::size_t>(index) - 1]; }
};

enum class ViolationKind {
    EmptyInstance,
    DropoffBeforePickup,
    DuplicateId,
    NonFinite,
    NegativeDelta,
    MatrixShape,
    BadSiteIndex,
    LineOffAxis,
    MetricExcess,  // time(p_i, d_i) > T^d_i - T^p_i, reported only under strict_metric
};

struct Violation {
    ViolationKind kind;
    int trip_index = 0;  // 1-based; 0 for instance-level problems
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    std::string to_string() const;
};

// Reports every violation it can find; never throws. `strict_metric`
// additionally requires each trip's duration to be at least the direct
// travel time between its own endpoints.
ValidationReport validate_instance(const Instance& instance, bool strict_metric = false);

}  // namespace fleetmin
