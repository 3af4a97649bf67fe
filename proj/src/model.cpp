#include "model.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

namespace fleetmin {

const char* model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Line1D: return "line";
        case ModelKind::Euclidean: return "euclidean";
        case ModelKind::Manhattan: return "manhattan";
        case ModelKind::Matrix: return "matrix";
    }
    return "?";
}

TravelTimeModel TravelTimeModel::line() {
    TravelTimeModel m;
    m.kind_ = ModelKind::Line1D;
    return m;
}

TravelTimeModel TravelTimeModel::euclidean(double speed) {
    if (!(speed > 0.0)) throw_invalid("speed must be positive");
    TravelTimeModel m;
    m.kind_ = ModelKind::Euclidean;
    m.speed_ = speed;
    return m;
}

TravelTimeModel TravelTimeModel::manhattan(double speed) {
    if (!(speed > 0.0)) throw_invalid("speed must be positive");
    TravelTimeModel m;
    m.kind_ = ModelKind::Manhattan;
    m.speed_ = speed;
    return m;
}

TravelTimeModel TravelTimeModel::matrix(std::vector<std::vector<double>> table) {
    TravelTimeModel m;
    m.kind_ = ModelKind::Matrix;
    m.sites_ = table.size();
    m.row_lengths_.reserve(table.size());
    for (const auto& row : table) {
        m.row_lengths_.push_back(row.size());
        for (std::size_t c = 0; c < m.sites_; ++c) {
            m.table_.push_back(c < row.size() ? row[c] : 0.0);
        }
    }
    return m;
}

double TravelTimeModel::matrix_entry(std::size_t from, std::size_t to) const {
    return table_[from * sites_ + to];
}

namespace {

std::size_t site_of(const Location& loc, std::size_t sites, const char* role) {
    double integral = 0.0;
    if (!std::isfinite(loc.x) || std::modf(loc.x, &integral) != 0.0 || loc.x < 0.0 ||
        loc.x >= static_cast<double>(sites)) {
        std::ostringstream msg;
        msg << role << " site index " << loc.x << " outside matrix of " << sites << " sites";
        throw_invalid(msg.str());
    }
    return static_cast<std::size_t>(loc.x);
}

}  // namespace

double TravelTimeModel::travel_time(const Location& s, const Location& t) const {
    switch (kind_) {
        case ModelKind::Line1D:
            return std::abs(s.x - t.x);
        case ModelKind::Euclidean:
            return std::hypot(s.x - t.x, s.y - t.y) / speed_;
        case ModelKind::Manhattan:
            return (std::abs(s.x - t.x) + std::abs(s.y - t.y)) / speed_;
        case ModelKind::Matrix:
            return matrix_entry(site_of(s, sites_, "from"), site_of(t, sites_, "to"));
    }
    throw_internal("unknown travel-time model kind");
}

bool ValidationReport::has(ViolationKind kind) const {
    for (const auto& v : violations) {
        if (v.kind == kind) return true;
    }
    return false;
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& v : violations) {
        if (v.trip_index > 0) out << "trip " << v.trip_index << ": ";
        out << v.message << "\n";
    }
    return out.str();
}

namespace {

bool finite(const Location& loc) { return std::isfinite(loc.x) && std::isfinite(loc.y); }

bool valid_site(const Location& loc, std::size_t sites) {
    double integral = 0.0;
    return std::isfinite(loc.x) && std::modf(loc.x, &integral) == 0.0 && loc.x >= 0.0 &&
           loc.x < static_cast<double>(sites);
}

void report(ValidationReport& rep, ViolationKind kind, int trip, std::string message) {
    rep.violations.push_back(Violation{kind, trip, std::move(message)});
}

void check_model(const Instance& instance, ValidationReport& rep) {
    const TravelTimeModel& m = instance.model;
    if (m.kind() != ModelKind::Matrix) return;
    bool shape_ok = true;
    if (m.site_count() == 0) {
        report(rep, ViolationKind::MatrixShape, 0, "travel-time matrix is empty");
        shape_ok = false;
    }
    for (std::size_t r = 0; r < m.site_count(); ++r) {
        std::size_t len = m.row_length(r);
        if (len != m.site_count()) {
            std::ostringstream msg;
            msg << "matrix row " << r << " has " << len << " entries, expected " << m.site_count();
            report(rep, ViolationKind::MatrixShape, 0, msg.str());
            shape_ok = false;
        }
    }
    if (!shape_ok) return;
    for (std::size_t r = 0; r < m.site_count(); ++r) {
        for (std::size_t c = 0; c < m.site_count(); ++c) {
            double v = m.matrix_entry(r, c);
            if (!std::isfinite(v) || v < 0.0) {
                std::ostringstream msg;
                msg << "matrix entry (" << r << "," << c << ") is " << v << ", must be finite and non-negative";
                report(rep, ViolationKind::MatrixShape, 0, msg.str());
            } else if (r == c && v != 0.0) {
                std::ostringstream msg;
                msg << "matrix diagonal entry (" << r << "," << r << ") is " << v << ", must be 0";
                report(rep, ViolationKind::MatrixShape, 0, msg.str());
            }
        }
    }
}

}  // namespace

ValidationReport validate_instance(const Instance& instance, bool strict_metric) {
    ValidationReport rep;
    if (instance.trips.empty()) {
        report(rep, ViolationKind::EmptyInstance, 0, "instance has no trips");
    }
    if (instance.delta) {
        if (!std::isfinite(*instance.delta)) {
            report(rep, ViolationKind::NonFinite, 0, "delta is not finite");
        } else if (*instance.delta < 0.0) {
            report(rep, ViolationKind::NegativeDelta, 0, "delta is negative");
        }
    }
    check_model(instance, rep);
    bool model_usable = !rep.has(ViolationKind::MatrixShape);

    std::unordered_map<std::int64_t, int> seen_ids;
    for (int i = 1; i <= instance.size(); ++i) {
        const Trip& t = instance.trip(i);
        if (t.id < 0) {
            report(rep, ViolationKind::DuplicateId, i, "id must be a non-negative integer");
        }
        auto [it, inserted] = seen_ids.emplace(t.id, i);
        if (!inserted) {
            std::ostringstream msg;
            msg << "duplicate id " << t.id << " (also used by trip " << it->second << ")";
            report(rep, ViolationKind::DuplicateId, i, msg.str());
        }
        bool coords_ok = finite(t.pickup) && finite(t.dropoff);
        if (!coords_ok) {
            report(rep, ViolationKind::NonFinite, i, "coordinates must be finite");
        }
        if (!std::isfinite(t.pickup_time) || !std::isfinite(t.dropoff_time)) {
            report(rep, ViolationKind::NonFinite, i, "times must be finite");
        } else if (t.dropoff_time < t.pickup_time) {
            report(rep, ViolationKind::DropoffBeforePickup, i, "dropoff before pickup");
        }
        switch (instance.model.kind()) {
            case ModelKind::Line1D:
                if (coords_ok && (t.pickup.y != 0.0 || t.dropoff.y != 0.0)) {
                    report(rep, ViolationKind::LineOffAxis, i, "line model requires y = 0");
                }
                break;
            case ModelKind::Matrix:
                if (model_usable && (!valid_site(t.pickup, instance.model.site_count()) ||
                                     !valid_site(t.dropoff, instance.model.site_count()))) {
                    report(rep, ViolationKind::BadSiteIndex, i, "location is not a valid site index");
                }
                break;
            default:
                break;
        }
    }

    if (strict_metric && model_usable) {
        for (int i = 1; i <= instance.size(); ++i) {
            const Trip& t = instance.trip(i);
            if (!finite(t.pickup) || !finite(t.dropoff)) continue;
            if (!std::isfinite(t.pickup_time) || !std::isfinite(t.dropoff_time)) continue;
            if (instance.model.kind() == ModelKind::Matrix &&
                (!valid_site(t.pickup, instance.model.site_count()) ||
                 !valid_site(t.dropoff, instance.model.site_count()))) {
                continue;
            }
            double direct = instance.model.travel_time(t.pickup, t.dropoff);
            if (direct > t.dropoff_time - t.pickup_time) {
                std::ostringstream msg;
                msg << "trip duration " << (t.dropoff_time - t.pickup_time)
                    << " is shorter than direct travel time " << direct;
                report(rep, ViolationKind::MetricExcess, i, msg.str());
            }
        }
    }
    return rep;
}

}  // namespace fleetmin
