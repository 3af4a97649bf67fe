#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fleet.hpp"
#include "rng.hpp"

namespace fleetmin {

// Seeded synthetic instance generator. Locations are drawn uniformly
// from the unit square (1D line for the line model); pickup times from
// [0, horizon); trip duration is slack * time(pickup, dropoff), so any
// slack >= 1 with an analytic model yields a strict-metric instance.
struct GeneratorConfig {
    int n = 1;
    double horizon = 10.0;
    ModelKind model = ModelKind::Euclidean;
    double speed = 1.0;
    std::uint64_t seed = 0;
    double slack = 1.2;
    std::optional<double> delta;
};

Instance generate_instance(const GeneratorConfig& config);

// Trips CSV: UTF-8, LF, header `id,px,py,pt,dx,dy,dt`, decimal floats,
// comma-separated, no quoting. Floats are written with the shortest
// round-trip-exact representation, so write/parse is bit-exact.
std::vector<Trip> parse_trips_csv(std::istream& in);
std::vector<Trip> load_trips_csv(const std::string& path);
void write_trips_csv(const std::vector<Trip>& trips, std::ostream& out);
void save_trips_csv(const std::vector<Trip>& trips, const std::string& path);

// Travel-time matrix file: first line n, then n rows of n non-negative
// decimals, whitespace-separated, zero diagonal.
std::vector<std::vector<double>> parse_travel_matrix(std::istream& in);
std::vector<std::vector<double>> load_travel_matrix(const std::string& path);

// Shortest representation that parses back to the identical double.
std::string format_double(double value);

// In-memory mirror of the solution JSON schema. Trip references are ids,
// not positional indices.
struct SolutionDocument {
    int n = 0;
    std::optional<double> delta;
    std::int64_t edge_count = 0;
    int matching_size = 0;
    int fleet_size = 0;
    std::vector<std::vector<std::int64_t>> trajectories;
    std::vector<std::int64_t> certificate;
    int certificate_size = 0;
    std::optional<int> min_max_gap;
};

// Assembles the document for a solved instance. In classical mode
// min_max_gap is fleet_size - certificate_size; in delta mode it is the
// supplied brute-force gap (absent = null).
SolutionDocument make_document(const Instance& instance, const SolveResult& result,
                               std::optional<int> delta_mode_gap = std::nullopt);

std::string document_to_json(const SolutionDocument& doc);
void write_solution_json(const SolutionDocument& doc, std::ostream& out);
void save_solution_json(const SolutionDocument& doc, const std::string& path);
SolutionDocument parse_solution_json(const std::string& text);
SolutionDocument load_solution_json(const std::string& path);

// Rebuilds core objects from a document against an instance, mapping ids
// to indices. Unknown ids or count mismatches are verification failures.
FleetSolution solution_from_document(const Instance& instance, const SolutionDocument& doc);
IncompatibleCertificate certificate_from_document(const Instance& instance,
                                                  const SolutionDocument& doc);

}  // namespace fleetmin
