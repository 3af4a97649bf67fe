#include "ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace fleetmin {

using ordered_json = nlohmann::ordered_json;

Instance generate_instance(const GeneratorConfig& config) {
    if (config.n < 1) throw_invalid("generator: n must be at least 1");
    if (!(config.horizon >= 0.0) || !std::isfinite(config.horizon)) {
        throw_invalid("generator: horizon must be finite and non-negative");
    }
    if (!(config.slack >= 1.0) || !std::isfinite(config.slack)) {
        throw_invalid("generator: slack must be a finite factor >= 1");
    }
    if (!(config.speed > 0.0) || !std::isfinite(config.speed)) {
        throw_invalid("generator: speed must be positive");
    }
    if (config.delta && (!std::isfinite(*config.delta) || *config.delta < 0.0)) {
        throw_invalid("generator: delta must be finite and non-negative");
    }

    Instance instance;
    instance.delta = config.delta;
    switch (config.model) {
        case ModelKind::Line1D:
            instance.model = TravelTimeModel::line();
            break;
        case ModelKind::Euclidean:
            instance.model = TravelTimeModel::euclidean(config.speed);
            break;
        case ModelKind::Manhattan:
            instance.model = TravelTimeModel::manhattan(config.speed);
            break;
        case ModelKind::Matrix:
            throw_invalid("generator: matrix models are not generated, load one from a file");
    }

    const bool planar = config.model != ModelKind::Line1D;
    SplitMix64 rng(config.seed);
    instance.trips.reserve(static_cast<std::size_t>(config.n));
    for (int i = 1; i <= config.n; ++i) {
        Trip t;
        t.id = i;
        t.pickup.x = rng.uniform01();
        if (planar) t.pickup.y = rng.uniform01();
        t.pickup_time = rng.uniform01() * config.horizon;
        t.dropoff.x = rng.uniform01();
        if (planar) t.dropoff.y = rng.uniform01();
        t.dropoff_time =
            t.pickup_time + config.slack * instance.model.travel_time(t.pickup, t.dropoff);
        instance.trips.push_back(t);
    }
    return instance;
}

std::string format_double(double value) {
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

namespace {

constexpr const char* kCsvHeader = "id,px,py,pt,dx,dy,dt";
const char* const kCsvFields[7] = {"id", "px", "py", "pt", "dx", "dy", "dt"};

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line << ": " << what;
    throw_invalid(msg.str());
}

double parse_field_double(const std::string& field, std::size_t line, const char* name) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        parse_fail(line, std::string("field '") + name + "': '" + field + "' is not a number");
    }
    return value;
}

std::int64_t parse_field_id(const std::string& field, std::size_t line) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        parse_fail(line, "field 'id': '" + field + "' is not an integer");
    }
    return value;
}

std::vector<std::string> split_csv_row(const std::string& row) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = row.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(row.substr(start));
            break;
        }
        fields.push_back(row.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::vector<Trip> parse_trips_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw_invalid("line 1: missing header");
    if (chomp(line) != kCsvHeader) {
        parse_fail(1, std::string("header must be exactly '") + kCsvHeader + "'");
    }

    std::vector<Trip> trips;
    std::unordered_map<std::int64_t, std::size_t> seen;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = chomp(line);
        auto fields = split_csv_row(line);
        if (fields.size() != 7) {
            std::ostringstream msg;
            msg << "expected 7 fields, got " << fields.size();
            parse_fail(lineno, msg.str());
        }
        Trip t;
        t.id = parse_field_id(fields[0], lineno);
        t.pickup.x = parse_field_double(fields[1], lineno, kCsvFields[1]);
        t.pickup.y = parse_field_double(fields[2], lineno, kCsvFields[2]);
        t.pickup_time = parse_field_double(fields[3], lineno, kCsvFields[3]);
        t.dropoff.x = parse_field_double(fields[4], lineno, kCsvFields[4]);
        t.dropoff.y = parse_field_double(fields[5], lineno, kCsvFields[5]);
        t.dropoff_time = parse_field_double(fields[6], lineno, kCsvFields[6]);
        auto [it, inserted] = seen.emplace(t.id, lineno);
        if (!inserted) {
            std::ostringstream msg;
            msg << "duplicate trip id " << t.id << " (first seen on line " << it->second << ")";
            parse_fail(lineno, msg.str());
        }
        trips.push_back(t);
    }
    return trips;
}

std::vector<Trip> load_trips_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io("cannot open trips file '" + path + "'");
    return parse_trips_csv(in);
}

void write_trips_csv(const std::vector<Trip>& trips, std::ostream& out) {
    out << kCsvHeader << "\n";
    for (const Trip& t : trips) {
        out << t.id << ',' << format_double(t.pickup.x) << ',' << format_double(t.pickup.y) << ','
            << format_double(t.pickup_time) << ',' << format_double(t.dropoff.x) << ','
            << format_double(t.dropoff.y) << ',' << format_double(t.dropoff_time) << "\n";
    }
}

void save_trips_csv(const std::vector<Trip>& trips, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_io("cannot open '" + path + "' for writing");
    write_trips_csv(trips, out);
    out.flush();
    if (!out) throw_io("failed writing '" + path + "'");
}

std::vector<std::vector<double>> parse_travel_matrix(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n) || n == 0) throw_invalid("matrix file: first token must be a positive site count");
    std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            double v = 0.0;
            if (!(in >> v)) {
                std::ostringstream msg;
                msg << "matrix file: missing entry (" << r << "," << c << ")";
                throw_invalid(msg.str());
            }
            if (!std::isfinite(v) || v < 0.0) {
                std::ostringstream msg;
                msg << "matrix file: entry (" << r << "," << c << ") must be finite and non-negative";
                throw_invalid(msg.str());
            }
            if (r == c && v != 0.0) {
                std::ostringstream msg;
                msg << "matrix file: diagonal entry (" << r << "," << r << ") must be 0";
                throw_invalid(msg.str());
            }
            table[r][c] = v;
        }
    }
    double extra = 0.0;
    if (in >> extra) throw_invalid("matrix file: trailing data after the n x n table");
    return table;
}

std::vector<std::vector<double>> load_travel_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_io("cannot open matrix file '" + path + "'");
    return parse_travel_matrix(in);
}

SolutionDocument make_document(const Instance& instance, const SolveResult& result,
                               std::optional<int> delta_mode_gap) {
    SolutionDocument doc;
    doc.n = instance.size();
    doc.delta = instance.delta;
    doc.edge_count = static_cast<std::int64_t>(result.graph.edge_count);
    doc.matching_size = result.matching.size();
    doc.fleet_size = result.solution.fleet_size();
    for (const Trajectory& traj : result.solution.trajectories) {
        std::vector<std::int64_t> ids;
        ids.reserve(traj.trip_indices.size());
        for (int idx : traj.trip_indices) ids.push_back(instance.trip(idx).id);
        doc.trajectories.push_back(std::move(ids));
    }
    for (int idx : result.certificate.trip_indices) {
        doc.certificate.push_back(instance.trip(idx).id);
    }
    doc.certificate_size = result.certificate.size();
    if (instance.delta) {
        doc.min_max_gap = delta_mode_gap;
    } else {
        doc.min_max_gap = doc.fleet_size - doc.certificate_size;
    }
    return doc;
}

std::string document_to_json(const SolutionDocument& doc) {
    ordered_json j;
    j["n"] = doc.n;
    if (doc.delta) {
        j["delta"] = *doc.delta;
    } else {
        j["delta"] = nullptr;
    }
    j["edge_count"] = doc.edge_count;
    j["matching_size"] = doc.matching_size;
    j["fleet_size"] = doc.fleet_size;
    j["trajectories"] = doc.trajectories;
    j["certificate"] = doc.certificate;
    j["certificate_size"] = doc.certificate_size;
    if (doc.min_max_gap) {
        j["min_max_gap"] = *doc.min_max_gap;
    } else {
        j["min_max_gap"] = nullptr;
    }
    return j.dump(2) + "\n";
}

void write_solution_json(const SolutionDocument& doc, std::ostream& out) {
    out << document_to_json(doc);
}

void save_solution_json(const SolutionDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_io("cannot open '" + path + "' for writing");
    write_solution_json(doc, out);
    out.flush();
    if (!out) throw_io("failed writing '" + path + "'");
}

SolutionDocument parse_solution_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw_invalid(std::string("solution JSON: ") + e.what());
    }
    try {
        SolutionDocument doc;
        doc.n = j.at("n").get<int>();
        if (!j.at("delta").is_null()) doc.delta = j.at("delta").get<double>();
        doc.edge_count = j.at("edge_count").get<std::int64_t>();
        doc.matching_size = j.at("matching_size").get<int>();
        doc.fleet_size = j.at("fleet_size").get<int>();
        doc.trajectories = j.at("trajectories").get<std::vector<std::vector<std::int64_t>>>();
        doc.certificate = j.at("certificate").get<std::vector<std::int64_t>>();
        doc.certificate_size = j.at("certificate_size").get<int>();
        if (!j.at("min_max_gap").is_null()) doc.min_max_gap = j.at("min_max_gap").get<int>();
        return doc;
    } catch (const std::exception& e) {
        throw_invalid(std::string("solution JSON: ") + e.what());
    }
}

SolutionDocument load_solution_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io("cannot open solution file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_solution_json(buf.str());
}

namespace {

std::unordered_map<std::int64_t, int> id_index(const Instance& instance) {
    std::unordered_map<std::int64_t, int> map;
    map.reserve(instance.trips.size());
    for (int i = 1; i <= instance.size(); ++i) map.emplace(instance.trip(i).id, i);
    return map;
}

int lookup_id(const std::unordered_map<std::int64_t, int>& map, std::int64_t id) {
    auto it = map.find(id);
    if (it == map.end()) {
        std::ostringstream msg;
        msg << "solution refers to unknown trip id " << id;
        throw Error(ErrorCode::Verify, msg.str());
    }
    return it->second;
}

}  // namespace

FleetSolution solution_from_document(const Instance& instance, const SolutionDocument& doc) {
    if (doc.n != instance.size()) {
        std::ostringstream msg;
        msg << "solution is for n = " << doc.n << ", instance has n = " << instance.size();
        throw Error(ErrorCode::Verify, msg.str());
    }
    auto map = id_index(instance);
    FleetSolution solution;
    solution.matching_size = doc.matching_size;
    for (const auto& ids : doc.trajectories) {
        Trajectory traj;
        traj.trip_indices.reserve(ids.size());
        for (std::int64_t id : ids) traj.trip_indices.push_back(lookup_id(map, id));
        solution.trajectories.push_back(std::move(traj));
    }
    return solution;
}

IncompatibleCertificate certificate_from_document(const Instance& instance,
                                                  const SolutionDocument& doc) {
    auto map = id_index(instance);
    IncompatibleCertificate cert;
    cert.trip_indices.reserve(doc.certificate.size());
    for (std::int64_t id : doc.certificate) cert.trip_indices.push_back(lookup_id(map, id));
    std::sort(cert.trip_indices.begin(), cert.trip_indices.end());
    return cert;
}

}  // namespace fleetmin
