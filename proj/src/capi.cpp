#include "fleetmin/fleetmin.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "fleet.hpp"
#include "ingest.hpp"
#include "oracle.hpp"

using namespace fleetmin;

extern "C" {

struct fleetmin_instance {
    Instance rep;
};

struct fleetmin_solution {
    SolutionDocument doc;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

fleetmin_status fail(fleetmin_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

fleetmin_status status_of(const Error& e) {
    switch (e.code()) {
        case ErrorCode::InvalidInput: return FLEETMIN_ERROR_INVALID_INPUT;
        case ErrorCode::Verify: return FLEETMIN_ERROR_VERIFY;
        case ErrorCode::Internal: return FLEETMIN_ERROR_INTERNAL;
        case ErrorCode::Io: return FLEETMIN_ERROR_IO;
    }
    return FLEETMIN_ERROR_INTERNAL;
}

// Runs fn, translating exceptions into status codes + last-error text.
template <typename Fn>
fleetmin_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return fail(status_of(e), e.what());
    } catch (const std::exception& e) {
        return fail(FLEETMIN_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(FLEETMIN_ERROR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

std::optional<double> delta_of(double delta) {
    if (delta < 0.0) return std::nullopt;
    return delta;
}

TravelTimeModel parse_model_spec(const char* spec, double speed) {
    if (spec == nullptr) throw_invalid("model spec is null");
    std::string s(spec);
    if (s == "line") return TravelTimeModel::line();
    if (s == "euclidean") return TravelTimeModel::euclidean(speed);
    if (s == "manhattan") return TravelTimeModel::manhattan(speed);
    if (s.rfind("matrix:", 0) == 0) {
        return TravelTimeModel::matrix(load_travel_matrix(s.substr(7)));
    }
    throw_invalid("unknown model '" + s + "' (expected line|euclidean|manhattan|matrix:PATH)");
}

ModelKind parse_model_kind(const char* spec) {
    if (spec == nullptr) throw_invalid("model spec is null");
    std::string s(spec);
    if (s == "line") return ModelKind::Line1D;
    if (s == "euclidean") return ModelKind::Euclidean;
    if (s == "manhattan") return ModelKind::Manhattan;
    throw_invalid("model '" + s + "' is not generatable (expected line|euclidean|manhattan)");
}

void require(bool ok, const char* what) {
    if (!ok) throw_invalid(what);
}

Trip to_trip(const fleetmin_trip& t) {
    Trip trip;
    trip.id = t.id;
    trip.pickup = Location{t.px, t.py};
    trip.pickup_time = t.pickup_time;
    trip.dropoff = Location{t.dx, t.dy};
    trip.dropoff_time = t.dropoff_time;
    return trip;
}

fleetmin_trip from_trip(const Trip& trip) {
    fleetmin_trip t;
    t.id = trip.id;
    t.px = trip.pickup.x;
    t.py = trip.pickup.y;
    t.pickup_time = trip.pickup_time;
    t.dx = trip.dropoff.x;
    t.dy = trip.dropoff.y;
    t.dropoff_time = trip.dropoff_time;
    return t;
}

// Shared by solve and the document verifier.
void check_document(const Instance& instance, const SolutionDocument& doc) {
    if (doc.delta.has_value() != instance.delta.has_value() ||
        (doc.delta && *doc.delta != *instance.delta)) {
        throw Error(ErrorCode::Verify, "document delta does not match the instance");
    }
    if (doc.fleet_size != static_cast<int>(doc.trajectories.size())) {
        throw Error(ErrorCode::Verify, "fleet_size does not match the trajectory count");
    }
    if (doc.certificate_size != static_cast<int>(doc.certificate.size())) {
        throw Error(ErrorCode::Verify, "certificate_size does not match the certificate list");
    }
    if (doc.matching_size != doc.n - doc.fleet_size) {
        throw Error(ErrorCode::Verify, "matching_size does not equal n - fleet_size");
    }
    FleetSolution solution = solution_from_document(instance, doc);
    SolutionCheck sol_check = verify_solution(instance, solution);
    if (!sol_check) {
        throw Error(ErrorCode::Verify, "solution check failed: " + sol_check.detail);
    }
    IncompatibleCertificate cert = certificate_from_document(instance, doc);
    if (!verify_certificate(instance, cert)) {
        throw Error(ErrorCode::Verify, "certificate contains a compatible pair");
    }
    if (!instance.delta && doc.certificate_size != doc.fleet_size) {
        throw Error(ErrorCode::Verify,
                    "classical mode: certificate size does not certify the fleet size");
    }
}

}  // namespace

extern "C" {

const char* fleetmin_status_name(fleetmin_status status) {
    switch (status) {
        case FLEETMIN_OK: return "ok";
        case FLEETMIN_ERROR_INVALID_INPUT: return "invalid input";
        case FLEETMIN_ERROR_VERIFY: return "verification failure";
        case FLEETMIN_ERROR_INTERNAL: return "internal invariant violation";
        case FLEETMIN_ERROR_IO: return "i/o error";
    }
    return "unknown status";
}

const char* fleetmin_last_error(void) { return g_last_error.c_str(); }

void fleetmin_string_free(char* text) { std::free(text); }

fleetmin_status fleetmin_instance_create(const fleetmin_trip* trips, int32_t n,
                                         const char* model_spec, double speed, double delta,
                                         fleetmin_instance** out) {
    return guarded([&]() {
        require(out != nullptr, "out pointer is null");
        require(trips != nullptr || n == 0, "trips pointer is null");
        require(n >= 0, "trip count is negative");
        auto instance = std::make_unique<fleetmin_instance>();
        instance->rep.model = parse_model_spec(model_spec, speed);
        instance->rep.delta = delta_of(delta);
        instance->rep.trips.reserve(static_cast<std::size_t>(n));
        for (int32_t i = 0; i < n; ++i) instance->rep.trips.push_back(to_trip(trips[i]));
        *out = instance.release();
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_instance_load_csv(const char* path, const char* model_spec, double speed,
                                           double delta, fleetmin_instance** out) {
    return guarded([&]() {
        require(out != nullptr, "out pointer is null");
        require(path != nullptr, "path is null");
        auto instance = std::make_unique<fleetmin_instance>();
        instance->rep.model = parse_model_spec(model_spec, speed);
        instance->rep.delta = delta_of(delta);
        instance->rep.trips = load_trips_csv(path);
        *out = instance.release();
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_instance_generate(int32_t n, const char* model_spec, double speed,
                                           double horizon, double slack, uint64_t seed,
                                           double delta, fleetmin_instance** out) {
    return guarded([&]() {
        require(out != nullptr, "out pointer is null");
        GeneratorConfig config;
        config.n = n;
        config.model = parse_model_kind(model_spec);
        config.speed = speed;
        config.horizon = horizon;
        config.slack = slack;
        config.seed = seed;
        config.delta = delta_of(delta);
        auto instance = std::make_unique<fleetmin_instance>();
        instance->rep = generate_instance(config);
        *out = instance.release();
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_instance_write_csv(const fleetmin_instance* instance, const char* path) {
    return guarded([&]() {
        require(instance != nullptr, "instance is null");
        require(path != nullptr, "path is null");
        save_trips_csv(instance->rep.trips, path);
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_instance_validate(const fleetmin_instance* instance, int strict_metric,
                                           char** report_out) {
    return guarded([&]() {
        require(instance != nullptr, "instance is null");
        ValidationReport report = validate_instance(instance->rep, strict_metric != 0);
        if (report_out != nullptr) *report_out = copy_string(report.to_string());
        if (!report.ok()) {
            return fail(FLEETMIN_ERROR_INVALID_INPUT, "instance is invalid:\n" + report.to_string());
        }
        return FLEETMIN_OK;
    });
}

int32_t fleetmin_instance_trip_count(const fleetmin_instance* instance) {
    return instance == nullptr ? 0 : instance->rep.size();
}

int fleetmin_instance_has_delta(const fleetmin_instance* instance) {
    return instance != nullptr && instance->rep.delta.has_value() ? 1 : 0;
}

double fleetmin_instance_delta(const fleetmin_instance* instance) {
    return (instance != nullptr && instance->rep.delta) ? *instance->rep.delta : -1.0;
}

fleetmin_status fleetmin_instance_trip(const fleetmin_instance* instance, int32_t index_1based,
                                       fleetmin_trip* out) {
    return guarded([&]() {
        require(instance != nullptr, "instance is null");
        require(out != nullptr, "out pointer is null");
        require(index_1based >= 1 && index_1based <= instance->rep.size(),
                "trip index out of range");
        *out = from_trip(instance->rep.trip(index_1based));
        return FLEETMIN_OK;
    });
}

void fleetmin_instance_destroy(fleetmin_instance* instance) { delete instance; }

fleetmin_status fleetmin_solve(const fleetmin_instance* instance, fleetmin_solution** out) {
    return guarded([&]() {
        require(instance != nullptr, "instance is null");
        require(out != nullptr, "out pointer is null");
        SolveResult result = solve(instance->rep);
        MatchingCheck m_check = verify_matching(result.graph, result.matching);
        if (!m_check) {
            return fail(FLEETMIN_ERROR_VERIFY, "matching re-check failed: " + m_check.detail);
        }
        SolutionCheck s_check = verify_solution(instance->rep, result.solution);
        if (!s_check) {
            return fail(FLEETMIN_ERROR_VERIFY, "solution re-check failed: " + s_check.detail);
        }
        if (!verify_certificate(instance->rep, result.certificate)) {
            return fail(FLEETMIN_ERROR_VERIFY, "certificate re-check found a compatible pair");
        }
        auto solution = std::make_unique<fleetmin_solution>();
        solution->doc = make_document(instance->rep, result);
        *out = solution.release();
        return FLEETMIN_OK;
    });
}

int32_t fleetmin_solution_fleet_size(const fleetmin_solution* solution) {
    return solution == nullptr ? -1 : solution->doc.fleet_size;
}

int32_t fleetmin_solution_matching_size(const fleetmin_solution* solution) {
    return solution == nullptr ? -1 : solution->doc.matching_size;
}

int64_t fleetmin_solution_edge_count(const fleetmin_solution* solution) {
    return solution == nullptr ? -1 : solution->doc.edge_count;
}

int32_t fleetmin_solution_trajectory_count(const fleetmin_solution* solution) {
    return solution == nullptr ? -1 : static_cast<int32_t>(solution->doc.trajectories.size());
}

int32_t fleetmin_solution_trajectory_length(const fleetmin_solution* solution,
                                            int32_t trajectory) {
    if (solution == nullptr || trajectory < 0 ||
        trajectory >= static_cast<int32_t>(solution->doc.trajectories.size())) {
        return -1;
    }
    return static_cast<int32_t>(solution->doc.trajectories[static_cast<std::size_t>(trajectory)].size());
}

fleetmin_status fleetmin_solution_trajectory_trips(const fleetmin_solution* solution,
                                                   int32_t trajectory, int64_t* ids,
                                                   int32_t capacity) {
    return guarded([&]() {
        require(solution != nullptr, "solution is null");
        require(ids != nullptr, "ids buffer is null");
        require(trajectory >= 0 &&
                    trajectory < static_cast<int32_t>(solution->doc.trajectories.size()),
                "trajectory index out of range");
        const auto& traj = solution->doc.trajectories[static_cast<std::size_t>(trajectory)];
        require(capacity >= static_cast<int32_t>(traj.size()), "buffer too small");
        std::copy(traj.begin(), traj.end(), ids);
        return FLEETMIN_OK;
    });
}

int32_t fleetmin_solution_certificate_size(const fleetmin_solution* solution) {
    return solution == nullptr ? -1 : solution->doc.certificate_size;
}

fleetmin_status fleetmin_solution_certificate_trips(const fleetmin_solution* solution, int64_t* ids,
                                                    int32_t capacity) {
    return guarded([&]() {
        require(solution != nullptr, "solution is null");
        require(ids != nullptr, "ids buffer is null");
        require(capacity >= static_cast<int32_t>(solution->doc.certificate.size()),
                "buffer too small");
        std::copy(solution->doc.certificate.begin(), solution->doc.certificate.end(), ids);
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_solution_compute_gap(fleetmin_solution* solution,
                                              const fleetmin_instance* instance,
                                              int32_t subset_bound, int* computed) {
    return guarded([&]() {
        require(solution != nullptr, "solution is null");
        require(instance != nullptr, "instance is null");
        if (computed != nullptr) *computed = 0;
        if (instance->rep.size() != solution->doc.n) {
            throw_invalid("solution belongs to an instance of a different size");
        }
        if (instance->rep.size() > subset_bound) return FLEETMIN_OK;  // gap stays null
        OracleLimits limits;
        limits.max_incompatible_n = subset_bound;
        GapReport report = duality_gap(instance->rep, limits);
        solution->doc.min_max_gap = report.gap;
        if (computed != nullptr) *computed = 1;
        return FLEETMIN_OK;
    });
}

int fleetmin_solution_has_gap(const fleetmin_solution* solution) {
    return solution != nullptr && solution->doc.min_max_gap.has_value() ? 1 : 0;
}

int32_t fleetmin_solution_gap(const fleetmin_solution* solution) {
    return (solution != nullptr && solution->doc.min_max_gap) ? *solution->doc.min_max_gap : 0;
}

fleetmin_status fleetmin_solution_to_json(const fleetmin_solution* solution, char** json_out) {
    return guarded([&]() {
        require(solution != nullptr, "solution is null");
        require(json_out != nullptr, "out pointer is null");
        *json_out = copy_string(document_to_json(solution->doc));
        require(*json_out != nullptr, "out of memory");
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_solution_write_json(const fleetmin_solution* solution, const char* path) {
    return guarded([&]() {
        require(solution != nullptr, "solution is null");
        require(path != nullptr, "path is null");
        save_solution_json(solution->doc, path);
        return FLEETMIN_OK;
    });
}

void fleetmin_solution_destroy(fleetmin_solution* solution) { delete solution; }

fleetmin_status fleetmin_verify_solution_json(const fleetmin_instance* instance,
                                              const char* json_text, char** reason_out) {
    fleetmin_status status = guarded([&]() {
        require(instance != nullptr, "instance is null");
        require(json_text != nullptr, "json text is null");
        ValidationReport report = validate_instance(instance->rep);
        if (!report.ok()) throw_invalid("instance is invalid:\n" + report.to_string());
        SolutionDocument doc = parse_solution_json(json_text);
        check_document(instance->rep, doc);
        return FLEETMIN_OK;
    });
    if (reason_out != nullptr) {
        *reason_out = copy_string(status == FLEETMIN_OK ? std::string() : g_last_error);
    }
    return status;
}

fleetmin_status fleetmin_verify_solution_file(const fleetmin_instance* instance, const char* path,
                                              char** reason_out) {
    fleetmin_status status = guarded([&]() {
        require(instance != nullptr, "instance is null");
        require(path != nullptr, "path is null");
        ValidationReport report = validate_instance(instance->rep);
        if (!report.ok()) throw_invalid("instance is invalid:\n" + report.to_string());
        SolutionDocument doc = load_solution_json(path);
        check_document(instance->rep, doc);
        return FLEETMIN_OK;
    });
    if (reason_out != nullptr) {
        *reason_out = copy_string(status == FLEETMIN_OK ? std::string() : g_last_error);
    }
    return status;
}

fleetmin_status fleetmin_brute_min_fleet(const fleetmin_instance* instance, int32_t bound,
                                         int32_t* out) {
    return guarded([&]() {
        require(instance != nullptr, "instance is null");
        require(out != nullptr, "out pointer is null");
        *out = brute_min_fleet(instance->rep, bound);
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_brute_max_incompatible(const fleetmin_instance* instance, int32_t bound,
                                                int32_t* size_out, int64_t* witness_ids,
                                                int32_t capacity) {
    return guarded([&]() {
        require(instance != nullptr, "instance is null");
        require(size_out != nullptr, "size out pointer is null");
        auto [size, witness] = brute_max_incompatible(instance->rep, bound);
        *size_out = size;
        if (witness_ids != nullptr) {
            require(capacity >= size, "witness buffer too small");
            for (int i = 0; i < size; ++i) {
                witness_ids[i] = instance->rep.trip(witness[static_cast<std::size_t>(i)]).id;
            }
        }
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_duality_gap(const fleetmin_instance* instance, int32_t subset_bound,
                                     fleetmin_gap_report* out) {
    return guarded([&]() {
        require(instance != nullptr, "instance is null");
        require(out != nullptr, "out pointer is null");
        OracleLimits limits;
        limits.max_incompatible_n = subset_bound;
        GapReport report = duality_gap(instance->rep, limits);
        out->fleet_size = report.fleet_size;
        out->max_incompatible = report.max_incompatible;
        out->gap = report.gap;
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_check_agreement(const fleetmin_check_config* config,
                                         fleetmin_check_result* out) {
    return guarded([&]() {
        require(config != nullptr, "config is null");
        require(out != nullptr, "out pointer is null");
        CheckConfig check;
        check.cases = config->cases;
        check.n_min = config->n_min;
        check.n_max = config->n_max;
        check.model = parse_model_kind(config->model_spec);
        check.speed = config->speed;
        check.slack = config->slack;
        check.horizon = config->horizon;
        check.seed = config->seed;
        check.threads = config->threads;
        CheckOutcome outcome = check_agreement(check);
        out->cases_run = outcome.cases_run;
        out->agreements = outcome.agreements;
        out->first_failure = outcome.first_failure;
        if (!outcome.all_passed()) {
            return fail(FLEETMIN_ERROR_VERIFY,
                        "case " + std::to_string(outcome.first_failure) +
                            " failed: " + outcome.failure_detail);
        }
        return FLEETMIN_OK;
    });
}

fleetmin_status fleetmin_gap_search(const fleetmin_search_config* config,
                                    fleetmin_instance** found, int32_t* found_case,
                                    fleetmin_gap_report* report) {
    return guarded([&]() {
        require(config != nullptr, "config is null");
        require(found != nullptr, "found out pointer is null");
        *found = nullptr;
        if (found_case != nullptr) *found_case = -1;
        SearchConfig search;
        search.cases = config->cases;
        search.n_min = config->n_min;
        search.n_max = config->n_max;
        search.model = parse_model_kind(config->model_spec);
        search.speed = config->speed;
        search.slack = config->slack;
        search.horizon = config->horizon;
        search.delta = delta_of(config->delta);
        search.seed = config->seed;
        search.threads = config->threads;
        std::optional<SearchHit> hit = search_counterexample(search);
        if (hit) {
            auto instance = std::make_unique<fleetmin_instance>();
            instance->rep = std::move(hit->instance);
            *found = instance.release();
            if (found_case != nullptr) *found_case = hit->case_index;
            if (report != nullptr) {
                report->fleet_size = hit->report.fleet_size;
                report->max_incompatible = hit->report.max_incompatible;
                report->gap = hit->report.gap;
            }
        }
        return FLEETMIN_OK;
    });
}

}  // extern "C"
