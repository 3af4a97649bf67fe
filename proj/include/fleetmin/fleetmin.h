/* fleetmin — minimum fleet-size solver with min-max optimality certificates.
 *
 * C API of the shared library. All functions return a fleetmin_status;
 * results travel through opaque handles and out-parameters. On failure a
 * thread-local message is available via fleetmin_last_error(). Handles
 * are not thread-safe individually, but distinct handles may be used from
 * distinct threads freely.
 *
 * Trip references crossing this API are trip ids (as found in the CSV),
 * not positional indices. A `delta` parameter < 0 means "no delta bound"
 * (classical mode).
 */
#ifndef FLEETMIN_H
#define FLEETMIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FLEETMIN_API __declspec(dllexport)
#else
#define FLEETMIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fleetmin_status {
    FLEETMIN_OK = 0,
    FLEETMIN_ERROR_INVALID_INPUT = 1,
    FLEETMIN_ERROR_VERIFY = 2,
    FLEETMIN_ERROR_INTERNAL = 3,
    FLEETMIN_ERROR_IO = 4
} fleetmin_status;

/* Opaque handles. */
typedef struct fleetmin_instance fleetmin_instance;
typedef struct fleetmin_solution fleetmin_solution;

typedef struct fleetmin_trip {
    int64_t id;
    double px, py;          /* pickup location (py = 0 for line/matrix models) */
    double pickup_time;
    double dx, dy;          /* drop-off location */
    double dropoff_time;
} fleetmin_trip;

FLEETMIN_API const char* fleetmin_status_name(fleetmin_status status);

/* Message for the most recent failing call on this thread; never NULL. */
FLEETMIN_API const char* fleetmin_last_error(void);

/* Frees strings returned through char** out-parameters. */
FLEETMIN_API void fleetmin_string_free(char* text);

/* ------------------------------------------------------------------ */
/* Instances                                                          */
/* ------------------------------------------------------------------ */

/* model_spec is one of "line", "euclidean", "manhattan", "matrix:PATH"
 * where PATH names a travel-time matrix file (first line n, then n rows
 * of n non-negative entries, zero diagonal). speed scales the two planar
 * models; pass 1.0 if unsure. */
FLEETMIN_API fleetmin_status fleetmin_instance_create(const fleetmin_trip* trips, int32_t n,
                                                      const char* model_spec, double speed,
                                                      double delta, fleetmin_instance** out);

/* Loads trips from CSV (header id,px,py,pt,dx,dy,dt). */
FLEETMIN_API fleetmin_status fleetmin_instance_load_csv(const char* path, const char* model_spec,
                                                        double speed, double delta,
                                                        fleetmin_instance** out);

/* Deterministic synthetic instance: locations uniform on the unit square
 * (unit line for "line"), pickup times uniform on [0, horizon), duration
 * = slack * travel time. Same arguments => identical instance. */
FLEETMIN_API fleetmin_status fleetmin_instance_generate(int32_t n, const char* model_spec,
                                                        double speed, double horizon, double slack,
                                                        uint64_t seed, double delta,
                                                        fleetmin_instance** out);

FLEETMIN_API fleetmin_status fleetmin_instance_write_csv(const fleetmin_instance* instance,
                                                         const char* path);

/* FLEETMIN_OK when clean; FLEETMIN_ERROR_INVALID_INPUT plus a report
 * (one violation per line) otherwise. strict_metric additionally flags
 * trips whose duration is shorter than the direct travel time. */
FLEETMIN_API fleetmin_status fleetmin_instance_validate(const fleetmin_instance* instance,
                                                        int strict_metric, char** report_out);

FLEETMIN_API int32_t fleetmin_instance_trip_count(const fleetmin_instance* instance);
FLEETMIN_API int fleetmin_instance_has_delta(const fleetmin_instance* instance);
FLEETMIN_API double fleetmin_instance_delta(const fleetmin_instance* instance);
FLEETMIN_API fleetmin_status fleetmin_instance_trip(const fleetmin_instance* instance,
                                                    int32_t index_1based, fleetmin_trip* out);
FLEETMIN_API void fleetmin_instance_destroy(fleetmin_instance* instance);

/* ------------------------------------------------------------------ */
/* Solving                                                            */
/* ------------------------------------------------------------------ */

/* Runs the full pipeline: compatibility graph, maximum matching, fleet
 * trajectories, and the pairwise-incompatible certificate; then re-checks
 * every output with the independent verifiers (a failure there returns
 * FLEETMIN_ERROR_VERIFY). In classical mode certificate size == fleet
 * size, which certifies optimality. */
FLEETMIN_API fleetmin_status fleetmin_solve(const fleetmin_instance* instance,
                                            fleetmin_solution** out);

FLEETMIN_API int32_t fleetmin_solution_fleet_size(const fleetmin_solution* solution);
FLEETMIN_API int32_t fleetmin_solution_matching_size(const fleetmin_solution* solution);
FLEETMIN_API int64_t fleetmin_solution_edge_count(const fleetmin_solution* solution);
FLEETMIN_API int32_t fleetmin_solution_trajectory_count(const fleetmin_solution* solution);
FLEETMIN_API int32_t fleetmin_solution_trajectory_length(const fleetmin_solution* solution,
                                                         int32_t trajectory);
/* Copies the trajectory's trip ids; capacity must cover its length. */
FLEETMIN_API fleetmin_status fleetmin_solution_trajectory_trips(const fleetmin_solution* solution,
                                                                int32_t trajectory, int64_t* ids,
                                                                int32_t capacity);
FLEETMIN_API int32_t fleetmin_solution_certificate_size(const fleetmin_solution* solution);
FLEETMIN_API fleetmin_status fleetmin_solution_certificate_trips(const fleetmin_solution* solution,
                                                                 int64_t* ids, int32_t capacity);

/* Delta-mode duality gap (fleet size minus the brute-force maximum
 * pairwise-incompatible set). Needs n <= subset_bound; on success sets
 * *computed = 1 and records the gap for JSON output. When n exceeds the
 * bound, returns FLEETMIN_OK with *computed = 0 and the JSON gap stays
 * null. Classical-mode solutions already carry their (always zero) gap. */
FLEETMIN_API fleetmin_status fleetmin_solution_compute_gap(fleetmin_solution* solution,
                                                           const fleetmin_instance* instance,
                                                           int32_t subset_bound, int* computed);
FLEETMIN_API int fleetmin_solution_has_gap(const fleetmin_solution* solution);
FLEETMIN_API int32_t fleetmin_solution_gap(const fleetmin_solution* solution);

/* Solution JSON: {n, delta, edge_count, matching_size, fleet_size,
 * trajectories, certificate, certificate_size, min_max_gap}. */
FLEETMIN_API fleetmin_status fleetmin_solution_to_json(const fleetmin_solution* solution,
                                                       char** json_out);
FLEETMIN_API fleetmin_status fleetmin_solution_write_json(const fleetmin_solution* solution,
                                                          const char* path);
FLEETMIN_API void fleetmin_solution_destroy(fleetmin_solution* solution);

/* Re-verifies a claimed solution JSON against an instance: trajectory
 * partition and feasibility, certificate pairwise incompatibility, and
 * (classical mode) certificate size == fleet size. Verification failures
 * return FLEETMIN_ERROR_VERIFY with the reason in *reason_out. */
FLEETMIN_API fleetmin_status fleetmin_verify_solution_json(const fleetmin_instance* instance,
                                                           const char* json_text,
                                                           char** reason_out);
FLEETMIN_API fleetmin_status fleetmin_verify_solution_file(const fleetmin_instance* instance,
                                                           const char* path, char** reason_out);

/* ------------------------------------------------------------------ */
/* Brute-force oracles (desk-scale n only)                            */
/* ------------------------------------------------------------------ */

FLEETMIN_API fleetmin_status fleetmin_brute_min_fleet(const fleetmin_instance* instance,
                                                      int32_t bound, int32_t* out);

/* witness_ids may be NULL; otherwise capacity must cover the witness. */
FLEETMIN_API fleetmin_status fleetmin_brute_max_incompatible(const fleetmin_instance* instance,
                                                             int32_t bound, int32_t* size_out,
                                                             int64_t* witness_ids,
                                                             int32_t capacity);

typedef struct fleetmin_gap_report {
    int32_t fleet_size;
    int32_t max_incompatible;
    int32_t gap;
} fleetmin_gap_report;

FLEETMIN_API fleetmin_status fleetmin_duality_gap(const fleetmin_instance* instance,
                                                  int32_t subset_bound, fleetmin_gap_report* out);

/* ------------------------------------------------------------------ */
/* Batch experiments                                                  */
/* ------------------------------------------------------------------ */

typedef struct fleetmin_check_config {
    int32_t cases;
    int32_t n_min, n_max;
    const char* model_spec;  /* analytic models only */
    double speed;
    double slack;
    double horizon;
    uint64_t seed;
    int32_t threads;         /* 0 = hardware concurrency */
} fleetmin_check_config;

typedef struct fleetmin_check_result {
    int32_t cases_run;
    int32_t agreements;
    int32_t first_failure;   /* 1-based case number, 0 = none */
} fleetmin_check_result;

/* Checks, per seeded random strict-metric instance, that fleet size,
 * certificate size, brute-force minimum fleet and brute-force maximum
 * incompatible set all agree (the min-max identity), plus weak duality
 * and all verifiers. */
FLEETMIN_API fleetmin_status fleetmin_check_agreement(const fleetmin_check_config* config,
                                                      fleetmin_check_result* out);

typedef struct fleetmin_search_config {
    int32_t cases;
    int32_t n_min, n_max;
    const char* model_spec;
    double speed;
    double slack;
    double horizon;
    double delta;            /* < 0 = classical */
    uint64_t seed;
    int32_t threads;
} fleetmin_search_config;

/* Scans seeded cases for an instance with a nonzero duality gap. On a
 * hit: *found = new instance handle, *found_case = 0-based case index,
 * *report = its gap. No hit: *found = NULL. Deterministic given config. */
FLEETMIN_API fleetmin_status fleetmin_gap_search(const fleetmin_search_config* config,
                                                 fleetmin_instance** found, int32_t* found_case,
                                                 fleetmin_gap_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FLEETMIN_H */
