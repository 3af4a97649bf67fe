// fleetmin command-line front end. Talks to the solver exclusively
// through the public C API so it doubles as a smoke test of the
// shared-library surface.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fleetmin/fleetmin.h"

namespace {

constexpr int kGapSubsetBound = 20;   // brute-force oracle cap for --delta gap reporting
constexpr int kTrajectoryPrintCap = 20;
constexpr int kCertificatePrintCap = 50;

struct InstanceDeleter {
    void operator()(fleetmin_instance* p) const { fleetmin_instance_destroy(p); }
};
struct SolutionDeleter {
    void operator()(fleetmin_solution* p) const { fleetmin_solution_destroy(p); }
};
struct StringDeleter {
    void operator()(char* p) const { fleetmin_string_free(p); }
};
using InstancePtr = std::unique_ptr<fleetmin_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<fleetmin_solution, SolutionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code(fleetmin_status status) {
    switch (status) {
        case FLEETMIN_OK: return 0;
        case FLEETMIN_ERROR_INVALID_INPUT: return 1;
        case FLEETMIN_ERROR_IO: return 1;
        case FLEETMIN_ERROR_VERIFY: return 2;
        case FLEETMIN_ERROR_INTERNAL: return 3;
    }
    return 3;
}

int report_error(fleetmin_status status) {
    std::fprintf(stderr, "error (%s): %s\n", fleetmin_status_name(status), fleetmin_last_error());
    return exit_code(status);
}

int env_threads() {
    const char* raw = std::getenv("FLEETMIN_THREADS");
    if (raw == nullptr) return 0;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1) return 0;
    return static_cast<int>(value);
}

// Shared instance-source options for solve/certify/verify.
struct InstanceOpts {
    std::string trips;
    std::string model = "line";
    double speed = 1.0;
    double delta = -1.0;  // < 0 = classical mode

    void attach(CLI::App* cmd, bool with_delta) {
        cmd->add_option("--trips", trips, "trips CSV file")->required();
        cmd->add_option("--model", model, "line|euclidean|manhattan|matrix:PATH");
        cmd->add_option("--speed", speed, "speed for euclidean/manhattan")->check(CLI::PositiveNumber);
        if (with_delta) {
            cmd->add_option("--delta", delta, "max driver waiting time (enables gap reporting)")
                ->check(CLI::NonNegativeNumber);
        }
    }

    fleetmin_status load(InstancePtr& out) const {
        fleetmin_instance* raw = nullptr;
        fleetmin_status status =
            fleetmin_instance_load_csv(trips.c_str(), model.c_str(), speed, delta, &raw);
        out.reset(raw);
        return status;
    }
};

void print_gap_line(const fleetmin_solution* solution) {
    if (fleetmin_solution_has_gap(solution)) {
        std::printf("min-max gap: %d\n", fleetmin_solution_gap(solution));
    } else {
        std::printf("min-max gap: not computed (n > %d)\n", kGapSubsetBound);
    }
}

void print_id_list(const std::vector<int64_t>& ids) {
    std::printf("[");
    for (std::size_t i = 0; i < ids.size(); ++i) {
        std::printf(i == 0 ? "%lld" : ", %lld", static_cast<long long>(ids[i]));
    }
    std::printf("]");
}

// solve then re-verify via the library, optionally attaching the
// brute-force gap when --delta was given.
fleetmin_status solve_pipeline(const InstanceOpts& opts, InstancePtr& instance,
                               SolutionPtr& solution) {
    fleetmin_status status = opts.load(instance);
    if (status != FLEETMIN_OK) return status;
    fleetmin_solution* raw = nullptr;
    status = fleetmin_solve(instance.get(), &raw);
    solution.reset(raw);
    if (status != FLEETMIN_OK) return status;
    if (opts.delta >= 0.0) {
        status = fleetmin_solution_compute_gap(solution.get(), instance.get(), kGapSubsetBound,
                                               nullptr);
    }
    return status;
}

int write_outputs(const SolutionPtr& solution, const std::string& out_path) {
    if (out_path.empty()) return 0;
    fleetmin_status status = fleetmin_solution_write_json(solution.get(), out_path.c_str());
    if (status != FLEETMIN_OK) return report_error(status);
    std::printf("solution written to %s\n", out_path.c_str());
    return 0;
}

int cmd_solve(const InstanceOpts& opts, const std::string& out_path) {
    InstancePtr instance;
    SolutionPtr solution;
    fleetmin_status status = solve_pipeline(opts, instance, solution);
    if (status != FLEETMIN_OK) return report_error(status);

    int32_t n = fleetmin_instance_trip_count(instance.get());
    std::printf("n: %d\n", n);
    std::printf("model: %s\n", opts.model.c_str());
    if (fleetmin_instance_has_delta(instance.get())) {
        std::printf("delta: %g\n", fleetmin_instance_delta(instance.get()));
    }
    std::printf("edges: %lld\n",
                static_cast<long long>(fleetmin_solution_edge_count(solution.get())));
    std::printf("matching size: %d\n", fleetmin_solution_matching_size(solution.get()));
    std::printf("fleet size: %d\n", fleetmin_solution_fleet_size(solution.get()));
    std::printf("certificate size: %d\n", fleetmin_solution_certificate_size(solution.get()));
    print_gap_line(solution.get());

    int32_t vehicles = fleetmin_solution_trajectory_count(solution.get());
    if (n <= kTrajectoryPrintCap) {
        std::printf("trajectories:\n");
        for (int32_t v = 0; v < vehicles; ++v) {
            int32_t len = fleetmin_solution_trajectory_length(solution.get(), v);
            std::vector<int64_t> ids(static_cast<std::size_t>(len));
            fleetmin_solution_trajectory_trips(solution.get(), v, ids.data(), len);
            std::printf("  vehicle %d: ", v + 1);
            print_id_list(ids);
            std::printf("\n");
        }
    } else {
        std::printf("trajectories: %d (see --out file)\n", vehicles);
    }
    return write_outputs(solution, out_path);
}

int cmd_certify(const InstanceOpts& opts, const std::string& out_path) {
    InstancePtr instance;
    SolutionPtr solution;
    fleetmin_status status = solve_pipeline(opts, instance, solution);
    if (status != FLEETMIN_OK) return report_error(status);

    int32_t cert_size = fleetmin_solution_certificate_size(solution.get());
    std::printf("n: %d\n", fleetmin_instance_trip_count(instance.get()));
    std::printf("fleet size: %d\n", fleetmin_solution_fleet_size(solution.get()));
    std::printf("certificate size: %d\n", cert_size);
    print_gap_line(solution.get());
    if (cert_size <= kCertificatePrintCap) {
        std::vector<int64_t> ids(static_cast<std::size_t>(cert_size));
        fleetmin_solution_certificate_trips(solution.get(), ids.data(), cert_size);
        std::printf("certificate: ");
        print_id_list(ids);
        std::printf("\n");
    } else {
        std::printf("certificate: %d trips (see --out file)\n", cert_size);
    }
    return write_outputs(solution, out_path);
}

int cmd_verify(const InstanceOpts& opts, const std::string& solution_path) {
    InstancePtr instance;
    fleetmin_status status = opts.load(instance);
    if (status != FLEETMIN_OK) return report_error(status);
    char* reason_raw = nullptr;
    status = fleetmin_verify_solution_file(instance.get(), solution_path.c_str(), &reason_raw);
    StringPtr reason(reason_raw);
    if (status == FLEETMIN_OK) {
        std::printf("solution verified: OK\n");
        return 0;
    }
    std::fprintf(stderr, "verification failed (%s): %s\n", fleetmin_status_name(status),
                 reason ? reason.get() : fleetmin_last_error());
    return exit_code(status);
}

int cmd_gen(int32_t n, const std::string& model, double speed, double horizon, double slack,
            uint64_t seed, double delta, const std::string& out_path) {
    fleetmin_instance* raw = nullptr;
    fleetmin_status status =
        fleetmin_instance_generate(n, model.c_str(), speed, horizon, slack, seed, delta, &raw);
    InstancePtr instance(raw);
    if (status != FLEETMIN_OK) return report_error(status);
    status = fleetmin_instance_write_csv(instance.get(), out_path.c_str());
    if (status != FLEETMIN_OK) return report_error(status);
    std::printf("wrote %d trips to %s\n", fleetmin_instance_trip_count(instance.get()),
                out_path.c_str());
    return 0;
}

int cmd_check(int32_t cases, int32_t n_max, uint64_t seed, const std::string& model, double speed,
              double slack, double horizon) {
    fleetmin_check_config config{};
    config.cases = cases;
    config.n_min = 1;
    config.n_max = n_max;
    config.model_spec = model.c_str();
    config.speed = speed;
    config.slack = slack;
    config.horizon = horizon;
    config.seed = seed;
    config.threads = env_threads();
    fleetmin_check_result result{};
    fleetmin_status status = fleetmin_check_agreement(&config, &result);
    std::printf("%d/%d min-max equalities\n", result.agreements, result.cases_run);
    if (status != FLEETMIN_OK) {
        std::fprintf(stderr, "first failing case: %d\n", result.first_failure);
        return report_error(status);
    }
    return 0;
}

int cmd_gap_search(int32_t cases, int32_t n_max, uint64_t seed, const std::string& model,
                   double speed, double slack, double horizon, double delta,
                   const std::string& out_path) {
    fleetmin_search_config config{};
    config.cases = cases;
    config.n_min = 3;
    config.n_max = n_max;
    config.model_spec = model.c_str();
    config.speed = speed;
    config.slack = slack;
    config.horizon = horizon;
    config.delta = delta;
    config.seed = seed;
    config.threads = env_threads();
    fleetmin_instance* found_raw = nullptr;
    int32_t found_case = -1;
    fleetmin_gap_report report{};
    fleetmin_status status = fleetmin_gap_search(&config, &found_raw, &found_case, &report);
    InstancePtr found(found_raw);
    if (status != FLEETMIN_OK) return report_error(status);
    if (!found) {
        std::printf("no nonzero-gap instance in %d cases\n", cases);
        return 0;
    }
    std::printf("nonzero gap at case %d\n", found_case);
    std::printf("n: %d\n", fleetmin_instance_trip_count(found.get()));
    std::printf("fleet size: %d\n", report.fleet_size);
    std::printf("max incompatible: %d\n", report.max_incompatible);
    std::printf("gap: %d\n", report.gap);
    if (!out_path.empty()) {
        status = fleetmin_instance_write_csv(found.get(), out_path.c_str());
        if (status != FLEETMIN_OK) return report_error(status);
        std::printf("instance written to %s\n", out_path.c_str());
    }
    return 0;
}

int cmd_bench(int32_t n_cap, uint64_t seed, const std::string& model, double speed, double slack,
              double horizon) {
    std::vector<int32_t> sizes;
    for (int32_t s : {100, 250, 500, 1000, 2500, 5000, 10000}) {
        if (s <= n_cap) sizes.push_back(s);
    }
    if (sizes.empty() || sizes.back() != n_cap) sizes.push_back(n_cap);

    std::printf("%8s %12s %10s %8s %10s\n", "n", "edges", "matching", "fleet", "ms");
    for (std::size_t row = 0; row < sizes.size(); ++row) {
        int32_t n = sizes[row];
        fleetmin_instance* inst_raw = nullptr;
        fleetmin_status status = fleetmin_instance_generate(
            n, model.c_str(), speed, horizon, slack, seed + row, -1.0, &inst_raw);
        InstancePtr instance(inst_raw);
        if (status != FLEETMIN_OK) return report_error(status);

        auto start = std::chrono::steady_clock::now();
        fleetmin_solution* sol_raw = nullptr;
        status = fleetmin_solve(instance.get(), &sol_raw);
        SolutionPtr solution(sol_raw);
        auto stop = std::chrono::steady_clock::now();
        if (status != FLEETMIN_OK) return report_error(status);

        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        std::printf("%8d %12lld %10d %8d %10.1f\n", n,
                    static_cast<long long>(fleetmin_solution_edge_count(solution.get())),
                    fleetmin_solution_matching_size(solution.get()),
                    fleetmin_solution_fleet_size(solution.get()), ms);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum fleet-size solver (maximum-matching based, with min-max certificates)"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance and emit fleet + certificate");
    InstanceOpts solve_opts;
    std::string solve_out;
    solve_opts.attach(solve_cmd, /*with_delta=*/true);
    solve_cmd->add_option("--out", solve_out, "write solution JSON here");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "emit the incompatibility certificate");
    InstanceOpts certify_opts;
    std::string certify_out;
    certify_opts.attach(certify_cmd, /*with_delta=*/true);
    certify_cmd->add_option("--out", certify_out, "write solution JSON here");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a solution JSON against an instance");
    InstanceOpts verify_opts;
    std::string verify_solution;
    verify_opts.attach(verify_cmd, /*with_delta=*/true);
    verify_cmd->add_option("--solution", verify_solution, "solution JSON file")->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random instance CSV");
    int32_t gen_n = 10;
    std::string gen_model = "euclidean";
    double gen_speed = 1.0, gen_horizon = 10.0, gen_slack = 1.2;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen_cmd->add_option("--n", gen_n, "trip count")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--model", gen_model, "line|euclidean|manhattan");
    gen_cmd->add_option("--speed", gen_speed, "vehicle speed")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--horizon", gen_horizon, "pickup time span")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--slack", gen_slack, "duration = slack * direct time")
        ->check(CLI::Range(1.0, 1e9));
    gen_cmd->add_option("--seed", gen_seed, "PRNG seed");
    gen_cmd->add_option("--out", gen_out, "output CSV path")->required();

    // check
    auto* check_cmd = app.add_subcommand("check", "solver vs brute-force oracle agreement");
    int32_t check_cases = 100, check_n_max = 8;
    uint64_t check_seed = 0;
    std::string check_model = "euclidean";
    double check_speed = 1.0, check_slack = 1.2, check_horizon = 10.0;
    check_cmd->add_option("--cases", check_cases, "number of seeded cases")->check(CLI::PositiveNumber);
    check_cmd->add_option("--n-max", check_n_max, "max trips per case")->check(CLI::PositiveNumber);
    check_cmd->add_option("--seed", check_seed, "PRNG seed");
    check_cmd->add_option("--model", check_model, "line|euclidean|manhattan");
    check_cmd->add_option("--speed", check_speed, "vehicle speed")->check(CLI::PositiveNumber);
    check_cmd->add_option("--slack", check_slack, "duration slack factor")->check(CLI::Range(1.0, 1e9));
    check_cmd->add_option("--horizon", check_horizon, "pickup time span")->check(CLI::PositiveNumber);

    // gap-search
    auto* gap_cmd = app.add_subcommand("gap-search", "hunt for nonzero min-max gaps (delta mode)");
    int32_t gap_cases = 1000, gap_n_max = 8;
    uint64_t gap_seed = 0;
    std::string gap_model = "line";
    double gap_speed = 1.0, gap_slack = 1.0, gap_horizon = 10.0, gap_delta = -1.0;
    std::string gap_out;
    gap_cmd->add_option("--cases", gap_cases, "number of seeded cases")->check(CLI::PositiveNumber);
    gap_cmd->add_option("--n-max", gap_n_max, "max trips per case")->check(CLI::PositiveNumber);
    gap_cmd->add_option("--seed", gap_seed, "PRNG seed");
    gap_cmd->add_option("--model", gap_model, "line|euclidean|manhattan");
    gap_cmd->add_option("--speed", gap_speed, "vehicle speed")->check(CLI::PositiveNumber);
    gap_cmd->add_option("--slack", gap_slack, "duration slack factor")->check(CLI::Range(1.0, 1e9));
    gap_cmd->add_option("--horizon", gap_horizon, "pickup time span")->check(CLI::PositiveNumber);
    gap_cmd->add_option("--delta", gap_delta, "max driver waiting time")->check(CLI::NonNegativeNumber);
    gap_cmd->add_option("--out", gap_out, "write the found instance CSV here");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "timings table over generated instances");
    int32_t bench_n = 2000;
    uint64_t bench_seed = 0;
    std::string bench_model = "euclidean";
    double bench_speed = 1.0, bench_slack = 1.2, bench_horizon = 10.0;
    bench_cmd->add_option("--n", bench_n, "largest instance size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "PRNG seed");
    bench_cmd->add_option("--model", bench_model, "line|euclidean|manhattan");
    bench_cmd->add_option("--speed", bench_speed, "vehicle speed")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--slack", bench_slack, "duration slack factor")->check(CLI::Range(1.0, 1e9));
    bench_cmd->add_option("--horizon", bench_horizon, "pickup time span")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // stable exit codes: any usage error is invalid input
    }

    if (app.got_subcommand(solve_cmd)) return cmd_solve(solve_opts, solve_out);
    if (app.got_subcommand(certify_cmd)) return cmd_certify(certify_opts, certify_out);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_opts, verify_solution);
    if (app.got_subcommand(gen_cmd)) {
        return cmd_gen(gen_n, gen_model, gen_speed, gen_horizon, gen_slack, gen_seed, -1.0, gen_out);
    }
    if (app.got_subcommand(check_cmd)) {
        return cmd_check(check_cases, check_n_max, check_seed, check_model, check_speed, check_slack,
                         check_horizon);
    }
    if (app.got_subcommand(gap_cmd)) {
        return cmd_gap_search(gap_cases, gap_n_max, gap_seed, gap_model, gap_speed, gap_slack,
                              gap_horizon, gap_delta, gap_out);
    }
    if (app.got_subcommand(bench_cmd)) {
        return cmd_bench(bench_n, bench_seed, bench_model, bench_speed, bench_slack, bench_horizon);
    }
    return 1;
}
