#include "oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "fleet.hpp"

namespace fleetmin {

namespace {

void check_bound(const char* what, int n, int bound) {
    if (n > bound) {
        std::ostringstream msg;
        msg << what << ": n = " << n << " exceeds the configured oracle bound " << bound;
        throw_invalid(msg.str());
    }
}

// Pairwise directed-compatibility table under the instance's mode;
// ok[i][j] for 1-based indices.
std::vector<std::vector<char>> directed_table(const Instance& instance) {
    const int n = instance.size();
    std::vector<std::vector<char>> ok(static_cast<std::size_t>(n) + 1,
                                      std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            ok[i][j] = compatible_directed(instance.model, instance.trip(i), instance.trip(j),
                                           instance.delta)
                           ? 1
                           : 0;
        }
    }
    return ok;
}

struct FleetBacktracker {
    const std::vector<std::vector<char>>& ok;
    const std::vector<int>& order;  // trips in ascending pickup time
    std::vector<int> last;          // last trip per vehicle; 0 = empty
    int vehicles = 0;

    bool assign(std::size_t pos) {
        if (pos == order.size()) return true;
        int trip = order[pos];
        bool tried_empty = false;
        for (int v = 0; v < vehicles; ++v) {
            if (last[v] == 0) {
                // Empty vehicles are interchangeable; opening any one of
                // them is the same branch.
                if (tried_empty) continue;
                tried_empty = true;
                last[v] = trip;
                if (assign(pos + 1)) return true;
                last[v] = 0;
            } else if (ok[last[v]][trip]) {
                int prev = last[v];
                last[v] = trip;
                if (assign(pos + 1)) return true;
                last[v] = prev;
            }
        }
        return false;
    }
};

std::vector<int> pickup_order(const Instance& instance) {
    std::vector<int> order(static_cast<std::size_t>(instance.size()));
    for (int i = 1; i <= instance.size(); ++i) order[static_cast<std::size_t>(i) - 1] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double ta = instance.trip(a).pickup_time;
        double tb = instance.trip(b).pickup_time;
        return ta != tb ? ta < tb : a < b;
    });
    return order;
}

}  // namespace

int brute_min_fleet(const Instance& instance, int bound) {
    const int n = instance.size();
    check_bound("brute_min_fleet", n, bound);
    if (n == 0) return 0;
    auto ok = directed_table(instance);
    auto order = pickup_order(instance);
    for (int fleet = 1; fleet <= n; ++fleet) {
        FleetBacktracker bt{ok, order, std::vector<int>(static_cast<std::size_t>(fleet), 0), fleet};
        if (bt.assign(0)) return fleet;
    }
    return n;
}

namespace {

struct IncompatibleSearch {
    const std::vector<std::vector<char>>& pair_ok;  // symmetric compatibility
    int n = 0;
    std::vector<int> current;
    std::vector<int> best;

    // Include-first DFS in ascending index order: the first set of a new
    // record size is automatically the lexicographically smallest witness
    // of that size.
    void visit(int idx) {
        if (static_cast<int>(current.size()) + (n - idx + 1) <= static_cast<int>(best.size())) {
            return;  // cannot beat the record anymore
        }
        if (idx > n) {
            if (current.size() > best.size()) best = current;
            return;
        }
        bool independent = true;
        for (int member : current) {
            if (pair_ok[member][idx]) {
                independent = false;
                break;
            }
        }
        if (independent) {
            current.push_back(idx);
            visit(idx + 1);
            current.pop_back();
        }
        visit(idx + 1);
    }
};

}  // namespace

std::pair<int, std::vector<int>> brute_max_incompatible(const Instance& instance, int bound) {
    const int n = instance.size();
    check_bound("brute_max_incompatible", n, bound);
    std::vector<std::vector<char>> pair_ok(static_cast<std::size_t>(n) + 1,
                                           std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            char c = compatible_pair(instance.model, instance.trip(i), instance.trip(j),
                                     instance.delta)
                         ? 1
                         : 0;
            pair_ok[i][j] = c;
            pair_ok[j][i] = c;
        }
    }
    IncompatibleSearch search{pair_ok, n, {}, {}};
    search.visit(1);
    return {static_cast<int>(search.best.size()), search.best};
}

namespace {

// g(i, mask) = maximum matching on drop-offs i..n with pickups in mask
// already taken.
struct MatchingEnumerator {
    const CompatibilityGraph& g;
    std::vector<int> memo;  // -1 = unknown
    int n = 0;

    int solve(int i, unsigned mask) {
        if (i > n) return 0;
        int key = (i - 1) << n | static_cast<int>(mask);
        if (memo[key] >= 0) return memo[key];
        int result = solve(i + 1, mask);  // leave drop-off i unmatched
        for (int j : g.adj[i]) {
            unsigned bit = 1u << (j - 1);
            if (mask & bit) continue;
            result = std::max(result, 1 + solve(i + 1, mask | bit));
        }
        memo[key] = result;
        return result;
    }
};

}  // namespace

int brute_max_matching(const CompatibilityGraph& graph, int bound) {
    const int n = graph.n;
    check_bound("brute_max_matching", n, bound);
    // The memo table is n * 2^n entries; past this size it stops being a
    // desk-scale oracle no matter what the caller configured.
    check_bound("brute_max_matching", n, 16);
    if (n == 0) return 0;
    MatchingEnumerator en{graph, std::vector<int>(static_cast<std::size_t>(n) << n, -1), n};
    return en.solve(1, 0u);
}

GapReport duality_gap(const Instance& instance, const OracleLimits& limits) {
    GapReport report;
    CompatibilityGraph graph = build_graph(instance);
    Matching matching = max_matching(graph);
    report.fleet_size = instance.size() - matching.size();
    auto [size, witness] = brute_max_incompatible(instance, limits.max_incompatible_n);
    report.max_incompatible = size;
    report.witness_set = std::move(witness);
    report.gap = report.fleet_size - report.max_incompatible;
    return report;
}

Instance instance_for_case(const GeneratorConfig& base, std::uint64_t master_seed, int case_index,
                           int n_min, int n_max) {
    std::uint64_t case_seed = derive_seed(master_seed, static_cast<std::uint64_t>(case_index));
    SplitMix64 pick(case_seed);
    GeneratorConfig config = base;
    config.n = n_min + static_cast<int>(pick.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
    config.seed = pick.next();
    return generate_instance(config);
}

namespace {

int resolve_threads(int requested, int cases) {
    int threads = requested;
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    return std::max(1, std::min(threads, cases));
}

// Runs body(case_index) for 0..cases-1 across workers. stop(case_index)
// lets workers skip cases that can no longer matter.
void parallel_cases(int cases, int threads, const std::function<bool(int)>& skip,
                    const std::function<void(int)>& body) {
    threads = resolve_threads(threads, cases);
    if (threads == 1) {
        for (int c = 0; c < cases; ++c) {
            if (!skip(c)) body(c);
        }
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&]() {
            while (true) {
                int c = next.fetch_add(1);
                if (c >= cases) break;
                if (!skip(c)) body(c);
            }
        });
    }
    for (auto& w : workers) w.join();
}

}  // namespace

std::optional<SearchHit> search_counterexample(const SearchConfig& config) {
    if (config.cases <= 0) return std::nullopt;
    if (config.n_min < 1 || config.n_max < config.n_min) {
        throw_invalid("search: need 1 <= n_min <= n_max");
    }
    check_bound("search_counterexample", config.n_max, config.limits.max_incompatible_n);

    GeneratorConfig base;
    base.model = config.model;
    base.speed = config.speed;
    base.slack = config.slack;
    base.horizon = config.horizon;
    base.delta = config.delta;

    std::atomic<int> best_case{config.cases};
    std::mutex hit_mutex;
    std::optional<SearchHit> best_hit;

    parallel_cases(
        config.cases, config.threads,
        [&](int c) { return c >= best_case.load(); },
        [&](int c) {
            Instance instance = instance_for_case(base, config.seed, c, config.n_min, config.n_max);
            GapReport report = duality_gap(instance, config.limits);
            if (report.gap == 0) return;
            std::lock_guard<std::mutex> lock(hit_mutex);
            if (c < best_case.load()) {
                best_case.store(c);
                best_hit = SearchHit{std::move(instance), c, std::move(report)};
            }
        });
    return best_hit;
}

CheckOutcome check_agreement(const CheckConfig& config) {
    CheckOutcome outcome;
    if (config.cases <= 0) return outcome;
    if (config.n_min < 1 || config.n_max < config.n_min) {
        throw_invalid("check: need 1 <= n_min <= n_max");
    }
    check_bound("check_agreement", config.n_max,
                std::min(config.limits.min_fleet_n, config.limits.max_incompatible_n));

    GeneratorConfig base;
    base.model = config.model;
    base.speed = config.speed;
    base.slack = config.slack;
    base.horizon = config.horizon;

    std::vector<std::string> failures(static_cast<std::size_t>(config.cases));
    std::vector<char> failed(static_cast<std::size_t>(config.cases), 0);

    parallel_cases(
        config.cases, config.threads, [](int) { return false; },
        [&](int c) {
            Instance instance = instance_for_case(base, config.seed, c, config.n_min, config.n_max);
            std::ostringstream fail;
            try {
                SolveResult result = solve(instance);
                const int n = instance.size();
                int fleet = result.solution.fleet_size();
                int cert = result.certificate.size();
                int brute_fleet = brute_min_fleet(instance, config.limits.min_fleet_n);
                auto [max_inc, witness] = brute_max_incompatible(instance,
                                                                 config.limits.max_incompatible_n);
                if (!verify_matching(result.graph, result.matching)) {
                    fail << "matching verification failed";
                } else if (!verify_solution(instance, result.solution)) {
                    fail << "solution verification failed";
                } else if (!verify_certificate(instance, result.certificate)) {
                    fail << "certificate verification failed";
                } else if (fleet != n - result.matching.size()) {
                    fail << "fleet " << fleet << " != n - m";
                } else if (brute_fleet != fleet) {
                    fail << "brute min fleet " << brute_fleet << " != fleet " << fleet;
                } else if (cert != fleet) {
                    fail << "certificate size " << cert << " != fleet " << fleet;
                } else if (max_inc != fleet) {
                    fail << "brute max incompatible " << max_inc << " != fleet " << fleet;
                } else if (max_inc > brute_fleet) {
                    fail << "weak duality violated: " << max_inc << " > " << brute_fleet;
                } else if (n <= config.limits.max_matching_n &&
                           brute_max_matching(result.graph, config.limits.max_matching_n) !=
                               result.matching.size()) {
                    fail << "brute max matching disagrees with Hopcroft-Karp";
                }
            } catch (const std::exception& e) {
                fail << "exception: " << e.what();
            }
            std::string message = fail.str();
            if (!message.empty()) {
                failed[static_cast<std::size_t>(c)] = 1;
                failures[static_cast<std::size_t>(c)] = std::move(message);
            }
        });

    outcome.cases_run = config.cases;
    for (int c = 0; c < config.cases; ++c) {
        if (failed[static_cast<std::size_t>(c)]) {
            if (outcome.first_failure == 0) {
                outcome.first_failure = c + 1;
                outcome.failure_detail = failures[static_cast<std::size_t>(c)];
            }
        } else {
            ++outcome.agreements;
        }
    }
    return outcome;
}

}  // namespace fleetmin
