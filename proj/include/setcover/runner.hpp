#pragma once

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setcover/audit.hpp"
#include "setcover/baselines.hpp"
#include "setcover/decremental.hpp"
#include "setcover/fully_dynamic.hpp"
#include "setcover/metrics.hpp"
#include "setcover/trace.hpp"
#include "setcover/workloads.hpp"

namespace setcover {

enum class Algo { Decremental, FullyDynamic, RecomputeF, RecomputeGreedy };

inline std::string algo_name(Algo algo) {
    switch (algo) {
        case Algo::Decremental: return "decremental";
        case Algo::FullyDynamic: return "fully-dynamic";
        case Algo::RecomputeF: return "recompute-f";
        case Algo::RecomputeGreedy: return "recompute-greedy";
    }
    return "?";
}

inline std::optional<Algo> algo_from_name(const std::string& name) {
    if (name == "decremental") return Algo::Decremental;
    if (name == "fully-dynamic") return Algo::FullyDynamic;
    if (name == "recompute-f") return Algo::RecomputeF;
    if (name == "recompute-greedy") return Algo::RecomputeGreedy;
    return std::nullopt;
}

struct RunOptions {
    Algo algo = Algo::FullyDynamic;
    double epsilon = 0.25;
    std::uint64_t seed = 1;
    bool check_invariants = false;
    bool oracle_opt = false;
    int oracle_cap = 20;
};

/// Raised when the online audit finds a violated invariant; carries the event
/// index so the harness can dump the failing prefix.
class audit_error : public std::runtime_error {
  public:
    audit_error(long long event_index, const std::string& what)
        : std::runtime_error("invariant violated at event " + std::to_string(event_index) +
                             ": " + what),
          event_index_(event_index) {}
    long long event_index() const { return event_index_; }

  private:
    long long event_index_;
};

/// Replays a trace through the selected algorithm. With check_invariants the
/// full structural audit runs after every event and throws audit_error on the
/// first violation. With oracle_opt every query computes the exact optimum
/// over the active elements (when at most oracle_cap sets are involved) and
/// verifies cover_size <= f/(1-eps) * OPT for the two dynamic solvers.
inline RunMetrics run_trace(const SetSystem& sys, const UpdateTrace& trace,
                            const RunOptions& opt) {
    if (trace.has_set_events())
        throw param_error("set-update traces drive the gadget verification pipeline, not run");
    if (trace.n != sys.n || trace.m != sys.m)
        throw param_error("trace header does not match the instance");

    const auto wall_start = std::chrono::steady_clock::now();
    RunMetrics mx;
    mx.algo = algo_name(opt.algo);
    mx.epsilon = opt.epsilon;
    mx.seed = opt.seed;
    mx.n = sys.n;
    mx.m = sys.m;
    mx.f = sys.f;
    mx.events = static_cast<long long>(trace.events.size());

    std::unique_ptr<DecrementalSolver> dec;
    std::unique_ptr<FullyDynamicSolver> dyn;
    std::vector<std::uint8_t> active(static_cast<std::size_t>(sys.n), 0);
    TouchCounter baseline_touch;

    if (opt.algo == Algo::Decremental) {
        if (trace.has_inserts())
            throw param_error("the decremental solver cannot replay insertions");
        dec = std::make_unique<DecrementalSolver>(sys, opt.epsilon, opt.seed);
        std::fill(active.begin(), active.end(), 1);
    } else if (opt.algo == Algo::FullyDynamic) {
        dyn = std::make_unique<FullyDynamicSolver>(sys, opt.epsilon, opt.seed);
        if (trace.starts_fully_active())
            for (int e = 0; e < sys.n; ++e) {
                dyn->insert(e);
                active[static_cast<std::size_t>(e)] = 1;
            }
    } else {
        if (trace.starts_fully_active()) std::fill(active.begin(), active.end(), 1);
    }

    const detail::Engine* eng = dec ? &dec->state() : (dyn ? &dyn->state() : nullptr);
    std::uint64_t last_touch = eng ? eng->touches() : 0;
    const double ratio_limit = static_cast<double>(sys.f) / (1.0 - opt.epsilon);

    auto record_phases = [&mx](const UpdateReport& report) {
        for (const auto& ph : report.phases)
            mx.phases.push_back({ph.level, ph.x_prime, ph.new_pivots, ph.touches});
    };

    for (long long index = 0; index < static_cast<long long>(trace.events.size()); ++index) {
        const TraceEvent& ev = trace.events[static_cast<std::size_t>(index)];
        UpdateReport report;
        switch (ev.kind) {
            case EventKind::Insert:
                if (dec) throw param_error("insert event in a decremental run");
                ++mx.insertions;
                if (dyn) {
                    report = dyn->insert(ev.id);
                    record_phases(report);
                }
                active[static_cast<std::size_t>(ev.id)] = 1;
                break;
            case EventKind::Erase:
                ++mx.deletions;
                if (dec) {
                    report = dec->erase(ev.id);
                    record_phases(report);
                } else if (dyn) {
                    report = dyn->erase(ev.id);
                    record_phases(report);
                }
                active[static_cast<std::size_t>(ev.id)] = 0;
                break;
            case EventKind::Query: {
                QueryLogEntry q;
                q.index = index;
                std::vector<int> targets;
                for (int e = 0; e < sys.n; ++e)
                    if (active[static_cast<std::size_t>(e)]) targets.push_back(e);
                if (eng) {
                    q.cover_size = eng->cover_size();
                } else if (opt.algo == Algo::RecomputeF) {
                    q.cover_size = static_cast<long long>(
                        deterministic_cover(sys, targets, &baseline_touch).cover.size());
                } else {
                    q.cover_size = static_cast<long long>(greedy_cover(sys, targets).size());
                }
                if (opt.oracle_opt) {
                    const auto optimum = exact_cover(sys, targets, opt.oracle_cap);
                    if (optimum) {
                        q.opt = *optimum;
                        if (*optimum > 0)
                            q.ratio = static_cast<double>(q.cover_size) /
                                      static_cast<double>(*optimum);
                        if (eng && static_cast<double>(q.cover_size) >
                                       ratio_limit * static_cast<double>(*optimum) + 1e-9)
                            throw audit_error(index,
                                              "cover size " + std::to_string(q.cover_size) +
                                                  " exceeds f/(1-eps) * OPT with OPT = " +
                                                  std::to_string(*optimum));
                    }
                }
                mx.queries.push_back(q);
                break;
            }
            case EventKind::ActivateSet:
            case EventKind::DeactivateSet:
                throw param_error("set-update event in an element run");
        }
        if (eng) {
            mx.per_event_touches.push_back(eng->touches() - last_touch);
            last_touch = eng->touches();
            mx.pd_snapshots.emplace_back(eng->pivot_total(), eng->deleted_pivot_total());
        } else {
            mx.per_event_touches.push_back(0);
            mx.pd_snapshots.emplace_back(0, 0);
        }
        if (opt.check_invariants && eng) {
            if (auto problem = audit_state(*eng)) throw audit_error(index, *problem);
            for (const auto& ph : report.phases)
                if (auto problem = audit_phase_report(ph, opt.algo == Algo::Decremental))
                    throw audit_error(index, *problem);
        }
    }

    if (eng) {
        mx.touches_total = eng->touches();
        mx.max_movement_count = eng->max_movement_count();
        std::uint64_t update_sum = 0;
        for (std::uint64_t t : mx.per_event_touches) update_sum += t;
        mx.update_touches = update_sum;
    } else {
        mx.touches_total = baseline_touch.count();
        mx.update_touches = mx.touches_total;
    }
    mx.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                std::chrono::steady_clock::now() - wall_start)
                                                .count());
    return mx;
}

/// Recompute-per-update yardstick: replays the trace and reruns the chosen
/// offline baseline over the active elements at every query point.
inline std::vector<long long> recompute_baseline(const SetSystem& sys, const UpdateTrace& trace,
                                                 Algo which = Algo::RecomputeF) {
    if (which != Algo::RecomputeF && which != Algo::RecomputeGreedy)
        throw param_error("recompute_baseline wraps the offline baselines only");
    RunOptions opt;
    opt.algo = which;
    const RunMetrics mx = run_trace(sys, trace, opt);
    std::vector<long long> sizes;
    sizes.reserve(mx.queries.size());
    for (const auto& q : mx.queries) sizes.push_back(q.cover_size);
    return sizes;
}

// ---------------------------------------------------------------------------
// Scaling bench
// ---------------------------------------------------------------------------

struct ScalingRow {
    int n = 0;
    std::uint64_t seed = 0;
    long long deletions = 0;
    std::uint64_t touches_total = 0;
    std::uint64_t update_touches = 0;
    double per_delete = 0.0;
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    std::vector<double> mean_per_delete;  // aligned with the n list
    std::vector<int> n_values;
    double max_over_min = 0.0;
    bool superlinear_flag = false;  // mean per-deletion cost grew > 3x across sizes
};

/// Sweeps full random-deletion runs over the given universe sizes at fixed
/// frequency and epsilon, averaging per-deletion touches over `seeds` seeds
/// per size. Amortized-constant behavior shows up as a flat per-deletion
/// cost; a blowup beyond 3x across the sweep raises the flag.
inline ScalingReport bench_scaling(const std::vector<int>& n_values, int f, double epsilon,
                                   int seeds, std::uint64_t seed0, Algo algo) {
    if (algo != Algo::Decremental && algo != Algo::FullyDynamic)
        throw param_error("bench_scaling drives the dynamic solvers only");
    ScalingReport report;
    report.n_values = n_values;
    for (int n : n_values) {
        double sum = 0.0;
        for (int i = 0; i < seeds; ++i) {
            const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
            const SetSystem sys = gen_random_system(n, std::max(1, n / 2), f, seed * 7 + 1);
            const UpdateTrace trace = gen_deletion_trace(sys, DeletionOrder::Random, seed * 13 + 3);
            RunOptions opt;
            opt.algo = algo;
            opt.epsilon = epsilon;
            opt.seed = seed;
            const RunMetrics mx = run_trace(sys, trace, opt);
            ScalingRow row;
            row.n = n;
            row.seed = seed;
            row.deletions = mx.deletions;
            row.touches_total = mx.touches_total;
            row.update_touches = mx.update_touches;
            row.per_delete = mx.deletions > 0 ? static_cast<double>(mx.update_touches) /
                                                    static_cast<double>(mx.deletions)
                                              : 0.0;
            report.rows.push_back(row);
            sum += row.per_delete;
        }
        report.mean_per_delete.push_back(seeds > 0 ? sum / seeds : 0.0);
    }
    double lo = 0.0, hi = 0.0;
    for (double v : report.mean_per_delete) {
        if (lo == 0.0 || v < lo) lo = v;
        if (v > hi) hi = v;
    }
    report.max_over_min = lo > 0.0 ? hi / lo : 0.0;
    report.superlinear_flag = report.max_over_min >= 3.0;
    return report;
}

}  // namespace setcover
