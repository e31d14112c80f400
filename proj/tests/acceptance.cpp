// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and thresholds are pinned here, in code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "setcover/setcover.hpp"

using namespace setcover;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Shared randomized workload for criteria 1, 2, 6, and 8:
// mixed traces through the fully dynamic solver and deletion traces through
// the decremental solver, all with the online audit and the exact oracle.
struct SharedRuns {
    long long runs = 0;
    long long queries_checked = 0;
    long long phases = 0;
    long long events = 0;
    long long ratio_violations = 0;
    long long audit_violations = 0;
    std::string first_problem;
    int max_movement = 0;
    long long moved_elements = 0;
    int movement_cap = 0;  // floor(log2 n)+1 over the instances used
    long long baseline_violations = 0;
    bool done = false;
};

// A trace that reliably drives the movement step: extras pile up under a
// level-0 pivot, a phase regroups them into a level-2 pivot whose set also
// contains element 1 (accounted at level 1), and deleting the level-1 pivot
// then exposes element 1 while its higher cover survives.
UpdateTrace movement_trace(const SetSystem& sys) {
    UpdateTrace trace;
    trace.n = sys.n;
    trace.m = sys.m;
    for (int e : {0, 1, 7}) trace.events.push_back({EventKind::Insert, e});
    trace.events.push_back({EventKind::Erase, 0});
    trace.events.push_back({EventKind::Query, -1});
    for (int e : {8, 2, 3, 4, 5}) trace.events.push_back({EventKind::Insert, e});
    trace.events.push_back({EventKind::Erase, 8});
    trace.events.push_back({EventKind::Query, -1});
    trace.events.push_back({EventKind::Erase, 7});
    trace.events.push_back({EventKind::Query, -1});
    return trace;
}

SharedRuns run_shared_workload() {
    SharedRuns shared;
    const double epsilons[] = {0.1, 0.25, 0.5};
    const std::uint64_t solver_seeds = 5;
    std::uint64_t instance_seed = 1000;
    for (int shape = 0; shape < 16; ++shape) {
        const int n = 8 + (shape % 7);            // 8..14
        const int m = 6 + (shape * 7) % 15;       // 6..20
        const int f = 2 + (shape % 3);            // 2..4
        const SetSystem sys = gen_random_system(n, m, f, ++instance_seed);
        const UpdateTrace mixed = gen_mixed_trace(sys, 3 * n, instance_seed * 3 + 1, 3);
        const UpdateTrace deletions =
            gen_deletion_trace(sys, DeletionOrder::Random, instance_seed * 5 + 2, 2);
        shared.movement_cap =
            std::max(shared.movement_cap, level_count(n));
        for (double epsilon : epsilons) {
            for (std::uint64_t seed = 1; seed <= solver_seeds; ++seed) {
                for (const Algo algo : {Algo::FullyDynamic, Algo::Decremental}) {
                    RunOptions opt;
                    opt.algo = algo;
                    opt.epsilon = epsilon;
                    opt.seed = seed * 977 + instance_seed;
                    opt.check_invariants = true;
                    opt.oracle_opt = true;
                    const UpdateTrace& trace =
                        algo == Algo::FullyDynamic ? mixed : deletions;
                    try {
                        const RunMetrics mx = run_trace(sys, trace, opt);
                        ++shared.runs;
                        const double limit = static_cast<double>(sys.f) / (1.0 - epsilon);
                        for (const auto& q : mx.queries) {
                            if (!q.opt) continue;
                            ++shared.queries_checked;
                            if (static_cast<double>(q.cover_size) >
                                limit * static_cast<double>(*q.opt) + 1e-9)
                                ++shared.ratio_violations;
                        }
                        shared.max_movement = std::max(shared.max_movement, mx.max_movement_count);
                        shared.phases += static_cast<long long>(mx.phases.size());
                        shared.events += mx.events;
                    } catch (const audit_error& err) {
                        ++shared.audit_violations;
                        if (shared.first_problem.empty()) shared.first_problem = err.what();
                    }
                }
            }
            // Baselines on the same instance and traces (criterion 8).
            for (const Algo algo : {Algo::RecomputeF, Algo::RecomputeGreedy}) {
                RunOptions opt;
                opt.algo = algo;
                opt.epsilon = epsilon;
                opt.oracle_opt = true;
                for (const UpdateTrace* trace : {&mixed, &deletions}) {
                    const RunMetrics mx = run_trace(sys, *trace, opt);
                    for (const auto& q : mx.queries) {
                        if (!q.opt) continue;
                        const double bound =
                            algo == Algo::RecomputeF
                                ? static_cast<double>(sys.f) * static_cast<double>(*q.opt)
                                : (std::log(static_cast<double>(sys.n)) + 1.0) *
                                      static_cast<double>(*q.opt);
                        if (static_cast<double>(q.cover_size) > bound + 1e-9)
                            ++shared.baseline_violations;
                    }
                }
            }
        }
    }
    // Movement-heavy structured runs (the uniform random walks above almost
    // never hit the movement step; these do, so the bound is checked against
    // live movement events as well).
    const SetSystem movers = load_system("9 4\n3 0 1 7\n5 1 2 3 4 5\n2 2 8\n4 3 4 5 8\n");
    const UpdateTrace mover_trace = movement_trace(movers);
    shared.movement_cap = std::max(shared.movement_cap, level_count(movers.n));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RunOptions opt;
        opt.algo = Algo::FullyDynamic;
        opt.epsilon = 0.5;
        opt.seed = seed;
        opt.check_invariants = true;
        opt.oracle_opt = true;
        try {
            const RunMetrics mx = run_trace(movers, mover_trace, opt);
            ++shared.runs;
            shared.events += mx.events;
            shared.phases += static_cast<long long>(mx.phases.size());
            for (const auto& q : mx.queries) {
                if (!q.opt) continue;
                ++shared.queries_checked;
                if (static_cast<double>(q.cover_size) >
                    static_cast<double>(movers.f) / 0.5 * static_cast<double>(*q.opt) + 1e-9)
                    ++shared.ratio_violations;
            }
            shared.max_movement = std::max(shared.max_movement, mx.max_movement_count);
            if (mx.max_movement_count > 0) ++shared.moved_elements;
        } catch (const audit_error& err) {
            ++shared.audit_violations;
            if (shared.first_problem.empty()) shared.first_problem = err.what();
        }
    }
    shared.done = true;
    return shared;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&failures](int id, const std::string& name, const Outcome& outcome,
                              double seconds) {
        std::printf("%s criterion-%d %s%s%s [%.1fs]\n", outcome.pass ? "PASS" : "FAIL", id,
                    name.c_str(), outcome.detail.empty() ? "" : " — ",
                    outcome.detail.c_str(), seconds);
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    };

    const auto shared_start = std::chrono::steady_clock::now();
    const SharedRuns shared = run_shared_workload();
    const double shared_seconds = seconds_since(shared_start);

    // ---- 1: approximation ratio against the exact oracle --------------------
    {
        Outcome out;
        if (shared.runs < 200) out.fail("only " + std::to_string(shared.runs) + " runs");
        if (shared.ratio_violations > 0)
            out.fail(std::to_string(shared.ratio_violations) + " ratio violations");
        if (shared.audit_violations > 0) out.fail("runs aborted: " + shared.first_problem);
        if (out.pass)
            out.detail = std::to_string(shared.runs) + " runs / " +
                         std::to_string(shared.events) + " events / " +
                         std::to_string(shared.phases) + " phases, " +
                         std::to_string(shared.queries_checked) +
                         " audited queries, cover <= f/(1-eps)*OPT everywhere";
        report(1, "approximation", out, shared_seconds);
    }

    // ---- 2: structural invariants online, plus adversarial traces -----------
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        if (shared.audit_violations > 0)
            out.fail(std::to_string(shared.audit_violations) + " audit failures (" +
                     shared.first_problem + ")");
        long long adversarial_ok = 0;
        for (std::uint64_t i = 0; i < 50; ++i) {
            const SetSystem sys =
                gen_random_system(10 + static_cast<int>(i % 5), 8 + static_cast<int>(i % 12),
                                  2 + static_cast<int>(i % 3), 4000 + i);
            const UpdateTrace trace =
                gen_deletion_trace(sys, DeletionOrder::PivotAdversarial, 9000 + i, 3, 0.5);
            RunOptions opt;
            opt.algo = Algo::Decremental;
            opt.epsilon = 0.25;
            opt.seed = 77 + i;  // independent of the probe seed
            opt.check_invariants = true;
            opt.oracle_opt = true;
            try {
                run_trace(sys, trace, opt);
                ++adversarial_ok;
            } catch (const audit_error& err) {
                out.fail(std::string("adversarial trace: ") + err.what());
            }
        }
        if (out.pass)
            out.detail = "full audit clean on every event of criterion-1 runs and " +
                         std::to_string(adversarial_ok) + " adversarial traces";
        report(2, "structural-invariants", out, seconds_since(start) + shared_seconds);
    }

    // ---- 3: critical-level correctness vs brute force ------------------------
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        Rng rng(31337);
        const double eps_choices[] = {0.1, 0.25, 0.5, 0.75};
        long long checked = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const int levels = 1 + rng.below_int(13);
            std::vector<long long> p(levels), d(levels);
            long long dt = 0, pt = 0;
            for (int i = 0; i < levels; ++i) {
                p[i] = rng.below_int(9);
                d[i] = p[i] > 0 ? rng.below_int(static_cast<int>(p[i]) + 1) : 0;
                dt += d[i];
                pt += p[i];
            }
            const double epsilon = eps_choices[rng.below_int(4)];
            const EpsilonParam eps(epsilon);
            if (dt == 0 || !eps.at_least_fraction(dt, pt)) {
                --trial;  // resample until the trigger condition holds
                continue;
            }
            ++checked;
            const int got = lowest_critical_level(p, d, eps);
            // Brute force: every candidate level, every suffix start.
            int brute = -1;
            for (int ell = 0; ell < levels && brute < 0; ++ell) {
                long long below = 0;
                for (int j = 0; j <= ell; ++j) below += d[j];
                if (below == 0) continue;
                bool critical = true;
                for (int i = 0; i <= ell && critical; ++i) {
                    long long ds = 0, ps = 0;
                    for (int j = i; j <= ell; ++j) {
                        ds += d[j];
                        ps += p[j];
                    }
                    if (!eps.at_least_fraction(ds, ps)) critical = false;
                }
                if (critical) brute = ell;
            }
            if (got != brute || got < 0) {
                out.fail("mismatch: got " + std::to_string(got) + ", brute " +
                         std::to_string(brute));
                break;
            }
        }
        const double elapsed = seconds_since(start);
        if (elapsed >= 5.0) out.fail("too slow: " + std::to_string(elapsed) + "s");
        if (out.pass)
            out.detail = std::to_string(checked) + " triggered vectors, all lowest levels agree";
        report(3, "critical-level", out, elapsed);
    }

    // ---- 4: random cover contract + within-set uniformity --------------------
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        constexpr double kTouchConstant = 8.0;  // touches <= C * f * local_n
        double worst_ratio = 0.0;
        for (std::uint64_t trial = 0; trial < 500 && out.pass; ++trial) {
            const int rn = 4 + static_cast<int>(trial % 17);
            const int rf = 1 + static_cast<int>(trial % 5);
            const int rm = std::min(2 + static_cast<int>(trial % 14), rn * rf);
            const SetSystem sys = gen_random_system(rn, rm, rf, 60000 + trial);
            Rng pick(trial);
            std::vector<int> subset;
            for (int e = 0; e < sys.n; ++e)
                if (pick.below(4) != 0) subset.push_back(e);
            if (subset.empty()) subset.push_back(0);
            IndexMaps maps;
            maps.resize(sys);
            TouchCounter build_touch;
            const InducedInstance inst = build_induced(sys, subset, maps, build_touch);
            Rng rng(trial * 2 + 1);
            TouchCounter touch;
            const RandomCoverResult rc = random_cover(inst, rng, touch);

            std::vector<std::uint8_t> covered(inst.local_n, 0);
            for (int s : rc.cover)
                for (int e : inst.local_elem_of[s]) covered[e] = 1;
            for (int e = 0; e < inst.local_n; ++e)
                if (!covered[e]) out.fail("uncovered element in trial " + std::to_string(trial));
            std::vector<std::uint8_t> is_pivot(inst.local_n, 0);
            for (const auto& piv : rc.pivots) is_pivot[piv.elem] = 1;
            for (int s = 0; s < inst.local_m; ++s) {
                int inside = 0;
                for (int e : inst.local_elem_of[s]) inside += is_pivot[e];
                if (inside > 1) out.fail("two pivots share a set");
            }
            for (std::size_t i = 1; i < rc.pivots.size(); ++i)
                if (rc.pivots[i].level > rc.pivots[i - 1].level) out.fail("levels increased");
            const double ratio = static_cast<double>(touch.count()) /
                                 (static_cast<double>(sys.f) * std::max(1, inst.local_n));
            worst_ratio = std::max(worst_ratio, ratio);
        }
        if (worst_ratio > kTouchConstant)
            out.fail("touch constant " + std::to_string(worst_ratio) + " exceeds 8");

        // Uniformity of the first pivot's rank inside the sampled set:
        // head set of size 8, 10^4 seeds, chi-square at significance 0.001
        // (df = 7, critical value 24.322).
        const SetSystem fixed = load_system("12 4\n8 0 1 2 3 4 5 6 7\n2 7 8\n2 8 9\n3 9 10 11\n");
        IndexMaps maps;
        maps.resize(fixed);
        TouchCounter t0;
        const InducedInstance inst = induce_all(fixed, maps, t0);
        std::vector<long long> counts(8, 0);
        for (int seed = 0; seed < 10000; ++seed) {
            Rng rng(static_cast<std::uint64_t>(seed));
            TouchCounter tc;
            const RandomCoverResult rc = random_cover(inst, rng, tc);
            const auto& first = rc.pivots.front();
            if (first.sampled_size != 8) {
                out.fail("first pivot not sampled from the size-8 set");
                break;
            }
            ++counts[inst.elem_to_global[first.elem]];
        }
        double chi2 = 0.0;
        for (long long c : counts) {
            const double diff = static_cast<double>(c) - 1250.0;
            chi2 += diff * diff / 1250.0;
        }
        if (chi2 >= 24.322) out.fail("chi-square " + std::to_string(chi2) + " >= 24.322");
        if (out.pass) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "500 instances clean, touch constant C = %.2f (cap 8), chi2 = %.2f",
                          worst_ratio, chi2);
            out.detail = buf;
        }
        report(4, "random-cover-contract", out, seconds_since(start));
    }

    // ---- 5: amortized work scaling across universe doublings -----------------
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        const ScalingReport scaling =
            bench_scaling({1 << 10, 1 << 11, 1 << 12}, 5, 0.5, 10, 424242, Algo::Decremental);
        if (scaling.max_over_min >= 3.0)
            out.fail("per-deletion touches vary " + std::to_string(scaling.max_over_min) + "x");
        const double elapsed = seconds_since(start);
        if (elapsed >= 120.0) out.fail("too slow");
        if (out.pass) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "mean touches/deletion %.0f / %.0f / %.0f (spread %.2fx < 3x)",
                          scaling.mean_per_delete[0], scaling.mean_per_delete[1],
                          scaling.mean_per_delete[2], scaling.max_over_min);
            out.detail = buf;
        }
        report(5, "work-scaling", out, elapsed);
    }

    // ---- 6: movement participation bound -------------------------------------
    {
        Outcome out;
        if (!shared.done) out.fail("shared workload missing");
        if (shared.max_movement > shared.movement_cap)
            out.fail("movement count " + std::to_string(shared.max_movement) + " above log2(n)+1");
        if (shared.moved_elements == 0)
            out.fail("no movement steps were exercised; the bound was never tested live");
        if (out.pass)
            out.detail = "max movement participation " + std::to_string(shared.max_movement) +
                         " <= " + std::to_string(shared.movement_cap) + " (movement ran in " +
                         std::to_string(shared.moved_elements) + " runs)";
        report(6, "movement-bound", out, 0.0);
    }

    // ---- 7: gadget gap soundness ---------------------------------------------
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        // Element-update gadget at n=12, |A|=|B|=6, t=3.
        for (std::uint64_t i = 0; i < 20 && out.pass; ++i) {
            const ContainmentInstance yes = gen_containment_instance(12, 6, 6, 3, true, 100 + i);
            if (!verify_containment_flag(yes)) out.fail("YES flag failed verification");
            const ElementGadget gadget = gen_element_update_gadget(yes);
            if (validate_trace(gadget.trace)) out.fail("element gadget trace invalid");
            if (element_gadget_stage_opt(yes, yes.planted_b) != 1)
                out.fail("YES stage optimum is not 1");
            const ContainmentInstance no = gen_containment_instance(12, 6, 6, 3, false, 200 + i);
            if (!verify_containment_flag(no)) out.fail("NO flag failed verification");
            for (std::size_t bi = 0; bi < no.b_sets.size() && out.pass; ++bi)
                if (element_gadget_stage_opt(no, static_cast<int>(bi)) < no.t)
                    out.fail("NO stage optimum below t");
        }
        // Set-update gadget at n=7, k=16, t=3 (gap: 48 > 46).
        const int k = 16;
        long long yes_thresh_checked = 0;
        for (std::uint64_t i = 0; i < 20 && out.pass; ++i) {
            const ContainmentInstance yes = gen_containment_instance(7, 6, 6, 3, true, 300 + i);
            const SetGadget gadget = gen_set_update_gadget(yes, k);
            if (!gadget.gap_ok) out.fail("gap inequality k*t > (n+k)*(t-1) fails");
            if (validate_trace(gadget.trace)) out.fail("set gadget trace invalid");
            if (set_gadget_stage_opt(yes, yes.planted_b, k) > yes.n + k)
                out.fail("YES stage optimum above n+k");
            ++yes_thresh_checked;
            const ContainmentInstance no = gen_containment_instance(7, 6, 6, 3, false, 400 + i);
            const SetGadget no_gadget = gen_set_update_gadget(no, k);
            for (std::size_t bi = 0; bi < no.b_sets.size() && out.pass; ++bi)
                if (set_gadget_stage_opt(no, static_cast<int>(bi), k) < no_gadget.no_floor)
                    out.fail("NO stage optimum below k*t");
        }
        const double elapsed = seconds_since(start);
        if (elapsed >= 60.0) out.fail("too slow");
        if (out.pass)
            out.detail = "20+20 element and 20+20 set gadgets sound; 48 > 46 gap verified";
        report(7, "gadget-gap", out, elapsed);
    }

    // ---- 8: baseline dominance ------------------------------------------------
    {
        Outcome out;
        if (shared.baseline_violations > 0)
            out.fail(std::to_string(shared.baseline_violations) + " baseline bound violations");
        if (out.pass)
            out.detail = "deterministic <= f*OPT and greedy <= (ln n + 1)*OPT on all queries";
        report(8, "baseline-dominance", out, 0.0);
    }

    // ---- 9: byte-identical reruns ---------------------------------------------
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        for (std::uint64_t i = 0; i < 5 && out.pass; ++i) {
            const SetSystem sys = gen_random_system(12, 10, 3, 7000 + i);
            const UpdateTrace trace = i % 2 == 0
                                          ? gen_mixed_trace(sys, 3 * sys.n, 70 + i, 3)
                                          : gen_deletion_trace(sys, DeletionOrder::Random, 70 + i, 2);
            RunOptions opt;
            opt.algo = i % 2 == 0 ? Algo::FullyDynamic : Algo::Decremental;
            opt.epsilon = i % 2 == 0 ? 0.25 : 0.5;
            opt.seed = 31 * i + 5;
            opt.check_invariants = true;
            opt.oracle_opt = true;
            const std::string json_a = emit_json(run_trace(sys, trace, opt), true);
            const std::string json_b = emit_json(run_trace(sys, trace, opt), true);
            const std::string csv_a = emit_csv(run_trace(sys, trace, opt), true);
            const std::string csv_b = emit_csv(run_trace(sys, trace, opt), true);
            if (json_a != json_b || csv_a != csv_b) out.fail("rerun differed");
        }
        const ScalingReport bench_a = bench_scaling({256}, 4, 0.5, 3, 99, Algo::Decremental);
        const ScalingReport bench_b = bench_scaling({256}, 4, 0.5, 3, 99, Algo::Decremental);
        for (std::size_t i = 0; i < bench_a.rows.size(); ++i)
            if (bench_a.rows[i].touches_total != bench_b.rows[i].touches_total)
                out.fail("bench rerun differed");
        if (out.pass) out.detail = "reruns byte-identical in json and csv";
        report(9, "determinism", out, seconds_since(start));
    }

    if (failures == 0) std::printf("ALL CRITERIA PASS\n");
    return failures == 0 ? 0 : 1;
}
