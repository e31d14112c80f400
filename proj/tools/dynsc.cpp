// dynsc — dynamic set cover bench harness.
//
// Subcommands:
//   run    replay a trace through a solver or baseline, with optional online
//          invariant auditing and exact-optimum ratio checks
//   gen    emit instances and traces (random, clique, deletion/mixed traces,
//          and the containment-reduction gadgets)
//   bench  sweep universe sizes and report per-deletion work

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "setcover/setcover.hpp"

namespace {

setcover::SetSystem load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw setcover::param_error("cannot open instance file " + path);
    return setcover::load_system(in);
}

setcover::UpdateTrace load_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw setcover::param_error("cannot open trace file " + path);
    return setcover::parse_trace(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw setcover::param_error("cannot write to " + path);
    out << text;
}

struct RunArgs {
    std::string instance_path, trace_path, out_path, format = "json";
    std::string algo = "fully-dynamic";
    double epsilon = 0.25;
    std::uint64_t seed = 1;
    bool check_invariants = false;
    bool oracle_opt = false;
    int oracle_cap = 20;
    bool stable_output = false;
};

int do_run(const RunArgs& args) {
    const setcover::SetSystem sys = load_instance_file(args.instance_path);
    const setcover::UpdateTrace trace = load_trace_file(args.trace_path);
    if (const auto problem = setcover::validate_trace(trace)) {
        std::cerr << "invalid trace: " << *problem << "\n";
        return 1;
    }
    setcover::RunOptions opt;
    const auto algo = setcover::algo_from_name(args.algo);
    if (!algo) {
        std::cerr << "unknown algorithm " << args.algo << "\n";
        return 1;
    }
    opt.algo = *algo;
    opt.epsilon = args.epsilon;
    opt.seed = args.seed;
    opt.check_invariants = args.check_invariants;
    opt.oracle_opt = args.oracle_opt;
    opt.oracle_cap = args.oracle_cap;
    try {
        const setcover::RunMetrics mx = setcover::run_trace(sys, trace, opt);
        const std::string doc = args.format == "csv" ? emit_csv(mx, args.stable_output)
                                                     : emit_json(mx, args.stable_output);
        write_text(args.out_path, doc);
        if (args.oracle_opt) {
            bool any_capped = false;
            for (const auto& q : mx.queries) any_capped = any_capped || !q.opt.has_value();
            if (any_capped)
                std::cerr << "warning: some queries exceeded the oracle cap; "
                             "ratio fields omitted\n";
        }
        return 0;
    } catch (const setcover::audit_error& err) {
        // Counterexample dump: instance, trace prefix up to the failure, seed.
        std::cerr << "AUDIT FAILURE: " << err.what() << "\n";
        std::cerr << "seed: " << args.seed << " epsilon: " << args.epsilon << " algo: "
                  << args.algo << "\n";
        std::cerr << "--- instance ---\n" << setcover::format_system(sys);
        setcover::UpdateTrace prefix = trace;
        if (err.event_index() + 1 < static_cast<long long>(prefix.events.size()))
            prefix.events.resize(static_cast<std::size_t>(err.event_index()) + 1);
        std::cerr << "--- trace prefix ---\n" << setcover::format_trace(prefix);
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic set cover engine: solvers, baselines, workloads, bench"};
    app.require_subcommand(1);

    // ---- run ----------------------------------------------------------------
    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "replay a trace through a solver");
    run->add_option("--instance", run_args.instance_path, "instance file")->required();
    run->add_option("--trace", run_args.trace_path, "trace file")->required();
    run->add_option("--algo", run_args.algo,
                    "decremental|fully-dynamic|recompute-f|recompute-greedy");
    run->add_option("--epsilon", run_args.epsilon, "approximation parameter in (0,1)");
    run->add_option("--seed", run_args.seed, "solver random seed");
    run->add_flag("--check-invariants", run_args.check_invariants,
                  "run the full structural audit after every event");
    run->add_flag("--oracle-opt", run_args.oracle_opt,
                  "compute the exact optimum at every query and verify the ratio");
    run->add_option("--oracle-cap", run_args.oracle_cap, "max sets for the exact oracle");
    run->add_option("--out", run_args.out_path, "output path (default stdout)");
    run->add_option("--format", run_args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    run->add_flag("--stable-output", run_args.stable_output,
                  "zero the wall-clock field so reruns are byte-identical");

    // ---- gen ----------------------------------------------------------------
    CLI::App* gen = app.add_subcommand("gen", "generate instances and traces");
    gen->require_subcommand(1);

    struct {
        int n = 16, m = 8, f = 3;
        std::uint64_t seed = 1;
        std::string out;
    } gsys;
    CLI::App* gen_system = gen->add_subcommand("system", "random set system");
    gen_system->add_option("--n", gsys.n);
    gen_system->add_option("--m", gsys.m);
    gen_system->add_option("--f", gsys.f, "max frequency");
    gen_system->add_option("--seed", gsys.seed);
    gen_system->add_option("--out", gsys.out);

    struct {
        int clique = 3, n = 8;
        std::string out;
    } gclique;
    CLI::App* gen_clique = gen->add_subcommand("clique", "disjoint cliques plus an isolated edge");
    gen_clique->add_option("--clique-size", gclique.clique);
    gen_clique->add_option("--n", gclique.n);
    gen_clique->add_option("--out", gclique.out);

    struct {
        std::string instance, order = "random", out;
        std::uint64_t seed = 1;
        int query_every = 0;
        double probe_epsilon = 0.5;
    } gtrace;
    CLI::App* gen_trace = gen->add_subcommand("trace", "full deletion trace");
    gen_trace->add_option("--instance", gtrace.instance)->required();
    gen_trace->add_option("--order", gtrace.order, "random|adversarial")
        ->check(CLI::IsMember({"random", "adversarial"}));
    gen_trace->add_option("--seed", gtrace.seed);
    gen_trace->add_option("--query-every", gtrace.query_every);
    gen_trace->add_option("--probe-epsilon", gtrace.probe_epsilon);
    gen_trace->add_option("--out", gtrace.out);

    struct {
        std::string instance, out;
        int length = 0, query_every = 0;
        std::uint64_t seed = 1;
    } gmixed;
    CLI::App* gen_mixed = gen->add_subcommand("mixed-trace", "random insert/delete walk");
    gen_mixed->add_option("--instance", gmixed.instance)->required();
    gen_mixed->add_option("--length", gmixed.length, "events (default 3n)");
    gen_mixed->add_option("--query-every", gmixed.query_every);
    gen_mixed->add_option("--seed", gmixed.seed);
    gen_mixed->add_option("--out", gmixed.out);

    struct {
        int n = 12, a = 6, b = 6, t = 3, k = 16;
        bool yes = false, no = false, verify = false;
        std::uint64_t seed = 1;
        std::string out_instance, out_trace, meta;
    } ggadget;
    auto add_gadget_options = [&](CLI::App* cmd, bool with_k) {
        cmd->add_option("--n", ggadget.n, "universe size");
        cmd->add_option("--a", ggadget.a, "A-collection size");
        cmd->add_option("--b", ggadget.b, "B-collection size");
        cmd->add_option("--t", ggadget.t, "gap parameter");
        if (with_k) cmd->add_option("--k", ggadget.k, "copies per element");
        cmd->add_flag("--yes", ggadget.yes, "plant a YES instance");
        cmd->add_flag("--no", ggadget.no, "plant a NO instance");
        cmd->add_option("--seed", ggadget.seed);
        cmd->add_option("--out-instance", ggadget.out_instance)->required();
        cmd->add_option("--out-trace", ggadget.out_trace)->required();
        cmd->add_option("--meta", ggadget.meta, "write stage metadata as json");
        cmd->add_flag("--verify", ggadget.verify,
                      "confirm the stage optima against the exact oracle");
    };
    CLI::App* gen_elem_gadget =
        gen->add_subcommand("element-gadget", "containment reduction, element updates");
    add_gadget_options(gen_elem_gadget, false);
    CLI::App* gen_set_gadget =
        gen->add_subcommand("set-gadget", "containment reduction, set updates");
    add_gadget_options(gen_set_gadget, true);

    // ---- bench --------------------------------------------------------------
    struct {
        std::vector<int> n_values;
        int f = 5, seeds = 10;
        double epsilon = 0.5;
        std::uint64_t seed0 = 1;
        std::string algo = "decremental", out, format = "json";
    } bench_args;
    CLI::App* bench = app.add_subcommand("bench", "scaling sweep over universe sizes");
    bench->add_option("--n", bench_args.n_values, "universe sizes (repeatable)")->required();
    bench->add_option("--f", bench_args.f);
    bench->add_option("--epsilon", bench_args.epsilon);
    bench->add_option("--seeds", bench_args.seeds, "seeds per size");
    bench->add_option("--seed0", bench_args.seed0);
    bench->add_option("--algo", bench_args.algo, "decremental|fully-dynamic");
    bench->add_option("--out", bench_args.out);
    bench->add_option("--format", bench_args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return do_run(run_args);

        if (*gen_system) {
            write_text(gsys.out, setcover::format_system(setcover::gen_random_system(
                                     gsys.n, gsys.m, gsys.f, gsys.seed)));
            return 0;
        }
        if (*gen_clique) {
            write_text(gclique.out, setcover::format_system(
                                        setcover::gen_clique_instance(gclique.clique, gclique.n)));
            return 0;
        }
        if (*gen_trace) {
            const setcover::SetSystem sys = load_instance_file(gtrace.instance);
            const auto order = gtrace.order == "adversarial"
                                   ? setcover::DeletionOrder::PivotAdversarial
                                   : setcover::DeletionOrder::Random;
            write_text(gtrace.out,
                       setcover::format_trace(setcover::gen_deletion_trace(
                           sys, order, gtrace.seed, gtrace.query_every, gtrace.probe_epsilon)));
            return 0;
        }
        if (*gen_mixed) {
            const setcover::SetSystem sys = load_instance_file(gmixed.instance);
            const int length = gmixed.length > 0 ? gmixed.length : 3 * sys.n;
            write_text(gmixed.out, setcover::format_trace(setcover::gen_mixed_trace(
                                       sys, length, gmixed.seed, gmixed.query_every)));
            return 0;
        }
        if (*gen_elem_gadget || *gen_set_gadget) {
            if (ggadget.yes == ggadget.no)
                throw setcover::param_error("pass exactly one of --yes / --no");
            const setcover::ContainmentInstance ci = setcover::gen_containment_instance(
                ggadget.n, ggadget.a, ggadget.b, ggadget.t, ggadget.yes, ggadget.seed);
            nlohmann::ordered_json meta;
            meta["n"] = ci.n;
            meta["t"] = ci.t;
            meta["planted"] = ci.planted_yes ? "yes" : "no";
            if (*gen_elem_gadget) {
                const setcover::ElementGadget gadget = setcover::gen_element_update_gadget(ci);
                write_text(ggadget.out_instance, setcover::format_system(gadget.system));
                write_text(ggadget.out_trace, setcover::format_trace(gadget.trace));
                meta["threshold"] = gadget.t;
                meta["skipped_stages"] = gadget.skipped_stages;
                if (!gadget.skipped_stages.empty())
                    std::cerr << "warning: " << gadget.skipped_stages.size()
                              << " degenerate empty-B stage(s) emitted as no-ops\n";
                if (ggadget.verify) {
                    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
                    bool gap_sound = true;
                    for (int bi = 0; bi < static_cast<int>(ci.b_sets.size()); ++bi) {
                        if (ci.b_sets[bi].empty()) continue;
                        const long long opt = setcover::element_gadget_stage_opt(ci, bi);
                        stages.push_back({{"stage", bi}, {"opt", opt}});
                        if (ci.planted_yes && bi == ci.planted_b && opt != 1) gap_sound = false;
                        if (!ci.planted_yes && opt < ci.t) gap_sound = false;
                    }
                    meta["stage_opts"] = stages;
                    meta["gap_sound"] = gap_sound;
                }
            } else {
                const setcover::SetGadget gadget =
                    setcover::gen_set_update_gadget(ci, ggadget.k);
                write_text(ggadget.out_instance, setcover::format_system(gadget.system));
                write_text(ggadget.out_trace, setcover::format_trace(gadget.trace));
                meta["k"] = gadget.k;
                meta["yes_threshold"] = gadget.yes_threshold;
                meta["no_floor"] = gadget.no_floor;
                meta["gap_ok"] = gadget.gap_ok;
                if (ggadget.verify) {
                    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
                    bool gap_sound = gadget.gap_ok;
                    for (int bi = 0; bi < static_cast<int>(ci.b_sets.size()); ++bi) {
                        const long long opt =
                            setcover::set_gadget_stage_opt(ci, bi, ggadget.k);
                        stages.push_back({{"stage", bi}, {"opt", opt}});
                        if (ci.planted_yes && bi == ci.planted_b &&
                            opt > ci.n + ggadget.k)
                            gap_sound = false;
                        if (!ci.planted_yes && opt < gadget.no_floor) gap_sound = false;
                    }
                    meta["stage_opts"] = stages;
                    meta["gap_sound"] = gap_sound;
                }
            }
            if (!ggadget.meta.empty()) write_text(ggadget.meta, meta.dump(2) + "\n");
            return 0;
        }
        if (*bench) {
            const auto algo = setcover::algo_from_name(bench_args.algo);
            if (!algo) throw setcover::param_error("unknown algorithm " + bench_args.algo);
            const setcover::ScalingReport report =
                setcover::bench_scaling(bench_args.n_values, bench_args.f, bench_args.epsilon,
                                        bench_args.seeds, bench_args.seed0, *algo);
            if (bench_args.format == "csv") {
                std::ostringstream out;
                out << "n,seed,deletions,touches_total,update_touches,per_delete\n";
                for (const auto& row : report.rows)
                    out << row.n << ',' << row.seed << ',' << row.deletions << ','
                        << row.touches_total << ',' << row.update_touches << ','
                        << row.per_delete << '\n';
                out << "summary,max_over_min," << report.max_over_min << ",superlinear,"
                    << (report.superlinear_flag ? 1 : 0) << ",\n";
                write_text(bench_args.out, out.str());
            } else {
                nlohmann::ordered_json doc;
                doc["algo"] = bench_args.algo;
                doc["f"] = bench_args.f;
                doc["epsilon"] = bench_args.epsilon;
                doc["rows"] = nlohmann::ordered_json::array();
                for (const auto& row : report.rows)
                    doc["rows"].push_back({{"n", row.n},
                                           {"seed", row.seed},
                                           {"deletions", row.deletions},
                                           {"touches_total", row.touches_total},
                                           {"update_touches", row.update_touches},
                                           {"per_delete", row.per_delete}});
                doc["mean_per_delete"] = report.mean_per_delete;
                doc["max_over_min"] = report.max_over_min;
                doc["superlinear"] = report.superlinear_flag;
                write_text(bench_args.out, doc.dump(2) + "\n");
            }
            if (report.superlinear_flag)
                std::cerr << "warning: per-deletion cost varies more than 3x across sizes\n";
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
