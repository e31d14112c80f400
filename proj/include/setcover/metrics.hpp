#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "setcover/common.hpp"

namespace setcover {

struct PhaseLogEntry {
    int level = -1;
    int x_prime = 0;
    int new_pivots = 0;
    std::uint64_t touches = 0;
};

struct QueryLogEntry {
    long long index = 0;  // event index of the query within the trace
    long long cover_size = 0;
    std::optional<long long> opt;   // exact optimum, when the oracle ran
    std::optional<double> ratio;    // cover_size / opt
};

/// Everything one run reports. The emitted document carries the stable field
/// set {algo, epsilon, seed, n, m, f, events, touches_total, phases, queries,
/// wall_ms}; the remaining members are in-process detail for tests and the
/// bench aggregation.
struct RunMetrics {
    std::string algo;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    int n = 0;
    int m = 0;
    int f = 0;
    long long events = 0;
    std::uint64_t touches_total = 0;
    std::vector<PhaseLogEntry> phases;
    std::vector<QueryLogEntry> queries;
    std::uint64_t wall_ms = 0;

    // In-process only (not part of the document).
    std::vector<std::uint64_t> per_event_touches;
    std::vector<std::pair<long long, long long>> pd_snapshots;  // (p_total, d_total) per event
    int max_movement_count = 0;
    std::uint64_t update_touches = 0;  // touches_total minus construction cost
    long long deletions = 0;
    long long insertions = 0;
};

/// JSON document. `stable` zeroes the wall-clock field so reruns with the
/// same seed are byte-identical.
inline std::string emit_json(const RunMetrics& mx, bool stable = false) {
    nlohmann::ordered_json doc;
    doc["algo"] = mx.algo;
    doc["epsilon"] = mx.epsilon;
    doc["seed"] = mx.seed;
    doc["n"] = mx.n;
    doc["m"] = mx.m;
    doc["f"] = mx.f;
    doc["events"] = mx.events;
    doc["touches_total"] = mx.touches_total;
    doc["phases"] = nlohmann::ordered_json::array();
    for (const auto& ph : mx.phases) {
        nlohmann::ordered_json entry;
        entry["level"] = ph.level;
        entry["x_prime"] = ph.x_prime;
        entry["new_pivots"] = ph.new_pivots;
        entry["touches"] = ph.touches;
        doc["phases"].push_back(entry);
    }
    doc["queries"] = nlohmann::ordered_json::array();
    for (const auto& q : mx.queries) {
        nlohmann::ordered_json entry;
        entry["index"] = q.index;
        entry["cover_size"] = q.cover_size;
        if (q.opt) entry["opt"] = *q.opt;
        if (q.ratio) entry["ratio"] = *q.ratio;
        doc["queries"].push_back(entry);
    }
    doc["wall_ms"] = stable ? 0 : mx.wall_ms;
    return doc.dump(2) + "\n";
}

inline RunMetrics parse_json_metrics(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    RunMetrics mx;
    mx.algo = doc.at("algo").get<std::string>();
    mx.epsilon = doc.at("epsilon").get<double>();
    mx.seed = doc.at("seed").get<std::uint64_t>();
    mx.n = doc.at("n").get<int>();
    mx.m = doc.at("m").get<int>();
    mx.f = doc.at("f").get<int>();
    mx.events = doc.at("events").get<long long>();
    mx.touches_total = doc.at("touches_total").get<std::uint64_t>();
    for (const auto& entry : doc.at("phases")) {
        PhaseLogEntry ph;
        ph.level = entry.at("level").get<int>();
        ph.x_prime = entry.at("x_prime").get<int>();
        ph.new_pivots = entry.at("new_pivots").get<int>();
        ph.touches = entry.at("touches").get<std::uint64_t>();
        mx.phases.push_back(ph);
    }
    for (const auto& entry : doc.at("queries")) {
        QueryLogEntry q;
        q.index = entry.at("index").get<long long>();
        q.cover_size = entry.at("cover_size").get<long long>();
        if (entry.contains("opt")) q.opt = entry.at("opt").get<long long>();
        if (entry.contains("ratio")) q.ratio = entry.at("ratio").get<double>();
        mx.queries.push_back(q);
    }
    mx.wall_ms = doc.at("wall_ms").get<std::uint64_t>();
    return mx;
}

/// Tabular form: "key,value" scalar rows, then one row per phase and query.
inline std::string emit_csv(const RunMetrics& mx, bool stable = false) {
    std::string out;
    auto row = [&out](const std::string& k, const std::string& v) {
        out += k;
        out += ',';
        out += v;
        out += '\n';
    };
    row("algo", mx.algo);
    row("epsilon", std::to_string(mx.epsilon));
    row("seed", std::to_string(mx.seed));
    row("n", std::to_string(mx.n));
    row("m", std::to_string(mx.m));
    row("f", std::to_string(mx.f));
    row("events", std::to_string(mx.events));
    row("touches_total", std::to_string(mx.touches_total));
    row("wall_ms", std::to_string(stable ? 0 : mx.wall_ms));
    out += "phase,level,x_prime,new_pivots,touches\n";
    for (std::size_t i = 0; i < mx.phases.size(); ++i) {
        const auto& ph = mx.phases[i];
        out += "phase," + std::to_string(ph.level) + ',' + std::to_string(ph.x_prime) + ',' +
               std::to_string(ph.new_pivots) + ',' + std::to_string(ph.touches) + '\n';
    }
    out += "query,index,cover_size,opt,ratio\n";
    for (const auto& q : mx.queries) {
        out += "query," + std::to_string(q.index) + ',' + std::to_string(q.cover_size) + ',';
        out += q.opt ? std::to_string(*q.opt) : std::string();
        out += ',';
        out += q.ratio ? std::to_string(*q.ratio) : std::string();
        out += '\n';
    }
    return out;
}

}  // namespace setcover
