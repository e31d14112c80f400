#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "setcover/common.hpp"

namespace setcover {

enum class EventKind { Insert, Erase, Query, ActivateSet, DeactivateSet };

struct TraceEvent {
    EventKind kind = EventKind::Query;
    int id = -1;  // element or set id; unused for Query
};

/// An ordered update sequence bound to an instance shape (n, m). Element
/// traces drive the solvers; set traces ("+S"/"-S") are consumed only by the
/// gadget verification pipeline. Traces are fixed ahead of any run and never
/// read solver randomness.
struct UpdateTrace {
    int n = 0;
    int m = 0;
    std::vector<TraceEvent> events;

    bool has_element_events() const {
        for (const auto& ev : events)
            if (ev.kind == EventKind::Insert || ev.kind == EventKind::Erase) return true;
        return false;
    }

    bool has_set_events() const {
        for (const auto& ev : events)
            if (ev.kind == EventKind::ActivateSet || ev.kind == EventKind::DeactivateSet)
                return true;
        return false;
    }

    bool has_inserts() const {
        for (const auto& ev : events)
            if (ev.kind == EventKind::Insert) return true;
        return false;
    }

    /// Delete-only element traces replay against a fully active universe
    /// (the decremental convention); anything else starts empty.
    bool starts_fully_active() const {
        return has_element_events() && !has_inserts() && !has_set_events();
    }
};

/// Trace document: header "trace n m", then one event per line:
///   "+ e"  insert element   "- e"  delete element   "?"  query
///   "+S s" activate set     "-S s" deactivate set
inline UpdateTrace parse_trace(std::istream& in) {
    UpdateTrace trace;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (!saw_header) {
            if (tok != "trace") throw parse_error(lineno, "expected header \"trace n m\"");
            long long n = 0, m = 0;
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw parse_error(lineno, "expected header \"trace n m\"");
            trace.n = static_cast<int>(n);
            trace.m = static_cast<int>(m);
            saw_header = true;
            continue;
        }
        TraceEvent ev;
        bool needs_id = true;
        if (tok == "+")
            ev.kind = EventKind::Insert;
        else if (tok == "-")
            ev.kind = EventKind::Erase;
        else if (tok == "?") {
            ev.kind = EventKind::Query;
            needs_id = false;
        } else if (tok == "+S")
            ev.kind = EventKind::ActivateSet;
        else if (tok == "-S")
            ev.kind = EventKind::DeactivateSet;
        else
            throw parse_error(lineno, "unknown event \"" + tok + "\"");
        if (needs_id) {
            long long id = 0;
            if (!(ls >> id)) throw parse_error(lineno, "event is missing its id");
            const long long limit = (ev.kind == EventKind::ActivateSet ||
                                     ev.kind == EventKind::DeactivateSet)
                                        ? trace.m
                                        : trace.n;
            if (id < 0 || id >= limit) throw parse_error(lineno, "event id out of range");
            ev.id = static_cast<int>(id);
        }
        std::string extra;
        if (ls >> extra) throw parse_error(lineno, "trailing tokens after event");
        trace.events.push_back(ev);
    }
    if (!saw_header) throw parse_error(lineno + 1, "missing header \"trace n m\"");
    return trace;
}

inline UpdateTrace parse_trace(const std::string& text) {
    std::istringstream in(text);
    return parse_trace(in);
}

inline void format_trace(const UpdateTrace& trace, std::ostream& out) {
    out << "trace " << trace.n << ' ' << trace.m << '\n';
    for (const auto& ev : trace.events) {
        switch (ev.kind) {
            case EventKind::Insert: out << "+ " << ev.id << '\n'; break;
            case EventKind::Erase: out << "- " << ev.id << '\n'; break;
            case EventKind::Query: out << "?\n"; break;
            case EventKind::ActivateSet: out << "+S " << ev.id << '\n'; break;
            case EventKind::DeactivateSet: out << "-S " << ev.id << '\n'; break;
        }
    }
}

inline std::string format_trace(const UpdateTrace& trace) {
    std::ostringstream out;
    format_trace(trace, out);
    return out.str();
}

/// Linear replay check: inserts must target inactive elements, deletes active
/// ones (and symmetrically for set events); element and set events must not
/// be mixed in one trace. Returns the first problem, or nullopt.
inline std::optional<std::string> validate_trace(const UpdateTrace& trace) {
    if (trace.has_element_events() && trace.has_set_events())
        return "trace mixes element and set events";
    std::vector<std::uint8_t> state;
    if (trace.has_set_events())
        state.assign(static_cast<std::size_t>(trace.m), 0);  // sets start inactive
    else
        state.assign(static_cast<std::size_t>(trace.n), trace.starts_fully_active() ? 1 : 0);
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
        const auto& ev = trace.events[i];
        if (ev.kind == EventKind::Query) continue;
        const bool activating =
            ev.kind == EventKind::Insert || ev.kind == EventKind::ActivateSet;
        std::uint8_t& slot = state[static_cast<std::size_t>(ev.id)];
        if (activating && slot)
            return "event " + std::to_string(i) + " activates an already-active id " +
                   std::to_string(ev.id);
        if (!activating && !slot)
            return "event " + std::to_string(i) + " deactivates an inactive id " +
                   std::to_string(ev.id);
        slot = activating ? 1 : 0;
    }
    return std::nullopt;
}

}  // namespace setcover
