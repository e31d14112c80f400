#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "setcover/common.hpp"

namespace setcover {

/// A static set system: universe 0..n-1, family 0..m-1, and the bidirectional
/// membership indexes. Immutable after construction and safe to share across
/// threads; the dynamic solvers layer activity flags on top of it.
struct SetSystem {
    int n = 0;          // element count
    int m = 0;          // set count
    int f = 0;          // max over elements of |set_of[e]|
    std::vector<std::vector<int>> set_of;   // per element: sets containing it
    std::vector<std::vector<int>> elem_of;  // per set: its elements

    long long incidence_count() const {
        long long total = 0;
        for (const auto& s : elem_of) total += static_cast<long long>(s.size());
        return total;
    }
};

/// Builds a SetSystem from explicit set contents, validating ids, per-set
/// duplicates, and nonemptiness. Used by generators and tests; the text
/// loader funnels through here.
inline SetSystem make_system(int n, std::vector<std::vector<int>> sets) {
    if (n < 0) throw param_error("element count must be nonnegative");
    SetSystem sys;
    sys.n = n;
    sys.m = static_cast<int>(sets.size());
    sys.elem_of = std::move(sets);
    sys.set_of.assign(n, {});
    std::vector<int> stamp(n, -1);
    for (int s = 0; s < sys.m; ++s) {
        if (sys.elem_of[s].empty())
            throw param_error("set " + std::to_string(s) + " covers no element");
        for (int e : sys.elem_of[s]) {
            if (e < 0 || e >= n)
                throw param_error("set " + std::to_string(s) + " contains out-of-range element " +
                                  std::to_string(e));
            if (stamp[e] == s)
                throw param_error("set " + std::to_string(s) + " lists element " +
                                  std::to_string(e) + " twice");
            stamp[e] = s;
            sys.set_of[e].push_back(s);
        }
    }
    for (int e = 0; e < n; ++e)
        sys.f = std::max(sys.f, static_cast<int>(sys.set_of[e].size()));
    return sys;
}

/// Parses the instance document:
///   line 1: "n m"
///   lines 2..m+1: "k e1 e2 ... ek" — the k elements of set i-1.
/// Rejects malformed lines, out-of-range ids, duplicate elements within a set,
/// and empty sets, naming the offending line.
inline SetSystem load_system(std::istream& in) {
    std::string line;
    int lineno = 0;

    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        if (required) throw parse_error(lineno + 1, "unexpected end of document");
        return false;
    };

    next_line(true);
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw parse_error(lineno, "header must be \"n m\"");
    std::string extra;
    if (header >> extra) throw parse_error(lineno, "trailing tokens after header");

    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<std::size_t>(m));
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < m; ++s) {
        next_line(true);
        std::istringstream ls(line);
        long long k = 0;
        if (!(ls >> k) || k < 0) throw parse_error(lineno, "expected element count");
        if (k == 0) throw parse_error(lineno, "set " + std::to_string(s) + " covers no element");
        std::vector<int> elems;
        elems.reserve(static_cast<std::size_t>(k));
        for (long long i = 0; i < k; ++i) {
            long long e = 0;
            if (!(ls >> e)) throw parse_error(lineno, "expected " + std::to_string(k) +
                                                          " element ids");
            if (e < 0 || e >= n)
                throw parse_error(lineno, "element id " + std::to_string(e) + " out of range");
            if (seen[static_cast<std::size_t>(e)] == s)
                throw parse_error(lineno, "element " + std::to_string(e) +
                                              " listed twice in set " + std::to_string(s));
            seen[static_cast<std::size_t>(e)] = s;
            elems.push_back(static_cast<int>(e));
        }
        if (ls >> extra) throw parse_error(lineno, "trailing tokens after set line");
        sets.push_back(std::move(elems));
    }
    if (next_line(false)) throw parse_error(lineno, "unexpected content after last set");

    try {
        return make_system(static_cast<int>(n), std::move(sets));
    } catch (const param_error& err) {
        throw parse_error(lineno, err.what());
    }
}

inline SetSystem load_system(const std::string& text) {
    std::istringstream in(text);
    return load_system(in);
}

inline void format_system(const SetSystem& sys, std::ostream& out) {
    out << sys.n << ' ' << sys.m << '\n';
    for (const auto& elems : sys.elem_of) {
        out << elems.size();
        for (int e : elems) out << ' ' << e;
        out << '\n';
    }
}

inline std::string format_system(const SetSystem& sys) {
    std::ostringstream out;
    format_system(sys, out);
    return out.str();
}

}  // namespace setcover
