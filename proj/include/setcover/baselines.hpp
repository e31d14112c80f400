#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "setcover/common.hpp"
#include "setcover/set_system.hpp"

namespace setcover {

struct DeterministicCoverResult {
    std::vector<int> pivots;
    std::vector<int> cover;
};

/// Folklore deterministic f-approximation: walk the targets in id order, take
/// each still-uncovered one as a pivot and add every set containing it. The
/// pivots are pairwise set-disjoint, so |cover| <= f * OPT. O(n * f).
inline DeterministicCoverResult deterministic_cover(const SetSystem& sys,
                                                    std::span<const int> targets,
                                                    TouchCounter* touch = nullptr) {
    DeterministicCoverResult result;
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(sys.n), 0);
    std::vector<std::uint8_t> taken(static_cast<std::size_t>(sys.m), 0);
    std::vector<int> order(targets.begin(), targets.end());
    std::sort(order.begin(), order.end());
    for (int e : order) {
        if (covered[static_cast<std::size_t>(e)]) continue;
        if (sys.set_of[static_cast<std::size_t>(e)].empty())
            throw contract_error("deterministic_cover: uncoverable target");
        result.pivots.push_back(e);
        for (int s : sys.set_of[static_cast<std::size_t>(e)]) {
            if (touch) touch->add();
            if (taken[static_cast<std::size_t>(s)]) continue;
            taken[static_cast<std::size_t>(s)] = 1;
            result.cover.push_back(s);
            for (int member : sys.elem_of[static_cast<std::size_t>(s)]) {
                if (touch) touch->add();
                covered[static_cast<std::size_t>(member)] = 1;
            }
        }
    }
    return result;
}

/// Standard greedy: repeatedly take the set covering the most uncovered
/// targets (ties toward the lower set id). Size <= (ln n + 1) * OPT.
inline std::vector<int> greedy_cover(const SetSystem& sys, std::span<const int> targets) {
    std::vector<std::uint8_t> want(static_cast<std::size_t>(sys.n), 0);
    int remaining = 0;
    for (int e : targets)
        if (!want[static_cast<std::size_t>(e)]) {
            want[static_cast<std::size_t>(e)] = 1;
            ++remaining;
        }
    std::vector<int> cover;
    while (remaining > 0) {
        int best = -1, best_gain = 0;
        for (int s = 0; s < sys.m; ++s) {
            int gain = 0;
            for (int e : sys.elem_of[static_cast<std::size_t>(s)])
                gain += want[static_cast<std::size_t>(e)];
            if (gain > best_gain) {
                best_gain = gain;
                best = s;
            }
        }
        if (best < 0) throw contract_error("greedy_cover: uncoverable target");
        cover.push_back(best);
        for (int e : sys.elem_of[static_cast<std::size_t>(best)])
            if (want[static_cast<std::size_t>(e)]) {
                want[static_cast<std::size_t>(e)] = 0;
                --remaining;
            }
    }
    return cover;
}

namespace detail {

struct ExactSearch {
    const SetSystem* sys;
    std::vector<int> targets;                 // sorted unique target elements
    std::vector<std::uint8_t> is_target;      // over elements
    std::vector<int> cover_count;             // per element: chosen sets covering it
    int uncovered = 0;
    int best = 0;

    void choose(int s, int delta) {
        for (int e : sys->elem_of[static_cast<std::size_t>(s)]) {
            if (!is_target[static_cast<std::size_t>(e)]) continue;
            cover_count[static_cast<std::size_t>(e)] += delta;
            if (delta > 0 && cover_count[static_cast<std::size_t>(e)] == 1) --uncovered;
            if (delta < 0 && cover_count[static_cast<std::size_t>(e)] == 0) ++uncovered;
        }
    }

    void search(int chosen) {
        if (chosen >= best) return;
        if (uncovered == 0) {
            best = chosen;
            return;
        }
        // Branch on the lowest-id uncovered target over its candidate sets:
        // any cover must include one of them, so this enumeration is complete.
        int pick = -1;
        for (int e : targets)
            if (cover_count[static_cast<std::size_t>(e)] == 0) {
                pick = e;
                break;
            }
        for (int s : sys->set_of[static_cast<std::size_t>(pick)]) {
            choose(s, +1);
            search(chosen + 1);
            choose(s, -1);
        }
    }
};

}  // namespace detail

/// Exact minimum cover size over the target elements by branch and bound,
/// or std::nullopt when more than `set_cap` sets intersect the targets
/// (never a wrong number). Deterministic and order-independent.
inline std::optional<long long> exact_cover(const SetSystem& sys, std::span<const int> targets,
                                            int set_cap = 20) {
    detail::ExactSearch search;
    search.sys = &sys;
    search.is_target.assign(static_cast<std::size_t>(sys.n), 0);
    for (int e : targets) {
        if (e < 0 || e >= sys.n) throw contract_error("exact_cover: target out of range");
        if (!search.is_target[static_cast<std::size_t>(e)]) {
            search.is_target[static_cast<std::size_t>(e)] = 1;
            search.targets.push_back(e);
        }
    }
    std::sort(search.targets.begin(), search.targets.end());
    if (search.targets.empty()) return 0;

    std::vector<std::uint8_t> relevant(static_cast<std::size_t>(sys.m), 0);
    int relevant_count = 0;
    for (int e : search.targets)
        for (int s : sys.set_of[static_cast<std::size_t>(e)])
            if (!relevant[static_cast<std::size_t>(s)]) {
                relevant[static_cast<std::size_t>(s)] = 1;
                ++relevant_count;
            }
    if (relevant_count > set_cap) return std::nullopt;
    for (int e : search.targets)
        if (sys.set_of[static_cast<std::size_t>(e)].empty())
            throw contract_error("exact_cover: uncoverable target");

    search.cover_count.assign(static_cast<std::size_t>(sys.n), 0);
    search.uncovered = static_cast<int>(search.targets.size());
    search.best = static_cast<int>(greedy_cover(sys, search.targets).size());  // warm bound
    search.search(0);
    return search.best;
}

}  // namespace setcover
