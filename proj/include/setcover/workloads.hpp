#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "setcover/baselines.hpp"
#include "setcover/common.hpp"
#include "setcover/decremental.hpp"
#include "setcover/rng.hpp"
#include "setcover/set_system.hpp"
#include "setcover/trace.hpp"

namespace setcover {

// ---------------------------------------------------------------------------
// Random instances and traces
// ---------------------------------------------------------------------------

/// Random set system with frequency at most f_target, every element in at
/// least one set and no empty sets. Reproducible per seed.
inline SetSystem gen_random_system(int n, int m, int f_target, std::uint64_t seed) {
    if (n < 1 || m < 1 || f_target < 1) throw param_error("gen_random_system: bad shape");
    if (static_cast<long long>(n) * f_target < m)
        throw param_error("gen_random_system: cannot fill " + std::to_string(m) +
                          " sets with n*f_target = " + std::to_string(n * f_target));
    Rng rng(seed);
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(m));
    std::vector<int> freq(static_cast<std::size_t>(n), 0);
    std::vector<int> scratch(static_cast<std::size_t>(m));
    for (int e = 0; e < n; ++e) {
        const int k = 1 + rng.below_int(f_target);
        // k distinct sets via a partial Fisher-Yates over set ids.
        std::iota(scratch.begin(), scratch.end(), 0);
        for (int i = 0; i < k && i < m; ++i) {
            const int j = i + rng.below_int(m - i);
            std::swap(scratch[static_cast<std::size_t>(i)], scratch[static_cast<std::size_t>(j)]);
            sets[static_cast<std::size_t>(scratch[static_cast<std::size_t>(i)])].push_back(e);
            ++freq[static_cast<std::size_t>(e)];
        }
    }
    // Repair empty sets: prefer an element with frequency headroom, else move
    // one out of a multi-element set (as long as n*f_target >= m one of the
    // two options always exists).
    for (int s = 0; s < m; ++s) {
        if (!sets[static_cast<std::size_t>(s)].empty()) continue;
        std::vector<int> candidates;
        for (int e = 0; e < n; ++e)
            if (freq[static_cast<std::size_t>(e)] < f_target) candidates.push_back(e);
        if (!candidates.empty()) {
            const int e = candidates[static_cast<std::size_t>(rng.below_int(
                static_cast<int>(candidates.size())))];
            sets[static_cast<std::size_t>(s)].push_back(e);
            ++freq[static_cast<std::size_t>(e)];
            continue;
        }
        bool moved = false;
        for (int donor = 0; donor < m && !moved; ++donor) {
            auto& from = sets[static_cast<std::size_t>(donor)];
            if (from.size() < 2) continue;
            const int pick = rng.below_int(static_cast<int>(from.size()));
            sets[static_cast<std::size_t>(s)].push_back(from[static_cast<std::size_t>(pick)]);
            from[static_cast<std::size_t>(pick)] = from.back();
            from.pop_back();
            moved = true;
        }
        if (!moved)
            throw param_error("gen_random_system: cannot repair empty set " + std::to_string(s));
    }
    for (auto& elems : sets) std::sort(elems.begin(), elems.end());
    return make_system(n, std::move(sets));
}

/// The clique-plus-isolated-edge family: sets are the edges of (n-2)/k
/// disjoint k-cliques plus one isolated edge on the last two elements.
/// Clique vertices have frequency k-1; the edge vertices have frequency 1.
inline SetSystem gen_clique_instance(int clique_size, int n) {
    if (clique_size < 2) throw param_error("gen_clique_instance: clique size must be >= 2");
    if (n < clique_size + 2 || (n - 2) % clique_size != 0)
        throw param_error("gen_clique_instance: n-2 must be a positive multiple of the clique size");
    std::vector<std::vector<int>> sets;
    const int cliques = (n - 2) / clique_size;
    for (int c = 0; c < cliques; ++c) {
        const int base = c * clique_size;
        for (int i = 0; i < clique_size; ++i)
            for (int j = i + 1; j < clique_size; ++j)
                sets.push_back({base + i, base + j});
    }
    sets.push_back({n - 2, n - 1});
    return make_system(n, std::move(sets));
}

enum class DeletionOrder { Random, PivotAdversarial };

/// Full deletion trace over a system. Random: a uniform permutation.
/// PivotAdversarial: replays a reference decremental solver under a probe
/// seed and always deletes one of its current undeleted pivots first (the
/// measured run keeps its own independent seed, so the trace stays oblivious
/// to that run's randomness). A query is emitted every query_every deletions
/// when query_every > 0.
inline UpdateTrace gen_deletion_trace(const SetSystem& sys, DeletionOrder order,
                                      std::uint64_t seed, int query_every = 0,
                                      double probe_epsilon = 0.5) {
    UpdateTrace trace;
    trace.n = sys.n;
    trace.m = sys.m;
    std::vector<int> deletions;
    deletions.reserve(static_cast<std::size_t>(sys.n));
    Rng rng(seed);
    if (order == DeletionOrder::Random) {
        std::vector<int> perm(static_cast<std::size_t>(sys.n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = sys.n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.below_int(i + 1))]);
        deletions = std::move(perm);
    } else {
        DecrementalSolver probe(sys, probe_epsilon, seed);
        std::vector<std::uint8_t> gone(static_cast<std::size_t>(sys.n), 0);
        for (int step = 0; step < sys.n; ++step) {
            int victim = -1;
            for (int e = 0; e < sys.n; ++e)
                if (!gone[static_cast<std::size_t>(e)] && probe.state().is_undeleted_pivot(e)) {
                    victim = e;
                    break;
                }
            if (victim < 0)
                for (int e = 0; e < sys.n; ++e)
                    if (!gone[static_cast<std::size_t>(e)]) {
                        victim = e;
                        break;
                    }
            gone[static_cast<std::size_t>(victim)] = 1;
            probe.erase(victim);
            deletions.push_back(victim);
        }
    }
    for (int i = 0; i < static_cast<int>(deletions.size()); ++i) {
        trace.events.push_back({EventKind::Erase, deletions[static_cast<std::size_t>(i)]});
        if (query_every > 0 && (i + 1) % query_every == 0)
            trace.events.push_back({EventKind::Query, -1});
    }
    return trace;
}

/// Mixed insert/delete random walk for the fully dynamic solver: starts from
/// an empty active set, inserts or deletes a uniformly chosen valid element
/// each step, and sprinkles queries.
inline UpdateTrace gen_mixed_trace(const SetSystem& sys, int length, std::uint64_t seed,
                                   int query_every = 0) {
    UpdateTrace trace;
    trace.n = sys.n;
    trace.m = sys.m;
    Rng rng(seed);
    std::vector<int> inactive(static_cast<std::size_t>(sys.n));
    std::iota(inactive.begin(), inactive.end(), 0);
    std::vector<int> active;
    auto take = [&](std::vector<int>& from) {
        const int i = rng.below_int(static_cast<int>(from.size()));
        const int e = from[static_cast<std::size_t>(i)];
        from[static_cast<std::size_t>(i)] = from.back();
        from.pop_back();
        return e;
    };
    for (int step = 0; step < length; ++step) {
        const bool can_insert = !inactive.empty();
        const bool can_delete = !active.empty();
        bool do_insert;
        if (can_insert && can_delete)
            do_insert = rng.below(2) == 0;
        else
            do_insert = can_insert;
        if (do_insert) {
            const int e = take(inactive);
            active.push_back(e);
            trace.events.push_back({EventKind::Insert, e});
        } else {
            const int e = take(active);
            inactive.push_back(e);
            trace.events.push_back({EventKind::Erase, e});
        }
        if (query_every > 0 && (step + 1) % query_every == 0)
            trace.events.push_back({EventKind::Query, -1});
    }
    return trace;
}

// ---------------------------------------------------------------------------
// Containment instances and the reduction gadgets
// ---------------------------------------------------------------------------

/// Two collections A (size a_count) and B (size b_count) of subsets of [n]
/// with a planted YES/NO answer at gap parameter t:
///   YES: some B in the B-collection is contained in some A;
///   NO:  no t sets from the A-collection union-cover any B.
/// Every element of [n] is covered by the union of the A-collection, so the
/// derived dynamic instances stay feasible.
struct ContainmentInstance {
    int n = 0;
    int t = 2;
    bool planted_yes = false;
    std::vector<std::vector<int>> a_sets;
    std::vector<std::vector<int>> b_sets;
    int planted_a = -1;  // YES witnesses (indices), -1 on NO instances
    int planted_b = -1;
};

namespace detail {

inline bool subset_of(const std::vector<int>& small, const std::vector<std::uint8_t>& big_mask) {
    for (int e : small)
        if (!big_mask[static_cast<std::size_t>(e)]) return false;
    return true;
}

inline std::vector<std::uint8_t> mask_of(int n, const std::vector<int>& elems) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(n), 0);
    for (int e : elems) mask[static_cast<std::size_t>(e)] = 1;
    return mask;
}

/// True when no t-subset of the A-collection union-covers any B (the NO
/// property), checked exhaustively.
inline bool no_t_union_covers(const ContainmentInstance& ci) {
    const int a = static_cast<int>(ci.a_sets.size());
    std::vector<int> pick(static_cast<std::size_t>(ci.t));
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(ci.n), 0);
    // Enumerate t-subsets of the A-collection by index combinations.
    std::vector<int> comb(static_cast<std::size_t>(ci.t));
    for (int i = 0; i < ci.t; ++i) comb[static_cast<std::size_t>(i)] = i;
    if (ci.t > a) return true;
    while (true) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int i = 0; i < ci.t; ++i)
            for (int e : ci.a_sets[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])])
                mask[static_cast<std::size_t>(e)] = 1;
        for (const auto& b : ci.b_sets)
            if (subset_of(b, mask)) return false;
        int i = ci.t - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == a - ci.t + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < ci.t; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

}  // namespace detail

/// Exhaustively checks the planted flag: all (A, B) pairs for YES, all
/// t-subsets of the A-collection against every B for NO.
inline bool verify_containment_flag(const ContainmentInstance& ci) {
    bool some_containment = false;
    for (const auto& a : ci.a_sets) {
        const auto mask = detail::mask_of(ci.n, a);
        for (const auto& b : ci.b_sets)
            if (!b.empty() && detail::subset_of(b, mask)) some_containment = true;
    }
    if (ci.planted_yes) return some_containment;
    return detail::no_t_union_covers(ci);
}

/// Planted-instance generator. YES plants B inside a chosen A; NO draws
/// sparse random A-sets and large random B-sets and rejection-samples against
/// the exhaustive t-union check. Both repair [n] coverage by the A-union
/// before the check. Deterministic per seed; throws after max_attempts.
inline ContainmentInstance gen_containment_instance(int n, int a_count, int b_count, int t,
                                                    bool yes, std::uint64_t seed,
                                                    int max_attempts = 20000) {
    if (n < 4 || a_count < 1 || b_count < 1 || t < 2)
        throw param_error("gen_containment_instance: bad shape");
    if (!yes && t > a_count)
        throw param_error("gen_containment_instance: NO case needs t <= |A|");
    Rng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        ContainmentInstance ci;
        ci.n = n;
        ci.t = t;
        ci.planted_yes = yes;
        // Sparse A-sets keep t-unions small; large B-sets resist coverage.
        const double a_density = yes ? 0.35 : 0.18;
        ci.a_sets.assign(static_cast<std::size_t>(a_count), {});
        for (auto& a : ci.a_sets) {
            for (int e = 0; e < n; ++e)
                if (rng.unit_double() < a_density) a.push_back(e);
            if (a.empty()) a.push_back(rng.below_int(n));
        }
        ci.b_sets.assign(static_cast<std::size_t>(b_count), {});
        const int b_low = std::max(2, (3 * n) / 4);
        const int b_high = std::max(b_low, n - 1);
        for (auto& b : ci.b_sets) {
            const int size = b_low + rng.below_int(b_high - b_low + 1);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = 0; i < size; ++i) {
                const int j = i + rng.below_int(n - i);
                std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                b.push_back(perm[static_cast<std::size_t>(i)]);
            }
            std::sort(b.begin(), b.end());
        }
        if (yes) {
            ci.planted_a = rng.below_int(a_count);
            ci.planted_b = rng.below_int(b_count);
            // Plant B strictly inside the chosen A.
            auto& a = ci.a_sets[static_cast<std::size_t>(ci.planted_a)];
            auto& b = ci.b_sets[static_cast<std::size_t>(ci.planted_b)];
            const int size = std::max(1, std::min(static_cast<int>(b.size()), n / 2));
            b.resize(static_cast<std::size_t>(size));
            auto mask = detail::mask_of(n, a);
            for (int e : b)
                if (!mask[static_cast<std::size_t>(e)]) {
                    a.push_back(e);
                    mask[static_cast<std::size_t>(e)] = 1;
                }
            std::sort(a.begin(), a.end());
        }
        // Repair: every element of [n] must be covered by the A-union.
        std::vector<std::uint8_t> covered(static_cast<std::size_t>(n), 0);
        for (const auto& a : ci.a_sets)
            for (int e : a) covered[static_cast<std::size_t>(e)] = 1;
        for (int e = 0; e < n; ++e)
            if (!covered[static_cast<std::size_t>(e)]) {
                auto& a = ci.a_sets[static_cast<std::size_t>(rng.below_int(a_count))];
                a.push_back(e);
                std::sort(a.begin(), a.end());
            }
        for (auto& a : ci.a_sets) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        if (verify_containment_flag(ci)) return ci;
    }
    throw param_error("gen_containment_instance: rejection sampling exhausted");
}

// ---------------------------------------------------------------------------
// Element-update gadget
// ---------------------------------------------------------------------------

/// The element-update reduction trace. The set system is the A-collection
/// over [n]; the trace activates the whole universe, then runs one stage per
/// B: deactivate everything outside B, query (so the active universe is
/// exactly B), and reinsert. A query answer below t resolves the instance
/// YES. Stages for an empty B would leave nothing active and are emitted as
/// no-ops, recorded in skipped_stages.
struct ElementGadget {
    SetSystem system;
    UpdateTrace trace;
    int t = 2;
    std::vector<int> stage_of_query;  // query index -> B index
    std::vector<int> skipped_stages;  // degenerate (empty-B) stages
};

inline ElementGadget gen_element_update_gadget(const ContainmentInstance& ci) {
    ElementGadget gadget;
    gadget.t = ci.t;
    gadget.system = make_system(ci.n, ci.a_sets);
    gadget.trace.n = ci.n;
    gadget.trace.m = gadget.system.m;
    for (int e = 0; e < ci.n; ++e) gadget.trace.events.push_back({EventKind::Insert, e});
    for (int bi = 0; bi < static_cast<int>(ci.b_sets.size()); ++bi) {
        const auto& b = ci.b_sets[static_cast<std::size_t>(bi)];
        if (b.empty()) {
            gadget.skipped_stages.push_back(bi);
            continue;
        }
        const auto keep = detail::mask_of(ci.n, b);
        std::vector<int> removed;
        for (int e = 0; e < ci.n; ++e)
            if (!keep[static_cast<std::size_t>(e)]) {
                gadget.trace.events.push_back({EventKind::Erase, e});
                removed.push_back(e);
            }
        gadget.trace.events.push_back({EventKind::Query, -1});
        gadget.stage_of_query.push_back(bi);
        for (int e : removed) gadget.trace.events.push_back({EventKind::Insert, e});
    }
    return gadget;
}

/// Exact optimum at the stage for B (active universe = B, sets = A-collection).
inline long long element_gadget_stage_opt(const ContainmentInstance& ci, int b_index) {
    const SetSystem sys = make_system(ci.n, ci.a_sets);
    const auto& b = ci.b_sets[static_cast<std::size_t>(b_index)];
    const auto opt = exact_cover(sys, b, /*set_cap=*/64);
    return opt ? *opt : -1;
}

// ---------------------------------------------------------------------------
// Set-update gadget
// ---------------------------------------------------------------------------

/// The set-update reduction. The universe holds k copies e*k..e*k+k-1 of each
/// element e; each A-set has k copies (copy i holds the i-th copies of its
/// elements, set id a*k+i) that stay active throughout, and each element e
/// has a column set S_e = {all k copies of e} (set id |A|*k + e) activated
/// per stage for the elements outside B. A query answer at most
/// (n+k)*(t-1) resolves YES; NO stages have optimum at least k*t, and the
/// reduction's gap argument needs k*t > (n+k)*(t-1) (reported in gap_ok).
struct SetGadget {
    SetSystem system;
    UpdateTrace trace;
    int k = 1;
    int t = 2;
    long long yes_threshold = 0;  // (n+k)*(t-1)
    long long no_floor = 0;       // k*t
    bool gap_ok = false;
    int copy_set_count = 0;           // |A|*k; column ids start here
    std::vector<int> stage_of_query;  // query index -> B index
};

inline SetGadget gen_set_update_gadget(const ContainmentInstance& ci, int k) {
    if (k < 1) throw param_error("gen_set_update_gadget: k must be >= 1");
    SetGadget gadget;
    gadget.k = k;
    gadget.t = ci.t;
    gadget.yes_threshold = static_cast<long long>(ci.n + k) * (ci.t - 1);
    gadget.no_floor = static_cast<long long>(k) * ci.t;
    gadget.gap_ok = gadget.no_floor > gadget.yes_threshold;

    const int a_count = static_cast<int>(ci.a_sets.size());
    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<std::size_t>(a_count * k + ci.n));
    for (int a = 0; a < a_count; ++a)
        for (int i = 0; i < k; ++i) {
            std::vector<int> copy;
            copy.reserve(ci.a_sets[static_cast<std::size_t>(a)].size());
            for (int e : ci.a_sets[static_cast<std::size_t>(a)]) copy.push_back(e * k + i);
            sets.push_back(std::move(copy));
        }
    gadget.copy_set_count = a_count * k;
    for (int e = 0; e < ci.n; ++e) {
        std::vector<int> column(static_cast<std::size_t>(k));
        std::iota(column.begin(), column.end(), e * k);
        sets.push_back(std::move(column));
    }
    gadget.system = make_system(ci.n * k, std::move(sets));

    gadget.trace.n = gadget.system.n;
    gadget.trace.m = gadget.system.m;
    for (int s = 0; s < gadget.copy_set_count; ++s)
        gadget.trace.events.push_back({EventKind::ActivateSet, s});
    for (int bi = 0; bi < static_cast<int>(ci.b_sets.size()); ++bi) {
        const auto in_b = detail::mask_of(ci.n, ci.b_sets[static_cast<std::size_t>(bi)]);
        std::vector<int> activated;
        for (int e = 0; e < ci.n; ++e)
            if (!in_b[static_cast<std::size_t>(e)]) {
                const int column = gadget.copy_set_count + e;
                gadget.trace.events.push_back({EventKind::ActivateSet, column});
                activated.push_back(column);
            }
        gadget.trace.events.push_back({EventKind::Query, -1});
        gadget.stage_of_query.push_back(bi);
        for (int column : activated)
            gadget.trace.events.push_back({EventKind::DeactivateSet, column});
    }
    return gadget;
}

/// Exact optimum at the stage for B, by column decomposition: a cover either
/// takes a column set S_e (e outside B) or covers all k copies of e inside
/// the copy columns, and the k copy columns are identical disjoint instances
/// of the A-collection. So
///   OPT = min over T subset of (complement of B) of |T| + k * opt_A([n]\T),
/// where opt_A is the exact cover of the remaining elements by the
/// A-collection. Exponential only in |complement of B|.
inline long long set_gadget_stage_opt(const ContainmentInstance& ci, int b_index, int k) {
    const SetSystem a_system = make_system(ci.n, ci.a_sets);
    const auto in_b = detail::mask_of(ci.n, ci.b_sets[static_cast<std::size_t>(b_index)]);
    std::vector<int> outside;
    for (int e = 0; e < ci.n; ++e)
        if (!in_b[static_cast<std::size_t>(e)]) outside.push_back(e);
    if (outside.size() > 20)
        throw param_error("set_gadget_stage_opt: complement too large to enumerate");
    long long best = -1;
    const std::uint64_t limit = 1ULL << outside.size();
    for (std::uint64_t pick = 0; pick < limit; ++pick) {
        std::vector<std::uint8_t> in_t(static_cast<std::size_t>(ci.n), 0);
        long long taken = 0;
        for (std::size_t i = 0; i < outside.size(); ++i)
            if (pick & (1ULL << i)) {
                in_t[static_cast<std::size_t>(outside[i])] = 1;
                ++taken;
            }
        std::vector<int> rest;
        for (int e = 0; e < ci.n; ++e)
            if (!in_t[static_cast<std::size_t>(e)]) rest.push_back(e);
        const auto sub = exact_cover(a_system, rest, /*set_cap=*/64);
        if (!sub) throw param_error("set_gadget_stage_opt: subproblem over cap");
        const long long total = taken + static_cast<long long>(k) * *sub;
        if (best < 0 || total < best) best = total;
    }
    return best;
}

}  // namespace setcover
