#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "setcover/engine.hpp"

namespace setcover {

/// Full structural audit of a solver state. Returns a description of the
/// first violated invariant, or nullopt when everything holds. Brute-force
/// by design (linear scans and recounts), meant for desk-scale verification
/// runs, not for the bench sweeps.
inline std::optional<std::string> audit_state(const detail::Engine& eng) {
    const SetSystem& sys = eng.system();
    const auto& records = eng.records();

    auto fail = [](const std::string& what) { return std::optional<std::string>(what); };

    // Feasibility: every active element is covered by some in-cover set.
    for (int e = 0; e < sys.n; ++e) {
        if (!eng.is_active(e)) continue;
        bool covered = false;
        for (int s : sys.set_of[static_cast<std::size_t>(e)])
            if (eng.in_cover(s)) {
                covered = true;
                break;
            }
        if (!covered) return fail("active element " + std::to_string(e) + " is uncovered");
    }

    // No in-cover set contains two undeleted pivots.
    for (int s = 0; s < sys.m; ++s) {
        if (!eng.in_cover(s)) continue;
        int undeleted_pivots = 0;
        for (int e : sys.elem_of[static_cast<std::size_t>(s)])
            if (eng.is_active(e) && eng.is_undeleted_pivot(e)) ++undeleted_pivots;
        if (undeleted_pivots > 1)
            return fail("in-cover set " + std::to_string(s) + " holds " +
                        std::to_string(undeleted_pivots) + " undeleted pivots");
    }

    // |F| <= f * |P|.
    if (eng.cover_size() > static_cast<long long>(sys.f) * eng.pivot_total())
        return fail("cover size " + std::to_string(eng.cover_size()) + " exceeds f*|P|");

    // Between phases the deleted fraction is strictly below epsilon (which
    // implies |P| <= |U|/(1-eps)), unless no pivots remain.
    if (eng.pivot_total() > 0 &&
        eng.epsilon().at_least_fraction(static_cast<std::uint64_t>(eng.deleted_pivot_total()),
                                        static_cast<std::uint64_t>(eng.pivot_total())))
        return fail("deleted pivots " + std::to_string(eng.deleted_pivot_total()) +
                    " reach the epsilon fraction of " + std::to_string(eng.pivot_total()));

    // Counter recount from the registry.
    std::vector<long long> p_recount(static_cast<std::size_t>(eng.num_levels()), 0);
    std::vector<long long> d_recount(static_cast<std::size_t>(eng.num_levels()), 0);
    long long cover_recount = 0;
    for (const auto& rec : records) {
        if (!rec.live) continue;
        if (rec.level < 0 || rec.level >= eng.num_levels())
            return fail("pivot level " + std::to_string(rec.level) + " out of range");
        ++p_recount[static_cast<std::size_t>(rec.level)];
        if (rec.deleted) ++d_recount[static_cast<std::size_t>(rec.level)];
        cover_recount += static_cast<long long>(rec.sets.size());
    }
    for (int i = 0; i < eng.num_levels(); ++i) {
        if (p_recount[static_cast<std::size_t>(i)] != eng.pivots_by_level()[static_cast<std::size_t>(i)])
            return fail("P[" + std::to_string(i) + "] counter mismatch");
        if (d_recount[static_cast<std::size_t>(i)] != eng.deleted_by_level()[static_cast<std::size_t>(i)])
            return fail("D[" + std::to_string(i) + "] counter mismatch");
        if (d_recount[static_cast<std::size_t>(i)] > p_recount[static_cast<std::size_t>(i)])
            return fail("D[" + std::to_string(i) + "] exceeds P[" + std::to_string(i) + "]");
    }
    if (cover_recount != eng.cover_size()) return fail("cover size counter mismatch");

    // Greedy list: ascending nonempty level buckets holding each live record
    // exactly once, consistent with the per-level counters.
    std::vector<int> greedy_seen(records.size(), 0);
    for (const auto& [level, bucket] : eng.greedy()) {
        if (bucket.empty()) return fail("greedy bucket for level " + std::to_string(level) + " is empty");
        for (int slot : bucket) {
            const auto& rec = records[static_cast<std::size_t>(slot)];
            if (!rec.live) return fail("greedy bucket holds retired record");
            if (rec.level != level) return fail("greedy bucket level mismatch");
            if (++greedy_seen[static_cast<std::size_t>(slot)] > 1)
                return fail("record appears twice in greedy list");
        }
        if (static_cast<long long>(bucket.size()) !=
            eng.pivots_by_level()[static_cast<std::size_t>(level)])
            return fail("greedy bucket size mismatch at level " + std::to_string(level));
    }
    for (std::size_t slot = 0; slot < records.size(); ++slot)
        if (records[slot].live && !greedy_seen[slot])
            return fail("live record missing from greedy list");

    // Per-record structure, set ownership, and element accounting.
    std::vector<int> accounted(static_cast<std::size_t>(sys.n), 0);
    for (std::size_t slot = 0; slot < records.size(); ++slot) {
        const auto& rec = records[slot];
        if (!rec.live) continue;
        if (rec.sampled_size < (1 << rec.level) || rec.sampled_size >= (2 << rec.level))
            return fail("sampled size " + std::to_string(rec.sampled_size) +
                        " outside level " + std::to_string(rec.level) + " range");
        if (static_cast<int>(rec.sets.size()) > sys.f)
            return fail("pivot owns more than f sets");
        bool pivot_in_orig = false;
        for (const auto& ref : rec.orig)
            if (ref.elem == rec.elem) pivot_in_orig = true;
        if (!pivot_in_orig) return fail("pivot element missing from its orig list");
        for (int s : rec.sets) {
            if (eng.set_owner(s) != static_cast<int>(slot))
                return fail("set " + std::to_string(s) + " not owned by its pivot record");
            bool contains_pivot = false;
            for (int e : sys.elem_of[static_cast<std::size_t>(s)])
                if (e == rec.elem) contains_pivot = true;
            if (!contains_pivot)
                return fail("owned set " + std::to_string(s) + " does not contain its pivot");
        }
        if (eng.mode() == detail::Engine::Mode::Decremental && !rec.extra.empty())
            return fail("decremental pivot record holds extra elements");
        // Disjointness of orig and extra per element copy (stale entries for
        // older epochs of the same element id are legitimate).
        std::map<std::pair<int, int>, int> in_record;
        for (const auto& ref : rec.orig) ++in_record[{ref.elem, ref.epoch}];
        for (const auto& ref : rec.extra) ++in_record[{ref.elem, ref.epoch}];
        for (const auto& [copy, times] : in_record)
            if (times > 1) return fail("element " + std::to_string(copy.first) +
                                       " accounted twice inside one record");
        for (const auto& ref : rec.orig)
            if (eng.is_active(ref.elem) && eng.epoch(ref.elem) == ref.epoch)
                ++accounted[static_cast<std::size_t>(ref.elem)];
        for (const auto& ref : rec.extra)
            if (eng.is_active(ref.elem) && eng.epoch(ref.elem) == ref.epoch)
                ++accounted[static_cast<std::size_t>(ref.elem)];
    }
    for (int e = 0; e < sys.n; ++e) {
        if (!eng.is_active(e)) continue;
        if (accounted[static_cast<std::size_t>(e)] != 1)
            return fail("active element " + std::to_string(e) + " accounted " +
                        std::to_string(accounted[static_cast<std::size_t>(e)]) +
                        " times (must be exactly once)");
    }

    // Owner back-pointers only reference live records owning that set.
    for (int s = 0; s < sys.m; ++s) {
        const int owner = eng.set_owner(s);
        if (owner < 0) continue;
        const auto& rec = records[static_cast<std::size_t>(owner)];
        if (!rec.live) return fail("set owned by retired record");
        bool listed = false;
        for (int owned : rec.sets)
            if (owned == s) listed = true;
        if (!listed) return fail("set " + std::to_string(s) + " not in its owner's F(p)");
    }

    // Live membership lists mirror the active elements, with intact
    // cross-pointers.
    for (int s = 0; s < sys.m; ++s) {
        int active_members = 0;
        for (int e : sys.elem_of[static_cast<std::size_t>(s)])
            if (eng.is_active(e)) ++active_members;
        const auto members = eng.live_members(s);
        if (static_cast<int>(members.size()) != active_members)
            return fail("live list of set " + std::to_string(s) + " has wrong size");
        for (int e : members)
            if (!eng.is_active(e)) return fail("live list holds inactive element");
    }
    for (int e = 0; e < sys.n; ++e) {
        const auto& positions = eng.live_positions()[static_cast<std::size_t>(e)];
        for (std::size_t j = 0; j < positions.size(); ++j) {
            const int s = sys.set_of[static_cast<std::size_t>(e)][j];
            const int pos = positions[j];
            if (!eng.is_active(e)) {
                if (pos != -1) return fail("inactive element keeps a live cross-pointer");
                continue;
            }
            const auto members = eng.live_members(s);
            if (pos < 0 || pos >= static_cast<int>(members.size()) ||
                members[static_cast<std::size_t>(pos)] != e)
                return fail("cross-pointer of element " + std::to_string(e) + " into set " +
                            std::to_string(s) + " is broken");
        }
    }

    // Movement participation stays within log2(n)+1 per element copy.
    for (int e = 0; e < sys.n; ++e)
        if (eng.movement_count(e) > eng.num_levels())
            return fail("element " + std::to_string(e) + " moved " +
                        std::to_string(eng.movement_count(e)) + " times, above log2(n)+1");

    return std::nullopt;
}

/// Per-phase checks that need the report rather than the state: pivot levels
/// are non-increasing along each random cover run, and in the decremental
/// solver they stay at or below the phase level and the exposure respects
/// the per-level bound.
inline std::optional<std::string> audit_phase_report(const PhaseReport& report,
                                                     bool decremental) {
    for (std::size_t i = 1; i < report.new_pivot_levels.size(); ++i)
        if (report.new_pivot_levels[i] > report.new_pivot_levels[i - 1])
            return "pivot levels increased within one random cover run";
    if (decremental) {
        for (int level : report.new_pivot_levels)
            if (level > report.level)
                return "decremental phase produced a pivot above the phase level";
        if (report.x_prime > report.x_prime_bound)
            return "exposed elements exceed the f * sum p_i 2^{i+1} bound";
    }
    return std::nullopt;
}

}  // namespace setcover
