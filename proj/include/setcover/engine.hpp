#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "setcover/common.hpp"
#include "setcover/critical_level.hpp"
#include "setcover/induced.hpp"
#include "setcover/random_cover.hpp"
#include "setcover/rng.hpp"
#include "setcover/set_system.hpp"

namespace setcover {

/// A reference to one logical copy of an element. Reinsertion after deletion
/// creates a fresh copy (a bumped epoch), so stale entries inside old pivot
/// records can never be confused with the live copy.
struct ElemRef {
    int elem = -1;
    int epoch = 0;
};

/// One pivot with everything the solvers track for it: the level derived from
/// the sampled-set size, the sets F(p) it owns in the cover, and the elements
/// X(p) = Orig(p) + Extra(p) it is accounted to cover. Records stay registered
/// (and keep counting toward P) after their element is deleted; an update
/// phase retires them.
struct PivotRecord {
    int elem = -1;
    int level = 0;
    int sampled_size = 0;
    bool deleted = false;  // the pivot element was deleted
    bool live = false;     // still registered in P
    std::vector<int> sets;       // F(p): set ids owned by this pivot
    std::vector<ElemRef> orig;   // covered at selection time
    std::vector<ElemRef> extra;  // attributed later (fully dynamic only)
};

struct PhaseReport {
    int level = -1;
    int discarded_pivots = 0;
    int x_prime = 0;  // exposed elements (active, current-copy) of discarded pivots
    int moved = 0;    // attributed to surviving higher-level sets
    int y_prime = 0;  // handed to the covering step
    int new_pivots = 0;
    std::uint64_t touches = 0;
    // f * sum over i <= level of p_i * 2^{i+1}, with p_i counted right before
    // the discard; x_prime never exceeds it in the decremental solver.
    long long x_prime_bound = 0;
    std::vector<int> new_pivot_levels;  // in selection order
};

struct UpdateReport {
    std::uint64_t touches = 0;
    bool became_extra = false;  // insert landed in Extra(p) of an existing pivot
    int attributed_level = -1;  // level of the set it was attributed to
    std::vector<PhaseReport> phases;
};

namespace detail {

/// State and update machinery shared by the decremental and fully dynamic
/// solvers. A solver instance is exclusively owned by one thread.
class Engine {
  public:
    enum class Mode { Decremental, FullyDynamic };

    Engine(const SetSystem& sys, double epsilon, std::uint64_t seed, Mode mode)
        : sys_(&sys), mode_(mode), eps_(epsilon), rng_(seed) {
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw param_error("epsilon must lie in (0, 1)");
        num_levels_ = level_count(sys.n);
        active_.assign(static_cast<std::size_t>(sys.n), 0);
        epoch_.assign(static_cast<std::size_t>(sys.n), 0);
        live_elems_.assign(static_cast<std::size_t>(sys.m), {});
        live_pos_.resize(static_cast<std::size_t>(sys.n));
        for (int e = 0; e < sys.n; ++e)
            live_pos_[static_cast<std::size_t>(e)].assign(sys.set_of[static_cast<std::size_t>(e)].size(), -1);
        pivot_of_elem_.assign(static_cast<std::size_t>(sys.n), -1);
        set_owner_.assign(static_cast<std::size_t>(sys.m), -1);
        p_by_level_.assign(static_cast<std::size_t>(num_levels_), 0);
        d_by_level_.assign(static_cast<std::size_t>(num_levels_), 0);
        movement_count_.assign(static_cast<std::size_t>(sys.n), 0);
        resided_level_.assign(static_cast<std::size_t>(sys.n), -1);
        maps_.resize(sys);

        if (mode_ == Mode::Decremental) {
            // Initial phase: every element is active; one random cover over
            // the whole system produces the starting solution.
            for (int e = 0; e < sys.n; ++e) {
                if (sys.set_of[static_cast<std::size_t>(e)].empty())
                    throw contract_error("element " + std::to_string(e) +
                                         " belongs to no set and can never be covered");
                attach_live(e);
                active_[static_cast<std::size_t>(e)] = 1;
            }
            std::vector<int> all(static_cast<std::size_t>(sys.n));
            for (int e = 0; e < sys.n; ++e) all[static_cast<std::size_t>(e)] = e;
            cover_elements(all, /*phase_level=*/-1, nullptr);
        }
    }

    Mode mode() const { return mode_; }
    const SetSystem& system() const { return *sys_; }
    const EpsilonParam& epsilon() const { return eps_; }
    int num_levels() const { return num_levels_; }

    // ----- updates ---------------------------------------------------------

    /// Fully dynamic insertion. A covered element is attributed as an extra
    /// element to the pivot owning the highest-level set containing it; an
    /// uncovered one becomes a level-0 pivot owning all its sets. O(f) touches.
    UpdateReport insert(int e) {
        if (mode_ != Mode::FullyDynamic)
            throw contract_error("insert is only available on the fully dynamic solver");
        check_elem(e);
        if (active_[static_cast<std::size_t>(e)])
            throw contract_error("insert of already-active element " + std::to_string(e));
        UpdateReport report;
        const std::uint64_t t0 = touch_.count();

        ++epoch_[static_cast<std::size_t>(e)];
        active_[static_cast<std::size_t>(e)] = 1;
        movement_count_[static_cast<std::size_t>(e)] = 0;
        resided_level_[static_cast<std::size_t>(e)] = -1;
        attach_live(e);

        const int covering = highest_level_cover_set(e);
        if (covering >= 0) {
            const int owner = set_owner_[static_cast<std::size_t>(covering)];
            PivotRecord& rec = records_[static_cast<std::size_t>(owner)];
            rec.extra.push_back({e, epoch_[static_cast<std::size_t>(e)]});
            resided_level_[static_cast<std::size_t>(e)] = rec.level;
            report.became_extra = true;
            report.attributed_level = rec.level;
        } else {
            if (sys_->set_of[static_cast<std::size_t>(e)].empty())
                throw contract_error("element " + std::to_string(e) +
                                     " belongs to no set and can never be covered");
            make_unit_pivot(e);
        }
        report.touches = touch_.count() - t0;
        return report;
    }

    /// Deletion. Marks the element deleted, removes it from the live
    /// membership lists in O(f), updates the pivot counters, and then runs
    /// update phases until the deleted fraction is strictly below epsilon
    /// (or no pivots remain).
    UpdateReport erase(int e) {
        check_elem(e);
        if (!active_[static_cast<std::size_t>(e)])
            throw contract_error("delete of inactive element " + std::to_string(e));
        UpdateReport report;
        const std::uint64_t t0 = touch_.count();

        detach_live(e);
        active_[static_cast<std::size_t>(e)] = 0;

        const int idx = pivot_of_elem_[static_cast<std::size_t>(e)];
        if (idx >= 0) {
            PivotRecord& rec = records_[static_cast<std::size_t>(idx)];
            if (rec.live && !rec.deleted && rec.elem == e) {
                rec.deleted = true;
                ++d_by_level_[static_cast<std::size_t>(rec.level)];
                ++d_total_;
            }
        }
        while (phase_triggered()) {
            const int level = find_critical_level();
            report.phases.push_back(update_phase(level));
        }
        report.touches = touch_.count() - t0;
        return report;
    }

    bool phase_triggered() const {
        return d_total_ > 0 && p_total_ > 0 &&
               eps_.at_least_fraction(static_cast<std::uint64_t>(d_total_),
                                      static_cast<std::uint64_t>(p_total_));
    }

    /// Lowest critical level with at least one deleted pivot to discard.
    int find_critical_level() const {
        if (!phase_triggered())
            throw contract_error("find_critical_level requires the deleted-pivot trigger");
        const int level = lowest_critical_level(p_by_level_, d_by_level_, eps_);
        if (level < 0) throw contract_error("no critical level exists; counters corrupt");
        return level;
    }

    /// One update phase: discard every pivot at levels <= level together with
    /// the sets it owns, gather the exposed elements X', re-attribute the ones
    /// still covered above the phase level (fully dynamic movement step), and
    /// run the covering step on the rest.
    PhaseReport update_phase(int level) {
        if (!is_critical_level(p_by_level_, d_by_level_, eps_, level))
            throw contract_error("update_phase at non-critical level " + std::to_string(level));
        PhaseReport report;
        report.level = level;
        const std::uint64_t t0 = touch_.count();
        for (int i = 0; i <= level && i < num_levels_; ++i)
            report.x_prime_bound += static_cast<long long>(sys_->f) *
                                    p_by_level_[static_cast<std::size_t>(i)] * (2LL << i);

        // Collect and unregister the GREEDY prefix at levels <= level.
        std::vector<int> discarded;
        while (!greedy_.empty() && greedy_.begin()->first <= level) {
            auto& bucket = greedy_.begin()->second;
            discarded.insert(discarded.end(), bucket.begin(), bucket.end());
            greedy_.erase(greedy_.begin());
        }
        report.discarded_pivots = static_cast<int>(discarded.size());

        // X': elements whose accounting pivot is being discarded, restricted
        // to live copies. Stale entries (deleted, or reinserted under a newer
        // epoch) are skipped.
        std::vector<int> exposed;
        for (int slot : discarded) {
            const PivotRecord& rec = records_[static_cast<std::size_t>(slot)];
            for (const auto& ref : rec.orig) {
                if (active_[static_cast<std::size_t>(ref.elem)] &&
                    epoch_[static_cast<std::size_t>(ref.elem)] == ref.epoch)
                    exposed.push_back(ref.elem);
            }
            for (const auto& ref : rec.extra) {
                if (active_[static_cast<std::size_t>(ref.elem)] &&
                    epoch_[static_cast<std::size_t>(ref.elem)] == ref.epoch)
                    exposed.push_back(ref.elem);
            }
        }
        report.x_prime = static_cast<int>(exposed.size());

        for (int slot : discarded) retire_record(slot);

        const std::vector<int> uncovered = movement_step(exposed, level, &report);
        report.y_prime = static_cast<int>(uncovered.size());
        covering_step(uncovered, level, &report);

        report.new_pivots = static_cast<int>(report.new_pivot_levels.size());
        report.touches = touch_.count() - t0;
        return report;
    }

    /// Movement step of an update phase at the given level: every exposed
    /// element still covered by a surviving set (whose owner necessarily sits
    /// above the phase level) moves to that set's pivot as an extra element;
    /// the rest are returned for the covering step. Expects exactly the
    /// active elements whose accounting pivot was just discarded.
    std::vector<int> movement_step(const std::vector<int>& exposed, int level,
                                   PhaseReport* report) {
        std::vector<int> uncovered;
        uncovered.reserve(exposed.size());
        for (int e : exposed) {
            if (!active_[static_cast<std::size_t>(e)])
                throw contract_error("movement step over an inactive element");
            const int covering = highest_level_cover_set(e);
            if (covering < 0) {
                uncovered.push_back(e);
                continue;
            }
            PivotRecord& rec =
                records_[static_cast<std::size_t>(set_owner_[static_cast<std::size_t>(covering)])];
            if (mode_ == Mode::Decremental)
                throw contract_error(
                    "decremental exposure still covered by a surviving set; accounting corrupt");
            assert(rec.level > level);
            assert(rec.level > resided_level_[static_cast<std::size_t>(e)]);
            rec.extra.push_back({e, epoch_[static_cast<std::size_t>(e)]});
            resided_level_[static_cast<std::size_t>(e)] = rec.level;
            ++movement_count_[static_cast<std::size_t>(e)];
            if (movement_count_[static_cast<std::size_t>(e)] > max_movement_count_)
                max_movement_count_ = movement_count_[static_cast<std::size_t>(e)];
            if (report) ++report->moved;
        }
        return uncovered;
    }

    /// Covering step: random cover over the subinstance induced by the given
    /// uncovered active elements; the new pivots are installed and every
    /// covered element becomes original. The elements must be active, not
    /// covered by any in-cover set, and carry no live accounting.
    void covering_step(const std::vector<int>& uncovered, int phase_level, PhaseReport* report) {
        for (int e : uncovered) {
            if (!active_[static_cast<std::size_t>(e)])
                throw contract_error("covering step over an inactive element");
            if (highest_level_cover_set(e) >= 0)
                throw contract_error("covering step over an already-covered element");
        }
        cover_elements(uncovered, phase_level, report);
    }

    // ----- read-only views --------------------------------------------------

    bool is_active(int e) const { return active_[static_cast<std::size_t>(e)] != 0; }
    int epoch(int e) const { return epoch_[static_cast<std::size_t>(e)]; }
    long long pivot_total() const { return p_total_; }
    long long deleted_pivot_total() const { return d_total_; }
    std::span<const long long> pivots_by_level() const { return p_by_level_; }
    std::span<const long long> deleted_by_level() const { return d_by_level_; }
    long long cover_size() const { return cover_size_; }
    bool in_cover(int s) const { return set_owner_[static_cast<std::size_t>(s)] >= 0; }
    int set_owner(int s) const { return set_owner_[static_cast<std::size_t>(s)]; }
    const std::vector<PivotRecord>& records() const { return records_; }
    int pivot_record_of(int e) const { return pivot_of_elem_[static_cast<std::size_t>(e)]; }
    const std::map<int, std::vector<int>>& greedy() const { return greedy_; }
    std::uint64_t touches() const { return touch_.count(); }
    int movement_count(int e) const { return movement_count_[static_cast<std::size_t>(e)]; }
    int max_movement_count() const { return max_movement_count_; }
    const IndexMaps& scratch_maps() const { return maps_; }
    const std::vector<std::vector<int>>& live_positions() const { return live_pos_; }

    /// True when e is a currently-registered, undeleted pivot.
    bool is_undeleted_pivot(int e) const {
        const int idx = pivot_of_elem_[static_cast<std::size_t>(e)];
        return idx >= 0 && records_[static_cast<std::size_t>(idx)].live &&
               !records_[static_cast<std::size_t>(idx)].deleted &&
               records_[static_cast<std::size_t>(idx)].elem == e;
    }

    std::vector<int> cover_sets() const {
        std::vector<int> out;
        for (int s = 0; s < sys_->m; ++s)
            if (set_owner_[static_cast<std::size_t>(s)] >= 0) out.push_back(s);
        return out;
    }

    std::vector<int> active_elements() const {
        std::vector<int> out;
        for (int e = 0; e < sys_->n; ++e)
            if (active_[static_cast<std::size_t>(e)]) out.push_back(e);
        return out;
    }

    /// Live members of a set (undeleted, currently active).
    std::vector<int> live_members(int s) const {
        std::vector<int> out;
        out.reserve(live_elems_[static_cast<std::size_t>(s)].size());
        for (const auto& entry : live_elems_[static_cast<std::size_t>(s)]) out.push_back(entry.elem);
        return out;
    }

  private:
    struct LiveEntry {
        int elem;
        int slot;  // index of the set inside set_of[elem]
    };

    void check_elem(int e) const {
        if (e < 0 || e >= sys_->n)
            throw contract_error("element id " + std::to_string(e) + " out of range");
    }

    void attach_live(int e) {
        const auto& sets = sys_->set_of[static_cast<std::size_t>(e)];
        for (int j = 0; j < static_cast<int>(sets.size()); ++j) {
            const int s = sets[static_cast<std::size_t>(j)];
            touch_.add();
            live_pos_[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] =
                static_cast<int>(live_elems_[static_cast<std::size_t>(s)].size());
            live_elems_[static_cast<std::size_t>(s)].push_back({e, j});
        }
    }

    void detach_live(int e) {
        const auto& sets = sys_->set_of[static_cast<std::size_t>(e)];
        for (int j = 0; j < static_cast<int>(sets.size()); ++j) {
            const int s = sets[static_cast<std::size_t>(j)];
            touch_.add();
            auto& arr = live_elems_[static_cast<std::size_t>(s)];
            const int pos = live_pos_[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)];
            const LiveEntry last = arr.back();
            arr[static_cast<std::size_t>(pos)] = last;
            live_pos_[static_cast<std::size_t>(last.elem)][static_cast<std::size_t>(last.slot)] = pos;
            arr.pop_back();
            live_pos_[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] = -1;
        }
    }

    /// Highest-level in-cover set containing e, ties broken toward the lowest
    /// set id; -1 when no in-cover set contains e. O(f) touches.
    int highest_level_cover_set(int e) {
        int best = -1, best_level = -1;
        for (int s : sys_->set_of[static_cast<std::size_t>(e)]) {
            touch_.add();
            const int owner = set_owner_[static_cast<std::size_t>(s)];
            if (owner < 0) continue;
            const int lvl = records_[static_cast<std::size_t>(owner)].level;
            if (lvl > best_level) {
                best_level = lvl;
                best = s;
            }
        }
        return best;
    }

    int alloc_record() {
        if (!free_records_.empty()) {
            const int slot = free_records_.back();
            free_records_.pop_back();
            records_[static_cast<std::size_t>(slot)] = PivotRecord{};
            return slot;
        }
        records_.emplace_back();
        return static_cast<int>(records_.size()) - 1;
    }

    void register_record(int slot) {
        PivotRecord& rec = records_[static_cast<std::size_t>(slot)];
        rec.live = true;
        pivot_of_elem_[static_cast<std::size_t>(rec.elem)] = slot;
        for (int s : rec.sets) {
            assert(set_owner_[static_cast<std::size_t>(s)] < 0);
            set_owner_[static_cast<std::size_t>(s)] = slot;
            ++cover_size_;
        }
        greedy_[rec.level].push_back(slot);
        ++p_by_level_[static_cast<std::size_t>(rec.level)];
        ++p_total_;
    }

    void retire_record(int slot) {
        PivotRecord& rec = records_[static_cast<std::size_t>(slot)];
        for (int s : rec.sets) {
            assert(set_owner_[static_cast<std::size_t>(s)] == slot);
            set_owner_[static_cast<std::size_t>(s)] = -1;
            --cover_size_;
        }
        --p_by_level_[static_cast<std::size_t>(rec.level)];
        --p_total_;
        if (rec.deleted) {
            --d_by_level_[static_cast<std::size_t>(rec.level)];
            --d_total_;
        }
        if (pivot_of_elem_[static_cast<std::size_t>(rec.elem)] == slot)
            pivot_of_elem_[static_cast<std::size_t>(rec.elem)] = -1;
        rec.live = false;
        free_records_.push_back(slot);
    }

    /// Level-0 pivot for a freshly inserted uncovered element: S(e) = {e}.
    void make_unit_pivot(int e) {
        const int slot = alloc_record();
        PivotRecord& rec = records_[static_cast<std::size_t>(slot)];
        rec.elem = e;
        rec.level = 0;
        rec.sampled_size = 1;
        rec.sets = sys_->set_of[static_cast<std::size_t>(e)];
        rec.orig.push_back({e, epoch_[static_cast<std::size_t>(e)]});
        resided_level_[static_cast<std::size_t>(e)] = 0;
        movement_count_[static_cast<std::size_t>(e)] = 0;
        register_record(slot);
    }

    /// Covering step: induce the subinstance over `elements`, run random
    /// cover on it, and install the resulting pivots. In the decremental
    /// solver a phase can only produce levels at or below the phase level.
    void cover_elements(const std::vector<int>& elements, int phase_level, PhaseReport* report) {
        if (elements.empty()) return;
        const InducedInstance inst = build_induced(*sys_, elements, maps_, touch_);
        RandomCoverResult rc = random_cover(inst, rng_, touch_);
        long long covered_total = 0;
        for (const LocalPivot& lp : rc.pivots)
            covered_total += static_cast<long long>(lp.covered.size());
        if (covered_total != inst.local_n)
            throw contract_error("covering step left elements uncovered (element in no set?)");
        for (const LocalPivot& lp : rc.pivots) {
            const int slot = alloc_record();
            PivotRecord& rec = records_[static_cast<std::size_t>(slot)];
            rec.elem = inst.elem_to_global[static_cast<std::size_t>(lp.elem)];
            rec.level = lp.level;
            rec.sampled_size = lp.sampled_size;
            if (mode_ == Mode::Decremental && phase_level >= 0) assert(rec.level <= phase_level);
            rec.sets.reserve(lp.sets.size());
            for (int ls : lp.sets) {
                touch_.add();
                rec.sets.push_back(inst.set_to_global[static_cast<std::size_t>(ls)]);
            }
            rec.orig.reserve(lp.covered.size());
            for (int le : lp.covered) {
                touch_.add();
                const int g = inst.elem_to_global[static_cast<std::size_t>(le)];
                rec.orig.push_back({g, epoch_[static_cast<std::size_t>(g)]});
                resided_level_[static_cast<std::size_t>(g)] = rec.level;
                movement_count_[static_cast<std::size_t>(g)] = 0;
            }
            register_record(slot);
            if (report) report->new_pivot_levels.push_back(rec.level);
        }
    }

    const SetSystem* sys_;
    Mode mode_;
    EpsilonParam eps_;
    Rng rng_;
    TouchCounter touch_;
    int num_levels_ = 1;

    std::vector<std::uint8_t> active_;
    std::vector<int> epoch_;
    std::vector<std::vector<LiveEntry>> live_elems_;  // per set, undeleted members
    std::vector<std::vector<int>> live_pos_;          // cross-pointers into live_elems_

    std::vector<PivotRecord> records_;
    std::vector<int> free_records_;
    std::vector<int> pivot_of_elem_;
    std::vector<int> set_owner_;
    std::map<int, std::vector<int>> greedy_;  // level -> record slots, ascending

    std::vector<long long> p_by_level_, d_by_level_;
    long long p_total_ = 0, d_total_ = 0;
    long long cover_size_ = 0;

    std::vector<int> movement_count_;
    std::vector<int> resided_level_;
    int max_movement_count_ = 0;

    IndexMaps maps_;
};

}  // namespace detail
}  // namespace setcover
