#pragma once

#include <vector>

#include "setcover/common.hpp"
#include "setcover/induced.hpp"
#include "setcover/rng.hpp"
#include "setcover/sort_list.hpp"

namespace setcover {

/// One iteration of the random cover subroutine, in the instance's local ids.
struct LocalPivot {
    int elem = -1;         // the sampled pivot
    int level = 0;         // integer i with sampled_size in [2^i, 2^{i+1})
    int sampled_size = 0;  // uncovered size of the chosen maximum set
    std::vector<int> sets;     // F(p): sets added because of this pivot
    std::vector<int> covered;  // X(p): elements newly covered by F(p)
};

struct RandomCoverResult {
    std::vector<LocalPivot> pivots;  // in selection order
    std::vector<int> cover;          // concatenation of F(p), duplicate-free
};

/// The random cover subroutine: repeatedly take a maximum-cardinality set
/// (head of the SORT bucket list, ties by insertion order), sample a pivot
/// uniformly from its uncovered elements, and add every set containing the
/// pivot to the cover. Terminates with a feasible cover; pivot levels are
/// monotonically non-increasing and no set contains two pivots.
/// Runs in O(f * local_n) element-touches.
inline RandomCoverResult random_cover(const InducedInstance& inst, Rng& rng, TouchCounter& touch) {
    RandomCoverResult result;
    if (inst.local_n == 0) return result;

    // Working copy: per-set compact arrays of uncovered elements, each entry
    // carrying the index of the set inside that element's local_set_of so the
    // reverse position table can be fixed in O(1) on removal.
    struct Entry {
        int elem;
        int slot;  // j with local_set_of[elem][j] == this set
    };
    std::vector<std::vector<Entry>> uncov(static_cast<std::size_t>(inst.local_m));
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(inst.local_n));
    std::vector<int> cardinality(static_cast<std::size_t>(inst.local_m), 0);
    for (int e = 0; e < inst.local_n; ++e) {
        const auto& sets = inst.local_set_of[static_cast<std::size_t>(e)];
        pos[static_cast<std::size_t>(e)].resize(sets.size());
        for (int j = 0; j < static_cast<int>(sets.size()); ++j) {
            const int s = sets[static_cast<std::size_t>(j)];
            touch.add();
            pos[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] =
                static_cast<int>(uncov[static_cast<std::size_t>(s)].size());
            uncov[static_cast<std::size_t>(s)].push_back({e, j});
            ++cardinality[static_cast<std::size_t>(s)];
        }
    }

    SortList sort;
    sort.init(cardinality);
    touch.add(static_cast<std::uint64_t>(inst.local_m));

    // Removes element e from set s's compact array.
    auto detach = [&](int e, int j, int s) {
        auto& arr = uncov[static_cast<std::size_t>(s)];
        const int p = pos[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)];
        const Entry last = arr.back();
        arr[static_cast<std::size_t>(p)] = last;
        pos[static_cast<std::size_t>(last.elem)][static_cast<std::size_t>(last.slot)] = p;
        arr.pop_back();
        pos[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] = -1;
    };

    while (!sort.empty()) {
        const int z = sort.head_set();
        const int size = static_cast<int>(uncov[static_cast<std::size_t>(z)].size());
        const int pick = rng.below_int(size);

        LocalPivot pivot;
        pivot.elem = uncov[static_cast<std::size_t>(z)][static_cast<std::size_t>(pick)].elem;
        pivot.sampled_size = size;
        pivot.level = level_of_size(size);
        pivot.sets = inst.local_set_of[static_cast<std::size_t>(pivot.elem)];

        // All sets containing the pivot join the cover and leave SORT.
        for (int s : pivot.sets) {
            touch.add();
            sort.remove(s);
            result.cover.push_back(s);
        }
        // Consume them: mark every remaining uncovered member covered and
        // detach it from every set still in SORT.
        for (int s : pivot.sets) {
            auto& arr = uncov[static_cast<std::size_t>(s)];
            while (!arr.empty()) {
                const Entry entry = arr.back();
                arr.pop_back();
                touch.add();
                pos[static_cast<std::size_t>(entry.elem)][static_cast<std::size_t>(entry.slot)] = -1;
                pivot.covered.push_back(entry.elem);
                const auto& esets = inst.local_set_of[static_cast<std::size_t>(entry.elem)];
                for (int j = 0; j < static_cast<int>(esets.size()); ++j) {
                    if (pos[static_cast<std::size_t>(entry.elem)][static_cast<std::size_t>(j)] < 0)
                        continue;
                    const int other = esets[static_cast<std::size_t>(j)];
                    touch.add();
                    detach(entry.elem, j, other);
                    if (sort.contains(other)) sort.decrement(other);
                }
            }
        }
        result.pivots.push_back(std::move(pivot));
    }
    return result;
}

}  // namespace setcover
