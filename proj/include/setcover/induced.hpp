#pragma once

#include <numeric>
#include <span>
#include <vector>

#include "setcover/common.hpp"
#include "setcover/set_system.hpp"

namespace setcover {

/// Zero-initialized global-to-local remap arrays, owned by one solver and
/// reused across rebuilds. A stored value of v != 0 means local id v-1, so 0
/// can mean "unmapped" without a separate presence bitmap. build_induced
/// restores every entry to 0 before returning, by walking the inverse maps.
struct IndexMaps {
    std::vector<int> elem;  // size n
    std::vector<int> set;   // size m

    void resize(const SetSystem& sys) {
        elem.assign(static_cast<std::size_t>(sys.n), 0);
        set.assign(static_cast<std::size_t>(sys.m), 0);
    }
};

/// A subinstance over a subset of elements and the sets intersecting them,
/// with membership indexes rebuilt over compact local ids.
struct InducedInstance {
    const SetSystem* parent = nullptr;
    int local_n = 0;
    int local_m = 0;
    std::vector<int> elem_to_global;  // local element id -> global id
    std::vector<int> set_to_global;   // local set id -> global id
    std::vector<std::vector<int>> local_set_of;   // per local element
    std::vector<std::vector<int>> local_elem_of;  // per local set
};

/// Builds the induced instance over `elements` (restricted sets = S ∩ elements).
/// Repeated visits of the same global id are skipped via the nonzero-map test,
/// so the output is well-defined even if the caller passes duplicates.
/// Cost: O(f * |elements|) element-touches.
inline InducedInstance build_induced(const SetSystem& sys, std::span<const int> elements,
                                     IndexMaps& maps, TouchCounter& touch) {
    InducedInstance inst;
    inst.parent = &sys;
    for (int g : elements) {
        if (maps.elem[static_cast<std::size_t>(g)] != 0) continue;  // duplicate visit
        inst.elem_to_global.push_back(g);
        maps.elem[static_cast<std::size_t>(g)] = static_cast<int>(inst.elem_to_global.size());
    }
    inst.local_n = static_cast<int>(inst.elem_to_global.size());
    inst.local_set_of.resize(static_cast<std::size_t>(inst.local_n));
    for (int le = 0; le < inst.local_n; ++le) {
        const int g = inst.elem_to_global[static_cast<std::size_t>(le)];
        for (int s : sys.set_of[static_cast<std::size_t>(g)]) {
            touch.add();
            int& slot = maps.set[static_cast<std::size_t>(s)];
            if (slot == 0) {
                inst.set_to_global.push_back(s);
                inst.local_elem_of.emplace_back();
                slot = static_cast<int>(inst.set_to_global.size());
            }
            const int ls = slot - 1;
            inst.local_set_of[static_cast<std::size_t>(le)].push_back(ls);
            inst.local_elem_of[static_cast<std::size_t>(ls)].push_back(le);
        }
    }
    inst.local_m = static_cast<int>(inst.set_to_global.size());
    // Reset discipline: zero the touched entries only.
    for (int g : inst.elem_to_global) {
        touch.add();
        maps.elem[static_cast<std::size_t>(g)] = 0;
    }
    for (int s : inst.set_to_global) {
        touch.add();
        maps.set[static_cast<std::size_t>(s)] = 0;
    }
    return inst;
}

/// Induces over the whole universe (identity remap up to relabeling).
inline InducedInstance induce_all(const SetSystem& sys, IndexMaps& maps, TouchCounter& touch) {
    std::vector<int> all(static_cast<std::size_t>(sys.n));
    std::iota(all.begin(), all.end(), 0);
    return build_induced(sys, all, maps, touch);
}

}  // namespace setcover
