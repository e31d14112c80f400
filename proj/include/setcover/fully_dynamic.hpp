#pragma once

#include <cstdint>
#include <vector>

#include "setcover/engine.hpp"

namespace setcover {

/// Fully dynamic solver: starts with no active elements; supports insertions
/// and deletions. An inserted element already covered by the solution joins
/// Extra(p) of the highest-level covering set's pivot; an uncovered one
/// becomes a level-0 pivot. Deletions trigger the same critical-level phases
/// as the decremental solver, with a movement step re-attributing exposed
/// elements that remain covered above the phase level before the covering
/// step re-covers the rest.
class FullyDynamicSolver {
  public:
    FullyDynamicSolver(const SetSystem& sys, double epsilon, std::uint64_t seed)
        : engine_(sys, epsilon, seed, detail::Engine::Mode::FullyDynamic) {}

    UpdateReport insert(int e) { return engine_.insert(e); }
    UpdateReport erase(int e) { return engine_.erase(e); }

    int find_critical_level() const { return engine_.find_critical_level(); }
    PhaseReport update_phase(int level) { return engine_.update_phase(level); }

    /// Phase internals, exposed for direct exercise; see the engine for the
    /// preconditions they expect.
    std::vector<int> movement_step(const std::vector<int>& exposed, int level,
                                   PhaseReport* report = nullptr) {
        return engine_.movement_step(exposed, level, report);
    }
    void covering_step(const std::vector<int>& uncovered, int phase_level,
                       PhaseReport* report = nullptr) {
        engine_.covering_step(uncovered, phase_level, report);
    }

    bool is_active(int e) const { return engine_.is_active(e); }
    const detail::Engine& state() const { return engine_; }
    detail::Engine& state() { return engine_; }

  private:
    detail::Engine engine_;
};

}  // namespace setcover
