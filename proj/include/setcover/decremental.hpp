#pragma once

#include <cstdint>

#include "setcover/engine.hpp"

namespace setcover {

/// Decremental solver: a random cover over the full system at construction,
/// then deletions. Whenever the deleted pivots reach an epsilon-fraction of
/// all pivots, update phases rebuild the lowest critical level and everything
/// below it until the fraction is strictly below epsilon again. Maintains a
/// cover within f/(1-epsilon) of optimal over the undeleted elements.
class DecrementalSolver {
  public:
    DecrementalSolver(const SetSystem& sys, double epsilon, std::uint64_t seed)
        : engine_(sys, epsilon, seed, detail::Engine::Mode::Decremental) {}

    UpdateReport erase(int e) { return engine_.erase(e); }

    int find_critical_level() const { return engine_.find_critical_level(); }
    PhaseReport update_phase(int level) { return engine_.update_phase(level); }

    bool is_deleted(int e) const { return !engine_.is_active(e); }
    const detail::Engine& state() const { return engine_; }
    detail::Engine& state() { return engine_; }

  private:
    detail::Engine engine_;
};

}  // namespace setcover
