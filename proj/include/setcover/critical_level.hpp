#pragma once

#include <span>

#include "setcover/common.hpp"

namespace setcover {

/// Level ell satisfies the critical suffix condition when, for every i <= ell,
/// the pivots at levels i..ell are deleted in at least an epsilon-fraction:
///   sum_{j=i}^{ell} d[j] >= epsilon * sum_{j=i}^{ell} p[j].
/// Ranges holding no pivots satisfy the condition vacuously.
inline bool is_critical_level(std::span<const long long> p, std::span<const long long> d,
                              const EpsilonParam& eps, int level) {
    if (level < 0 || level >= static_cast<int>(p.size())) return false;
    unsigned long long ds = 0, ps = 0;
    for (int i = level; i >= 0; --i) {
        ds += static_cast<unsigned long long>(d[static_cast<std::size_t>(i)]);
        ps += static_cast<unsigned long long>(p[static_cast<std::size_t>(i)]);
        if (!eps.at_least_fraction(ds, ps)) return false;
    }
    return true;
}

/// Lowest level that satisfies the critical suffix condition and holds at
/// least one deleted pivot at levels <= ell, so the update phase it selects
/// discards something. Guaranteed to exist whenever the totals satisfy
/// sum d >= epsilon * sum p with sum d >= 1; returns -1 otherwise only if no
/// such level exists (which would indicate a counter corruption upstream).
///
/// O(L^2) over the number of levels.
inline int lowest_critical_level(std::span<const long long> p, std::span<const long long> d,
                                 const EpsilonParam& eps) {
    long long deleted_below = 0;
    for (int level = 0; level < static_cast<int>(p.size()); ++level) {
        deleted_below += d[static_cast<std::size_t>(level)];
        if (deleted_below == 0) continue;
        if (is_critical_level(p, d, eps, level)) return level;
    }
    return -1;
}

}  // namespace setcover
