#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "setcover/baselines.hpp"
#include "setcover/workloads.hpp"

using namespace setcover;

namespace {

std::vector<int> all_elements(const SetSystem& sys) {
    std::vector<int> out(sys.n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

bool covers(const SetSystem& sys, const std::vector<int>& cover, const std::vector<int>& targets) {
    std::vector<std::uint8_t> hit(sys.n, 0);
    for (int s : cover)
        for (int e : sys.elem_of[s]) hit[e] = 1;
    return std::all_of(targets.begin(), targets.end(), [&](int e) { return hit[e] == 1; });
}

// Independent oracle: full subset enumeration over the sets.
long long enumerate_opt(const SetSystem& sys, const std::vector<int>& targets) {
    if (targets.empty()) return 0;
    long long best = -1;
    for (std::uint64_t mask = 0; mask < (1ULL << sys.m); ++mask) {
        std::vector<int> chosen;
        for (int s = 0; s < sys.m; ++s)
            if (mask & (1ULL << s)) chosen.push_back(s);
        if (best >= 0 && static_cast<long long>(chosen.size()) >= best) continue;
        if (covers(sys, chosen, targets)) best = static_cast<long long>(chosen.size());
    }
    return best;
}

}  // namespace

TEST_CASE("deterministic cover on the degenerate shapes") {
    const SetSystem singletons = load_system("3 3\n1 0\n1 1\n1 2\n");
    const auto r1 = deterministic_cover(singletons, all_elements(singletons));
    CHECK(r1.pivots.size() == 3);
    CHECK(r1.cover.size() == 3);

    const SetSystem universal = load_system("5 1\n5 0 1 2 3 4\n");
    const auto r2 = deterministic_cover(universal, all_elements(universal));
    CHECK(r2.pivots.size() == 1);
    CHECK(r2.cover.size() == 1);
}

TEST_CASE("deterministic cover is an f-approximation with set-disjoint pivots") {
    int trials = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const SetSystem sys = gen_random_system(12, 8, 3, 7000 + seed);
        const auto targets = all_elements(sys);
        const auto result = deterministic_cover(sys, targets);
        CHECK(covers(sys, result.cover, targets));
        // No set contains two pivots.
        for (int s = 0; s < sys.m; ++s) {
            int inside = 0;
            for (int e : sys.elem_of[s])
                inside += std::count(result.pivots.begin(), result.pivots.end(), e) > 0;
            CHECK(inside <= 1);
        }
        const auto opt = exact_cover(sys, targets);
        REQUIRE(opt.has_value());
        CHECK(static_cast<long long>(result.cover.size()) <=
              static_cast<long long>(sys.f) * *opt);
        ++trials;
    }
    CHECK(trials == 500);
}

TEST_CASE("greedy cover matches the ln(n)+1 bound and the degenerate shapes") {
    const SetSystem universal = load_system("5 1\n5 0 1 2 3 4\n");
    CHECK(greedy_cover(universal, all_elements(universal)).size() == 1);
    const SetSystem singletons = load_system("3 3\n1 0\n1 1\n1 2\n");
    CHECK(greedy_cover(singletons, all_elements(singletons)).size() == 3);

    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const SetSystem sys = gen_random_system(12, 8, 3, 8000 + seed);
        const auto targets = all_elements(sys);
        const auto cover = greedy_cover(sys, targets);
        CHECK(covers(sys, cover, targets));
        const auto opt = exact_cover(sys, targets);
        REQUIRE(opt.has_value());
        CHECK(static_cast<double>(cover.size()) <=
              (std::log(static_cast<double>(sys.n)) + 1.0) * static_cast<double>(*opt));
    }
}

TEST_CASE("exact cover worked examples") {
    const SetSystem triangle = load_system("3 3\n2 0 1\n2 1 2\n2 0 2\n");
    CHECK(exact_cover(triangle, all_elements(triangle)) == 2);

    const SetSystem universal = load_system("5 1\n5 0 1 2 3 4\n");
    CHECK(exact_cover(universal, all_elements(universal)) == 1);

    CHECK(exact_cover(universal, std::vector<int>{}) == 0);
}

TEST_CASE("exact cover agrees with full enumeration and ignores set order") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const SetSystem sys = gen_random_system(10, 8, 3, 9000 + seed);
        const auto targets = all_elements(sys);
        const auto fast = exact_cover(sys, targets);
        REQUIRE(fast.has_value());
        CHECK(*fast == enumerate_opt(sys, targets));

        // Permute set order; the optimum must not change.
        std::vector<std::vector<int>> shuffled(sys.elem_of.rbegin(), sys.elem_of.rend());
        const SetSystem reversed = make_system(sys.n, shuffled);
        CHECK(*exact_cover(reversed, targets) == *fast);

        // Partial target subsets agree too.
        Rng rng(seed);
        std::vector<int> part;
        for (int e = 0; e < sys.n; ++e)
            if (rng.below(2) == 0) part.push_back(e);
        const auto fast_part = exact_cover(sys, part);
        REQUIRE(fast_part.has_value());
        CHECK(*fast_part == enumerate_opt(sys, part));
    }
}

TEST_CASE("exact cover reports cap excess instead of guessing") {
    const SetSystem sys = gen_random_system(30, 25, 3, 77);
    const auto capped = exact_cover(sys, all_elements(sys), /*set_cap=*/10);
    CHECK(!capped.has_value());
    const auto full = exact_cover(sys, all_elements(sys), /*set_cap=*/25);
    CHECK(full.has_value());
}
