#include <doctest.h>

#include "setcover/rng.hpp"
#include "setcover/set_system.hpp"
#include "setcover/workloads.hpp"

using namespace setcover;

TEST_CASE("load_system reads the documented examples") {
    const SetSystem a = load_system("3 2\n2 0 1\n2 1 2\n");
    CHECK(a.n == 3);
    CHECK(a.m == 2);
    CHECK(a.f == 2);  // element 1 sits in both sets
    CHECK(a.set_of[1] == std::vector<int>{0, 1});

    const SetSystem b = load_system("1 1\n1 0\n");
    CHECK(b.n == 1);
    CHECK(b.m == 1);
    CHECK(b.f == 1);

    const SetSystem c = load_system("4 3\n2 0 1\n2 1 2\n2 2 3\n");
    CHECK(c.f == 2);
    CHECK(c.set_of[0] == std::vector<int>{0});
    CHECK(c.set_of[1] == std::vector<int>{0, 1});
    CHECK(c.set_of[2] == std::vector<int>{1, 2});
    CHECK(c.set_of[3] == std::vector<int>{2});
}

TEST_CASE("load_system rejects malformed documents with line numbers") {
    CHECK_THROWS_AS(load_system("nope\n"), parse_error);
    CHECK_THROWS_AS(load_system("3 2\n2 0 1\n"), parse_error);       // missing set line
    CHECK_THROWS_AS(load_system("3 1\n2 0 9\n"), parse_error);       // id out of range
    CHECK_THROWS_AS(load_system("3 1\n2 0 0\n"), parse_error);       // duplicate in one set
    CHECK_THROWS_AS(load_system("3 1\n0\n"), parse_error);           // empty set
    CHECK_THROWS_AS(load_system("3 1\n2 0 1 5\n"), parse_error);     // trailing tokens
    CHECK_THROWS_AS(load_system("3 1\n1 0\n1 1\n"), parse_error);    // extra content
    CHECK_THROWS_AS(load_system("3 1\n2 0\n"), parse_error);         // fewer ids than k

    try {
        load_system("3 2\n2 0 1\n2 1 9\n");
        FAIL("expected parse_error");
    } catch (const parse_error& err) {
        CHECK(err.line() == 3);
    }
}

TEST_CASE("the empty system loads and round-trips") {
    const SetSystem sys = load_system("0 0\n");
    CHECK(sys.n == 0);
    CHECK(sys.m == 0);
    CHECK(sys.f == 0);
    CHECK(load_system(format_system(sys)).n == 0);
}

TEST_CASE("duplicate element is fine across sets, fatal within one") {
    const SetSystem sys = load_system("2 2\n2 0 1\n1 0\n");
    CHECK(sys.f == 2);
    CHECK_THROWS_AS(make_system(2, {{0, 1, 0}}), param_error);
}

TEST_CASE("format/load round-trip preserves random systems") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Rng rng(seed);
        const int n = 1 + rng.below_int(16);
        const int m = 1 + rng.below_int(12);
        const int f = 1 + rng.below_int(4);
        SetSystem sys;
        try {
            sys = gen_random_system(n, m, f, seed);
        } catch (const param_error&) {
            continue;  // shape without enough frequency headroom
        }
        const SetSystem back = load_system(format_system(sys));
        CHECK(back.n == sys.n);
        CHECK(back.m == sys.m);
        CHECK(back.f == sys.f);
        CHECK(back.elem_of == sys.elem_of);
        CHECK(back.set_of == sys.set_of);
    }
}

TEST_CASE("cross-consistency and the f witness hold on generated systems") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const SetSystem sys = gen_random_system(12, 8, 3, seed);
        int max_freq = 0;
        for (int e = 0; e < sys.n; ++e) {
            max_freq = std::max(max_freq, static_cast<int>(sys.set_of[e].size()));
            for (int s : sys.set_of[e]) {
                const auto& elems = sys.elem_of[s];
                CHECK(std::find(elems.begin(), elems.end(), e) != elems.end());
            }
        }
        CHECK(max_freq == sys.f);  // some element attains the maximum
        for (int s = 0; s < sys.m; ++s)
            for (int e : sys.elem_of[s]) {
                const auto& sets = sys.set_of[e];
                CHECK(std::find(sets.begin(), sets.end(), s) != sets.end());
            }
    }
}
