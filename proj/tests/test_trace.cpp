#include <doctest.h>

#include "setcover/trace.hpp"
#include "setcover/workloads.hpp"

using namespace setcover;

TEST_CASE("trace documents round-trip through parse and format") {
    UpdateTrace trace;
    trace.n = 4;
    trace.m = 2;
    trace.events = {{EventKind::Insert, 0}, {EventKind::Insert, 3}, {EventKind::Query, -1},
                    {EventKind::Erase, 0},  {EventKind::Query, -1}};
    const std::string text = format_trace(trace);
    const UpdateTrace back = parse_trace(text);
    CHECK(back.n == trace.n);
    CHECK(back.m == trace.m);
    REQUIRE(back.events.size() == trace.events.size());
    for (std::size_t i = 0; i < back.events.size(); ++i) {
        CHECK(back.events[i].kind == trace.events[i].kind);
        if (back.events[i].kind != EventKind::Query)
            CHECK(back.events[i].id == trace.events[i].id);
    }
    CHECK(format_trace(back) == text);
}

TEST_CASE("set-event traces round-trip") {
    const UpdateTrace trace = parse_trace("trace 6 3\n+S 0\n+S 2\n?\n-S 2\n");
    CHECK(trace.has_set_events());
    CHECK(!trace.has_element_events());
    CHECK(trace.events.size() == 4);
    CHECK(format_trace(trace) == "trace 6 3\n+S 0\n+S 2\n?\n-S 2\n");
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_trace("+ 0\n"), parse_error);          // missing header
    CHECK_THROWS_AS(parse_trace("trace 2 1\n* 0\n"), parse_error);
    CHECK_THROWS_AS(parse_trace("trace 2 1\n+ 5\n"), parse_error);   // id out of range
    CHECK_THROWS_AS(parse_trace("trace 2 1\n+S 1\n"), parse_error);  // set id out of range
    CHECK_THROWS_AS(parse_trace("trace 2 1\n+\n"), parse_error);     // missing id
    CHECK_THROWS_AS(parse_trace("trace 2 1\n+ 0 9\n"), parse_error); // trailing tokens
}

TEST_CASE("delete-only traces replay against a fully active universe") {
    const UpdateTrace trace = parse_trace("trace 2 1\n- 0\n?\n- 1\n");
    CHECK(trace.starts_fully_active());
    CHECK(!validate_trace(trace).has_value());
}

TEST_CASE("insert traces start empty and must respect activity") {
    CHECK(!validate_trace(parse_trace("trace 2 1\n+ 0\n- 0\n+ 0\n")).has_value());
    CHECK(validate_trace(parse_trace("trace 2 1\n+ 0\n+ 0\n")).has_value());
    CHECK(validate_trace(parse_trace("trace 2 1\n+ 0\n- 1\n")).has_value());
    CHECK(validate_trace(parse_trace("trace 2 1\n- 0\n- 0\n")).has_value());
    CHECK(validate_trace(parse_trace("trace 2 2\n+S 0\n+S 0\n")).has_value());
    CHECK(validate_trace(parse_trace("trace 2 2\n-S 0\n")).has_value());
    CHECK(validate_trace(parse_trace("trace 2 2\n+ 0\n+S 0\n")).has_value());  // mixed kinds
}

TEST_CASE("generated traces always replay cleanly") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const SetSystem sys = gen_random_system(10, 6, 3, 600 + seed);
        CHECK(!validate_trace(gen_deletion_trace(sys, DeletionOrder::Random, seed, 3)).has_value());
        CHECK(!validate_trace(gen_deletion_trace(sys, DeletionOrder::PivotAdversarial, seed, 2))
                   .has_value());
        CHECK(!validate_trace(gen_mixed_trace(sys, 3 * sys.n, seed, 4)).has_value());
    }
}
