#include <doctest.h>

#include <map>

#include "setcover/rng.hpp"
#include "setcover/sort_list.hpp"

using namespace setcover;

TEST_CASE("grouping init builds the documented bucket list") {
    SortList sort;
    sort.init({3, 3, 1});  // sets a=0, b=1 of size 3; c=2 of size 1
    const auto entries = sort.entries();
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].first == 3);
    CHECK(entries[0].second == std::vector<int>{0, 1});
    CHECK(entries[1].first == 1);
    CHECK(entries[1].second == std::vector<int>{2});
    CHECK(sort.head_set() == 0);
    CHECK(sort.head_cardinality() == 3);
}

TEST_CASE("decrementing the only size-3 set replaces its entry") {
    SortList sort;
    sort.init({3, 1});
    sort.decrement(0);
    const auto entries = sort.entries();
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].first == 2);
    CHECK(entries[0].second == std::vector<int>{0});
    CHECK(entries[1].first == 1);
}

TEST_CASE("a size-1 set leaves the structure on decrement") {
    SortList sort;
    sort.init({1});
    CHECK(sort.contains(0));
    sort.decrement(0);
    CHECK(!sort.contains(0));
    CHECK(sort.empty());
}

TEST_CASE("decrement of an absent set is a contract violation") {
    SortList sort;
    sort.init({2});
    sort.remove(0);
    CHECK_THROWS_AS(sort.decrement(0), contract_error);
    CHECK_THROWS_AS(sort.remove(0), contract_error);
}

TEST_CASE("randomized operations agree with a naive model") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 1 + rng.below_int(12);
        std::vector<int> cards(m);
        std::map<int, int> model;  // set -> cardinality
        for (int s = 0; s < m; ++s) {
            cards[s] = 1 + rng.below_int(6);
            model[s] = cards[s];
        }
        SortList sort;
        sort.init(cards);
        for (int step = 0; step < 60 && !sort.empty(); ++step) {
            // Model invariants: head has the max cardinality; sizes agree.
            int max_card = 0;
            for (auto& [s, c] : model) max_card = std::max(max_card, c);
            CHECK(sort.head_cardinality() == max_card);
            CHECK(sort.size() == static_cast<int>(model.size()));

            const int op = rng.below_int(3);
            if (op == 0) {
                const int victim = sort.head_set();
                CHECK(model.at(victim) == max_card);
                sort.remove(victim);
                model.erase(victim);
            } else {
                // decrement a random live set
                int pick = rng.below_int(static_cast<int>(model.size()));
                auto it = model.begin();
                std::advance(it, pick);
                sort.decrement(it->first);
                if (--it->second == 0) model.erase(it);
            }
        }
        CHECK(sort.size() == static_cast<int>(model.size()));
    }
}

TEST_CASE("insert places a set into the right bucket") {
    SortList wide(3);
    wide.insert(0, 4);
    wide.insert(1, 2);
    wide.insert(2, 3);
    const auto entries = wide.entries();
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].first == 4);
    CHECK(entries[1].first == 3);
    CHECK(entries[2].first == 2);
    CHECK(entries[1].second == std::vector<int>{2});
    CHECK_THROWS_AS(wide.insert(2, 5), contract_error);  // already present
}
