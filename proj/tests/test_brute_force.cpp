#include <doctest.h>

#include <set>

#include "unimap/bijections.hpp"
#include "unimap/brute_force.hpp"
#include "unimap/enumeration.hpp"

using namespace unimap;

TEST_CASE("well labellings of a loop and a path") {
    CHECK(well_labellings(CombinatorialMap::build({1, 0}, {1, 0}, 0)).size() == 1);
    CHECK(well_labellings(CombinatorialMap::build({1, 0, 3, 2}, {2, 1, 0, 3}, 0)).size() == 9);
}

TEST_CASE("unicycle oracle agrees with the formula up to four edges") {
    for (int n = 1; n <= 4; ++n) {
        const auto us = brute_force_unicycles(n);
        CHECK(Count(static_cast<unsigned long>(us.size())) == count_unicycles(n));
        std::set<std::string> codes;
        for (const auto& u : us) codes.insert(canonical_code(u));
        CHECK(codes.size() == us.size());
        CHECK(Count(static_cast<unsigned long>(brute_force_marked_unicycles(n).size())) == count_marked_total(n));
    }
}

TEST_CASE("delayed quadrangulations are twice the unicycles") {
    for (int n = 1; n <= 3; ++n) {
        const auto qs = brute_force_delayed_quadrangulations(n);
        CHECK(Count(static_cast<unsigned long>(qs.size())) == 2 * count_unicycles(n));
    }
}

TEST_CASE("budget guard") {
    const Budget spent(-1L);
    CHECK_THROWS_AS(brute_force_unicycles(4, spent), BudgetExceeded);
    CHECK_THROWS_AS(brute_force_rooted_maps(6, 2), BudgetExceeded);
}
