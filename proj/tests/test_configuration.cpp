#include "doctest.h"

#include "socrep/configuration.hpp"
#include "socrep/errors.hpp"

using namespace socrep;

TEST_CASE("validate") {
    Configuration ok(2, {{2, 6, 3}, {1, 3, 4}, {3, 4, 5}, {4, 5, 6}});
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.is_canonical());
    CHECK_THROWS_AS(Configuration(2, {{1, 1, 3}}).validate(), MalformedConfiguration);
    CHECK_THROWS_AS(Configuration(2, {{1, 3, 3}}).validate(), MalformedConfiguration);
    CHECK_THROWS_AS(Configuration(2, {{1, 2, 4}}).validate(), MalformedConfiguration);
    CHECK_THROWS_AS(Configuration(2, {{1, 2, 3}, {1, 2, 3}}).validate(), MalformedConfiguration);
    CHECK_THROWS_AS(Configuration(2, {{1, 7, 3}}).validate(), MalformedConfiguration);
}

TEST_CASE("canonical relabelling") {
    // x6 x7 >= x5^2, x1 x2 >= x6^2, x3 x4 >= x7^2
    Configuration c(4, {{6, 7, 5}, {1, 2, 6}, {3, 4, 7}});
    auto k = c.canonical();
    CHECK(k.is_canonical());
    CHECK(k.size() == 3);
    CHECK(k.triples()[0] == Triple{6, 7, 5});
    CHECK(k.canonical() == k);

    // BFS from x3: x6 -> x4, x4 -> x5, x5 -> x6
    Configuration perm(2, {{4, 5, 6}, {2, 6, 3}, {3, 4, 5}, {1, 3, 4}});
    CHECK(perm.canonical() == Configuration(2, {{2, 4, 3}, {5, 6, 4}, {1, 3, 5}, {3, 5, 6}}));
}
