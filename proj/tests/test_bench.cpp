#include "doctest.h"

#include "socrep/bench.hpp"
#include "socrep/errors.hpp"

#include <numeric>
#include <sstream>

using namespace socrep;

namespace {

// Direct count of nonincreasing triples with gcd 1.
long long count_triples(long long n) {
    long long c = 0;
    for (long long a = 1; a <= n; ++a) {
        for (long long b = 1; b <= a; ++b) {
            long long r = n - a - b;
            if (r >= 1 && r <= b && std::gcd(std::gcd(a, b), r) == 1) ++c;
        }
    }
    return c;
}

}  // namespace

TEST_CASE("partitions") {
    auto four = partitions(4, 2);
    REQUIRE(four.size() == 1);
    CHECK(four[0] == WeightTuple::of({3, 1}));
    CHECK(partitions(83, 3).size() == 574);
    CHECK(partitions(83, 4).size() == 4109);
    CHECK(partitions(83, 5).size() == 18487);
    long long n6 = 0;
    for_each_partition(83, 6, [&](const WeightTuple&) { ++n6; });
    CHECK(n6 == 58767);
    for (long long s = 3; s <= 40; ++s) CHECK(static_cast<long long>(partitions(s, 3).size()) == count_triples(s));

    auto p = partitions(20, 3);
    for (std::size_t k = 0; k < p.size(); ++k) {
        CHECK(p[k].normalized());
        CHECK(p[k].entries() == p[k].sorted_desc());
        if (k) CHECK(p[k - 1].entries() > p[k].entries());
    }
    CHECK(partitions(1, 1).size() == 1);
    CHECK_THROWS_AS(partitions(2, 3), InvalidInput);
}

TEST_CASE("bench runs") {
    auto six = bench_run(6, 2, {Strategy{StrategyKind::GreedyPowerTwo}});
    CHECK(six.partition_count == 1);
    CHECK(six.totals[0].total_size == 3);

    std::vector<Strategy> st{Strategy{StrategyKind::GreedyPowerTwo}, Strategy{StrategyKind::GreedyCommonOne}};
    BenchOptions one;
    one.jobs = 1;
    BenchOptions two;
    two.jobs = 2;
    auto a = bench_run(30, 3, st, one);
    auto b = bench_run(30, 3, st, two);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t k = 0; k < a.rows.size(); ++k) {
        CHECK(a.rows[k].size == b.rows[k].size);
        CHECK(a.rows[k].tuple == b.rows[k].tuple);
        CHECK(a.rows[k].size >= lower_bound(a.rows[k].tuple));
    }
    CHECK(a.totals[0].total_size == b.totals[0].total_size);

    BenchOptions tiny;
    tiny.budget = 3;
    auto t = bench_run(30, 3, {Strategy{StrategyKind::TraversalPowerTwo}}, tiny);
    CHECK(t.totals[0].partial());

    std::ostringstream csv;
    write_csv(bench_run(5, 2, {Strategy{StrategyKind::GreedyCommonOne}}), csv);
    auto text = csv.str();
    CHECK(text.rfind("tuple,algorithm,size,micros\n\"4 1\",greedy-common-one,3,", 0) == 0);
    CHECK_THROWS_AS(bench_run(10, 3, {}), InvalidInput);
}
