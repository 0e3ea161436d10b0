#include "doctest.h"

#include "sweep.hpp"
#include "socrep/heuristics.hpp"
#include "socrep/verify.hpp"

using namespace socrep;

namespace {
std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }
const Strategy kP2{StrategyKind::GreedyPowerTwo};
const Strategy kC1{StrategyKind::GreedyCommonOne};
const Strategy kTP2{StrategyKind::TraversalPowerTwo};
const Strategy kTC1{StrategyKind::TraversalCommonOne};
}  // namespace

TEST_CASE("pair selection") {
    auto a = select_greedy_common_one(ints({3, 8, 5}));
    CHECK(a.i == 1);
    CHECK(a.j == 3);
    CHECK(a.gamma == 1);
    auto b = select_greedy_common_one(ints({6, 6}));
    CHECK((b.i == 1 && b.j == 2 && b.gamma == 6));
    auto c = select_greedy_common_one(ints({7, 7, 2}));
    CHECK((c.i == 1 && c.j == 2 && c.gamma == 7));

    auto d = select_greedy_power_two(ints({3, 8, 5}));
    CHECK((d.i == 1 && d.j == 3 && d.gamma == 3));
    auto e = select_greedy_power_two(ints({6, 6}));
    CHECK((e.i == 1 && e.j == 2 && e.gamma == 6));
    auto f = select_greedy_power_two(ints({1, 3, 4, 8}));
    CHECK((f.i == 1 && f.j == 2 && f.gamma == 1));

    CHECK_THROWS_AS(select_greedy_common_one(ints({4, 0})), InvalidInput);
    CHECK_THROWS_AS(select_greedy_common_one(ints({4, 2})), InternalConsistency);
}

TEST_CASE("strategy names") {
    for (const char* n : {"greedy-common-one", "greedy-power-two", "traversal-common-one", "traversal-power-two"}) {
        CHECK(Strategy::parse(n).name() == n);
    }
    CHECK_THROWS_AS(Strategy::parse("greedy"), InvalidInput);
}

TEST_CASE("worked sizes") {
    auto w38 = WeightTuple::of({3, 8});
    auto c38 = heuristic(w38, kP2);
    CHECK(c38.size() == 4);
    CHECK(reconstruct(c38, w38).valid());

    for (auto s : {kP2, kC1, kTP2, kTC1}) {
        auto c = heuristic(WeightTuple::of({1, 1}), s);
        CHECK(c == Configuration(2, {{1, 2, 3}}));
        CHECK(heuristic(WeightTuple::of({1, 1, 1}), s).size() == 3);
    }
    for (auto t : {WeightTuple::of({5, 4, 3}), WeightTuple::of({7, 3, 2}), WeightTuple::of({11, 2, 1})}) {
        for (auto s : {kP2, kC1, kTP2, kTC1}) CHECK(heuristic(t, s).size() == 5);
    }
    auto w653 = WeightTuple::of({6, 5, 3});
    CHECK(heuristic(w653, kP2).size() == 5);
    CHECK(heuristic(w653, kTP2).size() == 5);
    CHECK(heuristic(w653, kC1).size() == 6);
    CHECK(heuristic(w653, kTC1).size() == 6);

    CHECK_THROWS_AS(heuristic(WeightTuple::of({2, 4}), kP2), InvalidInput);
    CHECK_THROWS_AS(heuristic(WeightTuple::of({1}), kP2), InvalidInput);
}

TEST_CASE("traversal budget") {
    auto w = WeightTuple::of({6, 5, 3});
    auto full = traversal(w, kTP2, 1000000);
    CHECK(full.exhaustive);
    CHECK(full.config.size() == 5);
    auto tiny = traversal(w, kTC1, 7);
    CHECK(tiny.config.size() >= 6);
    try {
        traversal(w, kTP2, 1);
        FAIL("expected the budget to run out");
    } catch (const TraversalExhausted& e) {
        CHECK(e.fallback().size() == 5);
        CHECK(reconstruct(e.fallback(), w).valid());
    }
}

TEST_CASE("sweep: validity, bounds, traversal dominance, iteration counts") {
    int checked = 0;
    for (int m = 2; m <= 4; ++m) {
        for_each_normalized(m, 20, [&](const WeightTuple& w) {
            auto b = compute_bounds(w);
            auto padded = padded_entries(w);
            const int l = ceil_log2(w.s_hat());
            int omega_total = 0;
            int delta_total = 0;
            for (const auto& v : padded) {
                omega_total += popcount(v);
                delta_total += l - delta_or(v, l);
            }
            auto p2 = heuristic_trace(w, kP2);
            auto c1 = heuristic_trace(w, kC1);
            auto tp2 = traversal(w, kTP2);
            auto tc1 = traversal(w, kTC1);
            for (const auto* c : {&p2.config, &c1.config, &tp2.config, &tc1.config}) {
                REQUIRE(reconstruct(*c, w).valid());
                REQUIRE(numeric_check(*c, w, 3).passed);
                REQUIRE(c->size() >= b.lower);
            }
            REQUIRE(p2.config.size() <= b.upper_power_two);
            REQUIRE(c1.config.size() <= b.upper_common_one);
            REQUIRE(tp2.config.size() <= p2.config.size());
            REQUIRE(tc1.config.size() <= c1.config.size());
            REQUIRE(c1.generic_steps <= omega_total - 2);
            REQUIRE(2 * (p2.generic_steps + 1) <= delta_total);
            ++checked;
        });
    }
    CHECK(checked > 1000);
}
