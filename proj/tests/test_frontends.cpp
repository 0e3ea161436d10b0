#include "doctest.h"

#include "socrep/errors.hpp"
#include "socrep/frontends.hpp"
#include "socrep/heuristics.hpp"

#include <random>
#include <set>

using namespace socrep;

namespace {

Rational q(long long a, long long b = 1) { return Rational(a, b); }

ConeInstance inst(Family f, std::vector<Rational> e, int dim = 0) { return {f, std::move(e), dim}; }

std::vector<long long> ints(const WeightTuple& w) {
    std::vector<long long> out;
    for (const auto& x : w.entries()) out.push_back(x.convert_to<long long>());
    return out;
}

}  // namespace

TEST_CASE("family names") {
    for (auto f : {Family::Wgm, Family::SubUnitWgm, Family::PowerUp, Family::PowerDown, Family::NegPower,
                   Family::NegPowerMulti, Family::PNorm, Family::PowerCone}) {
        CHECK(parse_family(to_string(f)) == f);
    }
    CHECK_THROWS_AS(parse_family("power"), InvalidInput);
}

TEST_CASE("worked conversions") {
    auto up = to_wgm(inst(Family::PowerUp, {q(3, 2)}));
    REQUIRE(up.instances.size() == 1);
    CHECK(ints(up.instances[0].tuple) == std::vector<long long>{2, 1});
    CHECK(up.instances[0].inputs == std::vector<std::string>{"y", "z"});
    CHECK(up.instances[0].output == "x");
    REQUIRE(up.side.size() == 1);
    CHECK(render(up.side[0]) == "z = 1");

    auto neg = to_wgm(inst(Family::NegPower, {q(1)}));
    CHECK(ints(neg.instances[0].tuple) == std::vector<long long>{1, 1});

    auto pn = to_wgm(inst(Family::PNorm, {q(3)}, 2));
    REQUIRE(pn.instances.size() == 2);
    for (const auto& i : pn.instances) CHECK(ints(i.tuple) == std::vector<long long>{2, 1});
    CHECK(pn.instances[1].inputs == std::vector<std::string>{"z", "y2"});
    CHECK(pn.instances[1].output == "w2");
    REQUIRE(pn.side.size() == 3);
    CHECK(render(pn.side[0]) == "y1 + y2 = z");
    CHECK(render(pn.side[2]) == "|x2| <= w2");

    // 1/3 + 1/4 leaves 5/12 on the slack variable
    auto sub = to_wgm(inst(Family::SubUnitWgm, {q(1, 3), q(1, 4)}));
    CHECK(ints(sub.instances[0].tuple) == std::vector<long long>{4, 3, 5});
    CHECK(sub.instances[0].inputs.back() == "y");
    CHECK(render(sub.side[0]) == "y = 1");

    // lambda = (1, 2): weights 1/4, 2/4 and 1/4 on y
    auto multi = to_wgm(inst(Family::NegPowerMulti, {q(1), q(2)}));
    CHECK(ints(multi.instances[0].tuple) == std::vector<long long>{1, 2, 1});

    auto down = to_wgm(inst(Family::PowerDown, {q(2, 5)}));
    CHECK(ints(down.instances[0].tuple) == std::vector<long long>{2, 3});

    auto cone = to_wgm(inst(Family::PowerCone, {q(1, 2), q(1, 3), q(1, 6)}));
    CHECK(ints(cone.instances[0].tuple) == std::vector<long long>{3, 2, 1});
    CHECK(render(cone.side[0]) == "|z| <= y");

    auto wgm = to_wgm(inst(Family::Wgm, {q(3, 11), q(8, 11)}));
    CHECK(ints(wgm.instances[0].tuple) == std::vector<long long>{3, 8});
    CHECK(wgm.side.empty());

    // p = 1 is linear
    auto p1 = to_wgm(inst(Family::PNorm, {q(1)}, 3));
    CHECK(p1.instances.empty());
    CHECK(render(p1.side[0]) == "w1 <= y1");
    CHECK(p1.side.size() == 7);
}

TEST_CASE("family restrictions") {
    CHECK_THROWS_AS(to_wgm(inst(Family::PowerUp, {q(1)})), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::PowerUp, {q(2), q(3)})), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::PowerDown, {q(1)})), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::PowerDown, {q(0)})), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::NegPower, {q(0)})), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::NegPowerMulti, {q(1), q(-1)})), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::PNorm, {q(1, 2)}, 2)), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::PNorm, {q(2)}, 0)), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::Wgm, {q(1, 2), q(1, 3)})), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::Wgm, {q(1)})), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::SubUnitWgm, {q(1, 2), q(1, 2)})), InvalidInput);
    CHECK_THROWS_AS(to_wgm(inst(Family::PowerCone, {q(3, 2), q(-1, 2)})), InvalidInput);
    try {
        to_wgm(inst(Family::PowerUp, {q(1, 2)}));
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("lambda > 1") != std::string::npos);
    }
}

TEST_CASE("random round trips") {
    std::mt19937_64 rng(2024);
    auto frac = [&](long long lo_num, long long hi) {
        std::uniform_int_distribution<long long> den(1, 40);
        long long d = den(rng);
        std::uniform_int_distribution<long long> num(lo_num, hi * d);
        return Rational(num(rng), d);
    };
    auto weights = [&](int m) {
        std::uniform_int_distribution<long long> part(1, 30);
        std::vector<long long> raw;
        long long total = 0;
        for (int i = 0; i < m; ++i) total += raw.emplace_back(part(rng));
        std::vector<Rational> out;
        for (auto r : raw) out.push_back(Rational(r, total));
        return out;
    };
    for (int trial = 0; trial < 100; ++trial) {
        auto check_normal = [](const Conversion& c) {
            for (const auto& i : c.instances) REQUIRE(i.tuple.normalized());
        };
        Rational up = 1 + frac(1, 5);
        auto c = to_wgm(inst(Family::PowerUp, {up}));
        check_normal(c);
        CHECK(c.instances[0].exponents()[0] == 1 / up);

        Rational down = frac(1, 1);
        if (down >= 1) down = Rational(1, 2);
        c = to_wgm(inst(Family::PowerDown, {down}));
        check_normal(c);
        CHECK(c.instances[0].exponents()[0] == down);

        Rational lam = frac(1, 6);
        c = to_wgm(inst(Family::NegPower, {lam}));
        check_normal(c);
        auto e = c.instances[0].exponents();
        CHECK(e[0] / e[1] == lam);

        std::vector<Rational> lams{frac(1, 3), frac(1, 3), frac(1, 3)};
        c = to_wgm(inst(Family::NegPowerMulti, lams));
        check_normal(c);
        e = c.instances[0].exponents();
        for (std::size_t i = 0; i < 3; ++i) CHECK(e[i] / e[3] == lams[i]);

        Rational p = 1 + frac(0, 4);
        c = to_wgm(inst(Family::PNorm, {p}, 3));
        check_normal(c);
        if (p != 1) {
            REQUIRE(c.instances.size() == 3);
            CHECK(c.instances[2].exponents()[1] == 1 / p);
        }

        auto w = weights(4);
        c = to_wgm(inst(Family::Wgm, w));
        check_normal(c);
        CHECK(c.instances[0].exponents() == w);
        c = to_wgm(inst(Family::PowerCone, w));
        CHECK(c.instances[0].exponents() == w);

        std::vector<Rational> sub{w[0] / 2, w[1] / 2};
        c = to_wgm(inst(Family::SubUnitWgm, sub));
        check_normal(c);
        e = c.instances[0].exponents();
        CHECK(e[0] == sub[0]);
        CHECK(e[1] == sub[1]);
        CHECK(e[2] == 1 - sub[0] - sub[1]);
    }
}

TEST_CASE("emitting cones") {
    auto one = emit_constraints(WeightTuple::of({1, 1}), Configuration(2, {{1, 2, 3}}));
    REQUIRE(one.cones.size() == 1);
    CHECK(one.cones[0].a1 == "x1");
    CHECK(one.cones[0].a2 == "x2");
    CHECK(one.cones[0].a3 == "x3");
    CHECK(render_text(one) == "x1 * x2 >= x3^2\n");

    Configuration ex(2, {{2, 6, 3}, {1, 3, 4}, {3, 4, 5}, {4, 5, 6}});
    auto doc = emit_constraints(WeightTuple::of({3, 8}), ex);
    CHECK(render_text(doc) == "x2 * x6 >= x3^2\nx1 * x3 >= x4^2\nx3 * x4 >= x5^2\nx4 * x5 >= x6^2\n");
    CHECK(doc.variables.size() == 6);

    Configuration four(4, {{6, 7, 5}, {1, 2, 6}, {3, 4, 7}});
    auto d4 = emit_constraints(WeightTuple::of({1, 1, 1, 1}), four);
    CHECK(d4.cones.size() == 3);

    auto named = emit_constraints(WeightTuple::of({1, 1, 1, 1}), four, {"a", "b", "c", "d", "g"});
    CHECK(render_text(named) == "aux1 * aux2 >= g^2\na * b >= aux1^2\nc * d >= aux2^2\n");
    CHECK_THROWS_AS(emit_constraints(WeightTuple::of({1, 1, 1, 1}), four, {"a"}), InvalidInput);

    CHECK_THROWS_AS(emit_constraints(WeightTuple::of({1, 2}), Configuration(2, {{1, 2, 3}})), RefuseToEmit);

    // cone count and variable coverage on heuristic output
    for (auto w : {WeightTuple::of({5, 4, 3}), WeightTuple::of({13, 1, 1}), WeightTuple::of({2, 1})}) {
        auto cfg = heuristic(w, Strategy{StrategyKind::GreedyCommonOne});
        auto d = emit_constraints(w, cfg);
        CHECK(static_cast<int>(d.cones.size()) == cfg.size());
        std::set<std::string> seen;
        for (const auto& c : d.cones) seen.insert({c.a1, c.a2, c.a3});
        CHECK(seen.size() == d.variables.size());
    }
}
