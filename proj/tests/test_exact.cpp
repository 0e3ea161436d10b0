#include "doctest.h"

#include "sweep.hpp"
#include "optima3.hpp"
#include "socrep/errors.hpp"
#include "socrep/exact.hpp"
#include "socrep/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

using namespace socrep;

namespace {

// Naive check of the eight conditions on a list of pairs (t_k = m + k).
bool legitimate(int m, const std::vector<std::pair<int, int>>& c) {
    const int n = static_cast<int>(c.size());
    std::set<int> used;
    for (auto [i, j] : c) {
        used.insert(i);
        used.insert(j);
    }
    for (int v = 1; v <= m + n; ++v) {
        if (v != m + 1 && !used.count(v)) return false;
    }
    std::set<std::pair<int, int>> seen_pairs;
    std::set<std::set<int>> seen_sets;
    std::vector<int> tbar;
    int run = 0;
    for (int k = 1; k <= n; ++k) {
        auto [i, j] = c[static_cast<std::size_t>(k - 1)];
        if (!(i < j) || j > m + n) return false;
        if (i == m + k || j == m + k) return false;
        if (!seen_pairs.insert({i, j}).second) return false;
        if (!seen_sets.insert({i, j, m + k}).second) return false;
        run = std::max(run, j);
        tbar.push_back(run);
    }
    for (int k = 1; k <= n - 1; ++k) {
        if (tbar[static_cast<std::size_t>(k - 1)] < m + k + 1) return false;
    }
    if (n >= 2) {
        auto [i1, j1] = c[0];
        if (!((i1 <= m && j1 == m + 2) || (i1 == m + 2 && j1 == m + 3))) return false;
    }
    for (int k = 2; k <= n; ++k) {
        auto [i, j] = c[static_cast<std::size_t>(k - 1)];
        int t = tbar[static_cast<std::size_t>(k - 2)];
        if (!((i <= t && j <= t + 1) || (i == t + 1 && j == t + 2))) return false;
    }
    return true;
}

std::set<std::vector<std::pair<int, int>>> naive(int m, int n) {
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= m + n; ++i) {
        for (int j = i + 1; j <= m + n; ++j) all.push_back({i, j});
    }
    std::set<std::vector<std::pair<int, int>>> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<std::pair<int, int>> c;
        for (auto k : idx) c.push_back(all[k]);
        if (legitimate(m, c)) out.insert(c);
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == all.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

std::vector<std::pair<int, int>> as_pairs(std::span<const std::uint16_t> p) {
    std::vector<std::pair<int, int>> c;
    for (std::size_t k = 0; 2 * k < p.size(); ++k) c.push_back({p[2 * k], p[2 * k + 1]});
    return c;
}

const Configuration kExample38(2, {{2, 6, 3}, {1, 3, 4}, {3, 4, 5}, {4, 5, 6}});

}  // namespace

TEST_CASE("enumeration matches a naive filter") {
    for (auto [m, n] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {4, 3}, {4, 4}}) {
        auto expect = naive(m, n);
        std::set<std::vector<std::pair<int, int>>> got;
        auto count = enumerate_pairs(m, n, [&](std::span<const std::uint16_t> p) {
            got.insert(as_pairs(p));
            return true;
        });
        CAPTURE(m);
        CAPTURE(n);
        CHECK(count == expect.size());
        CHECK(got == expect);
        if (auto known = tabulated_count(m, n)) CHECK(count == *known);
    }
}

TEST_CASE("tabulated counts up to five triples") {
    CHECK(enumerate_pairs(3, 2, [](auto) { return true; }) == 3);
    CHECK(enumerate_pairs(3, 3, [](auto) { return true; }) == 48);
    CHECK(enumerate_pairs(3, 4, [](auto) { return true; }) == 828);
    CHECK(enumerate_pairs(3, 5, [](auto) { return true; }) == 17178);
    CHECK(enumerate_pairs(4, 3, [](auto) { return true; }) == 18);
    CHECK(enumerate_pairs(4, 4, [](auto) { return true; }) == 588);
    CHECK(enumerate_pairs(4, 5, [](auto) { return true; }) == 17016);
    int seen = 0;
    enumerate_configs(3, 3, [&](const Configuration& c) {
        CHECK(c.is_canonical());
        return ++seen < 5;
    });
    CHECK(seen == 5);
    CHECK_THROWS_AS(enumerate_pairs(1, 3, [](auto) { return true; }), InvalidInput);
}

TEST_CASE("feasibility examples") {
    CHECK(feasible(kExample38, WeightTuple::of({3, 8})).feasible);
    auto one = feasible(Configuration(2, {{1, 2, 3}}), WeightTuple::of({1, 1}), FeasibilityMode::Plain, true);
    REQUIRE(one.feasible);
    REQUIRE(one.witness.size() == 1);
    CHECK(one.witness[0] == Rational(1));
    CHECK_FALSE(feasible(Configuration(2, {{1, 2, 3}}), WeightTuple::of({1, 2})).feasible);
    CHECK_THROWS_AS(feasible(Configuration(2, {{1, 2, 3}}), WeightTuple::of({1, 1, 1})), InvalidInput);

    // the witness solves the weight system
    auto w = WeightTuple::of({3, 8});
    auto r = feasible(kExample38, w, FeasibilityMode::Strict, true);
    REQUIRE(r.feasible);
    std::vector<Rational> load(7, Rational(0));
    for (std::size_t k = 0; k < 4; ++k) {
        load[static_cast<std::size_t>(kExample38.triples()[k].i)] += r.witness[k];
        load[static_cast<std::size_t>(kExample38.triples()[k].j)] += r.witness[k];
    }
    CHECK(load[1] == 3);
    CHECK(load[2] == 8);
    CHECK(load[3] == 2 * r.witness[0] - 11);
    for (int v = 4; v <= 6; ++v) CHECK(load[static_cast<std::size_t>(v)] == 2 * r.witness[static_cast<std::size_t>(v - 3)]);

    // a non-canonical but valid configuration goes through the general path
    Configuration shuffled(2, {{1, 3, 4}, {2, 6, 3}, {3, 4, 5}, {4, 5, 6}});
    CHECK(feasible(shuffled, w).feasible);

    // entries too large for the fast path
    auto big = WeightTuple::from_strings({"1099511627777", "1099511627775"});
    CHECK_FALSE(feasible(Configuration(2, {{1, 2, 3}}), big).feasible);
}

TEST_CASE("feasibility agrees with reconstruction") {
    long disagreements = 0;
    long checked = 0;
    for (int m = 2; m <= 3; ++m) {
        for_each_normalized(m, 9, [&](const WeightTuple& w) {
            for (int n = 1; n <= (m == 2 ? 4 : 3); ++n) {
                enumerate_configs(m, n, [&](const Configuration& c) {
                    bool a = feasible(c, w).feasible;
                    bool b = reconstruct(c, w).valid();
                    if (a != b) ++disagreements;
                    ++checked;
                    return true;
                });
            }
        });
    }
    CHECK(checked > 10000);
    CHECK(disagreements == 0);
}

TEST_CASE("catalog files") {
    auto dir = std::filesystem::temp_directory_path() / "socrep_catalog_test";
    std::filesystem::create_directories(dir);
    auto path = dir / catalog_file_name(3, 4);
    auto built = build_catalog(3, 4);
    CHECK(built.count() == 828);
    catalog_store(built, path);
    auto back = catalog_load(path);
    CHECK(back.count() == 828);
    CHECK(back.pairs == built.pairs);

    auto p32 = dir / catalog_file_name(3, 2);
    catalog_store(build_catalog(3, 2), p32);
    CHECK(catalog_load(p32).count() == 3);

    // truncation
    auto trunc = dir / "trunc.bin";
    std::filesystem::copy_file(path, trunc, std::filesystem::copy_options::overwrite_existing);
    std::filesystem::resize_file(trunc, std::filesystem::file_size(trunc) - 5);
    CHECK_THROWS_AS(catalog_load(trunc), CorruptCatalog);
    std::filesystem::resize_file(trunc, 10);
    CHECK_THROWS_AS(catalog_load(trunc), CorruptCatalog);

    // flipped byte in the body
    auto flip = dir / "flip.bin";
    std::filesystem::copy_file(path, flip, std::filesystem::copy_options::overwrite_existing);
    {
        std::fstream f(flip, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(40);
        char c = 0x7f;
        f.write(&c, 1);
    }
    CHECK_THROWS_AS(catalog_load(flip), CorruptCatalog);

    // consistent file whose count contradicts the known count
    Catalog fake = build_catalog(3, 3);
    fake.pairs.resize(fake.pairs.size() - 6);
    auto fake_path = dir / "fake.bin";
    catalog_store(fake, fake_path);
    CHECK_THROWS_AS(catalog_load(fake_path), CorruptCatalog);
    std::filesystem::remove_all(dir);
}

TEST_CASE("brute force examples") {
    CHECK(brute_force(WeightTuple::of({1, 1, 1})).config.size() == 3);
    CHECK(brute_force(WeightTuple::of({5, 4, 3})).config.size() == 4);
    CHECK(brute_force(WeightTuple::of({7, 5, 3})).config.size() == 6);
    CHECK(brute_force(WeightTuple::of({7, 7, 1})).config.size() == 5);
    CHECK(brute_force(WeightTuple::of({11, 2, 1})).config.size() == 4);
    auto one = brute_force(WeightTuple::of({1, 1}));
    CHECK(one.config == Configuration(2, {{1, 2, 3}}));
    CHECK_THROWS_AS(brute_force(WeightTuple::of({7, 5, 3}), {.cap = 5}), SearchLimit);
    CHECK_THROWS_AS(brute_force(WeightTuple::of({2, 2})), InvalidInput);

    auto dir = std::filesystem::temp_directory_path() / "socrep_bf_catalog";
    std::filesystem::create_directories(dir);
    BruteForceOptions with_dir;
    with_dir.catalog_dir = dir;
    CHECK(brute_force(WeightTuple::of({6, 5, 3}), with_dir).config.size() == 4);
    CHECK(std::filesystem::exists(dir / catalog_file_name(3, 4)));
    std::filesystem::remove_all(dir);
}

TEST_CASE("brute force on the bivariate family") {
    for (long p = 2; p <= 64; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto w = WeightTuple::of({q, p - q});
            auto r = brute_force(w);
            REQUIRE(r.config.size() == ceil_log2(Integer(p)));
            REQUIRE(r.lower == ceil_log2(Integer(p)));
            REQUIRE(reconstruct(r.config, w).valid());
        }
    }
}

TEST_CASE("brute force: three-variable optima, power-of-two sums and permutations") {
    for (const auto& e : kOptima3) {
        auto w = WeightTuple::of({e.s[0], e.s[1], e.s[2]});
        auto r = brute_force(w);
        CAPTURE(w.str());
        REQUIRE(r.config.size() == e.size);
        REQUIRE(reconstruct(r.config, w).valid());
        auto rev = WeightTuple::of({e.s[2], e.s[0], e.s[1]});
        REQUIRE(brute_force(rev).config.size() == e.size);
    }
    for (long total : {4L, 8L, 16L}) {
        for (long a = 1; a < total; ++a) {
            for (long b = 1; a + b < total; ++b) {
                long c = total - a - b;
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                REQUIRE(brute_force(WeightTuple::of({a, b, c})).config.size() == ceil_log2(Integer(total)));
            }
        }
    }
}
