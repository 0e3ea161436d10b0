#include "socrep/exact.hpp"

#include "socrep/errors.hpp"
#include "socrep/heuristics.hpp"
#include "socrep/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>

namespace socrep {

namespace {

struct Enumerator {
    int m;
    int n;
    int total;  // m + n
    const PairVisitor& visit;
    std::vector<std::uint16_t> pairs;
    std::vector<std::uint64_t> pair_keys, set_keys;  // per placed triple
    std::vector<int> uses;  // operand occurrences per variable
    int uncovered = 0;      // variables other than m+1 not used as an operand yet
    std::uint64_t emitted = 0;
    bool stopped = false;

    // Conditions checked on the way down: operands differ from the defined
    // variable, no repeated pair, no repeated triple as a set, the prefix
    // maximum of j stays ahead of the defined variable, and each pair either
    // reuses seen indices or opens the next two.
    bool admissible(int k, int i, int j) const {
        const int tgt = m + k;
        if (j > total || i == tgt || j == tgt) return false;
        const std::uint64_t pair = key(i, j, 0);
        const std::uint64_t set = sorted_key(i, j, tgt);
        for (int q = 0; q < k - 1; ++q) {
            if (pair_keys[static_cast<std::size_t>(q)] == pair || set_keys[static_cast<std::size_t>(q)] == set) return false;
        }
        return true;
    }

    static std::uint64_t key(int a, int b, int c) {
        return (static_cast<std::uint64_t>(a) << 32) | (static_cast<std::uint64_t>(b) << 16) | static_cast<std::uint64_t>(c);
    }
    static std::uint64_t sorted_key(int a, int b, int c) {
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return key(a, b, c);
    }

    void step(int k, int t_prev) {
        if (stopped) return;
        if (k > n) {
            if (uncovered == 0) {
                ++emitted;
                if (!visit(pairs)) stopped = true;
            }
            return;
        }
        auto attempt = [&](int i, int j) {
            if (stopped || !admissible(k, i, j)) return;
            const int t = std::max(t_prev, j);
            if (k <= n - 1 && t < m + k + 1) return;
            const int left = uncovered - (uses[i] == 0 && i != m + 1) - (uses[j] == 0 && j != m + 1);
            // each later triple covers at most two more variables
            if (left > 2 * (n - k)) return;
            ++uses[i];
            ++uses[j];
            uncovered = left;
            pairs.push_back(static_cast<std::uint16_t>(i));
            pairs.push_back(static_cast<std::uint16_t>(j));
            pair_keys.push_back(key(i, j, 0));
            set_keys.push_back(sorted_key(i, j, m + k));
            step(k + 1, t);
            pairs.pop_back();
            pairs.pop_back();
            pair_keys.pop_back();
            set_keys.pop_back();
            --uses[i];
            --uses[j];
            uncovered = left + (uses[i] == 0 && i != m + 1) + (uses[j] == 0 && j != m + 1);
        };
        if (k == 1) {
            if (n == 1) {
                for (int i = 1; i <= total; ++i) {
                    for (int j = i + 1; j <= total; ++j) attempt(i, j);
                }
            } else {
                for (int i = 1; i <= m; ++i) attempt(i, m + 2);
                attempt(m + 2, m + 3);
            }
            return;
        }
        for (int j = 2; j <= std::min(t_prev + 1, total); ++j) {
            for (int i = 1; i < j && i <= t_prev; ++i) attempt(i, j);
        }
        if (t_prev + 2 <= total) attempt(t_prev + 1, t_prev + 2);
    }
};

}  // namespace

std::uint64_t enumerate_pairs(int m, int n, const PairVisitor& visit) {
    if (m < 2 || n < 1) throw InvalidInput("enumeration needs m >= 2 and n >= 1");
    if (m + n > 65535) throw InvalidInput("configuration too large");
    Enumerator e{m, n, m + n, visit, {}, {}, {}, std::vector<int>(static_cast<std::size_t>(m + n + 1), 0), m + n - 1, 0, false};
    e.pairs.reserve(static_cast<std::size_t>(2 * n));
    e.step(1, 0);
    return e.emitted;
}

Configuration configuration_from_pairs(int m, std::span<const std::uint16_t> pairs) {
    std::vector<Triple> triples;
    for (std::size_t k = 0; 2 * k < pairs.size(); ++k) {
        triples.push_back({pairs[2 * k], pairs[2 * k + 1], m + 1 + static_cast<int>(k)});
    }
    return Configuration(m, std::move(triples));
}

std::uint64_t enumerate_configs(int m, int n, const std::function<bool(const Configuration&)>& visit) {
    return enumerate_pairs(m, n, [&](std::span<const std::uint16_t> p) { return visit(configuration_from_pairs(m, p)); });
}

std::optional<std::uint64_t> tabulated_count(int m, int n) {
    static const std::map<std::pair<int, int>, std::uint64_t> table{
        {{3, 2}, 3},      {{3, 3}, 48},     {{3, 4}, 828},    {{3, 5}, 17178}, {{3, 6}, 419559},
        {{4, 3}, 18},     {{4, 4}, 588},    {{4, 5}, 17016},  {{4, 6}, 514524},
    };
    auto it = table.find({m, n});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

// Exact solve of a small square integer system by fraction-free elimination.
// On success y = det * x and det != 0. Returns false on overflow or singularity.
bool bareiss_solve(std::vector<std::int64_t>& a, int n, std::int64_t& det, std::vector<std::int64_t>& y) {
    const int w = n + 1;
    auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r * w + c)]; };
    std::int64_t prev = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return false;
        if (p != k) {
            for (int c = 0; c < w; ++c) std::swap(at(p, c), at(k, c));
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < w; ++j) {
                std::int64_t x, z, d;
                if (__builtin_mul_overflow(at(i, j), at(k, k), &x)) return false;
                if (__builtin_mul_overflow(at(i, k), at(k, j), &z)) return false;
                if (__builtin_sub_overflow(x, z, &d)) return false;
                at(i, j) = d / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    det = at(n - 1, n - 1);
    y.assign(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        std::int64_t acc;
        if (__builtin_mul_overflow(det, at(i, n), &acc)) return false;
        for (int j = i + 1; j < n; ++j) {
            std::int64_t t;
            if (__builtin_mul_overflow(at(i, j), y[static_cast<std::size_t>(j)], &t)) return false;
            if (__builtin_sub_overflow(acc, t, &acc)) return false;
        }
        if (acc % at(i, i) != 0) return false;
        y[static_cast<std::size_t>(i)] = acc / at(i, i);
    }
    return true;
}

// General rank test of the full weight system over the rationals.
std::optional<std::vector<Rational>> solve_general(const Configuration& cfg, const std::vector<Integer>& s,
                                                   const Integer& s_hat) {
    const int m = cfg.m();
    const int n = cfg.size();
    const int rows = m + n;
    std::vector<int> definer(static_cast<std::size_t>(m + n + 1), -1);
    for (int k = 0; k < n; ++k) definer[static_cast<std::size_t>(cfg.triples()[static_cast<std::size_t>(k)].t)] = k;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
    for (int k = 0; k < n; ++k) {
        const auto& tr = cfg.triples()[static_cast<std::size_t>(k)];
        a[static_cast<std::size_t>(tr.i - 1)][static_cast<std::size_t>(k)] += 1;
        a[static_cast<std::size_t>(tr.j - 1)][static_cast<std::size_t>(k)] += 1;
    }
    for (int v = 1; v <= rows; ++v) {
        auto& row = a[static_cast<std::size_t>(v - 1)];
        if (v <= m) {
            row[static_cast<std::size_t>(n)] = Rational(s[static_cast<std::size_t>(v - 1)]);
        } else {
            row[static_cast<std::size_t>(definer[static_cast<std::size_t>(v)])] -= 2;
            if (v == m + 1) row[static_cast<std::size_t>(n)] = -Rational(s_hat);
        }
    }
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < n && r < rows; ++c) {
        int p = r;
        while (p < rows && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        Rational inv = 1 / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (auto& x : a[static_cast<std::size_t>(r)]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j <= n; ++j) {
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i) {
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] != 0) return std::nullopt;
    }
    std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[static_cast<std::size_t>(pivots[i])] = a[i][static_cast<std::size_t>(n)];
    }
    return x;
}

// Floating-point screen: false only when the base loads miss s by far more
// than rounding error could explain. Anything else is left to the exact path.
bool maybe_feasible(int m, int n, std::span<const std::uint16_t> pairs, std::span<const std::int64_t> s,
                    std::int64_t s_hat) {
    thread_local std::vector<double> a;
    const int w = n + 1;
    a.assign(static_cast<std::size_t>(n * w), 0.0);
    auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r * w + c)]; };
    for (int k = 0; k < n; ++k) {
        at(k, k) -= 2;
        for (int v : {pairs[static_cast<std::size_t>(2 * k)], pairs[static_cast<std::size_t>(2 * k + 1)]}) {
            if (v > m) at(v - m - 1, k) += 1;
        }
    }
    at(0, n) = -static_cast<double>(s_hat);
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r) {
            if (std::abs(at(r, c)) > std::abs(at(p, c))) p = r;
        }
        if (std::abs(at(p, c)) < 1e-6) return true;
        if (p != c) {
            for (int j = c; j < w; ++j) std::swap(at(p, j), at(c, j));
        }
        const double inv = 1.0 / at(c, c);
        for (int r = c + 1; r < n; ++r) {
            const double f = at(r, c) * inv;
            if (f == 0.0) continue;
            for (int j = c; j < w; ++j) at(r, j) -= f * at(c, j);
        }
    }
    thread_local std::vector<double> x, load;
    x.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double acc = at(i, n);
        for (int j = i + 1; j < n; ++j) acc -= at(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = acc / at(i, i);
    }
    load.assign(static_cast<std::size_t>(m), 0.0);
    for (int k = 0; k < n; ++k) {
        for (int v : {pairs[static_cast<std::size_t>(2 * k)], pairs[static_cast<std::size_t>(2 * k + 1)]}) {
            if (v <= m) load[static_cast<std::size_t>(v - 1)] += x[static_cast<std::size_t>(k)];
        }
    }
    const double tol = 1e-6 * static_cast<double>(s_hat);
    for (int v = 0; v < m; ++v) {
        if (std::abs(load[static_cast<std::size_t>(v)] - static_cast<double>(s[static_cast<std::size_t>(v)])) > tol) return false;
    }
    return true;
}

// Fast path shared by both entry points. Returns nullopt when it cannot decide.
std::optional<bool> feasible_fast(int m, int n, std::span<const std::uint16_t> pairs, std::span<const std::int64_t> s,
                                  std::int64_t s_hat, std::int64_t* det_out = nullptr,
                                  std::vector<std::int64_t>* y_out = nullptr) {
    // Auxiliary rows only: column k of C^T holds triple k's operands.
    thread_local std::vector<std::int64_t> a, y, load;
    a.assign(static_cast<std::size_t>(n * (n + 1)), 0);
    auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r * (n + 1) + c)]; };
    for (int k = 0; k < n; ++k) {
        at(k, k) -= 2;
        for (int v : {pairs[static_cast<std::size_t>(2 * k)], pairs[static_cast<std::size_t>(2 * k + 1)]}) {
            if (v > m) at(v - m - 1, k) += 1;
        }
    }
    at(0, n) = -s_hat;
    std::int64_t det = 0;
    if (!bareiss_solve(a, n, det, y)) return std::nullopt;
    load.assign(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < n; ++k) {
        for (int v : {pairs[static_cast<std::size_t>(2 * k)], pairs[static_cast<std::size_t>(2 * k + 1)]}) {
            if (v <= m && __builtin_add_overflow(load[static_cast<std::size_t>(v - 1)], y[static_cast<std::size_t>(k)],
                                                 &load[static_cast<std::size_t>(v - 1)])) {
                return std::nullopt;
            }
        }
    }
    for (int v = 0; v < m; ++v) {
        std::int64_t want;
        if (__builtin_mul_overflow(det, s[static_cast<std::size_t>(v)], &want)) return std::nullopt;
        if (load[static_cast<std::size_t>(v)] != want) return false;
    }
    if (det_out) *det_out = det;
    if (y_out) *y_out = y;
    return true;
}

}  // namespace

bool feasible_pairs(int m, std::span<const std::uint16_t> pairs, std::span<const std::int64_t> s) {
    const int n = static_cast<int>(pairs.size() / 2);
    std::int64_t s_hat = 0;
    for (auto v : s) s_hat += v;
    if (n <= 24 && s_hat < (std::int64_t(1) << 40) && !maybe_feasible(m, n, pairs, s, s_hat)) return false;
    if (auto fast = feasible_fast(m, n, pairs, s, s_hat)) return *fast;
    std::vector<Integer> big(s.begin(), s.end());
    return solve_general(configuration_from_pairs(m, pairs), big, Integer(s_hat)).has_value();
}

FeasibilityResult feasible(const Configuration& cfg, const WeightTuple& w, FeasibilityMode mode, bool want_witness) {
    if (cfg.m() != static_cast<int>(w.m())) throw InvalidInput("dimension mismatch between configuration and tuple");
    cfg.validate();
    FeasibilityResult out;
    std::optional<bool> fast;
    std::int64_t det = 0;
    std::vector<std::int64_t> y;
    if (cfg.is_canonical() && w.s_hat() < (Integer(1) << 40)) {
        std::vector<std::uint16_t> pairs;
        for (const auto& tr : cfg.triples()) {
            pairs.push_back(static_cast<std::uint16_t>(tr.i));
            pairs.push_back(static_cast<std::uint16_t>(tr.j));
        }
        std::vector<std::int64_t> s;
        for (const auto& v : w.entries()) s.push_back(v.convert_to<std::int64_t>());
        fast = feasible_fast(cfg.m(), cfg.size(), pairs, s, w.s_hat().convert_to<std::int64_t>(), &det, &y);
    }
    if (fast && !*fast) return out;
    if (fast && !want_witness) {
        out.feasible = true;
    } else if (fast) {
        out.feasible = true;
        for (auto v : y) out.witness.push_back(Rational(Integer(v), Integer(det)));
    } else {
        auto sol = solve_general(cfg, w.entries(), w.s_hat());
        if (!sol) return out;
        out.feasible = true;
        if (want_witness) out.witness = std::move(*sol);
    }
    if (mode == FeasibilityMode::Strict && !reconstruct(cfg, w).valid()) {
        out.feasible = false;
        out.witness.clear();
    }
    return out;
}

Catalog build_catalog(int m, int n) {
    Catalog c{m, n, {}};
    enumerate_pairs(m, n, [&](std::span<const std::uint16_t> p) {
        c.pairs.insert(c.pairs.end(), p.begin(), p.end());
        return true;
    });
    return c;
}

const Catalog* cached_catalog(int m, int n, std::uint64_t limit) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Catalog>> cache;
    static std::map<std::pair<int, int>, std::uint64_t> too_big;  // largest limit that overflowed
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{m, n}];
    if (slot) return slot->count() <= limit ? slot.get() : nullptr;
    if (auto it = too_big.find({m, n}); it != too_big.end() && limit <= it->second) return nullptr;
    if (auto known = tabulated_count(m, n); known && *known > limit) return nullptr;
    Catalog c{m, n, {}};
    std::uint64_t seen = 0;
    enumerate_pairs(m, n, [&](std::span<const std::uint16_t> p) {
        if (++seen > limit) return false;
        c.pairs.insert(c.pairs.end(), p.begin(), p.end());
        return true;
    });
    if (seen > limit) {
        too_big[{m, n}] = std::max(too_big[{m, n}], limit);
        return nullptr;
    }
    slot = std::make_unique<Catalog>(std::move(c));
    return slot.get();
}

namespace {

constexpr char kMagic[4] = {'T', 'M', 'N', '1'};

std::uint64_t fnv1a(const std::vector<unsigned char>& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<unsigned char>(v >> (8 * k)));
}

std::uint64_t get_u64(const std::vector<unsigned char>& in, std::size_t at) {
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(in[at + static_cast<std::size_t>(k)]) << (8 * k);
    return v;
}

}  // namespace

std::string catalog_file_name(int m, int n) {
    return "tmn_" + std::to_string(m) + "_" + std::to_string(n) + ".bin";
}

void catalog_store(const Catalog& catalog, const std::filesystem::path& path) {
    std::vector<unsigned char> bytes(kMagic, kMagic + 4);
    put_u64(bytes, static_cast<std::uint64_t>(catalog.m));
    put_u64(bytes, static_cast<std::uint64_t>(catalog.n));
    put_u64(bytes, catalog.count());
    for (auto v : catalog.pairs) {
        bytes.push_back(static_cast<unsigned char>(v & 0xff));
        bytes.push_back(static_cast<unsigned char>(v >> 8));
    }
    put_u64(bytes, fnv1a(bytes));
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidInput("cannot write catalog " + path.string());
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw InvalidInput("failed writing catalog " + path.string());
}

Catalog catalog_load(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open catalog " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    const std::size_t header = 4 + 3 * 8;
    if (bytes.size() < header + 8) throw CorruptCatalog("catalog truncated: " + path.string());
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw CorruptCatalog("bad catalog magic: " + path.string());
    const std::uint64_t m = get_u64(bytes, 4);
    const std::uint64_t n = get_u64(bytes, 12);
    const std::uint64_t count = get_u64(bytes, 20);
    if (m < 2 || n < 1 || m + n > 65535) throw CorruptCatalog("bad catalog header: " + path.string());
    const std::uint64_t body = count * 2 * n * 2;
    if (count > (bytes.size() / (4 * n)) || bytes.size() != header + body + 8) {
        throw CorruptCatalog("catalog truncated or oversized: " + path.string());
    }
    std::vector<unsigned char> covered(bytes.begin(), bytes.end() - 8);
    if (fnv1a(covered) != get_u64(bytes, bytes.size() - 8)) throw CorruptCatalog("catalog checksum mismatch: " + path.string());
    if (auto known = tabulated_count(static_cast<int>(m), static_cast<int>(n)); known && *known != count) {
        throw CorruptCatalog("catalog count " + std::to_string(count) + " contradicts the known value " +
                             std::to_string(*known));
    }
    Catalog c{static_cast<int>(m), static_cast<int>(n), {}};
    c.pairs.resize(static_cast<std::size_t>(count * 2 * n));
    for (std::size_t k = 0; k < c.pairs.size(); ++k) {
        c.pairs[k] = static_cast<std::uint16_t>(bytes[header + 2 * k] | (bytes[header + 2 * k + 1] << 8));
    }
    return c;
}

BruteForceResult brute_force(const WeightTuple& w, const BruteForceOptions& options) {
    if (w.m() < 2) throw InvalidInput("need at least two entries");
    for (const auto& v : w.entries()) {
        if (v < 1) throw InvalidInput("entries must be positive");
    }
    if (!w.normalized()) throw InvalidInput("tuple " + w.str() + " is not normalized (gcd > 1)");
    const int m = static_cast<int>(w.m());
    BruteForceResult out;
    out.lower = lower_bound(w);
    out.heuristic_upper = std::min(heuristic(w, Strategy{StrategyKind::GreedyPowerTwo}).size(),
                                   heuristic(w, Strategy{StrategyKind::GreedyCommonOne}).size());

    std::vector<std::int64_t> s;
    const bool small = w.s_hat() < (Integer(1) << 40);
    if (small) {
        for (const auto& v : w.entries()) s.push_back(v.convert_to<std::int64_t>());
    }
    auto test = [&](std::span<const std::uint16_t> pairs) {
        ++out.tested;
        if (small) return feasible_pairs(m, pairs, s);
        return feasible(configuration_from_pairs(m, pairs), w).feasible;
    };

    for (int n = out.lower; n <= out.heuristic_upper; ++n) {
        if (n > options.cap) {
            throw SearchLimit("size cap " + std::to_string(options.cap) + " reached for " + w.str() + "; optimum lies in [" +
                              std::to_string(n) + ", " + std::to_string(out.heuristic_upper) + "]");
        }
        std::optional<std::vector<std::uint16_t>> hit;
        auto scan_catalog = [&](const Catalog& cat) {
            for (std::uint64_t k = 0; k < cat.count(); ++k) {
                if (test(cat.at(k))) {
                    auto p = cat.at(k);
                    hit = std::vector<std::uint16_t>(p.begin(), p.end());
                    return;
                }
            }
        };
        const Catalog* cached = nullptr;
        if (options.catalog_dir) {
            auto path = *options.catalog_dir / catalog_file_name(m, n);
            if (!std::filesystem::exists(path)) catalog_store(build_catalog(m, n), path);
            scan_catalog(catalog_load(path));
        } else if (options.cache_limit > 0 && (cached = cached_catalog(m, n, options.cache_limit))) {
            scan_catalog(*cached);
        } else {
            enumerate_pairs(m, n, [&](std::span<const std::uint16_t> p) {
                if (!test(p)) return true;
                hit = std::vector<std::uint16_t>(p.begin(), p.end());
                return false;
            });
        }
        if (hit) {
            out.config = configuration_from_pairs(m, *hit);
            return out;
        }
    }
    throw InternalConsistency("no feasible configuration up to the heuristic size for " + w.str());
}

}  // namespace socrep
