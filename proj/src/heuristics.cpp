#include "socrep/heuristics.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <optional>

namespace socrep {

std::string Strategy::name() const {
    switch (kind) {
        case StrategyKind::GreedyCommonOne: return "greedy-common-one";
        case StrategyKind::GreedyPowerTwo: return "greedy-power-two";
        case StrategyKind::TraversalCommonOne: return "traversal-common-one";
        case StrategyKind::TraversalPowerTwo: return "traversal-power-two";
    }
    return "unknown";
}

Strategy Strategy::parse(const std::string& text) {
    for (auto k : {StrategyKind::GreedyCommonOne, StrategyKind::GreedyPowerTwo, StrategyKind::TraversalCommonOne,
                   StrategyKind::TraversalPowerTwo}) {
        if (Strategy{k}.name() == text) return Strategy{k};
    }
    throw InvalidInput("unknown strategy '" + text + "'");
}

namespace {

struct Candidate {
    int i;
    int j;
    Integer gamma;
    int score;
};

int lowest(const Integer& v) { return v == 0 ? INT_MAX : *lowest_bit(v); }

// Admissible pairs over positive entries, lexicographic in (i, j), each with
// the greedy score of its strategy.
std::vector<Candidate> candidates(std::span<const Integer> s, bool power_two) {
    std::vector<int> pos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] > 0) pos.push_back(static_cast<int>(i));
    }
    std::vector<Candidate> out;
    if (power_two) {
        int md = INT_MAX;
        for (int i : pos) md = std::min(md, lowest(s[static_cast<std::size_t>(i)]));
        std::vector<int> low;
        for (int i : pos) {
            if (lowest(s[static_cast<std::size_t>(i)]) == md) low.push_back(i);
        }
        for (std::size_t a = 0; a < low.size(); ++a) {
            for (std::size_t b = a + 1; b < low.size(); ++b) {
                const Integer& x = s[static_cast<std::size_t>(low[a])];
                const Integer& y = s[static_cast<std::size_t>(low[b])];
                Integer diff = x > y ? Integer(x - y) : Integer(y - x);
                out.push_back({low[a], low[b], x < y ? x : y, lowest(diff)});
            }
        }
    } else {
        for (std::size_t a = 0; a < pos.size(); ++a) {
            for (std::size_t b = a + 1; b < pos.size(); ++b) {
                Integer common = s[static_cast<std::size_t>(pos[a])] & s[static_cast<std::size_t>(pos[b])];
                if (common == 0) continue;
                out.push_back({pos[a], pos[b], common, popcount(common)});
            }
        }
    }
    return out;
}

std::optional<Candidate> greedy_pick(std::span<const Integer> s, bool power_two) {
    auto cands = candidates(s, power_two);
    if (cands.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t k = 1; k < cands.size(); ++k) {
        if (cands[k].score > cands[best].score) best = k;
    }
    return cands[best];
}

PairChoice public_pick(std::span<const Integer> s, bool power_two) {
    int positive = 0;
    for (const auto& v : s) {
        if (v < 0) throw InvalidInput("negative entry");
        if (v > 0) ++positive;
    }
    if (positive < 2) throw InvalidInput("need at least two positive entries");
    auto c = greedy_pick(s, power_two);
    if (!c) throw InternalConsistency("no admissible pair");
    return {c->i + 1, c->j + 1, c->gamma};
}

}  // namespace

PairChoice select_greedy_common_one(std::span<const Integer> s) { return public_pick(s, false); }
PairChoice select_greedy_power_two(std::span<const Integer> s) { return public_pick(s, true); }

namespace {

// Working state: slot k is variable k+1. Slot m is the mean variable; later
// slots are auxiliaries in creation order.
struct State {
    std::vector<Integer> s;
    int t = 0;
    std::vector<Triple> trace;  // slot indices

    int push(const Integer& v) {
        s.push_back(v);
        return static_cast<int>(s.size()) - 1;
    }
    void add(int i, int j, int t_) { trace.push_back({std::min(i, j), std::max(i, j), t_}); }
};

enum class Outcome { Done, Progress, Generic };

Outcome deterministic_step(State& st) {
    Integer sh = 0;
    for (const auto& v : st.s) sh += v;
    if (sh < 2) throw InternalConsistency("residual exponent sum below 2");
    const int l = ceil_log2(sh);
    const Integer full = pow2(l);
    const Integer half = pow2(l - 1);
    const auto n = st.s.size();

    // equal pair, largest value first
    std::optional<std::pair<int, int>> eq;
    for (std::size_t i = 0; i < n; ++i) {
        if (st.s[i] == 0) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (st.s[j] == st.s[i] && (!eq || st.s[i] > st.s[static_cast<std::size_t>(eq->first)])) {
                eq = {static_cast<int>(i), static_cast<int>(j)};
            }
        }
    }
    if (eq) {
        auto [i, j] = *eq;
        if (st.s[static_cast<std::size_t>(i)] != half) {
            int y = st.push(2 * st.s[static_cast<std::size_t>(i)]);
            st.s[static_cast<std::size_t>(i)] = 0;
            st.s[static_cast<std::size_t>(j)] = 0;
            st.add(i, j, y);
            return Outcome::Progress;
        }
        st.add(i, j, st.t);
        return Outcome::Done;
    }

    // dominant entry
    int k = -1;
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(i) == st.t) continue;
        if (k < 0 || st.s[i] > st.s[static_cast<std::size_t>(k)]) k = static_cast<int>(i);
    }
    auto& sk = st.s[static_cast<std::size_t>(k)];
    if (2 * sk >= sh) {
        const int old_t = st.t;
        if (2 * sk == sh) {
            sk = 0;
        } else if (sk <= half) {
            st.s[static_cast<std::size_t>(old_t)] += 2 * sk - sh;
            sk = 0;
        } else if (sh < full) {
            st.s[static_cast<std::size_t>(old_t)] += full - sh;
            sk -= half;
        } else {
            sk -= half;
        }
        int y = st.push(0);
        st.add(k, y, old_t);
        st.t = y;
        return Outcome::Progress;
    }

    // unique entry of minimal lowest bit, small enough to fold with the target
    int md = INT_MAX;
    int argmin = -1;
    int ties = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (st.s[i] == 0) continue;
        int d = lowest(st.s[i]);
        if (d < md) {
            md = d;
            argmin = static_cast<int>(i);
            ties = 1;
        } else if (d == md) {
            ++ties;
        }
    }
    if (ties == 1 && argmin != st.t && st.s[static_cast<std::size_t>(argmin)] <= full - sh) {
        int y = st.push(2 * st.s[static_cast<std::size_t>(argmin)]);
        st.s[static_cast<std::size_t>(argmin)] = 0;
        st.add(argmin, st.t, y);
        return Outcome::Progress;
    }

    // pad the target up to the next power of two
    st.s[static_cast<std::size_t>(st.t)] += full - sh;
    const Integer st_val = st.s[static_cast<std::size_t>(st.t)];
    if (st_val > 0) {
        for (std::size_t i = 0; i < n; ++i) {
            if (static_cast<int>(i) != st.t && st.s[i] == st_val) {
                int y = st.push(2 * st_val);
                st.s[i] = 0;
                st.s[static_cast<std::size_t>(st.t)] = 0;
                st.add(static_cast<int>(i), st.t, y);
                return Outcome::Progress;
            }
        }
    }
    return Outcome::Generic;
}

void apply(State& st, const Candidate& c) {
    st.s[static_cast<std::size_t>(c.i)] -= c.gamma;
    st.s[static_cast<std::size_t>(c.j)] -= c.gamma;
    int y = st.push(2 * c.gamma);
    st.add(c.i, c.j, y);
}

void require_input(const WeightTuple& w) {
    if (w.m() < 2) throw InvalidInput("need at least two entries");
    for (const auto& v : w.entries()) {
        if (v < 1) throw InvalidInput("entries must be positive");
    }
    if (!w.normalized()) throw InvalidInput("tuple " + w.str() + " is not normalized (gcd > 1)");
}

State initial_state(const WeightTuple& w) {
    State st;
    st.s = w.entries();
    st.t = st.push(0);
    return st;
}

Configuration to_configuration(const WeightTuple& w, const State& st) {
    std::vector<Triple> triples;
    triples.reserve(st.trace.size());
    for (const auto& tr : st.trace) triples.push_back({tr.i + 1, tr.j + 1, tr.t + 1});
    Configuration raw(static_cast<int>(w.m()), std::move(triples));
    return raw.canonical();
}

int iteration_cap(const WeightTuple& w) {
    auto padded = padded_entries(w);
    const int l = ceil_log2(w.s_hat());
    int cap = static_cast<int>(w.m());
    int half_sum = 0;
    for (const auto& v : padded) {
        cap += popcount(v);
        half_sum += l - delta_or(v, l);
    }
    return cap + (half_sum + 1) / 2;
}

}  // namespace

HeuristicTrace heuristic_trace(const WeightTuple& w, Strategy strategy) {
    require_input(w);
    if (strategy.is_traversal()) throw InvalidInput("heuristic_trace takes a greedy strategy");
    const int cap = iteration_cap(w);
    State st = initial_state(w);
    HeuristicTrace out;
    while (true) {
        if (static_cast<int>(st.trace.size()) > cap) {
            throw InternalConsistency("heuristic exceeded its iteration bound on " + w.str());
        }
        auto r = deterministic_step(st);
        if (r == Outcome::Done) break;
        if (r == Outcome::Progress) {
            ++out.reductions;
            continue;
        }
        auto c = greedy_pick(st.s, strategy.is_power_two());
        if (!c) throw InternalConsistency("no admissible pair in " + w.str());
        apply(st, *c);
        ++out.generic_steps;
    }
    out.config = to_configuration(w, st);
    return out;
}

Configuration heuristic(const WeightTuple& w, Strategy strategy) {
    if (strategy.is_traversal()) return traversal(w, strategy).config;
    return heuristic_trace(w, strategy).config;
}

namespace {

struct BudgetHit {};

class Traverser {
public:
    Traverser(bool power_two, std::uint64_t budget) : power_two_(power_two), budget_(budget) {}

    int solve(const State& entry) {
        auto key = key_of(entry);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (++expansions_ > budget_) throw BudgetHit{};
        State st = entry;
        int count = 0;
        Outcome r;
        while ((r = deterministic_step(st)) == Outcome::Progress) ++count;
        if (r == Outcome::Done) {
            memo_[key] = count + 1;
            return count + 1;
        }
        const int floor = residual_floor(st);
        int best = INT_MAX;
        for (const auto& c : candidates(st.s, power_two_)) {
            State child = st;
            apply(child, c);
            best = std::min(best, 1 + solve(child));
            if (best <= floor) break;
        }
        if (best == INT_MAX) throw InternalConsistency("no admissible pair during traversal");
        memo_[key] = count + best;
        return count + best;
    }

    // Replays the search along memoized optimal choices.
    State rebuild(State st) {
        while (true) {
            const int want = memo_.at(key_of(st));
            int count = 0;
            Outcome r;
            while ((r = deterministic_step(st)) == Outcome::Progress) ++count;
            if (r == Outcome::Done) return st;
            bool moved = false;
            for (const auto& c : candidates(st.s, power_two_)) {
                State child = st;
                apply(child, c);
                auto it = memo_.find(key_of(child));
                if (it != memo_.end() && count + 1 + it->second == want) {
                    st = std::move(child);
                    moved = true;
                    break;
                }
            }
            if (!moved) throw InternalConsistency("traversal replay lost its path");
        }
    }

    std::uint64_t expansions() const { return expansions_; }

private:
    static std::vector<Integer> key_of(const State& st) {
        std::vector<Integer> key;
        for (std::size_t i = 0; i < st.s.size(); ++i) {
            if (static_cast<int>(i) != st.t && st.s[i] > 0) key.push_back(st.s[i]);
        }
        std::sort(key.begin(), key.end());
        key.push_back(-1);  // separator; target exponent follows
        key.push_back(st.s[static_cast<std::size_t>(st.t)]);
        return key;
    }

    // Lower bound on the triples still needed: the remaining system represents
    // prod_{i != t} x_i^{s_i} >= x_t^{S}, S the sum of those exponents.
    static int residual_floor(const State& st) {
        Integer sum = 0;
        Integer g = 0;
        int count = 0;
        for (std::size_t i = 0; i < st.s.size(); ++i) {
            if (static_cast<int>(i) == st.t || st.s[i] == 0) continue;
            sum += st.s[i];
            g = gcd(g, st.s[i]);
            ++count;
        }
        if (count == 0) return 1;
        return std::max({1, ceil_log2(Integer(sum / g)), count - 1});
    }

    bool power_two_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    std::map<std::vector<Integer>, int> memo_;
};

}  // namespace

TraversalResult traversal(const WeightTuple& w, Strategy strategy, std::uint64_t budget) {
    require_input(w);
    Strategy greedy{strategy.is_power_two() ? StrategyKind::GreedyPowerTwo : StrategyKind::GreedyCommonOne};
    auto fallback = heuristic_trace(w, greedy).config;
    if (budget < static_cast<std::uint64_t>(fallback.size())) {
        throw TraversalExhausted("traversal budget " + std::to_string(budget) + " is below the greedy path length",
                                 fallback);
    }
    Traverser tr(strategy.is_power_two(), budget);
    State root = initial_state(w);
    try {
        tr.solve(root);
    } catch (const BudgetHit&) {
        return {fallback, false, tr.expansions()};
    }
    auto config = to_configuration(w, tr.rebuild(root));
    if (config.size() > fallback.size()) throw InternalConsistency("traversal worse than its greedy path");
    return {config, true, tr.expansions()};
}

}  // namespace socrep
