#pragma once

// Recursive pairing heuristic with deterministic reductions, and its
// branching (traversal) variants.

#include "socrep/configuration.hpp"
#include "socrep/core.hpp"
#include "socrep/errors.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace socrep {

enum class StrategyKind { GreedyCommonOne, GreedyPowerTwo, TraversalCommonOne, TraversalPowerTwo };

struct Strategy {
    StrategyKind kind = StrategyKind::GreedyPowerTwo;

    bool is_traversal() const {
        return kind == StrategyKind::TraversalCommonOne || kind == StrategyKind::TraversalPowerTwo;
    }
    bool is_power_two() const { return kind == StrategyKind::GreedyPowerTwo || kind == StrategyKind::TraversalPowerTwo; }
    /// Ties are always broken lexicographically on (i, j).
    static constexpr const char* tie_break = "lexicographic";

    std::string name() const;
    /// Accepts greedy-common-one, greedy-power-two, traversal-common-one, traversal-power-two.
    static Strategy parse(const std::string& text);
};

/// 1-based pair and the amount removed from both entries.
struct PairChoice {
    int i = 0;
    int j = 0;
    Integer gamma;
};

/// Pair with the most common binary digits; gamma is their common part.
PairChoice select_greedy_common_one(std::span<const Integer> s);
/// Among entries of minimal lowest-bit, the pair whose difference has the
/// highest lowest-bit (equal pairs first); gamma = min.
PairChoice select_greedy_power_two(std::span<const Integer> s);

struct HeuristicTrace {
    Configuration config;
    int generic_steps = 0;
    int reductions = 0;
};

HeuristicTrace heuristic_trace(const WeightTuple& w, Strategy strategy);

/// Canonical configuration. Traversal kinds run `traversal` with the default budget.
Configuration heuristic(const WeightTuple& w, Strategy strategy);

struct TraversalResult {
    Configuration config;
    bool exhaustive = true;
    std::uint64_t expansions = 0;
};

class TraversalExhausted : public SearchLimit {
public:
    TraversalExhausted(const std::string& what, Configuration fallback)
        : SearchLimit(what), fallback_(std::move(fallback)) {}
    const Configuration& fallback() const { return fallback_; }

private:
    Configuration fallback_;
};

inline constexpr std::uint64_t kDefaultTraversalBudget = 1000000;

/// Branches over every admissible pair at each generic step. Throws
/// TraversalExhausted (a SearchLimit) when the budget is too small to finish
/// even the greedy path.
TraversalResult traversal(const WeightTuple& w, Strategy strategy, std::uint64_t budget = kDefaultTraversalBudget);

}  // namespace socrep
