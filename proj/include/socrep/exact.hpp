#pragma once

// Optimal search: enumeration of canonical configurations of a given size,
// the exact rational feasibility test, brute-force minimisation and on-disk
// catalogs of configuration sets.

#include "socrep/configuration.hpp"
#include "socrep/core.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace socrep {

/// Visitor over the operand pairs (i_1, j_1, ..., i_n, j_n) of one configuration,
/// with t_k = m + k implied. Return false to stop.
using PairVisitor = std::function<bool(std::span<const std::uint16_t>)>;

/// Emits every canonical configuration with m bases and n triples, in a fixed
/// lexicographic order. Returns the number emitted.
std::uint64_t enumerate_pairs(int m, int n, const PairVisitor& visit);

/// Same stream as full Configuration objects.
std::uint64_t enumerate_configs(int m, int n, const std::function<bool(const Configuration&)>& visit);

/// Tabulated sizes of the configuration sets, when known.
std::optional<std::uint64_t> tabulated_count(int m, int n);

Configuration configuration_from_pairs(int m, std::span<const std::uint16_t> pairs);

enum class FeasibilityMode {
    Plain,   // a rational solution of the weight system exists
    Strict,  // additionally the reconstruction is valid
};

struct FeasibilityResult {
    bool feasible = false;
    /// One rational solution (gamma_1..gamma_n) when feasible and requested.
    std::vector<Rational> witness;
};

/// Rational consistency of: per base k, the gammas of triples using x_k sum to
/// s_k; for the mean, they sum to 2 gamma_1 - s_hat; for auxiliary m+k, to 2 gamma_k.
/// Requires a canonical configuration.
FeasibilityResult feasible(const Configuration& cfg, const WeightTuple& w, FeasibilityMode mode = FeasibilityMode::Plain,
                           bool want_witness = false);

/// Fast plain test on raw pairs; entries of s must fit in 62 bits.
bool feasible_pairs(int m, std::span<const std::uint16_t> pairs, std::span<const std::int64_t> s);

/// Compact in-memory configuration set.
struct Catalog {
    int m = 0;
    int n = 0;
    std::vector<std::uint16_t> pairs;  // count * 2n entries

    std::uint64_t count() const { return n == 0 ? 0 : pairs.size() / (2 * static_cast<std::size_t>(n)); }
    std::span<const std::uint16_t> at(std::uint64_t k) const {
        return {pairs.data() + k * 2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n)};
    }
};

Catalog build_catalog(int m, int n);
/// Process-wide cache, built on first use; thread-safe.
/// Null when the set has more than `limit` configurations (remembered).
const Catalog* cached_catalog(int m, int n, std::uint64_t limit = 2000000);

void catalog_store(const Catalog& catalog, const std::filesystem::path& path);
/// Throws CorruptCatalog on a bad magic, checksum, truncation or a count that
/// contradicts the tabulated value.
Catalog catalog_load(const std::filesystem::path& path);
/// File name used inside a catalog directory.
std::string catalog_file_name(int m, int n);

struct BruteForceOptions {
    int cap = 8;  // largest size tried
    std::optional<std::filesystem::path> catalog_dir;
    /// Sets with at most this many configurations are kept in memory.
    std::uint64_t cache_limit = 2000000;
};

struct BruteForceResult {
    Configuration config;
    int lower = 0;
    int heuristic_upper = 0;
    std::uint64_t tested = 0;
};

/// Smallest feasible configuration, the first one in enumeration order.
/// Throws SearchLimit when the optimum could exceed the cap.
BruteForceResult brute_force(const WeightTuple& w, const BruteForceOptions& options = {});

}  // namespace socrep
