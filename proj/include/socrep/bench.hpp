#pragma once
// Partition sweeps over a fixed s_hat, as used for comparing the heuristics.

#include "socrep/core.hpp"
#include "socrep/heuristics.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace socrep {

/// Nonincreasing m-tuples of positive integers summing to s_hat with gcd 1,
/// in lexicographically descending order.
void for_each_partition(long long s_hat, int m, const std::function<void(const WeightTuple&)>& visit);
std::vector<WeightTuple> partitions(long long s_hat, int m);

struct BenchOptions {
    std::uint64_t budget = kDefaultTraversalBudget;
    int repeat = 1;
    int jobs = 0;  // 0: hardware concurrency
    bool keep_rows = true;
};

struct BenchRow {
    WeightTuple tuple;
    std::string algorithm;
    int size = 0;
    double micros = 0;
    bool exhaustive = true;  // false when the traversal budget ran out
};

struct AlgorithmTotal {
    std::string algorithm;
    long long total_size = 0;
    double seconds = 0;
    long long budget_hits = 0;
    bool partial() const { return budget_hits > 0; }
};

struct BenchReport {
    long long s_hat = 0;
    int m = 0;
    long long partition_count = 0;
    std::vector<AlgorithmTotal> totals;
    std::vector<BenchRow> rows;  // partition-major, algorithm-minor
    double average(std::size_t k) const {
        return partition_count ? static_cast<double>(totals[k].total_size) / static_cast<double>(partition_count) : 0.0;
    }
};

/// Runs each strategy on every partition. Every configuration is checked by
/// exact reconstruction and against the lower bound; a failure throws
/// InternalConsistency.
BenchReport bench_run(long long s_hat, int m, const std::vector<Strategy>& algorithms, const BenchOptions& options = {});

/// Columns: tuple,algorithm,size,micros
void write_csv(const BenchReport& report, std::ostream& out);

}  // namespace socrep
