#pragma once

// Weight tuples of weighted geometric mean inequalities
//   x_1^{s_1} ... x_m^{s_m} >= x_{m+1}^{s_hat},   s_hat = s_1 + ... + s_m,
// together with the binary-expansion helpers and the closed-form bounds on
// the minimum number of quadratic constraints x_i x_j >= x_t^2.

#include "socrep/integer.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace socrep {

class WeightTuple {
public:
    WeightTuple() = default;

    /// Accepts entries >= 0. Use `from_user` for tuples that must be strictly positive.
    explicit WeightTuple(std::vector<Integer> entries);

    /// Entries >= 1, m >= 1. Throws InvalidInput otherwise.
    static WeightTuple from_user(std::vector<Integer> entries);
    static WeightTuple from_strings(const std::vector<std::string>& entries);
    static WeightTuple of(std::initializer_list<long long> entries);

    const std::vector<Integer>& entries() const { return s_; }
    const Integer& operator[](std::size_t i) const { return s_[i]; }
    std::size_t m() const { return s_.size(); }
    const Integer& s_hat() const { return s_hat_; }

    /// gcd of the positive entries equals 1.
    bool normalized() const { return normalized_; }

    /// Entries in nonincreasing order; used as a permutation-invariant key.
    std::vector<Integer> sorted_desc() const;

    std::string str() const;

    friend bool operator==(const WeightTuple& a, const WeightTuple& b) { return a.s_ == b.s_; }

private:
    std::vector<Integer> s_;
    Integer s_hat_ = 0;
    bool normalized_ = false;
};

struct Normalized {
    WeightTuple tuple;
    Integer scale;
};

/// Divides out the gcd. Errors on an empty tuple or a zero entry.
Normalized normalize(const WeightTuple& w);

struct BitProfile {
    std::set<int> omega;
    std::optional<int> delta;
};

/// Binary-expansion exponents of r and the smallest of them (absent for r = 0).
BitProfile omega(const Integer& r);

/// Smallest exponent of the binary expansion, with the convention delta(0) = zero_value.
int delta_or(const Integer& r, int zero_value);

/// max(ceil(log2 s_hat), m - 1).
int lower_bound(const WeightTuple& w);

struct PermutationBound {
    int value = 0;
    bool exhaustive = true;
};

/// Upper bound obtained by peeling one variable at a time and solving each
/// bivariate step optimally, minimised over orderings of the entries.
/// Exhaustive for m <= 8; for larger m only the descending order, the
/// ascending order and every single transposition of each are tried.
PermutationBound upper_bound_perm(const WeightTuple& w);

/// Evaluates the peeling cost of one fixed ordering.
int peeling_cost(const std::vector<Integer>& ordered);

/// The tuple with 2^l - s_hat appended when that is positive, l = ceil(log2 s_hat).
std::vector<Integer> padded_entries(const WeightTuple& w);

/// sum |omega(s_i)| - 1 over the padded tuple.
int upper_bound_common_one(const WeightTuple& w);

/// ceil(1/2 * sum (l - delta(s_i))) over the padded tuple.
int upper_bound_power_two(const WeightTuple& w);

struct Bounds {
    int lower = 0;
    int upper_perm = 0;
    bool upper_perm_exhaustive = true;
    int upper_common_one = 0;
    int upper_power_two = 0;
};

Bounds compute_bounds(const WeightTuple& w);

}  // namespace socrep
