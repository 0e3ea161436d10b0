#pragma once

// Independent validity checks for configurations: exact reconstruction of the
// mediated set on the scaled standard simplex, and a floating-point smoke test
// of the inequality chain.

#include "socrep/configuration.hpp"
#include "socrep/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace socrep {

enum class Verdict {
    Valid,
    InvalidCyclic,   // the averaging system is singular
    WrongTarget,     // the solved mean point is not (s_1, ..., s_{m-1})
    OutsideSimplex,  // a solved point has a negative barycentric coordinate
};

std::string to_string(Verdict v);

struct ReconstructedSet {
    Verdict verdict = Verdict::InvalidCyclic;
    std::string reason;
    /// Vertices s_hat * e_i (i < m) and the origin, each of dimension m - 1.
    std::vector<std::vector<Rational>> trellis;
    /// points[k] is the point of variable m+1+k; empty when singular.
    std::vector<std::vector<Rational>> points;
    /// Two defined variables landed on the same point (accepted, reported).
    bool coincident_points = false;

    bool valid() const { return verdict == Verdict::Valid; }
};

/// Solves 2*alpha_t = alpha_i + alpha_j for all defined variables over the
/// rationals, with alpha_1..alpha_m the vertices of the scaled simplex.
ReconstructedSet reconstruct(const Configuration& cfg, const WeightTuple& w);

struct NumericReport {
    bool passed = true;
    int trials = 0;
    int feasible_failures = 0;    // feasible samples that violated a constraint
    int infeasible_accepted = 0;  // infeasible samples that satisfied every constraint
    std::string first_failure;
};

/// Relative tolerance applied in the numeric check.
inline constexpr double kNumericTolerance = 1e-9;

NumericReport numeric_check(const Configuration& cfg, const WeightTuple& w, int trials, std::uint64_t seed = 42);

}  // namespace socrep
