#pragma once

// One-dimensional mediated sets ("mediated sequences"): the bivariate optimal
// construction, its trivariate power-of-two variant, successive sequences and
// their binary-tree form.

#include "socrep/configuration.hpp"
#include "socrep/core.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace socrep {

struct MediatedSequence {
    Integer p;
    Integer q;
    /// Discovery order; for successive sequences this is the successive order.
    std::vector<Integer> points;

    std::vector<Integer> sorted() const;
    std::size_t size() const { return points.size(); }
    /// Set equality (order ignored).
    bool same_set(const MediatedSequence& other) const;
};

/// Minimum (p,q)-mediated sequence, size ceil(log2 p). Requires 0 < q < p, gcd 1.
MediatedSequence min_mediated_sequence(const Integer& p, const Integer& q);

/// Optimal configuration for x1^q x2^(p-q) >= x3^p (size ceil(log2 p)).
Configuration bivariate_configuration(const Integer& p, const Integer& q);

/// Optimal configuration for x1^s1 x2^s2 x3^s3 >= x4^(2^l) when s1+s2+s3 = 2^l.
Configuration pow2_trivariate(const WeightTuple& w);

struct MembershipResult {
    bool ok = false;
    std::string diagnostic;
};

MembershipResult is_mediated_sequence(const std::vector<Integer>& points, const Integer& p, const Integer& q);

struct MedNode {
    enum class Kind { Internal, LeafP, LeafQ };
    Kind kind = Kind::Internal;
    Integer label;
    std::shared_ptr<const MedNode> left;   // null for leaves
    std::shared_ptr<const MedNode> right;  // null for leaves and halving nodes
};

struct LeafSums {
    Integer p_sum;  // sum of 2^h over p-leaves
    Integer q_sum;  // sum of 2^h over q-leaves
};

struct MedTree {
    Integer p;
    Integer q;
    int height = 0;
    std::shared_ptr<const MedNode> root;

    /// Heights of the p-leaves and q-leaves (a multiset, ascending).
    std::vector<int> p_leaf_heights() const;
    std::vector<int> q_leaf_heights() const;
    LeafSums leaf_sums() const;
    /// Root label, leaf labels, averaging rule and both leaf-sum identities.
    /// Returns an empty string when all hold, otherwise the first failure.
    std::string check_invariants() const;
};

/// Tree of a successive sequence given in successive order. Throws
/// NotSuccessive naming the first element that cannot be derived.
MedTree build_tree(const MediatedSequence& seq);

struct SuccessiveEnumeration {
    std::vector<MediatedSequence> sequences;
    bool complete = true;  // false when the limit cut the search short
};

/// All successive minimum (p,q)-mediated sequences (as sets) for odd p, q,
/// up to `limit` of them, in depth-first order.
SuccessiveEnumeration enumerate_successive(const Integer& p, const Integer& q, std::size_t limit);

}  // namespace socrep
