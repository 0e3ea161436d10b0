#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace socrep {

/// One quadratic constraint x_i * x_j >= x_t^2 (1-based variable indices).
struct Triple {
    int i = 0;
    int j = 0;
    int t = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A second-order cone representation of x_1^{s_1}...x_m^{s_m} >= x_{m+1}^{s_hat}:
/// variables 1..m are the bases, m+1 is the mean, m+2..m+n are auxiliaries.
/// Every variable in m+1..m+n is defined (appears as t) by exactly one triple.
class Configuration {
public:
    Configuration() = default;
    Configuration(int m, std::vector<Triple> triples);

    int m() const { return m_; }
    int size() const { return static_cast<int>(triples_.size()); }
    int variable_count() const { return m_ + size(); }
    const std::vector<Triple>& triples() const { return triples_; }

    /// Triple k (0-based) defines variable m+k+1, and i < j throughout.
    bool is_canonical() const;

    /// Throws MalformedConfiguration unless indices are in range, i != j,
    /// neither operand equals t, and the defined variables are exactly
    /// m+1..m+n.
    void validate() const;

    /// Relabels auxiliaries breadth-first from the mean variable so that
    /// triple k defines m+k and operands satisfy i < j.
    Configuration canonical() const;

    std::string str() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    int m_ = 0;
    std::vector<Triple> triples_;
};

}  // namespace socrep
