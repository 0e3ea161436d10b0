#include "socrep/verify.hpp"

#include "socrep/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace socrep {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Valid: return "valid";
        case Verdict::InvalidCyclic: return "invalid-cyclic";
        case Verdict::WrongTarget: return "wrong-target";
        case Verdict::OutsideSimplex: return "outside-simplex";
    }
    return "unknown";
}

namespace {

void check_dimensions(const Configuration& cfg, const WeightTuple& w) {
    if (cfg.m() != static_cast<int>(w.m())) {
        throw InvalidInput("configuration has m = " + std::to_string(cfg.m()) + " but the tuple has " +
                           std::to_string(w.m()) + " entries");
    }
    if (w.m() < 2) throw InvalidInput("need at least two base variables");
    cfg.validate();
}

// Gauss-Jordan over the rationals; returns false when `a` is singular.
bool solve_in_place(std::vector<std::vector<Rational>>& a, std::vector<std::vector<Rational>>& rhs) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (auto& x : rhs[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            for (std::size_t c = 0; c < rhs[r].size(); ++c) rhs[r][c] -= f * rhs[col][c];
        }
    }
    return true;
}

}  // namespace

ReconstructedSet reconstruct(const Configuration& cfg, const WeightTuple& w) {
    check_dimensions(cfg, w);
    const int m = cfg.m();
    const int n = cfg.size();
    const auto dim = static_cast<std::size_t>(m - 1);

    ReconstructedSet out;
    for (int v = 0; v < m; ++v) {
        std::vector<Rational> vertex(dim, Rational(0));
        if (v < m - 1) vertex[static_cast<std::size_t>(v)] = Rational(w.s_hat());
        out.trellis.push_back(std::move(vertex));
    }

    // Row k is the constraint defining variable m+1+k; unknowns are barycentric
    // coordinates with respect to the m vertices.
    std::vector<std::vector<Rational>> c(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    std::vector<std::vector<Rational>> bary(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(m)));
    for (const auto& tr : cfg.triples()) {
        const auto row = static_cast<std::size_t>(tr.t - m - 1);
        c[row][row] += 2;
        for (int operand : {tr.i, tr.j}) {
            if (operand <= m) {
                bary[row][static_cast<std::size_t>(operand - 1)] += 1;
            } else {
                c[row][static_cast<std::size_t>(operand - m - 1)] -= 1;
            }
        }
    }
    if (!solve_in_place(c, bary)) {
        out.verdict = Verdict::InvalidCyclic;
        out.reason = "averaging system is singular: some auxiliary points only average among themselves";
        return out;
    }

    for (const auto& row : bary) {
        std::vector<Rational> point(dim);
        for (std::size_t d = 0; d < dim; ++d) point[d] = row[d] * Rational(w.s_hat());
        out.points.push_back(std::move(point));
    }

    for (std::size_t k = 0; k < bary.size(); ++k) {
        for (const auto& coord : bary[k]) {
            if (coord < 0) {
                out.verdict = Verdict::OutsideSimplex;
                out.reason = "point of x" + std::to_string(m + 1 + static_cast<int>(k)) + " leaves the simplex";
                return out;
            }
        }
    }
    for (std::size_t d = 0; d < dim; ++d) {
        if (out.points[0][d] != Rational(w[d])) {
            std::ostringstream os;
            os << "mean point coordinate " << d + 1 << " is " << to_string(out.points[0][d]) << ", expected "
               << w[d];
            out.verdict = Verdict::WrongTarget;
            out.reason = os.str();
            return out;
        }
    }
    auto sorted = out.points;
    std::sort(sorted.begin(), sorted.end());
    out.coincident_points = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    out.verdict = Verdict::Valid;
    out.reason = out.coincident_points ? "valid (some points coincide)" : "valid";
    return out;
}

namespace {

// Log-domain values of every variable when the auxiliaries take their largest
// admissible values. Each auxiliary sits on the small side of exactly one
// constraint, so the largest assignment is the greatest fixed point of
// log x_t = (log x_i + log x_j) / 2, reached by iterating down from a cap.
std::vector<double> maximal_assignment(const Configuration& cfg, const std::vector<double>& known) {
    const int m = cfg.m();
    std::vector<double> y(known);
    const double top = *std::max_element(known.begin() + 1, known.begin() + m + 2);
    const double cap = top + 64.0;
    for (int v = m + 2; v <= cfg.variable_count(); ++v) y[static_cast<std::size_t>(v)] = cap;
    for (int sweep = 0; sweep < 100000; ++sweep) {
        double change = 0;
        for (const auto& tr : cfg.triples()) {
            if (tr.t == m + 1) continue;
            double next = 0.5 * (y[static_cast<std::size_t>(tr.i)] + y[static_cast<std::size_t>(tr.j)]);
            next = std::min(next, cap);
            change = std::max(change, std::abs(next - y[static_cast<std::size_t>(tr.t)]));
            y[static_cast<std::size_t>(tr.t)] = next;
        }
        if (change < 1e-14) break;
    }
    return y;
}

// Returns the index of the first violated constraint, or -1.
int first_violation(const Configuration& cfg, const std::vector<double>& y) {
    for (std::size_t k = 0; k < cfg.triples().size(); ++k) {
        const auto& tr = cfg.triples()[k];
        const double lhs = y[static_cast<std::size_t>(tr.i)] + y[static_cast<std::size_t>(tr.j)];
        const double rhs = 2.0 * y[static_cast<std::size_t>(tr.t)];
        if (lhs - rhs < -kNumericTolerance) return static_cast<int>(k);
    }
    return -1;
}

}  // namespace

NumericReport numeric_check(const Configuration& cfg, const WeightTuple& w, int trials, std::uint64_t seed) {
    check_dimensions(cfg, w);
    if (trials < 1) throw InvalidInput("numeric_check needs at least one trial");
    const int m = cfg.m();
    const double s_hat = w.s_hat().convert_to<double>();

    NumericReport report;
    report.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        std::uniform_real_distribution<double> dist(0.1, 10.0);
        std::vector<double> logs(static_cast<std::size_t>(cfg.variable_count() + 1), 0.0);
        double log_mean = 0;
        for (int v = 1; v <= m; ++v) {
            logs[static_cast<std::size_t>(v)] = std::log(dist(rng));
            log_mean += w[static_cast<std::size_t>(v - 1)].convert_to<double>() * logs[static_cast<std::size_t>(v)];
        }
        log_mean /= s_hat;

        for (double eps : {0.0, 1e-6, -1e-3}) {
            logs[static_cast<std::size_t>(m + 1)] = log_mean + std::log1p(-eps);
            auto y = maximal_assignment(cfg, logs);
            const int bad = first_violation(cfg, y);
            const bool should_hold = eps >= 0;
            if (should_hold && bad >= 0) {
                ++report.feasible_failures;
                if (report.first_failure.empty()) {
                    report.first_failure = "trial " + std::to_string(trial) + ": feasible sample violates constraint " +
                                           std::to_string(bad + 1);
                }
            } else if (!should_hold && bad < 0) {
                ++report.infeasible_accepted;
                if (report.first_failure.empty()) {
                    report.first_failure = "trial " + std::to_string(trial) + ": infeasible sample satisfies all constraints";
                }
            }
        }
    }
    report.passed = report.feasible_failures == 0 && report.infeasible_accepted == 0;
    return report;
}

}  // namespace socrep
