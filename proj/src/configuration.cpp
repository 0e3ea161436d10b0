#include "socrep/configuration.hpp"

#include "socrep/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace socrep {

Configuration::Configuration(int m, std::vector<Triple> triples) : m_(m), triples_(std::move(triples)) {}

bool Configuration::is_canonical() const {
    for (std::size_t k = 0; k < triples_.size(); ++k) {
        const auto& tr = triples_[k];
        if (tr.t != m_ + static_cast<int>(k) + 1 || tr.i >= tr.j) return false;
    }
    return true;
}

void Configuration::validate() const {
    if (m_ < 1) throw MalformedConfiguration("configuration needs m >= 1");
    if (triples_.empty()) throw MalformedConfiguration("configuration has no triples");
    const int total = variable_count();
    std::vector<int> defined(static_cast<std::size_t>(total + 1), 0);
    for (const auto& tr : triples_) {
        for (int v : {tr.i, tr.j, tr.t}) {
            if (v < 1 || v > total) {
                throw MalformedConfiguration("variable index " + std::to_string(v) + " out of range 1.." +
                                             std::to_string(total));
            }
        }
        if (tr.i == tr.j) throw MalformedConfiguration("triple " + str() + " repeats an operand");
        if (tr.i == tr.t || tr.j == tr.t) {
            throw MalformedConfiguration("triple defines x" + std::to_string(tr.t) + " in terms of itself");
        }
        if (tr.t <= m_) throw MalformedConfiguration("triple defines base variable x" + std::to_string(tr.t));
        if (++defined[static_cast<std::size_t>(tr.t)] > 1) {
            throw MalformedConfiguration("variable x" + std::to_string(tr.t) + " defined twice");
        }
    }
}

Configuration Configuration::canonical() const {
    validate();
    const int total = variable_count();
    std::vector<int> definer(static_cast<std::size_t>(total + 1), -1);
    for (std::size_t k = 0; k < triples_.size(); ++k) definer[static_cast<std::size_t>(triples_[k].t)] = static_cast<int>(k);

    std::vector<int> label(static_cast<std::size_t>(total + 1), 0);
    for (int v = 1; v <= m_; ++v) label[static_cast<std::size_t>(v)] = v;
    int next = m_ + 1;
    label[static_cast<std::size_t>(m_ + 1)] = next++;
    std::deque<int> queue{m_ + 1};
    std::vector<Triple> out;
    out.reserve(triples_.size());
    while (!queue.empty()) {
        int var = queue.front();
        queue.pop_front();
        const auto& tr = triples_[static_cast<std::size_t>(definer[static_cast<std::size_t>(var)])];
        for (int operand : {std::min(tr.i, tr.j), std::max(tr.i, tr.j)}) {
            if (operand > m_ && label[static_cast<std::size_t>(operand)] == 0) {
                label[static_cast<std::size_t>(operand)] = next++;
                queue.push_back(operand);
            }
        }
        int a = label[static_cast<std::size_t>(tr.i)];
        int b = label[static_cast<std::size_t>(tr.j)];
        out.push_back({std::min(a, b), std::max(a, b), label[static_cast<std::size_t>(var)]});
    }
    if (static_cast<int>(out.size()) != size()) {
        // Auxiliaries not reachable from the mean variable: keep them, in original order.
        for (std::size_t k = 0; k < triples_.size(); ++k) {
            int var = triples_[k].t;
            if (label[static_cast<std::size_t>(var)] != 0) continue;
            label[static_cast<std::size_t>(var)] = next++;
        }
        out.clear();
        std::vector<Triple> relabeled;
        for (const auto& tr : triples_) {
            int a = label[static_cast<std::size_t>(tr.i)];
            int b = label[static_cast<std::size_t>(tr.j)];
            relabeled.push_back({std::min(a, b), std::max(a, b), label[static_cast<std::size_t>(tr.t)]});
        }
        std::sort(relabeled.begin(), relabeled.end(), [](const Triple& x, const Triple& y) { return x.t < y.t; });
        out = std::move(relabeled);
    }
    return Configuration(m_, std::move(out));
}

std::string Configuration::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < triples_.size(); ++k) {
        if (k) os << ',';
        os << '(' << triples_[k].i << ',' << triples_[k].j << ',' << triples_[k].t << ')';
    }
    os << '}';
    return os.str();
}

}  // namespace socrep
