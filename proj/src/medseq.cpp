#include "socrep/medseq.hpp"

#include "socrep/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

namespace socrep {

std::vector<Integer> MediatedSequence::sorted() const {
    auto out = points;
    std::sort(out.begin(), out.end());
    return out;
}

bool MediatedSequence::same_set(const MediatedSequence& other) const {
    return p == other.p && q == other.q && sorted() == other.sorted();
}

namespace {

void require_pair(const Integer& p, const Integer& q) {
    if (!(q > 0 && q < p)) throw InvalidInput("need 0 < q < p, got p = " + to_string(p) + ", q = " + to_string(q));
    if (gcd(p, q) != 1) throw InvalidInput("p and q must be coprime");
}

// The loop of the bivariate construction on weights s with labels t. `emit`
// receives the two averaged labels and returns the new one; `check` sees the
// state after every iteration.
template <class Label, class Emit, class Check>
void halving_loop(std::array<Integer, 3> s, std::array<Label, 3> t, int l, Emit emit, Check check) {
    Integer total = s[0] + s[1] + s[2];
    for (int k = 1; k <= l; ++k) {
        int bi = -1;
        int bj = -1;
        for (int i = 0; i < 3 && bi < 0; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                if (s[i] % 2 == 1 && s[j] % 2 == 1 && s[i] <= s[j]) {
                    bi = i;
                    bj = j;
                    break;
                }
            }
        }
        if (bi < 0) throw InternalConsistency("no odd pair at iteration " + std::to_string(k));
        const int r = 3 - bi - bj;
        t[static_cast<std::size_t>(bi)] = emit(t[static_cast<std::size_t>(bi)], t[static_cast<std::size_t>(bj)], k);
        s[static_cast<std::size_t>(bj)] = (s[static_cast<std::size_t>(bj)] - s[static_cast<std::size_t>(bi)]) / 2;
        s[static_cast<std::size_t>(r)] /= 2;
        total /= 2;
        if (s[0] + s[1] + s[2] != total) throw InternalConsistency("weight sum invariant broken");
        check(s, t);
    }
}

}  // namespace

MediatedSequence min_mediated_sequence(const Integer& p, const Integer& q) {
    require_pair(p, q);
    const int l = ceil_log2(p);
    MediatedSequence out{p, q, {}};
    std::set<Integer> seen;
    const Integer full = pow2(l);
    std::array<Integer, 3> s{q, p - q, full - p};
    std::array<Integer, 3> t{p, Integer(0), q};
    Integer scale = full;
    halving_loop<Integer>(
        s, t, l,
        [&](const Integer& a, const Integer& b, int) {
            if ((a + b) % 2 != 0) throw InternalConsistency("odd label sum");
            Integer v = (a + b) / 2;
            if (!seen.insert(v).second) throw InternalConsistency("duplicate point " + to_string(v));
            out.points.push_back(v);
            return v;
        },
        [&](const std::array<Integer, 3>& cs, const std::array<Integer, 3>& ct) {
            scale /= 2;
            if (cs[0] * ct[0] + cs[1] * ct[1] + cs[2] * ct[2] != scale * q) {
                throw InternalConsistency("weighted label sum invariant broken");
            }
        });
    if (out.points.empty() || out.points.back() != q) throw InternalConsistency("construction did not end at q");
    return out;
}

namespace {

// Runs the loop with variables as labels; the last created variable is
// renamed to `target`.
Configuration labelled_run(int m, std::array<Integer, 3> s, std::array<int, 3> vars, int target, int l) {
    std::vector<Triple> triples;
    int fresh = 1000000;
    halving_loop<int>(
        s, vars, l,
        [&](int a, int b, int k) {
            int v = k == l ? target : fresh++;
            triples.push_back({std::min(a, b), std::max(a, b), v});
            return v;
        },
        [](const auto&, const auto&) {});
    // rename placeholders to m+2, m+3, ... in creation order
    int next = m + 2;
    std::map<int, int> rename;
    for (const auto& tr : triples) {
        if (tr.t >= 1000000) rename[tr.t] = next++;
    }
    auto fix = [&](int v) { return v >= 1000000 ? rename.at(v) : v; };
    for (auto& tr : triples) {
        int a = fix(tr.i);
        int b = fix(tr.j);
        tr = {std::min(a, b), std::max(a, b), fix(tr.t)};
    }
    return Configuration(m, std::move(triples)).canonical();
}

}  // namespace

Configuration bivariate_configuration(const Integer& p, const Integer& q) {
    require_pair(p, q);
    const int l = ceil_log2(p);
    return labelled_run(2, {q, p - q, pow2(l) - p}, {1, 2, 3}, 3, l);
}

Configuration pow2_trivariate(const WeightTuple& w) {
    if (w.m() != 3) throw InvalidInput("pow2_trivariate needs three entries");
    for (const auto& v : w.entries()) {
        if (v < 1) throw InvalidInput("entries must be positive");
    }
    if (!w.normalized()) throw InvalidInput("tuple must have gcd 1");
    if (!is_power_of_two(w.s_hat())) throw InvalidInput("sum " + to_string(w.s_hat()) + " is not a power of two");
    const int l = ceil_log2(w.s_hat());
    return labelled_run(3, {w[0], w[1], w[2]}, {1, 2, 3}, 4, l);
}

MembershipResult is_mediated_sequence(const std::vector<Integer>& points, const Integer& p, const Integer& q) {
    std::set<Integer> set(points.begin(), points.end());
    if (set.size() != points.size()) return {false, "repeated element"};
    if (!set.count(q)) return {false, "q = " + to_string(q) + " is not in the sequence"};
    for (const auto& a : points) {
        if (a <= 0 || a >= p) return {false, "element " + to_string(a) + " is outside (0, p)"};
    }
    std::set<Integer> pool = set;
    pool.insert(0);
    pool.insert(p);
    for (const auto& a : points) {
        bool found = false;
        for (const auto& u : pool) {
            Integer v = 2 * a - u;
            if (v != u && pool.count(v)) {
                found = true;
                break;
            }
        }
        if (!found) return {false, "element " + to_string(a) + " is not an average of two distinct members"};
    }
    return {true, ""};
}

namespace {

using NodePtr = std::shared_ptr<const MedNode>;

NodePtr leaf(MedNode::Kind kind, const Integer& label) {
    auto n = std::make_shared<MedNode>();
    n->kind = kind;
    n->label = label;
    return n;
}

NodePtr internal(const Integer& label, NodePtr left, NodePtr right) {
    auto n = std::make_shared<MedNode>();
    n->label = label;
    n->left = std::move(left);
    n->right = std::move(right);
    return n;
}

void collect_leaves(const MedNode& node, int h, std::vector<int>& ps, std::vector<int>& qs) {
    if (node.kind == MedNode::Kind::LeafP) {
        ps.push_back(h);
        return;
    }
    if (node.kind == MedNode::Kind::LeafQ) {
        qs.push_back(h);
        return;
    }
    if (node.left) collect_leaves(*node.left, h - 1, ps, qs);
    if (node.right) collect_leaves(*node.right, h - 1, ps, qs);
}

}  // namespace

std::vector<int> MedTree::p_leaf_heights() const {
    std::vector<int> ps, qs;
    collect_leaves(*root, height, ps, qs);
    std::sort(ps.begin(), ps.end());
    return ps;
}

std::vector<int> MedTree::q_leaf_heights() const {
    std::vector<int> ps, qs;
    collect_leaves(*root, height, ps, qs);
    std::sort(qs.begin(), qs.end());
    return qs;
}

LeafSums MedTree::leaf_sums() const {
    // Shared subtrees make the expanded tree exponential; memoize on (node, height).
    std::map<std::pair<const MedNode*, int>, LeafSums> memo;
    std::function<LeafSums(const MedNode&, int)> go = [&](const MedNode& node, int h) -> LeafSums {
        if (node.kind == MedNode::Kind::LeafP) return {pow2(h), 0};
        if (node.kind == MedNode::Kind::LeafQ) return {0, pow2(h)};
        auto key = std::make_pair(&node, h);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        LeafSums acc{0, 0};
        for (const auto* child : {node.left.get(), node.right.get()}) {
            if (!child) continue;
            auto c = go(*child, h - 1);
            acc.p_sum += c.p_sum;
            acc.q_sum += c.q_sum;
        }
        memo[key] = acc;
        return acc;
    };
    return go(*root, height);
}

std::string MedTree::check_invariants() const {
    if (!root) return "empty tree";
    if (height != ceil_log2(p)) return "height " + std::to_string(height) + " differs from ceil(log2 p)";
    if (root->label != q) return "root label is not q";
    std::set<const MedNode*> seen;
    std::string failure;
    std::function<void(const MedNode&, int)> walk = [&](const MedNode& node, int h) {
        if (!failure.empty() || !seen.insert(&node).second) return;
        if (node.kind == MedNode::Kind::LeafP) {
            if (node.label != p) failure = "p-leaf with label " + to_string(node.label);
            return;
        }
        if (node.kind == MedNode::Kind::LeafQ) {
            if (node.label != q) failure = "q-leaf with label " + to_string(node.label);
            return;
        }
        if (!node.left) {
            failure = "internal node without a left child";
            return;
        }
        Integer twice = node.left->label + (node.right ? node.right->label : Integer(0));
        if (twice != 2 * node.label) failure = "node " + to_string(node.label) + " is not the mean of its children";
        if (h <= 0) failure = "internal node at height 0";
        walk(*node.left, h - 1);
        if (node.right) walk(*node.right, h - 1);
    };
    walk(*root, height);
    if (!failure.empty()) return failure;
    auto sums = leaf_sums();
    if (sums.p_sum != q) return "p-leaf sum " + to_string(sums.p_sum) + " differs from q";
    if (sums.q_sum != pow2(height) - p) return "q-leaf sum " + to_string(sums.q_sum) + " differs from 2^l - p";
    return "";
}

MedTree build_tree(const MediatedSequence& seq) {
    const Integer& p = seq.p;
    const Integer& q = seq.q;
    require_pair(p, q);
    const int l = ceil_log2(p);
    if (seq.points.empty()) throw NotSuccessive("empty sequence");
    std::vector<NodePtr> spine;  // spine[i] is T_{i+1}
    const auto& a = seq.points;
    // T_1: q_1 = (q_0 + t_1)/2 with q_0 in {p, q}, t_1 in {0, p, q}.
    if (2 * a[0] == p + q) {
        spine.push_back(internal(a[0], leaf(MedNode::Kind::LeafP, p), leaf(MedNode::Kind::LeafQ, q)));
    } else if (2 * a[0] == p) {
        spine.push_back(internal(a[0], leaf(MedNode::Kind::LeafP, p), nullptr));
    } else if (2 * a[0] == q) {
        spine.push_back(internal(a[0], leaf(MedNode::Kind::LeafQ, q), nullptr));
    } else {
        throw NotSuccessive("element " + to_string(a[0]) + " cannot be derived from p and q");
    }
    for (std::size_t i = 1; i < a.size(); ++i) {
        const Integer& prev = a[i - 1];
        const Integer& cur = a[i];
        NodePtr node;
        if (2 * cur == prev) {
            node = internal(cur, spine.back(), nullptr);
        } else if (2 * cur == prev + p) {
            node = internal(cur, spine.back(), leaf(MedNode::Kind::LeafP, p));
        } else if (2 * cur == prev + q && prev != q) {
            node = internal(cur, spine.back(), leaf(MedNode::Kind::LeafQ, q));
        } else {
            for (std::size_t j = 0; j + 1 < i; ++j) {
                if (2 * cur == prev + a[j]) {
                    node = internal(cur, spine.back(), spine[j]);
                    break;
                }
            }
        }
        if (!node) throw NotSuccessive("element " + to_string(cur) + " cannot be derived from its predecessors");
        spine.push_back(std::move(node));
    }
    if (a.back() != q) throw NotSuccessive("sequence does not end at q");
    if (static_cast<int>(a.size()) != l) {
        throw NotSuccessive("sequence has " + std::to_string(a.size()) + " elements, a minimum one has " +
                            std::to_string(l));
    }
    MedTree tree{p, q, l, spine.back()};
    if (auto why = tree.check_invariants(); !why.empty()) throw InternalConsistency("tree invariant failed: " + why);
    return tree;
}

SuccessiveEnumeration enumerate_successive(const Integer& p, const Integer& q, std::size_t limit) {
    require_pair(p, q);
    if (limit == 0) throw InvalidInput("limit must be positive");
    if (p % 2 == 0 || q % 2 == 0) throw InvalidInput("enumeration is defined for odd p and q");
    const int l = ceil_log2(p);
    const Integer full = pow2(l);
    const Integer q_budget = full - p;

    SuccessiveEnumeration out;
    std::set<std::vector<Integer>> found;
    // Per level: value q_i and the leaf sums (P_i, Q_i) with 2^i q_i = P_i p + Q_i q.
    std::vector<Integer> vals;
    std::vector<Integer> ps;
    std::vector<Integer> qs;
    std::set<Integer> used;

    std::function<bool()> dfs = [&]() -> bool {
        const int i = static_cast<int>(vals.size()) + 1;  // level being filled
        if (i > l) {
            if (vals.back() == q) {
                auto key = vals;
                std::sort(key.begin(), key.end());
                if (found.insert(key).second) {
                    out.sequences.push_back({p, q, vals});
                    if (out.sequences.size() >= limit) return false;
                }
            }
            return true;
        }
        const Integer prev = vals.back();
        const Integer P = ps.back();
        const Integer Q = qs.back();
        const Integer shift = pow2(i - 1);
        auto try_child = [&](const Integer& partner, const Integer& dp, const Integer& dq) -> bool {
            Integer sum = prev + partner;
            if (sum % 2 != 0) return true;
            Integer v = sum / 2;
            if (v <= 0 || v >= p || used.count(v)) return true;
            if (v == q && i != l) return true;
            Integer np = P + dp;
            Integer nq = Q + dq;
            if (np > q || nq > q_budget) return true;
            vals.push_back(v);
            ps.push_back(np);
            qs.push_back(nq);
            used.insert(v);
            bool go_on = dfs();
            used.erase(v);
            vals.pop_back();
            ps.pop_back();
            qs.pop_back();
            return go_on;
        };
        if (!try_child(Integer(0), 0, 0)) return false;
        if (!try_child(p, shift, 0)) return false;
        if (prev != q && !try_child(q, 0, shift)) return false;
        for (int j = 1; j <= i - 2; ++j) {
            const Integer scale = pow2(i - 1 - j);
            const Integer partner = vals[static_cast<std::size_t>(j - 1)];
            if (!try_child(partner, ps[static_cast<std::size_t>(j - 1)] * scale, qs[static_cast<std::size_t>(j - 1)] * scale)) {
                return false;
            }
        }
        return true;
    };

    // odd p, q force q_1 = (p + q)/2
    Integer first = (p + q) / 2;
    vals.push_back(first);
    ps.push_back(1);
    qs.push_back(1);
    used.insert(first);
    out.complete = dfs();
    return out;
}

}  // namespace socrep
