#include "socrep/io.hpp"

#include "socrep/errors.hpp"

namespace socrep::io {

Json integer(const Integer& v) {
    if (auto small = to_int64(v)) return *small;
    return to_string(v);
}

Integer read_integer(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw InvalidInput("expected an integer, got " + j.dump());
}

Json rational(const Rational& v) { return to_string(v); }

Json tuple(const WeightTuple& w) {
    Json out = Json::array();
    for (const auto& s : w.entries()) out.push_back(integer(s));
    return out;
}

WeightTuple read_tuple(const Json& j) {
    if (!j.is_array()) throw InvalidInput("expected an array of weights");
    std::vector<Integer> s;
    for (const auto& x : j) s.push_back(read_integer(x));
    return WeightTuple::from_user(std::move(s));
}

Json configuration(const Configuration& cfg, const WeightTuple* w) {
    Json out;
    out["schema"] = kSchema;
    out["m"] = cfg.m();
    if (w) out["s"] = tuple(*w);
    out["size"] = cfg.size();
    Json triples = Json::array();
    for (const auto& t : cfg.triples()) triples.push_back({t.i, t.j, t.t});
    out["triples"] = triples;
    return out;
}

std::pair<Configuration, std::optional<WeightTuple>> read_configuration(const Json& j) {
    if (!j.is_object() || !j.contains("triples")) throw InvalidInput("configuration document needs \"triples\"");
    std::optional<WeightTuple> w;
    if (j.contains("s")) w = read_tuple(j.at("s"));
    int m = 0;
    if (j.contains("m")) {
        m = j.at("m").get<int>();
    } else if (w) {
        m = static_cast<int>(w->m());
    } else {
        throw InvalidInput("configuration document needs \"m\" or \"s\"");
    }
    if (w && static_cast<int>(w->m()) != m) throw InvalidInput("\"m\" disagrees with the length of \"s\"");
    std::vector<Triple> triples;
    for (const auto& t : j.at("triples")) {
        if (!t.is_array() || t.size() != 3) throw InvalidInput("each triple must be [i, j, t]");
        triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return {Configuration(m, std::move(triples)), w};
}

Json bounds(const WeightTuple& w, const Bounds& b) {
    Json out;
    out["s"] = tuple(w);
    out["s_hat"] = integer(w.s_hat());
    out["lower"] = b.lower;
    out["upper_perm"] = b.upper_perm;
    out["upper_perm_exhaustive"] = b.upper_perm_exhaustive;
    out["upper_common_one"] = b.upper_common_one;
    out["upper_power_two"] = b.upper_power_two;
    return out;
}

Json sequence(const MediatedSequence& seq) {
    Json out;
    out["p"] = integer(seq.p);
    out["q"] = integer(seq.q);
    out["size"] = seq.size();
    Json pts = Json::array();
    for (const auto& x : seq.points) pts.push_back(integer(x));
    out["points"] = pts;
    return out;
}

namespace {

Json node(const MedNode& n, int height) {
    Json out;
    switch (n.kind) {
        case MedNode::Kind::Internal: out["kind"] = "internal"; break;
        case MedNode::Kind::LeafP: out["kind"] = "p"; break;
        case MedNode::Kind::LeafQ: out["kind"] = "q"; break;
    }
    out["label"] = integer(n.label);
    out["height"] = height;
    if (n.kind == MedNode::Kind::Internal) {
        Json kids = Json::array();
        if (n.left) kids.push_back(node(*n.left, height - 1));
        if (n.right) kids.push_back(node(*n.right, height - 1));
        out["children"] = kids;
    }
    return out;
}

}  // namespace

Json tree(const MedTree& t) {
    Json out;
    out["p"] = integer(t.p);
    out["q"] = integer(t.q);
    out["height"] = t.height;
    out["p_leaf_heights"] = t.p_leaf_heights();
    out["q_leaf_heights"] = t.q_leaf_heights();
    auto sums = t.leaf_sums();
    out["p_leaf_sum"] = integer(sums.p_sum);
    out["q_leaf_sum"] = integer(sums.q_sum);
    out["root"] = node(*t.root, t.height);
    return out;
}

Json verdict(const ReconstructedSet& r) {
    Json out;
    out["valid"] = r.valid();
    out["verdict"] = to_string(r.verdict);
    out["reason"] = r.reason;
    Json pts = Json::array();
    for (const auto& p : r.points) {
        Json row = Json::array();
        for (const auto& x : p) row.push_back(rational(x));
        pts.push_back(row);
    }
    out["points"] = pts;
    out["coincident_points"] = r.coincident_points;
    return out;
}

Json numeric(const NumericReport& r) {
    Json out;
    out["passed"] = r.passed;
    out["trials"] = r.trials;
    out["feasible_failures"] = r.feasible_failures;
    out["infeasible_accepted"] = r.infeasible_accepted;
    if (!r.first_failure.empty()) out["first_failure"] = r.first_failure;
    return out;
}

namespace {

Json side(const std::vector<SideConstraint>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) {
        Json e;
        e["kind"] = to_string(c.kind);
        e["vars"] = c.vars;
        if (!c.rhs.empty()) e["rhs"] = c.rhs;
        e["text"] = render(c);
        out.push_back(e);
    }
    return out;
}

}  // namespace

Json conversion(const Conversion& c) {
    Json out;
    out["schema"] = kSchema;
    Json inst = Json::array();
    for (const auto& i : c.instances) {
        Json e;
        e["s"] = tuple(i.tuple);
        Json ex = Json::array();
        for (const auto& x : i.exponents()) ex.push_back(rational(x));
        e["exponents"] = ex;
        e["inputs"] = i.inputs;
        e["output"] = i.output;
        inst.push_back(e);
    }
    out["instances"] = inst;
    out["side"] = side(c.side);
    return out;
}

Json document(const ConstraintDocument& doc) {
    Json out;
    out["schema"] = kSchema;
    out["variables"] = doc.variables;
    Json cones = Json::array();
    for (const auto& c : doc.cones) cones.push_back({{"a1", c.a1}, {"a2", c.a2}, {"a3", c.a3}});
    out["cones"] = cones;
    out["side"] = side(doc.side);
    return out;
}

}  // namespace socrep::io
