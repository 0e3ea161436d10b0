#include "socrep/frontends.hpp"

#include "socrep/errors.hpp"
#include "socrep/verify.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace socrep {

namespace {

const std::map<Family, std::string>& family_names() {
    static const std::map<Family, std::string> names{
        {Family::Wgm, "wgm"},
        {Family::SubUnitWgm, "sub-unit-wgm"},
        {Family::PowerUp, "power-up"},
        {Family::PowerDown, "power-down"},
        {Family::NegPower, "neg-power"},
        {Family::NegPowerMulti, "neg-power-multi"},
        {Family::PNorm, "p-norm"},
        {Family::PowerCone, "power-cone"},
    };
    return names;
}

Rational sum(const std::vector<Rational>& xs) {
    return std::accumulate(xs.begin(), xs.end(), Rational(0));
}

// Weights summing to one -> integer tuple over the lcm of the denominators.
WeightTuple tuple_of(const std::vector<Rational>& weights) {
    Integer den = 1;
    for (const auto& x : weights) {
        Integer d = boost::multiprecision::denominator(x);
        den = den / gcd(den, d) * d;
    }
    std::vector<Integer> s;
    for (const auto& x : weights) {
        s.push_back(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x)));
    }
    auto n = normalize(WeightTuple::from_user(std::move(s)));
    if (n.scale != 1) throw InternalConsistency("weights did not reduce to a primitive tuple");
    return n.tuple;
}

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

void require(bool ok, Family f, const std::string& what) {
    if (!ok) throw InvalidInput(to_string(f) + ": " + what);
}

void require_count(const ConeInstance& in, std::size_t count) {
    require(in.exponents.size() == count, in.kind,
            "expects " + std::to_string(count) + " exponent" + (count == 1 ? "" : "s"));
}

void require_positive(const ConeInstance& in) {
    for (const auto& x : in.exponents) require(x > 0, in.kind, "exponents must be positive, got " + to_string(x));
}

}  // namespace

std::string to_string(Family f) { return family_names().at(f); }

Family parse_family(const std::string& name) {
    for (const auto& [f, n] : family_names()) {
        if (n == name) return f;
    }
    throw InvalidInput("unknown family '" + name + "'");
}

std::string to_string(SideConstraint::Kind k) {
    switch (k) {
        case SideConstraint::Kind::FixOne: return "fix-one";
        case SideConstraint::Kind::SumEq: return "sum-eq";
        case SideConstraint::Kind::AbsLeq: return "abs-leq";
        case SideConstraint::Kind::Leq: return "leq";
    }
    return "?";
}

std::string render(const SideConstraint& c) {
    switch (c.kind) {
        case SideConstraint::Kind::FixOne: return c.vars.at(0) + " = 1";
        case SideConstraint::Kind::SumEq: {
            std::string out;
            for (std::size_t i = 0; i < c.vars.size(); ++i) out += (i ? " + " : "") + c.vars[i];
            return out + " = " + c.rhs;
        }
        case SideConstraint::Kind::AbsLeq: return "|" + c.vars.at(0) + "| <= " + c.rhs;
        case SideConstraint::Kind::Leq: return c.vars.at(0) + " <= " + c.rhs;
    }
    return "";
}

std::vector<Rational> WgmInstance::exponents() const {
    std::vector<Rational> out;
    for (const auto& s : tuple.entries()) out.push_back(Rational(s, tuple.s_hat()));
    return out;
}

Conversion to_wgm(const ConeInstance& in) {
    using K = SideConstraint::Kind;
    Conversion out;
    const auto& e = in.exponents;
    switch (in.kind) {
        case Family::Wgm: {
            require(e.size() >= 2, in.kind, "needs at least two exponents");
            require_positive(in);
            require(sum(e) == 1, in.kind, "exponents must sum to 1, got " + to_string(sum(e)));
            auto xs = numbered("x", e.size());
            out.instances.push_back({tuple_of(e), xs, "x" + std::to_string(e.size() + 1)});
            break;
        }
        case Family::SubUnitWgm: {
            require(!e.empty(), in.kind, "needs at least one exponent");
            require_positive(in);
            require(sum(e) < 1, in.kind, "exponents must sum to less than 1, got " + to_string(sum(e)));
            auto w = e;
            w.push_back(1 - sum(e));
            auto xs = numbered("x", e.size());
            xs.push_back("y");
            out.instances.push_back({tuple_of(w), xs, "x" + std::to_string(e.size() + 1)});
            out.side.push_back({K::FixOne, {"y"}, ""});
            break;
        }
        case Family::PowerUp: {
            require_count(in, 1);
            require(e[0] > 1, in.kind, "needs lambda > 1, got " + to_string(e[0]));
            Rational inv = 1 / e[0];
            out.instances.push_back({tuple_of({inv, 1 - inv}), {"y", "z"}, "x"});
            out.side.push_back({K::FixOne, {"z"}, ""});
            break;
        }
        case Family::PowerDown: {
            require_count(in, 1);
            require(e[0] > 0 && e[0] < 1, in.kind, "needs 0 < lambda < 1, got " + to_string(e[0]));
            out.instances.push_back({tuple_of({e[0], 1 - e[0]}), {"x", "z"}, "y"});
            out.side.push_back({K::FixOne, {"z"}, ""});
            break;
        }
        case Family::NegPower: {
            require_count(in, 1);
            require(e[0] > 0, in.kind, "needs lambda > 0, got " + to_string(e[0]));
            Rational d = 1 + e[0];
            out.instances.push_back({tuple_of({e[0] / d, 1 / d}), {"x", "y"}, "z"});
            out.side.push_back({K::FixOne, {"z"}, ""});
            break;
        }
        case Family::NegPowerMulti: {
            require(!e.empty(), in.kind, "needs at least one exponent");
            require_positive(in);
            Rational d = 1 + sum(e);
            std::vector<Rational> w;
            for (const auto& x : e) w.push_back(x / d);
            w.push_back(1 / d);
            auto xs = numbered("x", e.size());
            xs.push_back("y");
            out.instances.push_back({tuple_of(w), xs, "z"});
            out.side.push_back({K::FixOne, {"z"}, ""});
            break;
        }
        case Family::PNorm: {
            require_count(in, 1);
            require(e[0] >= 1, in.kind, "needs p >= 1, got " + to_string(e[0]));
            require(in.dimension >= 1, in.kind, "needs dimension >= 1");
            const auto n = static_cast<std::size_t>(in.dimension);
            auto xs = numbered("x", n), ys = numbered("y", n), ws = numbered("w", n);
            Rational inv = 1 / e[0];
            for (std::size_t i = 0; i < n; ++i) {
                if (inv == 1) {
                    // p = 1: z^0 y_i >= w_i is linear
                    out.side.push_back({K::Leq, {ws[i]}, ys[i]});
                } else {
                    out.instances.push_back({tuple_of({1 - inv, inv}), {"z", ys[i]}, ws[i]});
                }
            }
            out.side.push_back({K::SumEq, ys, "z"});
            for (std::size_t i = 0; i < n; ++i) out.side.push_back({K::AbsLeq, {xs[i]}, ws[i]});
            break;
        }
        case Family::PowerCone: {
            require(e.size() >= 2, in.kind, "needs at least two exponents");
            require_positive(in);
            require(sum(e) == 1, in.kind, "exponents must sum to 1, got " + to_string(sum(e)));
            out.instances.push_back({tuple_of(e), numbered("x", e.size()), "y"});
            out.side.push_back({K::AbsLeq, {"z"}, "y"});
            break;
        }
    }
    return out;
}

ConstraintDocument emit_constraints(const WeightTuple& w, const Configuration& cfg,
                                    const std::vector<std::string>& names) {
    auto rec = reconstruct(cfg, w);
    if (!rec.valid()) throw RefuseToEmit("configuration does not represent " + w.str() + ": " + rec.reason);
    const int m = cfg.m();
    if (!names.empty() && names.size() != static_cast<std::size_t>(m + 1)) {
        throw InvalidInput("expected " + std::to_string(m + 1) + " variable names");
    }
    ConstraintDocument doc;
    for (int v = 1; v <= cfg.variable_count(); ++v) {
        if (names.empty()) {
            doc.variables.push_back("x" + std::to_string(v));
        } else if (v <= m + 1) {
            doc.variables.push_back(names[static_cast<std::size_t>(v - 1)]);
        } else {
            doc.variables.push_back("aux" + std::to_string(v - m - 1));
        }
    }
    auto name = [&](int v) { return doc.variables[static_cast<std::size_t>(v - 1)]; };
    for (const auto& t : cfg.triples()) doc.cones.push_back({name(t.i), name(t.j), name(t.t)});
    return doc;
}

std::string render_text(const ConstraintDocument& doc) {
    std::ostringstream os;
    for (const auto& c : doc.cones) os << c.a1 << " * " << c.a2 << " >= " << c.a3 << "^2\n";
    for (const auto& s : doc.side) os << render(s) << '\n';
    return os.str();
}

}  // namespace socrep
