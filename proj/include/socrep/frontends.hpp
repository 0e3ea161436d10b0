#pragma once
// Inequality families that reduce to weighted geometric means, and emission of
// the resulting rotated cone systems.

#include "socrep/configuration.hpp"
#include "socrep/core.hpp"
#include "socrep/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace socrep {

enum class Family { Wgm, SubUnitWgm, PowerUp, PowerDown, NegPower, NegPowerMulti, PNorm, PowerCone };

std::string to_string(Family f);
/// Accepts the names printed by to_string ("power-up", "p-norm", ...).
Family parse_family(const std::string& name);

/// Exponents are kept reduced. `dimension` is only read for p-norm.
struct ConeInstance {
    Family kind = Family::Wgm;
    std::vector<Rational> exponents;
    int dimension = 0;
};

struct SideConstraint {
    enum class Kind {
        FixOne,   // vars[0] = 1
        SumEq,    // vars[0] + ... + vars[k-1] = rhs
        AbsLeq,   // |vars[0]| <= rhs
        Leq,      // vars[0] <= rhs
    };
    Kind kind = Kind::FixOne;
    std::vector<std::string> vars;
    std::string rhs;
    friend bool operator==(const SideConstraint&, const SideConstraint&) = default;
};

std::string to_string(SideConstraint::Kind k);
std::string render(const SideConstraint& c);

/// prod inputs[i]^(s_i / s_hat) >= output.
struct WgmInstance {
    WeightTuple tuple;
    std::vector<std::string> inputs;
    std::string output;
    /// s_i / s_hat, reduced.
    std::vector<Rational> exponents() const;
};

struct Conversion {
    std::vector<WgmInstance> instances;
    std::vector<SideConstraint> side;
};

/// Throws InvalidInput naming the family restriction that fails.
Conversion to_wgm(const ConeInstance& instance);

struct Cone {
    std::string a1, a2, a3;  // a1 * a2 >= a3^2
};

struct ConstraintDocument {
    std::vector<std::string> variables;
    std::vector<Cone> cones;
    std::vector<SideConstraint> side;
};

/// Variables are x1..x{m+n} unless `names` supplies the first m+1 of them, in
/// which case auxiliaries become aux1, aux2, ...  Throws RefuseToEmit when the
/// configuration does not reconstruct for w.
ConstraintDocument emit_constraints(const WeightTuple& w, const Configuration& cfg,
                                    const std::vector<std::string>& names = {});

/// One cone per line, "x1 * x2 >= x3^2", then side constraints.
std::string render_text(const ConstraintDocument& doc);

}  // namespace socrep
