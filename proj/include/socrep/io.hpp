#pragma once
// JSON forms of the library types ("socrep-v1"). Integers that fit in 64 bits
// are written as numbers, larger ones as decimal strings; readers accept both.

#include "socrep/configuration.hpp"
#include "socrep/core.hpp"
#include "socrep/exact.hpp"
#include "socrep/frontends.hpp"
#include "socrep/medseq.hpp"
#include "socrep/verify.hpp"

#include "json.hpp"

namespace socrep::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "socrep-v1";

Json integer(const Integer& v);
Integer read_integer(const Json& j);
Json rational(const Rational& v);
Json tuple(const WeightTuple& w);
WeightTuple read_tuple(const Json& j);

/// {"schema", "m", "s", "size", "triples": [[i, j, t], ...]}; "s" is omitted when w is empty.
Json configuration(const Configuration& cfg, const WeightTuple* w = nullptr);
/// Reads a configuration document. The tuple is returned when "s" is present.
std::pair<Configuration, std::optional<WeightTuple>> read_configuration(const Json& j);

Json bounds(const WeightTuple& w, const Bounds& b);
Json sequence(const MediatedSequence& seq);
Json tree(const MedTree& t);
/// {"valid", "verdict", "reason", "points"} with points as rational strings.
Json verdict(const ReconstructedSet& r);
Json numeric(const NumericReport& r);
Json conversion(const Conversion& c);
Json document(const ConstraintDocument& doc);

}  // namespace socrep::io
