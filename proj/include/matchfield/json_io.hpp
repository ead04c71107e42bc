#pragma once

#include <json.hpp>

#include "matchfield/ehrhart.hpp"
#include "matchfield/equivalence.hpp"
#include "matchfield/matching_field.hpp"
#include "matchfield/mutation.hpp"
#include "matchfield/pluecker.hpp"
#include "matchfield/poset.hpp"
#include "matchfield/polytope.hpp"

// JSON forms of the library types. Keys keep insertion order so output is byte-stable;
// rationals are strings in canonical form.
namespace matchfield::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const RationalVector& values);
Json to_json(const PosetElement& element);
Json to_json(const std::vector<PosetElement>& elements);
Json to_json(const GrassmannPoset& poset);
Json to_json(const MatchingField& field);
Json to_json(const WeightMatrix& weights);
Json to_json(const LatticePolytope& polytope);
Json to_json(const EhrhartPolynomial& polynomial);
Json to_json(const EhrhartResult& result);
Json to_json(const Triple& triple);
Json to_json(const MutationData& data);
Json to_json(const VertexValue& value);
Json to_json(const MutationCertificate& certificate, bool witnesses);
Json to_json(const StepReport& step, bool witnesses);
Json to_json(const ChainReport& report, bool witnesses);
Json to_json(const EquivalenceReport& report);
Json to_json(const InitialTerm& term);
Json to_json(const InducedWeight& weight);
Json to_json(const PlueckerTerm& term);
Json to_json(const PlueckerRelation& relation);
Json to_json(const InitialForm& form);

Rational rational_from_json(const Json& j);
WeightMatrix weight_matrix_from_json(const Json& j);
/// Accepts {"k","n","tuples":[{"set","tuple"}]} or a bare array of tuples.
MatchingField matching_field_from_json(const Json& j);
LatticePolytope polytope_from_json(const Json& j);

}  // namespace matchfield::json_io
