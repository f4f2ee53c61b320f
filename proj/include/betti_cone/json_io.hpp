#pragma once

#include <string>

#include <json.hpp>

#include "betti_cone/betti_diagram.hpp"
#include "betti_cone/cone.hpp"
#include "betti_cone/fan.hpp"
#include "betti_cone/functionals.hpp"
#include "betti_cone/resolver.hpp"

namespace betti::json {

using Json = nlohmann::ordered_json;

// Every from_json throws ParseError on malformed input and InvalidArgument
// on well-formed input that violates a type invariant.

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json ring_to_json(const RingSpec& ring);
RingSpec ring_from_json(const Json& j);

Json sequence_to_json(const DegreeSequence& d);
DegreeSequence sequence_from_json(const RingSpec& ring, const Json& j);

Json diagram_to_json(const BettiDiagram& v);
BettiDiagram diagram_from_json(const Json& j);

Json functional_to_json(const FunctionalId& f);
FunctionalId functional_from_json(const Json& j);
Json violation_to_json(const Violation& v);

Json decomposition_to_json(const RingSpec& ring, const Decomposition& dec);
Decomposition decomposition_from_json(const RingSpec& ring, const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"ring": ring | {"family":"poly","nvars":k}, "generators": [...],
///  "relations": [[{"row": r, "terms": [{"exp":[a,b],"c":"1"}]}], ...]}
Json presentation_to_json(const GradedPresentation& p);
GradedPresentation presentation_from_json(const Json& j);

Json multiplicity_to_json(const RingSpec& ring, const MultiplicityReport& r);
Json fan_report_to_json(const FanReport& r);

/// Parses text as JSON, mapping syntax errors to ParseError.
Json parse(const std::string& text);

}  // namespace betti::json
