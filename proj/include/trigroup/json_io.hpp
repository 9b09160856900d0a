#pragma once

#include <json.hpp>
#include <string>

#include "trigroup/cayley.hpp"
#include "trigroup/chain.hpp"
#include "trigroup/complex.hpp"
#include "trigroup/diagram.hpp"
#include "trigroup/enumeration.hpp"
#include "trigroup/fulfillment.hpp"
#include "trigroup/presentation.hpp"
#include "trigroup/thresholds.hpp"

namespace trigroup::json {

using Json = nlohmann::ordered_json;

/// Parses text, reporting syntax errors as ErrorCode::Parse.
Json parse(const std::string& text);

/// Words are strings over a-z / A-Z when m <= 26, signed 1-based index
/// arrays otherwise. Both forms are accepted on input.
Json word_to_json(const Word& w);
Word word_from_json(std::uint32_t m, const Json& j, const std::string& field);

/// {"m", "d": "p/q", "seed", "relators": [...]}
Json presentation_to_json(const TriangularPresentation& p);
TriangularPresentation presentation_from_json(const Json& j);

/// {"vertices": V, "edges": [[u, v], ...], "faces": [{"index": i, "boundary": [+-e, ...]}]}
/// Vertices and edges are 0-based; boundary entries are 1-based edge ids,
/// negative for reversed traversal. Without "vertices", "edges" may be an
/// edge count and vertices come from the finest gluing.
Json complex_to_json(const AbstractLabelledComplex& y);
AbstractLabelledComplex complex_from_json(const Json& j);

Json diagram_to_json(const VanKampenDiagram& d, std::uint32_t m);

/// {"m", "radius", "vertices": [{"distance", "closed", "next": [id | null, ...]}]}
Json ball_to_json(const BallGraph& g);
BallGraph ball_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Json surd_to_json(const Surd& x, unsigned precision);

Json isoperimetric_to_json(const IsoperimetricReport& r, bool include_records);
Json constants_to_json(const ConstantsReport& r, unsigned precision);
Json fig1_to_json(const Fig1Report& r);
Json chain_to_json(const ChainReport& r);
Json slim_to_json(const SlimEstimate& e);

}  // namespace trigroup::json
