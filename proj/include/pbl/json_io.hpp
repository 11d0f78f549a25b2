#pragma once

#include "json.hpp"

#include "pbl/matrix.hpp"
#include "pbl/poly.hpp"
#include "pbl/rational.hpp"

namespace pbl {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings; plain JSON integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);

// Array of rows, each an array of "p/q" strings.
Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

// {"blocks": [{"name", "arity"}...], "terms": [{"exponents": [[...] per block], "coefficient": "p/q"}...]}
Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

}  // namespace pbl
