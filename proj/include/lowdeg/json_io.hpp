#pragma once

#include <vector>

#include <json.hpp>

#include "lowdeg/projective.hpp"

namespace lowdeg::linalg {

using Json = nlohmann::ordered_json;

// Wire format:
//   rational      "p/q", or "p" when q == 1 (plain JSON integers are accepted on input)
//   prime field   {"val": r, "mod": p}
//   point         [scalar, ...]
//   subspace      {"ambient": n, "rows": [[scalar, ...], ...]}, plus "mod": p
//                 when rows is empty and the field is F_p
// Malformed text raises ParseError; well-formed values over mixed fields
// raise FieldMismatchError.

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j);

Json to_json(const ProjSubspace& s);
ProjSubspace subspace_from_json(const Json& j);

/// Parses a rational literal such as "-3/4" or "7". Throws ParseError.
Scalar parse_rational(const std::string& text);

}  // namespace lowdeg::linalg
