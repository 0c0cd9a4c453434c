#pragma once

// JSON encodings shared by the CLI and the tests.
//
//   polygon      {"vertices": [["p/q", "r/s"], ...]}          canonical order
//   certificate  {"is_pip", "period", "coeffs": {"r": ["c0","c1","c2"]}, "i", "b", ...}
//   count        {"t", "total", "boundary", "interior"}
//   solutions    [[x, y, z, b], ...]
//   forest       {"roots": ["x,y,z", ...], "adjacency": {"x,y,z": ["x,y,z", ...]}}
//
// Integers are JSON numbers while they fit in int64 and decimal strings beyond.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pipkit/counting.hpp"
#include "pipkit/ehrhart.hpp"
#include "pipkit/polygon.hpp"
#include "pipkit/vieta.hpp"

namespace pipkit {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const RationalPolygon& p);
// Accepts vertices as "p/q" strings or integers, in any order; the hull is taken.
// Throws ParseError on malformed input and DegenerateHull on flat input.
RationalPolygon polygon_from_json(const Json& j);
RationalPolygon parse_polygon(std::string_view text);

Json to_json(const PipCertificate& c, const RationalPolygon& p);
Json to_json(const CountReport& r);
Json to_json(const VietaSolution& s);
Json to_json(const std::vector<VietaSolution>& list);
Json to_json(const JumpForest& f);
Json to_json(const std::vector<FamilyState>& fam);

}  // namespace pipkit
