#pragma once

#include <json.hpp>

#include "ttstar/loop_matrix.hpp"

namespace ttstar {

// JSON schema (see docs/formats.md):
//   Rational  -> string "p/q" (or "p" when the denominator is 1)
//   APoly     -> object { "<a-exponent>": Rational, ... }
//   ZLoop     -> object { "<z-exponent>": APoly, ... }
//   BiSeries  -> { "truncation": N, "terms": [ {"n":n,"m":m,"coeff":ZLoop}, ... ] }
//   LoopMatrix-> { "dim": d, "truncation": N, "entries": [[BiSeries,...],...] }
// Exponent keys and term lists are emitted in increasing order, so encoding
// is deterministic; decode(encode(x)) == x exactly.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const APoly& p);
Json to_json(const ZLoop& p);
Json to_json(const BiSeries& s);
Json to_json(const LoopMatrix& m);

Rational rational_from_json(const Json& j);
APoly apoly_from_json(const Json& j);
ZLoop zloop_from_json(const Json& j);
BiSeries biseries_from_json(const Json& j);
LoopMatrix loop_matrix_from_json(const Json& j);

}  // namespace ttstar
