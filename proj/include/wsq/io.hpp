#pragma once

// JSON encodings shared by the command-line tool and the tests.
//   KSubset       [1,3,5]
//   MinorIndex    {"A":[1],"B":[2],"k":2,"m":2}
//   WSCollection  {"k":3,"n":6,"sets":[[1,2,3],...]}
//   values        {"[1,3]":"2","[2,4]":"3/2"}  (rationals as strings)

#include <istream>

#include "json.hpp"
#include "wsq/collection.hpp"
#include "wsq/positivity.hpp"
#include "wsq/wiring.hpp"

namespace wsq::io {

using nlohmann::json;

json to_json(const KSubset& s);
KSubset ksubset_from_json(const json& j, int n);

json to_json(const MinorIndex& mi);
MinorIndex minor_from_json(const json& j);

json to_json(const WSCollection& c);
/// Rejects malformed input with PreconditionError; does not require weak
/// separation (callers validate when they need it).
WSCollection collection_from_json(const json& j);

json to_json(const MoveSpec& mv);
json to_json(const Chamber& ch);

json to_json(const PluckerVector<Rational>& v);
json to_json(const PluckerVector<double>& v);
/// Keys "[i,j,...]" or "i,j,..."; values are strings ("3/2") or integers.
PluckerVector<Rational> values_from_json(const json& j, int k, int n);

/// Parses a whole JSON document, mapping syntax errors to PreconditionError.
json parse_json(std::istream& in, const std::string& what);

}  // namespace wsq::io
