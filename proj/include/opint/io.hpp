#pragma once

// JSON forms of categories, operads, integrations, trees, reports and
// certificates.

#include "opint/equivalence.hpp"
#include "opint/trees.hpp"

#include <json.hpp>

namespace opint {

using Json = nlohmann::ordered_json;

Json to_json(const Surjection& g);
/// Accepts {"dom","cod","values"} or the textual form.
Surjection surjection_from_json(const Json& j);

/// {"objects", "morphisms":[{"id","name","src","dst"}], "identities", "comp"}.
Json to_json(const FinCat& c);
/// Also accepts {"poset":{"elements", "le":[[a,b],...]}}: a → b for every
/// listed pair, closed under reflexivity and transitivity.
FinCat fincat_from_json(const Json& j);

/// {"name","bound","unit","components","mu":[{"g","graph","graph_mor"}]}.
Json to_json(const TruncatedOperad& p);
/// "graph_mor" may be omitted when every component is thin.
TruncatedOperad operad_from_json(const Json& j);

/// "L" for the leaf, an array of children otherwise.
Json to_json(const PlanarTree& t);
PlanarTree tree_from_json(const Json& j);

/// {"zero_cells", "homs":{"i|j": FinCat}, "pi":{cell: cardinality}}.
Json to_json(const OperadicTwoCat& o);

Json to_json(const CheckReport& r);
Json to_json(const std::vector<CheckReport>& rs);
Json to_json(const OperadCertificate& c);
Json to_json(const TwoCatCertificate& c);

/// Parses text, rethrowing parse errors as Input errors carrying the byte
/// position.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

} // namespace opint
