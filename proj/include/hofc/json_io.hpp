#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hofc/finite_n.hpp"
#include "hofc/multfn.hpp"
#include "hofc/partitioned_permutation.hpp"
#include "hofc/series.hpp"
#include "hofc/weingarten.hpp"

namespace hofc {

using Json = nlohmann::json;

// Exact values are always "p/q" strings.
Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

// [{"diagram":[3,1],"value":"-4/1"}, ...]
Json multfn_to_json(const MultFn& f);
// With an alphabet the list is wrapped: {"alphabet":[...],"order":n,"values":[...]}.
Json multfn_to_json(const MultFn& f, const std::vector<std::string>& alphabet);
// Accepts both forms. Without "order" the bound is the largest diagram size.
MultFn multfn_from_json(const Json& j, std::vector<std::string>* alphabet = nullptr);

// {"trunc":12,"coeffs":{"(2)":"1/1"}} and {"trunc":12,"coeffs":{"(2,2)":"2/1"}}; zeros are omitted.
Json series_to_json(const Series1& s);
Json series_to_json(const Series2& s);
Series1 series1_from_json(const Json& j);
Series2 series2_from_json(const Json& j);

// {"n":2,"N":"7/1","wg":{"(1,1)":"1/48","(2)":"-1/336"}}
Json wg_to_json(const WeingartenTable& t);
WeingartenTable wg_from_json(const Json& j);

// {"N":"7/1","values":[multfn list]}
Json finite_n_to_json(const FiniteNTable& t);
FiniteNTable finite_n_from_json(const Json& j);

// {"blocks":[[1,3],[2]],"perm_cycles":[[1,3],[2]]}, 1-based.
Json pp_to_json(const PP& x);
PP pp_from_json(const Json& j);

// Parses text, turning syntax errors into ParseError.
Json parse_json(const std::string& text);

}  // namespace hofc
