#pragma once

#include "gracelab/certificate.hpp"
#include "gracelab/endofunction.hpp"
#include "gracelab/labeling.hpp"
#include "gracelab/monoid.hpp"
#include "gracelab/permutation.hpp"

#include <json.hpp>

#include <string>

namespace gracelab {

using json = nlohmann::json;

/// {"n": 6, "f": [0,0,0,0,3,3]}
json to_json(const EndoFunction& f);
json values_json(const EndoFunction& f);
json values_json(const Permutation& p);
json values_json(const EdgeLabelSequence& labels);

/// Accepts either a bare array or the {"n", "f"} object form; throws
/// std::invalid_argument on anything else, including n disagreeing with the
/// array length.
EndoFunction function_from_json(const json& j);
Permutation permutation_from_json(const json& j);
EdgeLabelSequence labels_from_json(const json& j);

/// Parses text then applies the matching *_from_json; malformed text raises
/// std::invalid_argument.
EndoFunction parse_function(const std::string& text);
Permutation parse_permutation(const std::string& text);
EdgeLabelSequence parse_labels(const std::string& text);

/// {"f", "witness", "labels", "nodes_explored"}; witness and labels are null
/// when nothing was found.
json witness_record(const EndoFunction& f, const SearchResult& result);

json to_json(const GracefulExpansion& e);
json census_json(const MonoidCensus& c);

/// Decimal string form used for every big integer in reports.
std::string big_string(const BigValue& v);

json center_sums_report(const EndoFunction& f, const EndoFunction& g, int t, const CenterSumsCheck& check);

} // namespace gracelab
