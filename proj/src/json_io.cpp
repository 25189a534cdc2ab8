#include "gracelab/json_io.hpp"

#include <stdexcept>

namespace gracelab {

namespace {

std::vector<int> int_array(const json& j, const char* what)
{
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected a JSON array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + ": entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

json to_json(const EndoFunction& f) { return {{"n", f.size()}, {"f", values_json(f)}}; }

json values_json(const EndoFunction& f) { return json(std::vector<int>(f.values().begin(), f.values().end())); }

json values_json(const Permutation& p) { return json(std::vector<int>(p.image().begin(), p.image().end())); }

json values_json(const EdgeLabelSequence& labels) { return json(labels.labels()); }

EndoFunction function_from_json(const json& j)
{
    if (j.is_array()) return EndoFunction(int_array(j, "function"));
    if (j.is_object() && j.contains("f")) {
        EndoFunction f(int_array(j.at("f"), "function"));
        if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<int>() != f.size())) {
            throw std::invalid_argument("function: \"n\" disagrees with the length of \"f\"");
        }
        return f;
    }
    throw std::invalid_argument("function: expected an array or {\"n\": ..., \"f\": [...]}");
}

Permutation permutation_from_json(const json& j)
{
    if (j.is_object() && j.contains("sigma")) return Permutation(int_array(j.at("sigma"), "permutation"));
    return Permutation(int_array(j, "permutation"));
}

EdgeLabelSequence labels_from_json(const json& j) { return EdgeLabelSequence(int_array(j, "label sequence")); }

EndoFunction parse_function(const std::string& text) { return function_from_json(parse_text(text)); }
Permutation parse_permutation(const std::string& text) { return permutation_from_json(parse_text(text)); }
EdgeLabelSequence parse_labels(const std::string& text) { return labels_from_json(parse_text(text)); }

json witness_record(const EndoFunction& f, const SearchResult& result)
{
    json record = {{"f", values_json(f)}, {"witness", nullptr}, {"labels", nullptr},
                   {"nodes_explored", result.nodes_explored}};
    if (result.witness) {
        record["witness"] = values_json(*result.witness);
        record["labels"] = values_json(edge_labels(f, *result.witness));
    }
    return record;
}

json to_json(const GracefulExpansion& e)
{
    return {{"n", e.size()},
            {"gamma", values_json(e.gamma)},
            {"sign", e.sign},
            {"sigma_gamma", values_json(e.sigma_gamma)}};
}

json census_json(const MonoidCensus& c)
{
    return {{"n", c.n},
            {"forest_monoid_size", c.forest_monoid_size},
            {"tree_semigroup_size", c.tree_semigroup_size},
            {"union_count", c.union_count},
            {"cayley_formula", c.cayley_formula},
            {"match", c.union_matches()},
            {"forest_monoid_closed", c.forest_monoid_closed},
            {"tree_semigroup_closed", c.tree_semigroup_closed},
            {"conjugated_forests_distinct", c.conjugated_forests_distinct},
            {"lower_bound_family_count", c.lower_bound_family_count},
            {"lower_bound_family_size", c.lower_bound_family_size},
            {"lower_bound_families_distinct", c.lower_bound_families_distinct},
            {"lower_bound_families_closed", c.lower_bound_families_closed},
            {"lower_bound_closure_exhaustive", c.lower_bound_closure_exhaustive}};
}

std::string big_string(const BigValue& v) { return v.get_str(); }

json center_sums_report(const EndoFunction& f, const EndoFunction& g, int t, const CenterSumsCheck& check)
{
    return {{"n", f.size()},
            {"f", values_json(f)},
            {"g", values_json(g)},
            {"t", t},
            {"F", big_string(check.lhs)},
            {"grl", check.grl},
            {"aut", check.aut},
            {"rhs", big_string(check.rhs)},
            {"match", check.match}};
}

} // namespace gracelab
