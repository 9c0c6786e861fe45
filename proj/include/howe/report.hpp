#pragma once

#include <string>

#include "json.hpp"

#include "howe/branching.hpp"
#include "howe/singular.hpp"
#include "howe/weylmodule.hpp"

namespace howe {

using Json = nlohmann::ordered_json;

Json params_json(const ModuleParams& params);

/// [{offsets: [...], coeff: "p/q"}] in lexicographic offset order.
Json weight_vector_json(const WeightVector& v);

/// {b, c, terms: [{k: [...], coeff: "p/q"}]} with terms in lexicographic k order.
Json hwv_json(const ModuleParams& params, const HwvLabel& label, const WeightVector& v);

Json module_label_json(const ModuleLabel& label);

/// Human-readable label such as "L(1/2,0,-3/2)" or "V(0)".
std::string module_label_text(const ModuleLabel& label);

Json report_json(const BranchingReport& report);
std::string report_markdown(const BranchingReport& report);

Json series_json(const ModuleParams& params, const SeriesDetail& detail, std::uint64_t seed);
std::string series_markdown(const ModuleParams& params, const SeriesDetail& detail);

}  // namespace howe
