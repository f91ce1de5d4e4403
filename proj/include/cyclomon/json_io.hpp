#pragma once

// JSON instance (de)serialization, report fragments for the CLI, and a
// deterministic instance hash for traceable reports.
//
// Instance schema:
//   { "dimension": d, "graph": [ [[s...],[s_star...]], ... ], "n": k,
//     "B": [[row]...] (optional, zero map), "w_star": [...] (optional, zero),
//     "tolerances": {"feas_tol","num_tol","opt_tol","max_iter"} (optional) }

#include <json.hpp>

#include "cyclomon/conjugate.hpp"
#include "cyclomon/core.hpp"
#include "cyclomon/extension.hpp"
#include "cyclomon/monotonicity.hpp"

namespace cyclomon {

/// Parses and normalizes an instance; duplicate graph pairs are removed with
/// a warning recorded on the instance. Throws ParseError naming the
/// offending field. base_tolerances seeds the defaults that an instance-level
/// tolerances object overrides.
ExtensionInstance load_instance(const std::string& text,
                                const Tolerances& base_tolerances = Tolerances{});
ExtensionInstance load_instance_file(const std::string& path,
                                     const Tolerances& base_tolerances = Tolerances{});

std::string write_instance(const ExtensionInstance& instance);

/// FNV-1a over the canonical serialized form.
std::string instance_hash(const ExtensionInstance& instance);

/// Applies a JSON tolerances object (e.g. from an environment variable) on
/// top of the given defaults.
Tolerances tolerances_from_json(const nlohmann::json& j, Tolerances base,
                                const std::string& context);

nlohmann::json to_json(const Vector& v);
nlohmann::json monotonicity_to_json(const MonotonicityReport& rep);  // 1-based labels
nlohmann::json hypothesis_to_json(const HypothesisReport& rep);
nlohmann::json extension_to_json(const ExtensionResult& res);
nlohmann::json tolerances_to_json(const Tolerances& tols);
nlohmann::json potential_to_json(const MaxAffineFunction& f);
nlohmann::json gap_to_json(const DualityGapReport& rep);

}  // namespace cyclomon
