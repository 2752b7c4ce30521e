#pragma once

#include <nlohmann/json_fwd.hpp>

#include "boxspec/factor_domains.hpp"

namespace boxspec {

/// Parse one custom-factor JSON object. base_pointer prefixes the JSON
/// pointer reported on schema violations (e.g. "/factors/0").
Custom custom_from_json(const nlohmann::json& j, const std::string& base_pointer,
                        double cutoff, double merge_tol = kDefaultMergeTol);

}  // namespace boxspec
