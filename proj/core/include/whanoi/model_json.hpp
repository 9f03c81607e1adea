#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "whanoi/models.hpp"

namespace whanoi::models {

/// Malformed model JSON. what() names the offending location, e.g.
/// "$.w[1]: expected a cost string such as \"7\", \"3/2\" or \"inf\"".
class SpecError : public std::invalid_argument {
 public:
  SpecError(const std::string& path, const std::string& message)
      : std::invalid_argument(path + ": " + message), path_(path) {}
  [[nodiscard]] const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Costs are written as strings ("7", "3/2", "inf"); plain nonnegative JSON
// integers are accepted on input.
nlohmann::json cost_to_json(const Cost& cost);
Cost cost_from_json(const nlohmann::json& j, const std::string& path = "$");

/// {"a": [...], "b": "0", "seeds": [...]}
nlohmann::json seq_spec_to_json(const SeqSpec& spec);
SeqSpec seq_spec_from_json(const nlohmann::json& j, const std::string& path = "$");

/// {"poly": [c0, c1, ...]} | {"seq": "<sequence name>"} | {"recurrence": {...}}
nlohmann::json alpha_to_json(const AlphaSource& alpha);
AlphaSource alpha_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::json model_to_json(const ModelSpec& model);
ModelSpec model_from_json(const nlohmann::json& j);
/// Parses JSON text; syntax errors are reported as SpecError too.
ModelSpec parse_model(std::string_view text);

}  // namespace whanoi::models
