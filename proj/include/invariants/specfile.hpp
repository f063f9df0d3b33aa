#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>

#include "invariants/band_operator.hpp"
#include "invariants/walk_parameters.hpp"

namespace invariants {

/// Input-file problem: malformed JSON, schema violation, or a constraint
/// failure. Maps to exit code 2 at the CLI.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Operator files carry {"format": 1, "n", "k", "coefficients": [...]}
/// with 1-based component indices and complex numbers as [re, im] pairs;
/// see the README for the full schema.
BandOperator parse_operator_spec(const nlohmann::json& j);
BandOperator load_operator_spec(const std::string& path);
nlohmann::json operator_spec_to_json(const BandOperator& a);

/// Walk files carry {"format": 1, "p", "q", "a", "b"} where p and a are
/// real-valued sequences and q and b complex ones; unit-norm constraints
/// are enforced at parse time.
WalkParameters parse_walk_spec(const nlohmann::json& j);
WalkParameters load_walk_spec(const std::string& path);
nlohmann::json walk_spec_to_json(const WalkParameters& params);

}  // namespace invariants
