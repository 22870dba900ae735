#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wexsim/factors.hpp"

namespace wexsim {

enum class InitDistribution {
  EqualUnit,      // every agent starts with m = 1
  UniformOpen02,  // independent draws from the open interval (0, 2)
};

const char* to_string(InitDistribution init);
InitDistribution init_from_string(std::string_view text);

struct ExchangeRule {
  enum class Kind { JVBasic, JVResponsibility, WEPooled };

  Kind kind = Kind::JVBasic;
  FactorKey distribution_key = FactorKey::M;  // WEPooled split weights only
};

struct RedistributionRule {
  bool enabled = false;
  FactorKey key = FactorKey::M;  // payout weights; collection is always rho_m
};

// One named wealth-exchange model: which pairwise rule runs every step,
// whether stocks are periodically redistributed and by which key, and
// whether the second agent of each pair free-rides.
struct ModelSpec {
  std::string name;
  ExchangeRule exchange;
  RedistributionRule redistribution;
  bool free_rider_enabled = false;
};

// A preset may also override the initial distribution (the -IR variants).
struct ModelPreset {
  ModelSpec model;
  std::optional<InitDistribution> init_override;
};

// The 12 built-in model names, in canonical order.
const std::vector<std::string>& model_names();

// One-line description per model, aligned with model_names().
const std::vector<std::string>& model_descriptions();

// Looks up a preset by name; throws std::invalid_argument listing the valid
// names when the name is unknown.
ModelPreset named_preset(std::string_view name);

}  // namespace wexsim
