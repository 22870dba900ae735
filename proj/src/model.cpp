#include "wexsim/model.hpp"

#include <stdexcept>

namespace wexsim {

const char* to_string(InitDistribution init) {
  switch (init) {
    case InitDistribution::EqualUnit:
      return "equal";
    case InitDistribution::UniformOpen02:
      return "uniform";
  }
  throw std::logic_error("unreachable InitDistribution");
}

InitDistribution init_from_string(std::string_view text) {
  if (text == "equal") return InitDistribution::EqualUnit;
  if (text == "uniform") return InitDistribution::UniformOpen02;
  throw std::invalid_argument("unknown init '" + std::string(text) + "' (expected equal or uniform)");
}

namespace {

ModelSpec jv_basic() {
  ModelSpec m;
  m.name = "JV-B";
  m.exchange.kind = ExchangeRule::Kind::JVBasic;
  return m;
}

ModelSpec jv_responsibility(const char* name) {
  ModelSpec m;
  m.name = name;
  m.exchange.kind = ExchangeRule::Kind::JVResponsibility;
  return m;
}

ModelSpec jv_redistributed(const char* name, FactorKey key) {
  ModelSpec m = jv_responsibility(name);
  m.redistribution.enabled = true;
  m.redistribution.key = key;
  return m;
}

ModelSpec we_pooled(const char* name, FactorKey key) {
  ModelSpec m;
  m.name = name;
  m.exchange.kind = ExchangeRule::Kind::WEPooled;
  m.exchange.distribution_key = key;
  return m;
}

struct PresetRow {
  const char* name;
  const char* description;
  ModelPreset preset;
};

std::vector<PresetRow> build_presets() {
  auto with_fr = [](ModelSpec m) {
    m.free_rider_enabled = true;
    return m;
  };

  std::vector<PresetRow> rows;
  rows.push_back({"JV-B", "basic joint venture: all non-saved wealth committed",
                  {jv_basic(), std::nullopt}});
  rows.push_back({"JV-M", "joint venture with responsibility-weighted commitments",
                  {jv_responsibility("JV-M"), std::nullopt}});
  rows.push_back({"JV-M-M", "JV-M plus periodic redistribution paid out by responsibility",
                  {jv_redistributed("JV-M-M", FactorKey::M), std::nullopt}});
  rows.push_back({"JV-M-R", "JV-M plus periodic redistribution paid out by vulnerability",
                  {jv_redistributed("JV-M-R", FactorKey::R), std::nullopt}});
  rows.push_back({"JV-M-MR", "JV-M plus periodic redistribution paid out by the combined factor",
                  {jv_redistributed("JV-M-MR", FactorKey::MR), std::nullopt}});
  rows.push_back({"WE-M-M", "pooled exchange split by responsibility ratio",
                  {we_pooled("WE-M-M", FactorKey::M), std::nullopt}});
  rows.push_back({"WE-M-R", "pooled exchange split by vulnerability ratio",
                  {we_pooled("WE-M-R", FactorKey::R), std::nullopt}});
  rows.push_back({"WE-M-MR", "pooled exchange split by the combined factor ratio",
                  {we_pooled("WE-M-MR", FactorKey::MR), std::nullopt}});
  rows.push_back({"JV-M-M-FR", "JV-M-M with agent j free-riding at rate r_f",
                  {with_fr(jv_redistributed("JV-M-M-FR", FactorKey::M)), std::nullopt}});
  rows.push_back({"WE-M-M-FR", "WE-M-M with agent j free-riding at rate r_f",
                  {with_fr(we_pooled("WE-M-M-FR", FactorKey::M)), std::nullopt}});
  rows.push_back({"JV-M-M-IR", "JV-M-M started from uniform random wealth in (0, 2)",
                  {jv_redistributed("JV-M-M-IR", FactorKey::M), InitDistribution::UniformOpen02}});
  rows.push_back({"WE-M-M-IR", "WE-M-M started from uniform random wealth in (0, 2)",
                  {we_pooled("WE-M-M-IR", FactorKey::M), InitDistribution::UniformOpen02}});
  return rows;
}

const std::vector<PresetRow>& presets() {
  static const std::vector<PresetRow> rows = build_presets();
  return rows;
}

}  // namespace

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& row : presets()) out.emplace_back(row.name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& model_descriptions() {
  static const std::vector<std::string> descriptions = [] {
    std::vector<std::string> out;
    for (const auto& row : presets()) out.emplace_back(row.description);
    return out;
  }();
  return descriptions;
}

ModelPreset named_preset(std::string_view name) {
  for (const auto& row : presets()) {
    if (name == row.name) return row.preset;
  }
  std::string message = "unknown model '" + std::string(name) + "'; valid models:";
  for (const auto& row : presets()) {
    message += ' ';
    message += row.name;
  }
  throw std::invalid_argument(message);
}

}  // namespace wexsim
