#pragma once

#include <string>
#include <vector>

#include "magicpol/atomdata.hpp"

#ifndef MAGICPOL_DATA_DIR
#define MAGICPOL_DATA_DIR "data"
#endif

namespace testsupport {

inline std::string data_path(const std::string& name) {
  return std::string(MAGICPOL_DATA_DIR) + "/" + name;
}

inline magicpol::LevelTable load_bundled_levels() {
  return magicpol::LevelTable::load(data_path("rb_levels.csv"));
}

inline magicpol::DipoleTable load_bundled_dipoles(
    const magicpol::LevelTable& levels) {
  return magicpol::DipoleTable::load(data_path("rb_dipoles.csv"), levels);
}

/// The ground-state model as configured for the bundled dataset: channels up
/// to 8p, core 9.1(5%), tail +0.2 - 0.3 = -0.1.
inline magicpol::PolarizabilityModel bundled_5s_model(
    const magicpol::LevelTable& levels, const magicpol::DipoleTable& dipoles) {
  magicpol::ModelConfig cfg;
  cfg.tail_alpha = -0.1;
  return magicpol::build_model(levels.require("5s1/2"), levels, dipoles, cfg);
}

/// The 15s Rydberg model: channels 5p..23p, core 9.1(5%), no tail constant.
inline magicpol::PolarizabilityModel bundled_15s_model(
    const magicpol::LevelTable& levels, const magicpol::DipoleTable& dipoles) {
  return magicpol::build_model(levels.require("15s1/2"), levels, dipoles, {});
}

/// Minimal synthetic level set: a 1s-like target plus np intermediates with
/// the given (energy, D, sigma) channel data. Useful for formula-level tests.
struct SyntheticChannel {
  double energy_cm1;
  int n;
  int two_j;
  double d_value;
  double d_unc;
};

inline std::pair<magicpol::LevelTable, magicpol::DipoleTable> synthetic_dataset(
    const std::vector<SyntheticChannel>& channels) {
  using namespace magicpol;
  std::vector<Level> levels;
  levels.push_back({"1s1/2", 1, 0, 1, 0.0, "synthetic"});
  std::vector<ReducedDipole> dipoles;
  for (const auto& ch : channels) {
    LevelKey key{ch.n, 1, ch.two_j};
    std::string label = format_level_label(key);
    levels.push_back({label, ch.n, 1, ch.two_j, ch.energy_cm1, "synthetic"});
    dipoles.push_back({"1s1/2", label, ch.d_value, ch.d_unc, "synthetic"});
  }
  LevelTable lt = LevelTable::from_rows(std::move(levels));
  DipoleTable dt = DipoleTable::from_rows(std::move(dipoles), lt);
  return {std::move(lt), std::move(dt)};
}

}  // namespace testsupport
