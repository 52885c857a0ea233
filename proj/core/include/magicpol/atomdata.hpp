#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace magicpol {

/// One fine-structure atomic state. Energies are stored in cm^-1 relative to
/// the ground state (the file unit) and converted to a.u. only at evaluation.
struct Level {
  std::string label;   // e.g. "5s1/2", "15p3/2"
  int n = 0;           // principal quantum number, >= 1
  int l = 0;           // orbital angular momentum, >= 0
  int two_j = 0;       // 2j, so j=1/2 -> 1, j=3/2 -> 3
  double energy_cm1 = 0.0;
  std::string source;

  bool operator==(const Level&) const = default;
};

struct LevelKey {
  int n, l, two_j;
  auto operator<=>(const LevelKey&) const = default;
};

inline LevelKey key_of(const Level& lv) { return {lv.n, lv.l, lv.two_j}; }

/// "15p3/2" -> Level quantum numbers (label/energy left empty).
/// Accepts n + orbital letter (s..h) + j as "1/2"-style fraction; the
/// fraction may be omitted for l=0. Returns nullopt on malformed input.
std::optional<LevelKey> parse_level_label(std::string_view label);

/// Canonical label for quantum numbers, e.g. {5,1,3} -> "5p3/2".
std::string format_level_label(const LevelKey& key);

/// Electric-dipole selection rules: |l_a - l_b| = 1 and |j_a - j_b| <= 1.
bool dipole_allowed(const Level& a, const Level& b);

/// A reduced electric-dipole matrix element <a||D||b> in a.u., sign as
/// tabulated, with a non-negative 1-sigma uncertainty.
struct ReducedDipole {
  std::string state_a;
  std::string state_b;
  double value_au = 0.0;
  double uncertainty_au = 0.0;
  std::string source;

  bool operator==(const ReducedDipole&) const = default;
};

/// Validated, indexed set of levels. Immutable after construction; all
/// queries are read-only and safe for concurrent use.
class LevelTable {
 public:
  /// Loads and validates a levels CSV (header: label,n,l,two_j,energy_cm1,
  /// source). Throws DataError naming the offending line on duplicate
  /// (n,l,two_j), j not in {l-1/2, l+1/2}, j <= 0, non-finite energy,
  /// label/quantum-number mismatch, or missing energy-0 ground state.
  static LevelTable load(const std::string& path);

  /// Builds a table from in-memory rows, applying the same validation.
  static LevelTable from_rows(std::vector<Level> rows);

  /// Re-serializes to the load format; a saved table reloads identically.
  void save(const std::string& path) const;

  const Level& ground() const { return rows_[ground_index_]; }
  const Level* find(std::string_view label) const;
  const Level* find(const LevelKey& key) const;
  /// find() or DataError.
  const Level& require(std::string_view label) const;

  std::span<const Level> all() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  bool operator==(const LevelTable& other) const {
    return rows_ == other.rows_;
  }

 private:
  std::vector<Level> rows_;  // sorted by energy
  std::size_t ground_index_ = 0;
};

/// Validated set of reduced dipole matrix elements, resolved against a
/// LevelTable. Pairs are unordered and unique.
class DipoleTable {
 public:
  /// Loads a dipoles CSV (header: state_a,state_b,reduced_me_au,
  /// uncertainty_au,source). Throws DataError on unresolved labels,
  /// selection-rule violations, negative uncertainty, or duplicate pairs.
  static DipoleTable load(const std::string& path, const LevelTable& levels);
  static DipoleTable from_rows(std::vector<ReducedDipole> rows,
                               const LevelTable& levels);

  void save(const std::string& path) const;

  /// Lookup is unordered: find("a","b") == find("b","a").
  const ReducedDipole* find(std::string_view a, std::string_view b) const;

  std::span<const ReducedDipole> all() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  bool operator==(const DipoleTable& other) const {
    return rows_ == other.rows_;
  }

 private:
  std::vector<ReducedDipole> rows_;
};

/// Constants attached to a polarizability model.
struct ModelConfig {
  int n_max = 23;                       // channel truncation bound
  double core_alpha = 9.1;              // a0^3, Rb+ core value
  double core_alpha_rel_unc = 0.05;     // fraction
  double tail_alpha = 0.0;              // a0^3, per target state
  double exclusion_halfwidth = 1e-6;    // a.u. of omega around each resonance
};

struct Channel {
  Level intermediate;
  ReducedDipole dipole;

  bool operator==(const Channel&) const = default;
};

/// Everything needed to evaluate the sum-over-states polarizability of one
/// target state: the dipole-coupled np channels plus core/tail constants.
struct PolarizabilityModel {
  Level target;
  std::vector<Channel> channels;  // ascending (n, two_j)
  int n_max = 23;
  double core_alpha = 0.0;
  double core_alpha_rel_unc = 0.0;
  double tail_alpha = 0.0;
  double exclusion_halfwidth = 1e-6;

  bool operator==(const PolarizabilityModel&) const = default;
};

using WarningSink = std::function<void(const std::string&)>;

/// Assembles the model for an s-state target: all np_{1/2} and np_{3/2}
/// levels with an available dipole to the target and n <= n_max, ordered by
/// (n, j). Fine-structure pairs missing one j component produce a warning,
/// not an error. Throws ModelError for non-s targets (unsupported in v1) or
/// when no channels are found.
PolarizabilityModel build_model(const Level& target, const LevelTable& levels,
                                const DipoleTable& dipoles,
                                const ModelConfig& config = {},
                                const WarningSink& warn = {});

/// A near-degeneracy between a level pair's transition energy and a target
/// transition energy.
struct Coincidence {
  Level a;
  Level b;
  double delta_e_cm1 = 0.0;         // |E_a - E_b|
  double target_delta_e_cm1 = 0.0;  // reference transition energy
  double mismatch_cm1 = 0.0;        // |delta_e - target_delta_e|
};

/// All unordered level pairs whose transition energy lies within `tolerance`
/// of the target pair's, sorted ascending by mismatch (ties by labels). The
/// target pair itself is excluded. With dipole_allowed_only (default), only
/// E1-allowed pairs are considered.
std::vector<Coincidence> find_coincidences(const LevelTable& levels,
                                           const Level& target_a,
                                           const Level& target_b,
                                           double tolerance_cm1,
                                           bool dipole_allowed_only = true);

}  // namespace magicpol
