#pragma once

#include <optional>
#include <vector>

#include "magicpol/atomdata.hpp"
#include "magicpol/polarizability.hpp"

namespace magicpol {

/// A pole of the sum-over-states: omega = |E_intermediate - E_target|.
struct Resonance {
  Level target;
  Level intermediate;
  double omega_au = 0.0;
  double lambda_nm = 0.0;
};

/// One resonance per channel, sorted ascending in omega.
std::vector<Resonance> list_resonances(const PolarizabilityModel& model);

struct OmegaRange {
  double lo = 0.0;
  double hi = 0.0;
};

struct SolverOptions {
  /// Grid step used to locate sign changes inside each pole-free interval.
  double scan_resolution = 2e-6;  // a.u.
  /// Refinement stops when the bracket narrows to this...
  double omega_tolerance = 1e-9;  // a.u.
  /// ...or the residual drops below this, whichever happens first.
  double alpha_tolerance = 1e-3;  // a0^3
};

/// What the ground-state polarizability was matched against.
enum class MatchReference { Model, Zero, FreeElectron };

/// A solved matching frequency with its guaranteed enclosure.
struct MagicPoint {
  double omega_au = 0.0;
  double lambda_nm = 0.0;
  Level ground;
  std::optional<Level> rydberg;  // set only for MatchReference::Model
  MatchReference reference = MatchReference::Model;
  double alpha_at_match = 0.0;  // total_alpha(ground, omega)
  double residual = 0.0;        // g(omega) at the returned root
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Roots of total_alpha(model, omega) = 0 inside [range.lo, range.hi].
/// The range is partitioned at the model's resonances; each pole-free
/// interval is scanned for sign changes, which are refined by bisection
/// (enclosure guaranteed, deterministic). No sign change -> empty list.
std::vector<MagicPoint> find_zero_crossings(const PolarizabilityModel& model,
                                            OmegaRange range,
                                            const SolverOptions& options = {});

/// Roots of total_alpha(ground, omega) - total_alpha(rydberg, omega) = 0.
/// Partition poles are the union of both models'. Throws ModelError when the
/// models are identical (g vanishes identically; no isolated root).
std::vector<MagicPoint> find_magic_wavelength(
    const PolarizabilityModel& ground, const PolarizabilityModel& rydberg,
    OmegaRange range, const SolverOptions& options = {});

/// Roots of total_alpha(ground, omega) + 1/omega^2 = 0: matching against the
/// free-electron reference curve.
std::vector<MagicPoint> find_free_electron_match(
    const PolarizabilityModel& ground, OmegaRange range,
    const SolverOptions& options = {});

/// Pole-free subintervals of `range` after removing `margin` around each
/// pole. Exposed for the scan command and for test oracles.
std::vector<OmegaRange> pole_free_intervals(OmegaRange range,
                                            const std::vector<double>& poles,
                                            double margin);

}  // namespace magicpol
