#pragma once

#include <utility>
#include <vector>

#include "magicpol/atomdata.hpp"

namespace magicpol {

/// One channel's share of the valence sum at a given omega:
/// contribution = (1/3) * delta_e * d_value^2 / ((delta_e)^2 - omega^2),
/// all in a.u.; `accumulated` is the running (compensated) sum in channel
/// order.
struct TermContribution {
  Level intermediate;
  double d_value = 0.0;        // a.u., sign as tabulated
  double d_uncertainty = 0.0;  // a.u.
  double delta_e = 0.0;        // E_intermediate - E_target, a.u.
  double denominator = 0.0;    // (delta_e)^2 - omega^2, a.u.^2
  double contribution = 0.0;   // a0^3
  double accumulated = 0.0;    // a0^3
};

struct PolarizabilityResult {
  double omega = 0.0;        // a.u.
  double valence = 0.0;      // a0^3
  double core = 0.0;         // a0^3
  double tail = 0.0;         // a0^3
  double total = 0.0;        // valence + core + tail
  double uncertainty = 0.0;  // a0^3, first-order propagation
  std::vector<TermContribution> terms;
  bool excluded = false;  // omega lies inside a resonance exclusion window
};

struct EvalOptions {
  /// Evaluate anyway when omega falls inside an exclusion window (the result
  /// is flagged `excluded`). Exact poles still raise DomainError.
  bool allow_inside_exclusion = false;
};

/// Free-electron dynamic polarizability -1/omega^2 (a.u.); the high-n
/// Rydberg reference. Throws DomainError at omega = 0.
double free_electron_alpha(double omega_au);

/// Valence sum over the model's channels. Returns the value and the ordered
/// term breakdown. Throws ResonanceError (naming the channel) inside an
/// exclusion window without the override, and DomainError on an exact pole.
std::pair<double, std::vector<TermContribution>> valence_alpha(
    const PolarizabilityModel& model, double omega_au,
    const EvalOptions& options = {});

/// Valence + core + tail with first-order uncertainty propagation:
/// sigma^2 = sum_i (2*contribution_i/D_i)^2 sigma_D_i^2
///         + (core_alpha * core_alpha_rel_unc)^2.
PolarizabilityResult total_alpha(const PolarizabilityModel& model,
                                 double omega_au,
                                 const EvalOptions& options = {});

}  // namespace magicpol
