#include "magicpol/polarizability.hpp"

#include <cmath>

#include "magicpol/compensated.hpp"
#include "magicpol/constants.hpp"
#include "magicpol/errors.hpp"
#include "magicpol/units.hpp"

namespace magicpol {

double free_electron_alpha(double omega_au) {
  if (omega_au == 0.0)
    throw DomainError("free-electron polarizability diverges at omega = 0");
  return -1.0 / (omega_au * omega_au);
}

std::pair<double, std::vector<TermContribution>> valence_alpha(
    const PolarizabilityModel& model, double omega_au,
    const EvalOptions& options) {
  // Depends on omega^2 only, so alpha(-omega) == alpha(omega) bit for bit.
  const double w2 = omega_au * omega_au;
  const double abs_w = std::abs(omega_au);

  std::vector<TermContribution> terms;
  terms.reserve(model.channels.size());
  CompensatedSum sum;

  for (const auto& ch : model.channels) {
    TermContribution t;
    t.intermediate = ch.intermediate;
    t.d_value = ch.dipole.value_au;
    t.d_uncertainty = ch.dipole.uncertainty_au;
    t.delta_e = convert_energy(
        ch.intermediate.energy_cm1 - model.target.energy_cm1,
        EnergyUnit::InverseCm, EnergyUnit::Au);
    t.denominator = t.delta_e * t.delta_e - w2;
    if (t.denominator == 0.0)
      throw DomainError("exact pole: omega equals the " + model.target.label +
                        " - " + ch.intermediate.label + " resonance");
    if (std::abs(abs_w - std::abs(t.delta_e)) < model.exclusion_halfwidth &&
        !options.allow_inside_exclusion) {
      throw ResonanceError(
          "omega = " + std::to_string(omega_au) +
              " lies inside the exclusion window of the " +
              model.target.label + " - " + ch.intermediate.label +
              " resonance (half-width " +
              std::to_string(model.exclusion_halfwidth) + " a.u.)",
          ch.intermediate.label);
    }
    t.contribution =
        (t.delta_e * t.d_value * t.d_value / 3.0) / t.denominator;
    sum.add(t.contribution);
    t.accumulated = sum.value();
    terms.push_back(std::move(t));
  }
  return {sum.value(), std::move(terms)};
}

PolarizabilityResult total_alpha(const PolarizabilityModel& model,
                                 double omega_au, const EvalOptions& options) {
  PolarizabilityResult res;
  res.omega = omega_au;
  auto [valence, terms] = valence_alpha(model, omega_au, options);
  res.valence = valence;
  res.terms = std::move(terms);
  res.core = model.core_alpha;
  res.tail = model.tail_alpha;
  res.total = res.valence + res.core + res.tail;

  // d(alpha)/d(D_i) = 2 * contribution_i / D_i, written via the quadratic
  // coefficient so D_i = 0 stays finite.
  double var = 0.0;
  const double w2 = omega_au * omega_au;
  for (const auto& t : res.terms) {
    double coeff = (t.delta_e / 3.0) / (t.delta_e * t.delta_e - w2);
    double deriv = 2.0 * coeff * t.d_value;
    var += deriv * deriv * t.d_uncertainty * t.d_uncertainty;
  }
  double core_sigma = model.core_alpha * model.core_alpha_rel_unc;
  var += core_sigma * core_sigma;
  res.uncertainty = std::sqrt(var);

  const double abs_w = std::abs(omega_au);
  for (const auto& t : res.terms) {
    if (std::abs(abs_w - std::abs(t.delta_e)) < model.exclusion_halfwidth) {
      res.excluded = true;
      break;
    }
  }
  return res;
}

}  // namespace magicpol
