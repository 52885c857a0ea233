#include "magicpol/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "magicpol/errors.hpp"
#include "magicpol/units.hpp"

namespace magicpol {
namespace {

std::vector<double> pole_set(const PolarizabilityModel& model) {
  std::vector<double> poles;
  poles.reserve(model.channels.size());
  for (const auto& ch : model.channels) {
    double de = convert_energy(
        ch.intermediate.energy_cm1 - model.target.energy_cm1,
        EnergyUnit::InverseCm, EnergyUnit::Au);
    poles.push_back(std::abs(de));
  }
  std::sort(poles.begin(), poles.end());
  return poles;
}

using Curve = std::function<double(double)>;

/// Bisection with the dual stopping rule. `a` and `b` must bracket a sign
/// change of g.
struct RefinedRoot {
  double omega, residual, lo, hi;
};

RefinedRoot bisect(const Curve& g, double a, double b, double ga,
                   const SolverOptions& opt) {
  double m = 0.5 * (a + b);
  double gm = g(m);
  while ((b - a) > opt.omega_tolerance && std::abs(gm) > opt.alpha_tolerance) {
    if ((ga < 0.0) != (gm < 0.0)) {
      b = m;
    } else {
      a = m;
      ga = gm;
    }
    double next = 0.5 * (a + b);
    if (next == m || next <= a || next >= b) break;  // double resolution hit
    m = next;
    gm = g(m);
  }
  return {m, gm, a, b};
}

std::vector<RefinedRoot> roots_in_intervals(
    const Curve& g, const std::vector<OmegaRange>& intervals,
    const SolverOptions& opt) {
  std::vector<RefinedRoot> roots;
  for (const auto& iv : intervals) {
    double width = iv.hi - iv.lo;
    if (width <= 0.0) continue;
    auto steps = static_cast<std::size_t>(
        std::ceil(width / opt.scan_resolution));
    if (steps < 1) steps = 1;
    double prev_x = iv.lo;
    double prev_g = g(prev_x);
    for (std::size_t i = 1; i <= steps; ++i) {
      double x = (i == steps)
                     ? iv.hi
                     : iv.lo + width * static_cast<double>(i) /
                                   static_cast<double>(steps);
      double gx = g(x);
      if (prev_g == 0.0) {
        roots.push_back({prev_x, 0.0, prev_x, x});
      } else if (gx != 0.0 && (prev_g < 0.0) != (gx < 0.0)) {
        roots.push_back(bisect(g, prev_x, x, prev_g, opt));
      }
      prev_x = x;
      prev_g = gx;
    }
    if (prev_g == 0.0) roots.push_back({prev_x, 0.0, prev_x, prev_x});
  }
  std::sort(roots.begin(), roots.end(),
            [](const RefinedRoot& a, const RefinedRoot& b) {
              return a.omega < b.omega;
            });
  return roots;
}

std::vector<MagicPoint> solve(const PolarizabilityModel& ground,
                              const Curve& g,
                              const std::vector<double>& poles,
                              double exclusion_halfwidth, OmegaRange range,
                              MatchReference ref, std::optional<Level> rydberg,
                              const SolverOptions& opt) {
  if (range.hi < range.lo)
    throw UsageError("omega range is inverted");
  double margin =
      std::nextafter(exclusion_halfwidth, 2.0 * exclusion_halfwidth);
  auto intervals = pole_free_intervals(range, poles, margin);
  std::vector<MagicPoint> out;
  for (const auto& r : roots_in_intervals(g, intervals, opt)) {
    MagicPoint p;
    p.omega_au = r.omega;
    p.lambda_nm = omega_au_to_lambda_nm(r.omega);
    p.ground = ground.target;
    p.rydberg = rydberg;
    p.reference = ref;
    p.alpha_at_match = total_alpha(ground, r.omega).total;
    p.residual = r.residual;
    p.bracket_lo = r.lo;
    p.bracket_hi = r.hi;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Resonance> list_resonances(const PolarizabilityModel& model) {
  std::vector<Resonance> out;
  out.reserve(model.channels.size());
  for (const auto& ch : model.channels) {
    double de = convert_energy(
        ch.intermediate.energy_cm1 - model.target.energy_cm1,
        EnergyUnit::InverseCm, EnergyUnit::Au);
    Resonance r;
    r.target = model.target;
    r.intermediate = ch.intermediate;
    r.omega_au = std::abs(de);
    r.lambda_nm = omega_au_to_lambda_nm(r.omega_au);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Resonance& a, const Resonance& b) {
    return a.omega_au < b.omega_au;
  });
  return out;
}

std::vector<OmegaRange> pole_free_intervals(OmegaRange range,
                                            const std::vector<double>& poles,
                                            double margin) {
  std::vector<double> cuts(poles);
  std::sort(cuts.begin(), cuts.end());
  std::vector<OmegaRange> out;
  double lo = range.lo;
  for (double p : cuts) {
    if (p + margin <= range.lo || p - margin >= range.hi) continue;
    if (p - margin > lo) out.push_back({lo, p - margin});
    lo = std::max(lo, p + margin);
  }
  if (lo < range.hi) out.push_back({lo, range.hi});
  return out;
}

std::vector<MagicPoint> find_zero_crossings(const PolarizabilityModel& model,
                                            OmegaRange range,
                                            const SolverOptions& options) {
  Curve g = [&model](double w) { return total_alpha(model, w).total; };
  return solve(model, g, pole_set(model), model.exclusion_halfwidth, range,
               MatchReference::Zero, std::nullopt, options);
}

std::vector<MagicPoint> find_magic_wavelength(
    const PolarizabilityModel& ground, const PolarizabilityModel& rydberg,
    OmegaRange range, const SolverOptions& options) {
  if (ground == rydberg)
    throw ModelError(
        "degenerate match: ground and rydberg models are identical, the "
        "difference vanishes everywhere");
  Curve g = [&ground, &rydberg](double w) {
    return total_alpha(ground, w).total - total_alpha(rydberg, w).total;
  };
  std::vector<double> poles = pole_set(ground);
  std::vector<double> rp = pole_set(rydberg);
  poles.insert(poles.end(), rp.begin(), rp.end());
  double margin = std::max(ground.exclusion_halfwidth,
                           rydberg.exclusion_halfwidth);
  return solve(ground, g, poles, margin, range, MatchReference::Model,
               rydberg.target, options);
}

std::vector<MagicPoint> find_free_electron_match(
    const PolarizabilityModel& ground, OmegaRange range,
    const SolverOptions& options) {
  if (range.lo <= 0.0 && range.hi >= 0.0)
    throw UsageError(
        "free-electron matching range must exclude omega = 0 (the reference "
        "curve diverges there)");
  Curve g = [&ground](double w) {
    return total_alpha(ground, w).total - free_electron_alpha(w);
  };
  return solve(ground, g, pole_set(ground), ground.exclusion_halfwidth, range,
               MatchReference::FreeElectron, std::nullopt, options);
}

}  // namespace magicpol
