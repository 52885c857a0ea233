#include "magicpol/heating.hpp"

#include <cmath>

#include "magicpol/constants.hpp"
#include "magicpol/errors.hpp"

namespace magicpol {

TrapSpec TrapSpec::from_angular(double omega0_rad_s, double mass_kg) {
  if (omega0_rad_s <= 0.0)
    throw DomainError("trap frequency must be positive");
  if (mass_kg <= 0.0) throw DomainError("mass must be positive");
  TrapSpec t;
  t.omega0_rad_s = omega0_rad_s;
  t.mass_kg = mass_kg;
  t.ground_length_m =
      std::sqrt(constants::reduced_planck / (mass_kg * omega0_rad_s));
  t.ground_energy_j = 1.5 * constants::reduced_planck * omega0_rad_s;
  return t;
}

TrapSpec TrapSpec::from_cyclic(double nu0_hz, double mass_kg) {
  return from_angular(2.0 * constants::pi * nu0_hz, mass_kg);
}

WavepacketMoments wavepacket_moments(const TrapSpec& trap, double t_s) {
  if (t_s < 0.0) throw DomainError("expansion time must be non-negative");
  double x = trap.omega0_rad_s * t_s;
  WavepacketMoments m;
  m.mean_square_radius_m2 =
      1.5 * trap.ground_length_m * trap.ground_length_m * (1.0 + x * x);
  m.mean_kinetic_energy_j = 0.5 * trap.ground_energy_j;
  return m;
}

double restored_energy(const TrapSpec& trap, double tau_s) {
  if (tau_s < 0.0) throw DomainError("release time must be non-negative");
  double x = trap.omega0_rad_s * tau_s;
  return trap.ground_energy_j * (1.0 + 0.5 * x * x);
}

HeatingResult heating_per_cycle(const TrapSpec& trap, double tau_s) {
  if (tau_s < 0.0) throw DomainError("release time must be non-negative");
  double x = trap.omega0_rad_s * tau_s;
  HeatingResult r;
  r.hbar_omega0_units = 0.25 * x * x;
  r.kelvin = constants::reduced_planck * trap.omega0_rad_s *
             r.hbar_omega0_units / constants::boltzmann;
  return r;
}

double wavepacket_density(const TrapSpec& trap, double r_m, double t_s) {
  if (t_s < 0.0) throw DomainError("expansion time must be non-negative");
  double x = trap.omega0_rad_s * t_s;
  double d0 = trap.ground_length_m;
  double spread = d0 * d0 * (1.0 + x * x);
  double norm = std::pow(constants::pi * spread, -1.5);
  return norm * std::exp(-r_m * r_m / spread);
}

}  // namespace magicpol
