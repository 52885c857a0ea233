#pragma once

namespace magicpol {

/// An isotropic harmonic trap holding an atom of mass M. `ground_length_m`
/// (sqrt(hbar/(M*omega0))) and `ground_energy_j` ((3/2)*hbar*omega0) are
/// derived on construction, never set independently.
struct TrapSpec {
  double omega0_rad_s = 0.0;
  double mass_kg = 0.0;
  double ground_length_m = 0.0;
  double ground_energy_j = 0.0;

  /// omega0 given directly as angular frequency.
  static TrapSpec from_angular(double omega0_rad_s, double mass_kg);
  /// nu0 given in Hz; omega0 = 2*pi*nu0.
  static TrapSpec from_cyclic(double nu0_hz, double mass_kg);
};

struct WavepacketMoments {
  double mean_square_radius_m2 = 0.0;
  double mean_kinetic_energy_j = 0.0;  // constant E0/2 in free flight
};

/// Free expansion after a sudden trap release at t = 0:
/// <r^2(t)> = (3/2) d0^2 (1 + omega0^2 t^2), <T> = E0/2. t < 0 is a domain
/// error.
WavepacketMoments wavepacket_moments(const TrapSpec& trap, double t_s);

/// Mean energy after the trap is restored at time tau:
/// E = E0/2 + M omega0^2 <r^2(tau)>/2 = E0 (1 + omega0^2 tau^2 / 2).
double restored_energy(const TrapSpec& trap, double tau_s);

struct HeatingResult {
  double kelvin = 0.0;             // k_B T / k_B
  double hbar_omega0_units = 0.0;  // k_B T / (hbar * omega0) = (omega0*tau)^2/4
};

/// Heating per release/restore cycle: k_B T = (hbar omega0) (omega0 tau)^2/4.
HeatingResult heating_per_cycle(const TrapSpec& trap, double tau_s);

/// |Psi(r,t)|^2 of the freely expanding Gaussian wavepacket, in m^-3.
/// Normalized so that the integral of |Psi|^2 4 pi r^2 dr over r >= 0 is 1.
double wavepacket_density(const TrapSpec& trap, double r_m, double t_s);

}  // namespace magicpol
