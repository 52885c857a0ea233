#pragma once

/// Physical constants (SI 2019 exact values plus CODATA 2018 measured ones)
/// and the conversion coefficients derived from them. Everything here is
/// constexpr: fixed at compile time, never recomputed per call. Derived
/// coefficients are kept at full precision; displays may round.

namespace magicpol::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Exact SI defining constants
inline constexpr double planck = 6.62607015e-34;           // J s
inline constexpr double speed_of_light = 299792458.0;      // m/s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double boltzmann = 1.380649e-23;          // J/K

// CODATA 2018 measured
inline constexpr double hartree_energy = 4.3597447222071e-18;  // J
inline constexpr double bohr_radius_m = 5.29177210903e-11;     // m
inline constexpr double atomic_mass_kg = 1.66053906660e-27;    // kg per u

inline constexpr double reduced_planck = planck / (2.0 * pi);  // J s

/// Angular frequency of one atomic unit, E_h/hbar, in s^-1
/// (~4.1341e16; quoted in Hz by convention even though it is omega, not nu).
inline constexpr double hartree_frequency = hartree_energy / reduced_planck;

/// One hartree expressed in cm^-1 (E_h / (h c), c in cm/s); ~219474.63.
inline constexpr double hartree_wavenumber =
    hartree_energy / (planck * speed_of_light * 100.0);

/// Polarizability conversion, a.u. -> Hz/(V/m)^2: e^2 a0^2 / (E_h h),
/// equivalently 4*pi*eps0*a0^3/h; ~2.48832e-8.
inline constexpr double alpha_au_to_si =
    elementary_charge * elementary_charge * bohr_radius_m * bohr_radius_m /
    (hartree_energy * planck);

/// Bohr radius in nm; ~0.052918.
inline constexpr double bohr_radius_nm = bohr_radius_m * 1e9;

}  // namespace magicpol::constants
