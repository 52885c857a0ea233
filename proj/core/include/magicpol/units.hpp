#pragma once

#include <string>
#include <string_view>

#include "magicpol/constants.hpp"

namespace magicpol {

/// Frequency-like units for the lattice photon.
///
/// `Hz` follows the convention of quoting the angular frequency omega in
/// s^-1 (1 a.u. = E_h/hbar = 4.1341e16 Hz), so it is the same scale as
/// `RadPerS`. Vacuum wavelength uses nu = omega/2pi: lambda = 2*pi*c/omega.
enum class OmegaUnit { Au, Hz, RadPerS, WavelengthNm };

/// Polarizability units: atomic units (a0^3), cubic angstroms, and the SI
/// spectroscopic form alpha/h in Hz/(V/m)^2.
enum class AlphaUnit { Au, Angstrom3, SiHzPerVm2 };

/// Energy units: hartree and wavenumbers.
enum class EnergyUnit { Au, InverseCm };

double convert_omega(double value, OmegaUnit from, OmegaUnit to);
double convert_alpha(double value, AlphaUnit from, AlphaUnit to);
double convert_energy(double value, EnergyUnit from, EnergyUnit to);

/// Vacuum wavelength in nm for omega in a.u. Shorthand for convert_omega.
double omega_au_to_lambda_nm(double omega_au);
double lambda_nm_to_omega_au(double lambda_nm);

// Tag parsing for CLI/file boundaries. Unknown tags throw UsageError.
// Accepted tags: omega: au, hz, rad/s, nm; alpha: au, A3, si; energy: au, cm-1.
OmegaUnit parse_omega_unit(std::string_view tag);
AlphaUnit parse_alpha_unit(std::string_view tag);
EnergyUnit parse_energy_unit(std::string_view tag);

std::string to_string(OmegaUnit u);
std::string to_string(AlphaUnit u);
std::string to_string(EnergyUnit u);

}  // namespace magicpol
