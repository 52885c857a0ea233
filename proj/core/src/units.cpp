#include "magicpol/units.hpp"

#include "magicpol/errors.hpp"

namespace magicpol {
namespace {

constexpr double c_nm_per_s = constants::speed_of_light * 1e9;

double omega_to_au(double value, OmegaUnit from) {
  switch (from) {
    case OmegaUnit::Au:
      return value;
    case OmegaUnit::Hz:
    case OmegaUnit::RadPerS:
      return value / constants::hartree_frequency;
    case OmegaUnit::WavelengthNm:
      if (value <= 0.0) {
        throw DomainError("wavelength must be positive, got " +
                          std::to_string(value));
      }
      // lambda = c/nu, nu = omega * (E_h/hbar) / 2pi
      return 2.0 * constants::pi * c_nm_per_s /
             (value * constants::hartree_frequency);
  }
  throw UsageError("unhandled omega unit");
}

double omega_from_au(double omega_au, OmegaUnit to) {
  switch (to) {
    case OmegaUnit::Au:
      return omega_au;
    case OmegaUnit::Hz:
    case OmegaUnit::RadPerS:
      return omega_au * constants::hartree_frequency;
    case OmegaUnit::WavelengthNm:
      if (omega_au <= 0.0) {
        throw DomainError(
            "frequency must be positive for a wavelength target, got " +
            std::to_string(omega_au));
      }
      return c_nm_per_s / (omega_au * constants::hartree_frequency /
                           (2.0 * constants::pi));
  }
  throw UsageError("unhandled omega unit");
}

double alpha_to_au(double value, AlphaUnit from) {
  constexpr double a0_angstrom = constants::bohr_radius_nm * 10.0;
  constexpr double au_to_A3 = a0_angstrom * a0_angstrom * a0_angstrom;
  switch (from) {
    case AlphaUnit::Au:
      return value;
    case AlphaUnit::Angstrom3:
      return value / au_to_A3;
    case AlphaUnit::SiHzPerVm2:
      return value / constants::alpha_au_to_si;
  }
  throw UsageError("unhandled alpha unit");
}

double alpha_from_au(double value, AlphaUnit to) {
  constexpr double a0_angstrom = constants::bohr_radius_nm * 10.0;
  constexpr double au_to_A3 = a0_angstrom * a0_angstrom * a0_angstrom;
  switch (to) {
    case AlphaUnit::Au:
      return value;
    case AlphaUnit::Angstrom3:
      return value * au_to_A3;
    case AlphaUnit::SiHzPerVm2:
      return value * constants::alpha_au_to_si;
  }
  throw UsageError("unhandled alpha unit");
}

}  // namespace

double convert_omega(double value, OmegaUnit from, OmegaUnit to) {
  // hz and rad/s are the same scale; keep identity conversions exact
  auto canon = [](OmegaUnit u) {
    return u == OmegaUnit::RadPerS ? OmegaUnit::Hz : u;
  };
  if (canon(from) == canon(to)) return value;
  return omega_from_au(omega_to_au(value, from), to);
}

double convert_alpha(double value, AlphaUnit from, AlphaUnit to) {
  if (from == to) return value;
  return alpha_from_au(alpha_to_au(value, from), to);
}

double convert_energy(double value, EnergyUnit from, EnergyUnit to) {
  if (from == to) return value;
  if (from == EnergyUnit::InverseCm && to == EnergyUnit::Au) {
    return value / constants::hartree_wavenumber;
  }
  if (from == EnergyUnit::Au && to == EnergyUnit::InverseCm) {
    return value * constants::hartree_wavenumber;
  }
  throw UsageError("unhandled energy unit pair");
}

double omega_au_to_lambda_nm(double omega_au) {
  return convert_omega(omega_au, OmegaUnit::Au, OmegaUnit::WavelengthNm);
}

double lambda_nm_to_omega_au(double lambda_nm) {
  return convert_omega(lambda_nm, OmegaUnit::WavelengthNm, OmegaUnit::Au);
}

OmegaUnit parse_omega_unit(std::string_view tag) {
  if (tag == "au") return OmegaUnit::Au;
  if (tag == "hz" || tag == "Hz") return OmegaUnit::Hz;
  if (tag == "rad/s" || tag == "rads" || tag == "rad_s")
    return OmegaUnit::RadPerS;
  if (tag == "nm") return OmegaUnit::WavelengthNm;
  throw UsageError("unknown omega unit '" + std::string(tag) +
                   "' (expected au, hz, rad/s, or nm)");
}

AlphaUnit parse_alpha_unit(std::string_view tag) {
  if (tag == "au") return AlphaUnit::Au;
  if (tag == "A3" || tag == "angstrom3") return AlphaUnit::Angstrom3;
  if (tag == "si") return AlphaUnit::SiHzPerVm2;
  throw UsageError("unknown alpha unit '" + std::string(tag) +
                   "' (expected au, A3, or si)");
}

EnergyUnit parse_energy_unit(std::string_view tag) {
  if (tag == "au") return EnergyUnit::Au;
  if (tag == "cm-1" || tag == "cm1" || tag == "1/cm")
    return EnergyUnit::InverseCm;
  throw UsageError("unknown energy unit '" + std::string(tag) +
                   "' (expected au or cm-1)");
}

std::string to_string(OmegaUnit u) {
  switch (u) {
    case OmegaUnit::Au: return "au";
    case OmegaUnit::Hz: return "hz";
    case OmegaUnit::RadPerS: return "rad/s";
    case OmegaUnit::WavelengthNm: return "nm";
  }
  return "?";
}

std::string to_string(AlphaUnit u) {
  switch (u) {
    case AlphaUnit::Au: return "au";
    case AlphaUnit::Angstrom3: return "A3";
    case AlphaUnit::SiHzPerVm2: return "si";
  }
  return "?";
}

std::string to_string(EnergyUnit u) {
  switch (u) {
    case EnergyUnit::Au: return "au";
    case EnergyUnit::InverseCm: return "cm-1";
  }
  return "?";
}

}  // namespace magicpol
