#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "magicpol/constants.hpp"
#include "magicpol/errors.hpp"
#include "magicpol/units.hpp"

using namespace magicpol;

TEST_CASE("constants match their quoted values") {
  CHECK(constants::hartree_frequency ==
        doctest::Approx(4.1341e16).epsilon(1.2e-5));
  CHECK(constants::alpha_au_to_si ==
        doctest::Approx(2.48832e-8).epsilon(2e-6));
  CHECK(constants::bohr_radius_nm ==
        doctest::Approx(0.052918).epsilon(1e-5));
  CHECK(constants::hartree_wavenumber ==
        doctest::Approx(219474.6313632).epsilon(1e-12));
}

TEST_CASE("omega conversions reproduce reference points") {
  // the alpha_5s zero crossing frequency
  CHECK(convert_omega(0.0576728, OmegaUnit::Au, OmegaUnit::WavelengthNm) ==
        doctest::Approx(790.03).epsilon(1e-4));
  // Nd:YAG
  CHECK(convert_omega(0.04298, OmegaUnit::Au, OmegaUnit::WavelengthNm) ==
        doctest::Approx(1060.0).epsilon(1e-3));
  CHECK(convert_omega(1.0, OmegaUnit::Au, OmegaUnit::Hz) ==
        doctest::Approx(4.1341e16).epsilon(1e-4));
  // hz is the angular-frequency scale, identical to rad/s
  CHECK(convert_omega(3.0, OmegaUnit::Hz, OmegaUnit::RadPerS) == 3.0);
}

TEST_CASE("alpha conversions") {
  CHECK(convert_alpha(1.0, AlphaUnit::Au, AlphaUnit::SiHzPerVm2) ==
        doctest::Approx(2.48832e-8).epsilon(1e-5));
  // Molof et al. static value: 47.3 A^3 ~ 319 a0^3
  CHECK(convert_alpha(47.3, AlphaUnit::Angstrom3, AlphaUnit::Au) ==
        doctest::Approx(319.0).epsilon(2e-3));
  CHECK(convert_alpha(0.0, AlphaUnit::Au, AlphaUnit::Angstrom3) == 0.0);
}

TEST_CASE("energy conversions") {
  CHECK(convert_energy(219474.6313632, EnergyUnit::InverseCm,
                       EnergyUnit::Au) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(convert_energy(0.0, EnergyUnit::InverseCm, EnergyUnit::Au) == 0.0);
  CHECK(convert_energy(12816.55, EnergyUnit::InverseCm, EnergyUnit::Au) ==
        doctest::Approx(0.0583966).epsilon(1e-5));
}

TEST_CASE("round trips recover inputs to < 1e-12 relative") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> mag(-3.0, 3.0);
  const OmegaUnit omega_units[] = {OmegaUnit::Au, OmegaUnit::Hz,
                                   OmegaUnit::RadPerS,
                                   OmegaUnit::WavelengthNm};
  const AlphaUnit alpha_units[] = {AlphaUnit::Au, AlphaUnit::Angstrom3,
                                   AlphaUnit::SiHzPerVm2};
  const EnergyUnit energy_units[] = {EnergyUnit::Au, EnergyUnit::InverseCm};
  for (int i = 0; i < 200; ++i) {
    double x = std::pow(10.0, mag(rng));
    for (auto from : omega_units) {
      for (auto to : omega_units) {
        double back = convert_omega(convert_omega(x, from, to), to, from);
        CHECK(std::abs(back - x) <= 1e-12 * x);
      }
    }
    for (auto from : alpha_units) {
      for (auto to : alpha_units) {
        double back = convert_alpha(convert_alpha(x, from, to), to, from);
        CHECK(std::abs(back - x) <= 1e-12 * x);
      }
    }
    for (auto from : energy_units) {
      for (auto to : energy_units) {
        double back = convert_energy(convert_energy(x, from, to), to, from);
        CHECK(std::abs(back - x) <= 1e-12 * x);
      }
    }
  }
}

TEST_CASE("omega-to-wavelength is a fixed hyperbola") {
  double c0 = convert_omega(1.0, OmegaUnit::Au, OmegaUnit::WavelengthNm);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> mag(-4.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    double x = std::pow(10.0, mag(rng));
    double lam = convert_omega(x, OmegaUnit::Au, OmegaUnit::WavelengthNm);
    CHECK(lam * x == doctest::Approx(c0).epsilon(1e-13));
  }
}

TEST_CASE("chained conversion equals direct conversion") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> mag(-3.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    double x = std::pow(10.0, mag(rng));
    double via_hz = convert_omega(convert_omega(x, OmegaUnit::Au, OmegaUnit::Hz),
                                  OmegaUnit::Hz, OmegaUnit::WavelengthNm);
    double direct = convert_omega(x, OmegaUnit::Au, OmegaUnit::WavelengthNm);
    CHECK(std::abs(via_hz - direct) <= 1e-12 * direct);
  }
}

TEST_CASE("domain and usage errors") {
  CHECK_THROWS_AS(convert_omega(0.0, OmegaUnit::Au, OmegaUnit::WavelengthNm),
                  DomainError);
  CHECK_THROWS_AS(convert_omega(-1.0, OmegaUnit::WavelengthNm, OmegaUnit::Au),
                  DomainError);
  CHECK_THROWS_AS(parse_omega_unit("parsec"), UsageError);
  CHECK_THROWS_AS(parse_alpha_unit("cm3"), UsageError);
  CHECK_THROWS_AS(parse_energy_unit("eV"), UsageError);
  CHECK(parse_omega_unit("rad/s") == OmegaUnit::RadPerS);
  CHECK(parse_energy_unit("cm-1") == EnergyUnit::InverseCm);
}
