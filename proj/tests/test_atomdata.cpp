#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "magicpol/atomdata.hpp"
#include "magicpol/errors.hpp"
#include "support.hpp"

using namespace magicpol;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("magicpol_test_" + std::to_string(++counter) + ".csv");
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

const char* kLevelHeader = "label,n,l,two_j,energy_cm1,source\n";

}  // namespace

TEST_CASE("label parsing") {
  auto key = parse_level_label("15p3/2");
  REQUIRE(key.has_value());
  CHECK(key->n == 15);
  CHECK(key->l == 1);
  CHECK(key->two_j == 3);
  CHECK(parse_level_label("5s")->two_j == 1);
  CHECK(parse_level_label("4d5/2")->l == 2);
  CHECK_FALSE(parse_level_label("p3/2").has_value());
  CHECK_FALSE(parse_level_label("5x1/2").has_value());
  CHECK_FALSE(parse_level_label("5p").has_value());
  CHECK(format_level_label({12, 1, 1}) == "12p1/2");
}

TEST_CASE("bundled levels load and index") {
  LevelTable levels = testsupport::load_bundled_levels();
  CHECK(levels.size() == 63);
  CHECK(levels.ground().label == "5s1/2");
  CHECK(levels.require("5p3/2").energy_cm1 == doctest::Approx(12816.545));
  CHECK(levels.find("99x") == nullptr);
}

TEST_CASE("duplicate level rows are rejected citing both lines") {
  TempFile f(std::string(kLevelHeader) +
             "5s1/2,5,0,1,0.0,x\n"
             "5p3/2,5,1,3,12816.545,x\n"
             "5p3/2,5,1,3,12816.6,x\n");
  try {
    LevelTable::load(f.str());
    FAIL("expected DataError");
  } catch (const DataError& e) {
    std::string msg = e.what();
    CHECK(msg.find(":4:") != std::string::npos);
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("duplicate") != std::string::npos);
  }
}

TEST_CASE("invalid j for l is rejected") {
  TempFile f(std::string(kLevelHeader) +
             "5s1/2,5,0,1,0.0,x\n"
             "5s3/2,5,0,3,100.0,x\n");
  CHECK_THROWS_AS(LevelTable::load(f.str()), DataError);
}

TEST_CASE("missing ground state is rejected") {
  TempFile f(std::string(kLevelHeader) + "5p3/2,5,1,3,12816.545,x\n");
  CHECK_THROWS_AS(LevelTable::load(f.str()), DataError);
}

TEST_CASE("label inconsistent with quantum numbers is rejected") {
  TempFile f(std::string(kLevelHeader) +
             "5s1/2,5,0,1,0.0,x\n"
             "6p1/2,6,1,3,23792.6,x\n");
  CHECK_THROWS_AS(LevelTable::load(f.str()), DataError);
}

TEST_CASE("levels round-trip through save/load identically") {
  LevelTable levels = testsupport::load_bundled_levels();
  TempFile f("");
  levels.save(f.str());
  LevelTable again = LevelTable::load(f.str());
  CHECK(levels == again);
}

TEST_CASE("dipole loading accepts valid rows, preserves sign") {
  LevelTable levels = testsupport::load_bundled_levels();
  DipoleTable dipoles = testsupport::load_bundled_dipoles(levels);
  CHECK(dipoles.size() == 46);
  const ReducedDipole* d = dipoles.find("5s1/2", "5p3/2");
  REQUIRE(d != nullptr);
  CHECK(d->value_au == doctest::Approx(5.977));
  CHECK(d->uncertainty_au == doctest::Approx(0.005));
  // unordered lookup
  CHECK(dipoles.find("5p3/2", "5s1/2") == d);
  const ReducedDipole* r = dipoles.find("15s1/2", "14p3/2");
  REQUIRE(r != nullptr);
  CHECK(r->value_au < 0.0);
}

TEST_CASE("dipole selection rule and resolution errors") {
  LevelTable levels = testsupport::load_bundled_levels();
  const char* header = "state_a,state_b,reduced_me_au,uncertainty_au,source\n";
  {
    TempFile f(std::string(header) + "5s1/2,5s1/2,1.0,0,x\n");
    CHECK_THROWS_AS(DipoleTable::load(f.str(), levels), DataError);
  }
  {
    TempFile f(std::string(header) + "5s1/2,4f5/2,1.0,0,x\n");
    try {
      DipoleTable::load(f.str(), levels);
      FAIL("expected DataError");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("4f5/2") != std::string::npos);
    }
  }
  {
    // 4d5/2 - 11p1/2 has |dj| = 2
    TempFile f(std::string(header) + "4d5/2,11p1/2,1.0,0,x\n");
    CHECK_THROWS_AS(DipoleTable::load(f.str(), levels), DataError);
  }
  {
    TempFile f(std::string(header) + "5s1/2,5p3/2,5.977,-0.005,x\n");
    CHECK_THROWS_AS(DipoleTable::load(f.str(), levels), DataError);
  }
  {
    TempFile f(std::string(header) +
               "5s1/2,5p3/2,5.977,0.005,x\n"
               "5p3/2,5s1/2,5.977,0.005,x\n");
    CHECK_THROWS_AS(DipoleTable::load(f.str(), levels), DataError);
  }
}

TEST_CASE("dipoles round-trip through save/load identically") {
  LevelTable levels = testsupport::load_bundled_levels();
  DipoleTable dipoles = testsupport::load_bundled_dipoles(levels);
  TempFile f("");
  dipoles.save(f.str());
  DipoleTable again = DipoleTable::load(f.str(), levels);
  CHECK(dipoles == again);
}

TEST_CASE("build_model assembles ordered np channels") {
  LevelTable levels = testsupport::load_bundled_levels();
  DipoleTable dipoles = testsupport::load_bundled_dipoles(levels);

  ModelConfig cfg;
  cfg.n_max = 8;
  cfg.tail_alpha = -0.1;
  PolarizabilityModel m =
      build_model(levels.require("5s1/2"), levels, dipoles, cfg);
  REQUIRE(m.channels.size() == 8);
  CHECK(m.channels.front().intermediate.label == "5p1/2");
  CHECK(m.channels.back().intermediate.label == "8p3/2");
  CHECK(m.tail_alpha == doctest::Approx(-0.1));
  CHECK(m.core_alpha == doctest::Approx(9.1));
  CHECK(m.core_alpha_rel_unc == doctest::Approx(0.05));
  for (std::size_t i = 1; i < m.channels.size(); ++i)
    CHECK(key_of(m.channels[i - 1].intermediate) <
          key_of(m.channels[i].intermediate));
  for (const auto& ch : m.channels)
    CHECK(dipole_allowed(m.target, ch.intermediate));

  PolarizabilityModel ryd =
      build_model(levels.require("15s1/2"), levels, dipoles, {});
  CHECK(ryd.channels.size() == 38);  // 5p..23p, both j
  CHECK(ryd.channels.back().intermediate.n == 23);
}

TEST_CASE("build_model rejects non-s targets and empty channel sets") {
  LevelTable levels = testsupport::load_bundled_levels();
  DipoleTable dipoles = testsupport::load_bundled_dipoles(levels);
  CHECK_THROWS_AS(build_model(levels.require("5p3/2"), levels, dipoles, {}),
                  ModelError);
  CHECK_THROWS_AS(build_model(levels.require("8s1/2"), levels, dipoles, {}),
                  ModelError);
  // n_max below every coupled channel empties the model too
  ModelConfig tight;
  tight.n_max = 4;
  CHECK_THROWS_AS(build_model(levels.require("5s1/2"), levels, dipoles, tight),
                  ModelError);
}

TEST_CASE("build_model warns on a missing fine-structure partner") {
  auto [levels, dipoles] = testsupport::synthetic_dataset({
      {10000.0, 2, 1, 1.0, 0.0},
      {10100.0, 2, 3, 1.4, 0.0},
      {20000.0, 3, 1, 0.5, 0.0},  // no 3p3/2
  });
  std::vector<std::string> warnings;
  build_model(levels.require("1s1/2"), levels, dipoles, {},
              [&](const std::string& w) { warnings.push_back(w); });
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("n=3") != std::string::npos);
}

TEST_CASE("coincidence search matches a brute-force oracle") {
  LevelTable levels = testsupport::load_bundled_levels();
  const Level& a = levels.require("5s1/2");
  const Level& b = levels.require("5p3/2");
  const double tol = 150.0;
  auto found = find_coincidences(levels, a, b, tol);

  // independent O(N^2) enumeration
  std::vector<double> oracle;
  auto all = levels.all();
  double target = std::abs(a.energy_cm1 - b.energy_cm1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if ((key_of(all[i]) == key_of(a) && key_of(all[j]) == key_of(b)) ||
          (key_of(all[i]) == key_of(b) && key_of(all[j]) == key_of(a)))
        continue;
      if (!dipole_allowed(all[i], all[j])) continue;
      double mismatch =
          std::abs(std::abs(all[i].energy_cm1 - all[j].energy_cm1) - target);
      if (mismatch <= tol) oracle.push_back(mismatch);
    }
  }
  std::sort(oracle.begin(), oracle.end());
  REQUIRE(found.size() == oracle.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    CHECK(found[i].mismatch_cm1 == doctest::Approx(oracle[i]).epsilon(1e-14));
    CHECK(found[i].mismatch_cm1 <= tol);
    if (i > 0) CHECK(found[i].mismatch_cm1 >= found[i - 1].mismatch_cm1);
    CHECK(found[i].mismatch_cm1 ==
          doctest::Approx(std::abs(found[i].delta_e_cm1 -
                                   found[i].target_delta_e_cm1)));
  }
}

TEST_CASE("coincidence search finds the known Rb near-degeneracies") {
  LevelTable levels = testsupport::load_bundled_levels();
  auto found = find_coincidences(levels, levels.require("5s1/2"),
                                 levels.require("5p3/2"), 100.0);
  REQUIRE(!found.empty());
  // closest family: 6s-15p at ~20 cm^-1
  CHECK(found[0].a.label == "6s1/2");
  CHECK(found[0].b.n == 15);
  CHECK(found[0].b.l == 1);
  CHECK(found[0].mismatch_cm1 == doctest::Approx(21.5).epsilon(0.05));
  // 4d-11p family present at ~50-60 cm^-1
  bool has_4d11p = false;
  for (const auto& c : found) {
    if (c.a.n == 4 && c.a.l == 2 && c.b.n == 11 && c.b.l == 1) {
      has_4d11p = true;
      CHECK(c.mismatch_cm1 > 50.0);
      CHECK(c.mismatch_cm1 < 65.0);
    }
  }
  CHECK(has_4d11p);
}

TEST_CASE("coincidence edge cases") {
  LevelTable levels = testsupport::load_bundled_levels();
  const Level& a = levels.require("5s1/2");
  const Level& b = levels.require("5p3/2");
  CHECK(find_coincidences(levels, a, b, 0.001).empty());
  CHECK_THROWS_AS(find_coincidences(levels, a, b, 0.0), UsageError);
  // the target pair itself never shows up even at huge tolerance
  for (const auto& c : find_coincidences(levels, a, b, 1e5)) {
    bool is_target = (key_of(c.a) == key_of(a) && key_of(c.b) == key_of(b)) ||
                     (key_of(c.a) == key_of(b) && key_of(c.b) == key_of(a));
    CHECK_FALSE(is_target);
  }
}

TEST_CASE("dipole-forbidden pairs enter only when the filter is off") {
  LevelTable levels = testsupport::load_bundled_levels();
  auto strict = find_coincidences(levels, levels.require("5s1/2"),
                                  levels.require("5p3/2"), 100.0, true);
  auto loose = find_coincidences(levels, levels.require("5s1/2"),
                                 levels.require("5p3/2"), 100.0, false);
  CHECK(loose.size() > strict.size());
  for (const auto& c : strict) CHECK(dipole_allowed(c.a, c.b));
  bool has_forbidden = false;
  for (const auto& c : loose)
    if (!dipole_allowed(c.a, c.b)) has_forbidden = true;
  CHECK(has_forbidden);  // e.g. the s-s pair 6s-15s at ~37 cm^-1
}
