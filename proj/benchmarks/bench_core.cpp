#include <benchmark/benchmark.h>

#include <vector>

#include "magicpol/atomdata.hpp"
#include "magicpol/matcher.hpp"
#include "magicpol/polarizability.hpp"

#ifndef MAGICPOL_DATA_DIR
#define MAGICPOL_DATA_DIR "data"
#endif

namespace {

using namespace magicpol;

struct Fixture {
  LevelTable levels;
  DipoleTable dipoles;
  PolarizabilityModel ground;
  PolarizabilityModel rydberg;
  Fixture()
      : levels(LevelTable::load(std::string(MAGICPOL_DATA_DIR) +
                                "/rb_levels.csv")),
        dipoles(DipoleTable::load(
            std::string(MAGICPOL_DATA_DIR) + "/rb_dipoles.csv", levels)),
        ground([&] {
          ModelConfig cfg;
          cfg.tail_alpha = -0.1;
          return build_model(levels.require("5s1/2"), levels, dipoles, cfg);
        }()),
        rydberg(build_model(levels.require("15s1/2"), levels, dipoles, {})) {}
};

const Fixture& fixture() {
  static Fixture f;
  return f;
}

void BM_TotalAlpha(benchmark::State& state) {
  const auto& f = fixture();
  double w = 0.04;
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_alpha(f.rydberg, w).total);
  }
}
BENCHMARK(BM_TotalAlpha);

void BM_ScanGrid(benchmark::State& state) {
  const auto& f = fixture();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      double w = 0.02 + 0.03 * i / n;
      acc += total_alpha(f.ground, w).total;
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ScanGrid)->Arg(100)->Arg(1000);

void BM_MagicSolve(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    auto points = find_magic_wavelength(f.ground, f.rydberg,
                                        {0.0574, 0.0583});
    benchmark::DoNotOptimize(points);
  }
}
BENCHMARK(BM_MagicSolve);

void BM_CoincidenceSearch(benchmark::State& state) {
  const auto& f = fixture();
  const Level& a = f.levels.require("5s1/2");
  const Level& b = f.levels.require("5p3/2");
  for (auto _ : state) {
    auto found = find_coincidences(f.levels, a, b, 100.0);
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_CoincidenceSearch);

}  // namespace

BENCHMARK_MAIN();
