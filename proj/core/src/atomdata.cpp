#include "magicpol/atomdata.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#include "magicpol/csv.hpp"
#include "magicpol/errors.hpp"

namespace magicpol {
namespace {

constexpr std::string_view kOrbitalLetters = "spdfgh";

constexpr long kNoLine = -1;

[[noreturn]] void data_fail(const std::string& path, long line,
                            const std::string& msg) {
  if (line >= 0) throw DataError(path, line, msg);
  throw DataError(msg);
}

double parse_double(const std::string& s, const std::string& path, long line,
                    const std::string& field) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    data_fail(path, line, "bad " + field + " value '" + s + "'");
  return v;
}

int parse_int(const std::string& s, const std::string& path, long line,
              const std::string& field) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    data_fail(path, line, "bad " + field + " value '" + s + "'");
  return v;
}

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void validate_level(const Level& lv, const std::string& path, long line) {
  if (lv.n < 1) data_fail(path, line, "n must be >= 1 for " + lv.label);
  if (lv.l < 0) data_fail(path, line, "l must be >= 0 for " + lv.label);
  if (lv.two_j <= 0)
    data_fail(path, line, "j must be positive for " + lv.label);
  // j in {l - 1/2, l + 1/2}
  if (lv.two_j != 2 * lv.l + 1 && lv.two_j != 2 * lv.l - 1)
    data_fail(path, line,
              "j=" + std::to_string(lv.two_j) + "/2 invalid for l=" +
                  std::to_string(lv.l) + " (" + lv.label + ")");
  if (!std::isfinite(lv.energy_cm1))
    data_fail(path, line, "non-finite energy for " + lv.label);
  if (auto key = parse_level_label(lv.label)) {
    if (*key != key_of(lv))
      data_fail(path, line,
                "label '" + lv.label + "' does not match n/l/two_j columns");
  } else if (!lv.label.empty()) {
    data_fail(path, line, "malformed label '" + lv.label + "'");
  }
}

}  // namespace

std::optional<LevelKey> parse_level_label(std::string_view label) {
  std::size_t i = 0;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i])))
    ++i;
  if (i == 0 || i == label.size()) return std::nullopt;
  int n = 0;
  std::from_chars(label.data(), label.data() + i, n);
  std::size_t lpos = kOrbitalLetters.find(label[i]);
  if (lpos == std::string_view::npos) return std::nullopt;
  int l = static_cast<int>(lpos);
  std::string_view rest = label.substr(i + 1);
  if (rest.empty()) {
    if (l == 0) return LevelKey{n, 0, 1};  // s states have a unique j
    return std::nullopt;
  }
  if (rest.size() < 3 || rest.substr(rest.size() - 2) != "/2")
    return std::nullopt;
  std::string_view num = rest.substr(0, rest.size() - 2);
  int two_j = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), two_j);
  if (ec != std::errc{} || ptr != num.data() + num.size() || two_j <= 0)
    return std::nullopt;
  return LevelKey{n, l, two_j};
}

std::string format_level_label(const LevelKey& key) {
  std::string s = std::to_string(key.n);
  s += key.l < static_cast<int>(kOrbitalLetters.size())
           ? kOrbitalLetters[static_cast<std::size_t>(key.l)]
           : '?';
  s += std::to_string(key.two_j);
  s += "/2";
  return s;
}

bool dipole_allowed(const Level& a, const Level& b) {
  return std::abs(a.l - b.l) == 1 && std::abs(a.two_j - b.two_j) <= 2;
}

LevelTable LevelTable::load(const std::string& path) {
  csv::File file = csv::read_file(path);
  const std::vector<std::string> expected = {"label",      "n",     "l",
                                             "two_j",      "energy_cm1",
                                             "source"};
  if (file.header != expected)
    throw DataError(path + ": unexpected header (want label,n,l,two_j," +
                    "energy_cm1,source)");
  std::vector<Level> rows;
  std::map<LevelKey, long> seen;
  for (const auto& row : file.rows) {
    if (row.fields.size() != 6)
      data_fail(path, row.line_no, "expected 6 fields, got " +
                                       std::to_string(row.fields.size()));
    Level lv;
    lv.label = row.fields[0];
    lv.n = parse_int(row.fields[1], path, row.line_no, "n");
    lv.l = parse_int(row.fields[2], path, row.line_no, "l");
    lv.two_j = parse_int(row.fields[3], path, row.line_no, "two_j");
    lv.energy_cm1 = parse_double(row.fields[4], path, row.line_no, "energy");
    lv.source = row.fields[5];
    validate_level(lv, path, row.line_no);
    auto [it, inserted] = seen.emplace(key_of(lv), row.line_no);
    if (!inserted)
      data_fail(path, row.line_no,
                "duplicate level " + lv.label + " (first defined at line " +
                    std::to_string(it->second) + ")");
    rows.push_back(std::move(lv));
  }
  LevelTable table = from_rows(std::move(rows));
  return table;
}

LevelTable LevelTable::from_rows(std::vector<Level> rows) {
  std::map<LevelKey, bool> seen;
  for (const auto& lv : rows) {
    validate_level(lv, "<memory>", kNoLine);
    if (!seen.emplace(key_of(lv), true).second)
      throw DataError("duplicate level " + lv.label);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Level& a, const Level& b) {
                     if (a.energy_cm1 != b.energy_cm1)
                       return a.energy_cm1 < b.energy_cm1;
                     return key_of(a) < key_of(b);
                   });
  LevelTable table;
  table.rows_ = std::move(rows);
  auto ground = std::find_if(table.rows_.begin(), table.rows_.end(),
                             [](const Level& lv) { return lv.energy_cm1 == 0.0; });
  if (ground == table.rows_.end())
    throw DataError("no ground state: dataset has no energy-0 level");
  table.ground_index_ =
      static_cast<std::size_t>(ground - table.rows_.begin());
  return table;
}

void LevelTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  out << "label,n,l,two_j,energy_cm1,source\n";
  for (const auto& lv : rows_) {
    out << lv.label << ',' << lv.n << ',' << lv.l << ',' << lv.two_j << ','
        << shortest(lv.energy_cm1) << ',' << lv.source << '\n';
  }
}

const Level* LevelTable::find(std::string_view label) const {
  for (const auto& lv : rows_)
    if (lv.label == label) return &lv;
  // fall back to parsing, so "05p3/2"-style aliases of the canonical
  // label still resolve
  if (auto key = parse_level_label(label)) return find(*key);
  return nullptr;
}

const Level* LevelTable::find(const LevelKey& key) const {
  for (const auto& lv : rows_)
    if (key_of(lv) == key) return &lv;
  return nullptr;
}

const Level& LevelTable::require(std::string_view label) const {
  if (const Level* lv = find(label)) return *lv;
  throw DataError("unresolved level label '" + std::string(label) + "'");
}

DipoleTable DipoleTable::load(const std::string& path,
                              const LevelTable& levels) {
  csv::File file = csv::read_file(path);
  const std::vector<std::string> expected = {
      "state_a", "state_b", "reduced_me_au", "uncertainty_au", "source"};
  if (file.header != expected)
    throw DataError(path + ": unexpected header (want state_a,state_b," +
                    "reduced_me_au,uncertainty_au,source)");
  std::vector<ReducedDipole> rows;
  for (const auto& row : file.rows) {
    if (row.fields.size() != 5)
      data_fail(path, row.line_no, "expected 5 fields, got " +
                                       std::to_string(row.fields.size()));
    ReducedDipole d;
    d.state_a = row.fields[0];
    d.state_b = row.fields[1];
    d.value_au = parse_double(row.fields[2], path, row.line_no, "matrix element");
    d.uncertainty_au =
        parse_double(row.fields[3], path, row.line_no, "uncertainty");
    d.source = row.fields[4];
    const Level* a = levels.find(d.state_a);
    const Level* b = levels.find(d.state_b);
    if (!a) data_fail(path, row.line_no,
                      "unresolved level label '" + d.state_a + "'");
    if (!b) data_fail(path, row.line_no,
                      "unresolved level label '" + d.state_b + "'");
    if (!dipole_allowed(*a, *b))
      data_fail(path, row.line_no, "selection rules forbid E1 coupling " +
                                       d.state_a + " - " + d.state_b);
    if (d.uncertainty_au < 0.0)
      data_fail(path, row.line_no, "negative uncertainty");
    rows.push_back(std::move(d));
  }
  return from_rows(std::move(rows), levels);
}

DipoleTable DipoleTable::from_rows(std::vector<ReducedDipole> rows,
                                   const LevelTable& levels) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& d : rows) {
    const Level& a = levels.require(d.state_a);
    const Level& b = levels.require(d.state_b);
    if (!dipole_allowed(a, b))
      throw DataError("selection rules forbid E1 coupling " + d.state_a +
                      " - " + d.state_b);
    if (d.uncertainty_au < 0.0)
      throw DataError("negative uncertainty for " + d.state_a + " - " +
                      d.state_b);
    auto key = std::minmax(d.state_a, d.state_b);
    if (!seen.emplace(key.first, key.second).second)
      throw DataError("duplicate dipole pair " + d.state_a + " - " +
                      d.state_b);
  }
  DipoleTable table;
  table.rows_ = std::move(rows);
  return table;
}

void DipoleTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  out << "state_a,state_b,reduced_me_au,uncertainty_au,source\n";
  for (const auto& d : rows_) {
    out << d.state_a << ',' << d.state_b << ',' << shortest(d.value_au) << ','
        << shortest(d.uncertainty_au) << ',' << d.source << '\n';
  }
}

const ReducedDipole* DipoleTable::find(std::string_view a,
                                       std::string_view b) const {
  for (const auto& d : rows_) {
    if ((d.state_a == a && d.state_b == b) ||
        (d.state_a == b && d.state_b == a))
      return &d;
  }
  return nullptr;
}

PolarizabilityModel build_model(const Level& target, const LevelTable& levels,
                                const DipoleTable& dipoles,
                                const ModelConfig& config,
                                const WarningSink& warn) {
  if (target.l != 0)
    throw ModelError("unsupported target " + target.label +
                     ": only s states are supported");
  levels.require(target.label);

  PolarizabilityModel model;
  model.target = target;
  model.n_max = config.n_max;
  model.core_alpha = config.core_alpha;
  model.core_alpha_rel_unc = config.core_alpha_rel_unc;
  model.tail_alpha = config.tail_alpha;
  model.exclusion_halfwidth = config.exclusion_halfwidth;
  if (model.exclusion_halfwidth <= 0.0)
    throw ModelError("exclusion half-width must be positive");

  for (const auto& d : dipoles.all()) {
    const Level* other = nullptr;
    if (d.state_a == target.label)
      other = &levels.require(d.state_b);
    else if (d.state_b == target.label)
      other = &levels.require(d.state_a);
    else
      continue;
    if (other->n > config.n_max) continue;
    model.channels.push_back({*other, d});
  }
  if (model.channels.empty())
    throw ModelError("empty model: no dipole-coupled channels for " +
                     target.label + " with n <= " +
                     std::to_string(config.n_max));

  std::sort(model.channels.begin(), model.channels.end(),
            [](const Channel& a, const Channel& b) {
              return key_of(a.intermediate) < key_of(b.intermediate);
            });

  if (warn) {
    std::map<int, int> count;
    for (const auto& ch : model.channels) ++count[ch.intermediate.n];
    for (const auto& [n, c] : count) {
      if (c == 1)
        warn("fine-structure partner missing for n=" + std::to_string(n) +
             " in the " + target.label + " model");
    }
  }
  return model;
}

std::vector<Coincidence> find_coincidences(const LevelTable& levels,
                                           const Level& target_a,
                                           const Level& target_b,
                                           double tolerance_cm1,
                                           bool dipole_allowed_only) {
  if (tolerance_cm1 <= 0.0)
    throw UsageError("coincidence tolerance must be positive");
  levels.require(target_a.label);
  levels.require(target_b.label);

  const double target_delta =
      std::abs(target_a.energy_cm1 - target_b.energy_cm1);
  auto is_target_pair = [&](const Level& x, const Level& y) {
    return (key_of(x) == key_of(target_a) && key_of(y) == key_of(target_b)) ||
           (key_of(x) == key_of(target_b) && key_of(y) == key_of(target_a));
  };

  std::vector<Coincidence> out;
  auto all = levels.all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Level& lo = all[i];
      const Level& hi = all[j];
      if (is_target_pair(lo, hi)) continue;
      if (dipole_allowed_only && !dipole_allowed(lo, hi)) continue;
      double delta = std::abs(lo.energy_cm1 - hi.energy_cm1);
      double mismatch = std::abs(delta - target_delta);
      if (mismatch <= tolerance_cm1)
        out.push_back({lo, hi, delta, target_delta, mismatch});
    }
  }
  std::sort(out.begin(), out.end(), [](const Coincidence& x,
                                       const Coincidence& y) {
    if (x.mismatch_cm1 != y.mismatch_cm1) return x.mismatch_cm1 < y.mismatch_cm1;
    if (x.a.label != y.a.label) return x.a.label < y.a.label;
    return x.b.label < y.b.label;
  });
  return out;
}

}  // namespace magicpol
