/**
 * Copyright 2026 grex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grex/error.hpp"
#include "grex/graded.hpp"
#include "grex/harness.hpp"
#include "grex/io.hpp"
#include "grex/pfaffian.hpp"
#include "grex/semigroup.hpp"

#ifndef GREX_VERSION
#define GREX_VERSION "0.0.0"
#endif

namespace {

constexpr uint64_t kDefaultSeed = 1729;

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) grex::fail_input("FileError", "cannot open " + path);
    os << in.rdbuf();
  }
  return os.str();
}

grex::Ideal read_ideal(const std::string& path) {
  grex::IdealText t = grex::parse_ideal_text(read_input(path));
  return grex::Ideal(t.ring, t.polys);
}

grex::Ideal read_ideal_in(const grex::Ring& ring, const std::string& path) {
  grex::IdealText t = grex::parse_ideal_text(read_input(path));
  if (!grex::same_ring(ring, t.ring))
    grex::fail_input("RingMismatch", "inputs must share one ring header");
  return grex::Ideal(t.ring, t.polys);
}

grex::AltMatrix read_alt(const std::string& path) {
  grex::AltText t = grex::parse_alt_text(read_input(path));
  std::vector<std::vector<grex::Poly>> rows;
  size_t pos = 0;
  for (int i = 0; i + 1 < t.n; ++i) {
    std::vector<grex::Poly> row;
    for (int j = i + 1; j < t.n; ++j) row.push_back(t.upper[pos++]);
    rows.push_back(std::move(row));
  }
  return grex::AltMatrix::from_upper(t.ring, rows);
}

grex::Field parse_field(int64_t ch) {
  if (ch == 0) return grex::Field::rationals();
  if (ch < 0 || ch > INT32_MAX) grex::fail_input("BadField", "characteristic out of range");
  return grex::Field::prime(static_cast<uint32_t>(ch));
}

int64_t default_characteristic() {
  const char* env = std::getenv("GREX_DEFAULT_CHAR");
  if (!env || !*env) return 0;
  try {
    size_t used = 0;
    long long v = std::stoll(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    grex::fail_input("BadField", "GREX_DEFAULT_CHAR is not a nonnegative integer");
  }
}

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      grex::fail_input("BadList", "expected comma-separated integers, got '" + item + "'");
    }
  }
  if (out.empty()) grex::fail_input("BadList", "empty integer list");
  return out;
}

uint64_t resolve_seed(const std::string& spec) {
  if (spec == "random") {
    std::random_device rd;
    uint64_t s = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    return s;
  }
  try {
    size_t used = 0;
    uint64_t v = std::stoull(spec, &used);
    if (used != spec.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    grex::fail_input("BadSeed", "seed must be an unsigned integer or 'random'");
  }
}

void print_ideal(std::ostream& os, const grex::Ideal& i) {
  os << grex::print_ideal_text(i.ring(), i.gb().gens);
}

std::string degree_str(int64_t d) {
  if (d == grex::kMinusInf) return "-inf";
  if (d == grex::kPlusInf) return "+inf";
  return std::to_string(d);
}

void print_resolution(std::ostream& os, const grex::FreeRes& res) {
  for (size_t lvl = 0; lvl < res.degs.size(); ++lvl) {
    os << lvl << ":";
    for (int64_t d : res.degs[lvl]) os << " " << d;
    if (res.degs[lvl].empty()) os << " .";
    os << "\n";
  }
}

void print_betti(std::ostream& os, const std::map<std::pair<int64_t, int64_t>, int64_t>& b) {
  int64_t max_i = 0, min_r = 0, max_r = 0;
  bool first = true;
  for (const auto& [ij, cnt] : b) {
    if (cnt == 0) continue;
    int64_t i = ij.first, r = ij.second - ij.first;
    if (first) {
      min_r = max_r = r;
      first = false;
    }
    max_i = std::max(max_i, i);
    min_r = std::min(min_r, r);
    max_r = std::max(max_r, r);
  }
  std::vector<int64_t> totals(max_i + 1, 0);
  for (const auto& [ij, cnt] : b)
    if (ij.first <= max_i) totals[ij.first] += cnt;
  size_t width = 1;
  for (const auto& [ij, cnt] : b) width = std::max(width, std::to_string(cnt).size());
  for (int64_t i = 0; i <= max_i; ++i)
    width = std::max(width, std::to_string(i).size());
  auto cell = [&](const std::string& s) {
    os << " " << std::string(width > s.size() ? width - s.size() : 0, ' ') << s;
  };
  os << "      ";
  for (int64_t i = 0; i <= max_i; ++i) cell(std::to_string(i));
  os << "\n";
  os << "total:";
  for (int64_t i = 0; i <= max_i; ++i) cell(std::to_string(totals[i]));
  os << "\n";
  for (int64_t r = min_r; r <= max_r; ++r) {
    std::string label = std::to_string(r) + ":";
    os << std::string(6 > label.size() ? 6 - label.size() : 0, ' ') << label;
    for (int64_t i = 0; i <= max_i; ++i) {
      auto it = b.find({i, i + r});
      cell(it == b.end() || it->second == 0 ? "." : std::to_string(it->second));
    }
    os << "\n";
  }
}

std::vector<int> index_range(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

void next_subset(std::vector<int>& s, int n, bool& done) {
  int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) {
    done = true;
    return;
  }
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
}

int run_harness(const std::string& scenario, uint64_t seed, const grex::Field& field,
                const std::vector<int64_t>& gens, int trials, const std::string& out) {
  grex::Report rep = [&] {
    if (!gens.empty()) {
      if (scenario != "monomial-curve")
        grex::fail_input("BadOption", "--gens applies only to the monomial-curve scenario");
      return grex::scenario_monomial_curve(gens, field);
    }
    if (trials > 0 && scenario == "monomial-curve-random")
      return grex::scenario_monomial_curve_random(trials, seed, field);
    if (trials > 0 && scenario == "hyperplane")
      return grex::scenario_hyperplane_suite(trials, seed, field);
    return grex::run_named_scenario(scenario, seed, field);
  }();
  std::cerr << "seed = " << rep.seed << "\n";
  if (out.empty()) {
    std::cout << rep.to_text();
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) grex::fail_input("FileError", "cannot write " + out);
    f << rep.to_json();
  }
  return rep.all_passed() ? 0 : 1;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact graded commutative algebra toolkit"};
  app.set_version_flag("--version", GREX_VERSION);
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string by_path;
  int elim_count = 1;
  int64_t hilb_from = 0, hilb_to = 10;
  std::string sg_gens;
  std::string sg_mode = "summary";
  int64_t field_char = -1;
  std::string seed_spec = std::to_string(kDefaultSeed);
  int pf_size = 2;
  int pf_level = 1;
  int pf_depth = 3;
  std::string scenario;
  std::string hr_gens;
  int hr_trials = 0;
  std::string out_path;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
  gb->add_option("input", in_path, "ideal file, or - for stdin");

  auto* quot = app.add_subcommand("quotient", "ideal quotient A : B");
  quot->add_option("input", in_path, "ideal file for A")->required();
  quot->add_option("by", by_path, "ideal file for B, same ring header")->required();

  auto* sat = app.add_subcommand("saturate", "saturation A : B^inf");
  sat->add_option("input", in_path, "ideal file for A")->required();
  sat->add_option("--by", by_path, "ideal file for B; default is the irrelevant maximal ideal");

  auto* elim = app.add_subcommand("eliminate", "eliminate the first k variables");
  elim->add_option("input", in_path, "ideal file; ring order must be block:k")->required();
  elim->add_option("--vars", elim_count, "number of leading variables to eliminate")
      ->check(CLI::PositiveNumber);

  auto* dim = app.add_subcommand("dim", "Krull dimension of R/I and height of I");
  dim->add_option("input", in_path, "ideal file, or - for stdin");

  auto* res = app.add_subcommand("res", "minimal free resolution shifts of R/I");
  res->add_option("input", in_path, "ideal file, or - for stdin");

  auto* betti = app.add_subcommand("betti", "graded Betti table of R/I");
  betti->add_option("input", in_path, "ideal file, or - for stdin");

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of R/I");
  reg->add_option("input", in_path, "ideal file, or - for stdin");

  auto* hilb = app.add_subcommand("hilbert", "Hilbert function values of R/I");
  hilb->add_option("input", in_path, "ideal file, or - for stdin");
  hilb->add_option("--from", hilb_from, "first degree (default 0)");
  hilb->add_option("--to", hilb_to, "last degree (default 10)");

  auto* sym = app.add_subcommand("symbolic-square", "second symbolic power of a dim-1 ideal");
  sym->add_option("input", in_path, "ideal file, or - for stdin");

  auto* sg = app.add_subcommand("semigroup", "numerical semigroup invariants");
  sg->add_option("--gens", sg_gens, "semigroup generators, e.g. 3,4,5")->required();
  sg->add_option("mode", sg_mode, "frobenius | apery | toric (default: summary)")
      ->check(CLI::IsMember({"summary", "frobenius", "apery", "toric"}));
  sg->add_option("--field", field_char, "characteristic for toric, 0 or a prime");

  auto* pf = app.add_subcommand("pfaffian", "alternating-matrix computations");
  pf->require_subcommand(1);
  auto* pfi = pf->add_subcommand("pf-ideal", "ideal of t x t principal Pfaffians");
  pfi->add_option("input", in_path, "matrix file, or - for stdin");
  pfi->add_option("--size", pf_size, "Pfaffian size t, even")->required();
  auto* pfc = pf->add_subcommand("check-conditions", "height conditions at a level");
  pfc->add_option("input", in_path, "matrix file, or - for stdin");
  pfc->add_option("--level", pf_level, "condition level s")->required();
  auto* pfr = pf->add_subcommand("residuals", "residual intersections from generic generators");
  pfr->add_option("input", in_path, "matrix file, or - for stdin");
  pfr->add_option("--depth", pf_depth, "subset size s")->required();
  pfr->add_option("--seed", seed_spec, "unsigned integer or 'random'");

  auto* hr = app.add_subcommand("harness", "scenario verification runs");
  hr->require_subcommand(1);
  auto* hrun = hr->add_subcommand("run", "run one scenario and report claims");
  std::string names;
  for (const std::string& n : grex::scenario_names()) {
    if (!names.empty()) names += ", ";
    names += n;
  }
  hrun->add_option("--scenario", scenario, "one of: " + names)->required();
  hrun->add_option("--seed", seed_spec, "unsigned integer or 'random'");
  hrun->add_option("--field", field_char, "characteristic, 0 or a prime");
  hrun->add_option("--gens", hr_gens, "semigroup generators for monomial-curve");
  hrun->add_option("--trials", hr_trials, "trial count for randomized scenarios")
      ->check(CLI::PositiveNumber);
  hrun->add_option("--out", out_path, "write the JSON report here; stdout stays empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (field_char < 0) field_char = default_characteristic();

  if (gb->parsed()) {
    print_ideal(std::cout, read_ideal(in_path));
    return 0;
  }
  if (quot->parsed()) {
    grex::Ideal a = read_ideal(in_path);
    print_ideal(std::cout, grex::quotient(a, read_ideal_in(a.ring(), by_path)));
    return 0;
  }
  if (sat->parsed()) {
    grex::Ideal a = read_ideal(in_path);
    grex::Ideal b = by_path.empty() ? grex::irrelevant_ideal(a.ring())
                                    : read_ideal_in(a.ring(), by_path);
    print_ideal(std::cout, grex::saturate(a, b));
    return 0;
  }
  if (elim->parsed()) {
    grex::Ideal a = read_ideal(in_path);
    if (elim_count > static_cast<int>(a.ring()->nvars()))
      grex::fail_input("BadRange", "more variables than the ring has");
    print_ideal(std::cout, grex::eliminate(a, index_range(elim_count)));
    return 0;
  }
  if (dim->parsed()) {
    grex::Ideal a = read_ideal(in_path);
    std::cout << "dim = " << degree_str(grex::dimension(a)) << "\n";
    std::cout << "height = " << degree_str(grex::height(a)) << "\n";
    return 0;
  }
  if (res->parsed()) {
    grex::FreeRes r = grex::free_resolution(read_ideal(in_path));
    print_resolution(std::cout, r);
    return 0;
  }
  if (betti->parsed()) {
    grex::FreeRes r = grex::free_resolution(read_ideal(in_path));
    print_betti(std::cout, grex::betti_table(r));
    return 0;
  }
  if (reg->parsed()) {
    std::cout << "reg = " << grex::regularity_quotient(read_ideal(in_path)) << "\n";
    return 0;
  }
  if (hilb->parsed()) {
    if (hilb_from > hilb_to) grex::fail_input("BadRange", "--from exceeds --to");
    grex::Ideal a = read_ideal(in_path);
    std::vector<int64_t> vals = grex::hilbert_values(a, hilb_from, hilb_to);
    for (size_t k = 0; k < vals.size(); ++k)
      std::cout << (hilb_from + static_cast<int64_t>(k)) << ": " << vals[k] << "\n";
    return 0;
  }
  if (sym->parsed()) {
    print_ideal(std::cout, grex::symbolic_square(read_ideal(in_path)));
    return 0;
  }
  if (sg->parsed()) {
    grex::NumericalSemigroup h(parse_int_list(sg_gens));
    if (sg_mode == "frobenius") {
      std::cout << h.frobenius() << "\n";
    } else if (sg_mode == "apery") {
      bool sep = false;
      for (int64_t w : h.apery(h.multiplicity())) {
        if (sep) std::cout << " ";
        std::cout << w;
        sep = true;
      }
      std::cout << "\n";
    } else if (sg_mode == "toric") {
      print_ideal(std::cout, grex::toric_ideal(h, parse_field(field_char)));
    } else {
      std::cout << "gens =";
      for (int64_t g : h.gens()) std::cout << " " << g;
      std::cout << "\n";
      std::cout << "frobenius = " << h.frobenius() << "\n";
      std::cout << "apery =";
      for (int64_t w : h.apery(h.multiplicity())) std::cout << " " << w;
      std::cout << "\n";
    }
    return 0;
  }
  if (pfi->parsed()) {
    print_ideal(std::cout, grex::pf_ideal(read_alt(in_path), pf_size));
    return 0;
  }
  if (pfc->parsed()) {
    grex::ConditionReport r = grex::check_conditions(read_alt(in_path), pf_level);
    std::cout << "ht Pf_" << (r.n - 1) << " = " << r.ht_top << "\n";
    for (const auto& row : r.rows)
      std::cout << "ht Pf_" << row[0] << " = " << degree_str(row[2]) << " (need >= " << row[1]
                << ")\n";
    std::cout << (r.ok ? "conditions hold" : "conditions fail") << "\n";
    return 0;
  }
  if (pfr->parsed()) {
    uint64_t seed = resolve_seed(seed_spec);
    std::cerr << "seed = " << seed << "\n";
    grex::Rng rng(seed);
    grex::AltMatrix m = read_alt(in_path);
    int n = m.size();
    if (pf_depth < 1 || pf_depth > n) grex::fail_input("BadRange", "subset size out of range");
    grex::Ideal top = grex::pf_ideal(m, n - 1);
    grex::Recombination rec = grex::generic_generators(grex::signed_max_pfaffians(m), rng);
    grex::Ideal total = grex::Ideal::zero(m.ring());
    std::vector<int> s = index_range(pf_depth);
    bool done = false;
    while (!done) {
      std::vector<grex::Poly> picked;
      for (int idx : s) picked.push_back(rec.gens[idx]);
      grex::ResidualResult rr = grex::residual_intersection(top, picked, pf_depth);
      std::cout << "S={";
      for (size_t k = 0; k < s.size(); ++k) std::cout << (k ? "," : "") << (s[k] + 1);
      std::cout << "} ht = " << degree_str(grex::height(rr.k))
                << (rr.is_residual ? " residual" : " not residual")
                << (rr.geometric ? " geometric" : "") << "\n";
      total = grex::sum(total, rr.k);
      next_subset(s, n, done);
    }
    std::cout << "sum:\n";
    print_ideal(std::cout, total);
    return 0;
  }
  if (hrun->parsed()) {
    uint64_t seed = resolve_seed(seed_spec);
    std::vector<int64_t> gens;
    if (!hr_gens.empty()) gens = parse_int_list(hr_gens);
    return run_harness(scenario, seed, parse_field(field_char), gens, hr_trials, out_path);
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const grex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case grex::errc::resource:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
