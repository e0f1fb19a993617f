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

#include "grex/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "grex/graded.hpp"
#include "grex/io.hpp"
#include "json.hpp"

#ifndef GREX_VERSION
#define GREX_VERSION "0.0.0"
#endif

namespace grex {
namespace {

std::string deg_str(int64_t v) {
  if (v == kMinusInf) return "-inf";
  if (v == kPlusInf) return "+inf";
  return std::to_string(v);
}

bool finite_deg(int64_t v) { return v != kMinusInf && v != kPlusInf; }

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

constexpr size_t kDigestLimit = 240;

/// Canonical value string for an ideal: the reduced Groebner basis when it
/// prints short, otherwise the generator count plus a content hash. Either
/// way equal ideals give equal strings.
std::string ideal_digest(const Ideal& i) {
  const GroebnerBasis& gb = i.gb();
  std::string joined;
  for (const Poly& g : gb.gens) {
    if (!joined.empty()) joined += "; ";
    joined += print_poly(g);
  }
  if (joined.size() <= kDigestLimit) return "{" + joined + "}";
  std::ostringstream os;
  os << "{" << gb.gens.size() << " basis elements, fnv=" << hex64(fnv1a(joined)) << "}";
  return os.str();
}

std::string poly_digest(const Poly& f) {
  std::string s = print_poly(f);
  if (s.size() <= kDigestLimit) return s;
  std::ostringstream os;
  os << "<" << f.terms().size() << " terms, fnv=" << hex64(fnv1a(s)) << ">";
  return os.str();
}

Claim mk(std::string desc, std::string lhs, std::string rhs, std::string rel, bool ok) {
  Claim c;
  c.description = std::move(desc);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.relation = std::move(rel);
  c.verdict = ok ? "PASS" : "FAIL";
  return c;
}

Claim claim_le(std::string desc, int64_t lhs, int64_t rhs) {
  Claim c = mk(std::move(desc), deg_str(lhs), deg_str(rhs), "<=", lhs <= rhs);
  if (finite_deg(lhs) && finite_deg(rhs)) {
    c.has_slack = true;
    c.slack = rhs - lhs;
  }
  return c;
}

Claim claim_eq(std::string desc, int64_t lhs, int64_t rhs) {
  return mk(std::move(desc), deg_str(lhs), deg_str(rhs), "==", lhs == rhs);
}

/// Hypothesis certificate: a mismatch means the input misses the theorem's
/// hypotheses, so the scenario skips rather than fails.
Claim claim_cert(std::string desc, int64_t lhs, int64_t rhs) {
  Claim c = mk(std::move(desc), deg_str(lhs), deg_str(rhs), "==", true);
  if (lhs != rhs) c.verdict = "SKIP";
  return c;
}

/// Informational comparison: records both sides and their gap, never fails.
Claim claim_cmp(std::string desc, int64_t lhs, int64_t rhs) {
  Claim c = mk(std::move(desc), deg_str(lhs), deg_str(rhs), "cmp", true);
  if (finite_deg(lhs) && finite_deg(rhs)) {
    c.has_slack = true;
    c.slack = rhs - lhs;
  }
  return c;
}

Claim claim_ok(std::string desc, bool ok, std::string lhs, std::string rhs,
               std::string rel) {
  return mk(std::move(desc), std::move(lhs), std::move(rhs), std::move(rel), ok);
}

Claim claim_ideq(std::string desc, const Ideal& a, const Ideal& b) {
  return mk(std::move(desc), ideal_digest(a), ideal_digest(b), "==", a.equals(b));
}

Claim claim_member(std::string desc, const Ideal& a, const Poly& f) {
  return mk(std::move(desc), poly_digest(f), ideal_digest(a), "in", a.contains(f));
}

Claim claim_skip(std::string desc, std::string why) {
  Claim c;
  c.description = std::move(desc);
  c.lhs = std::move(why);
  c.relation = "skipped";
  c.verdict = "SKIP";
  return c;
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  int64_t ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

GBStats gb_delta(const GBStats& before, const GBStats& after) {
  GBStats d;
  d.pairs_processed = after.pairs_processed - before.pairs_processed;
  d.pairs_discarded = after.pairs_discarded - before.pairs_discarded;
  d.reductions_to_zero = after.reductions_to_zero - before.reductions_to_zero;
  d.max_degree = after.max_degree;
  d.basis_size = after.basis_size - before.basis_size;
  return d;
}

void add_ring(Report& r, const Ring& ring) {
  std::string h = print_ring_header(*ring);
  if (std::find(r.rings.begin(), r.rings.end(), h) == r.rings.end()) r.rings.push_back(h);
}

void add_param(Report& r, std::string key, std::string val) {
  r.params.emplace_back(std::move(key), std::move(val));
}

/// Appends a sub-report with every description, parameter and timing key
/// prefixed; ring headers are deduplicated and GB statistics accumulate.
void merge_into(Report& dst, const Report& src, const std::string& prefix) {
  for (const auto& [k, v] : src.params) dst.params.emplace_back(prefix + k, v);
  for (const std::string& h : src.rings) {
    if (std::find(dst.rings.begin(), dst.rings.end(), h) == dst.rings.end())
      dst.rings.push_back(h);
  }
  for (Claim c : src.claims) {
    c.description = prefix + c.description;
    dst.claims.push_back(std::move(c));
  }
  for (const auto& [k, v] : src.timings_ms) dst.timings_ms.emplace_back(prefix + k, v);
  dst.gb.absorb(src.gb);
}

std::vector<std::string> default_var_names(int d) {
  static const char* letters[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) {
    if (d <= 6) {
      names.push_back(letters[i]);
    } else {
      names.push_back("x" + std::to_string(i + 1));
    }
  }
  return names;
}

Ring standard_ring(const Field& field, int d) {
  return make_ring(field, default_var_names(d), std::vector<int64_t>(d, 1));
}

FieldMat random_invertible(const Field& f, int n, Rng& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    FieldMat m = FieldMat::random(f, n, n, rng);
    if (!m.det().is_zero()) return m;
  }
  fail_input("GenericityFailure", "no invertible random matrix found");
}

Poly random_form(const Ring& ring, int64_t degree, Rng& rng) {
  std::vector<Term> terms;
  for (const Monomial& m : monomials_of_degree(ring, degree)) {
    Coeff c = Coeff::random(ring->field, rng);
    if (!c.is_zero()) terms.push_back({c, m});
  }
  return Poly::from_terms(ring, std::move(terms));
}

int64_t max_or_minus_inf(const std::vector<int64_t>& v) {
  return v.empty() ? kMinusInf : *std::max_element(v.begin(), v.end());
}

/// b_0(C_i) for the i-th module of a resolution of R/I; kMinusInf past the
/// projective dimension.
int64_t res_level_top(const FreeRes& res, int64_t level) {
  if (level < 0 || level >= static_cast<int64_t>(res.degs.size())) return kMinusInf;
  return max_or_minus_inf(res.degs[level]);
}

std::string join_i64(const std::vector<int64_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string render_conditions(const ConditionReport& cr) {
  std::ostringstream os;
  os << "ht Pf_" << cr.n - 1 << "=" << cr.ht_top;
  for (const auto& row : cr.rows) {
    os << ", ht Pf_" << row[0] << "=" << deg_str(row[2]) << " (need >=" << row[1] << ")";
  }
  return os.str();
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string render_subset(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

}  // namespace

bool Report::all_passed() const { return fail_count() == 0; }

int Report::fail_count() const {
  int n = 0;
  for (const Claim& c : claims)
    if (c.verdict == "FAIL") ++n;
  return n;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = GREX_VERSION;
  j["scenario"] = scenario;
  j["seed"] = seed;
  j["characteristic"] = characteristic;
  nlohmann::ordered_json jp = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) jp[k] = v;
  j["params"] = std::move(jp);
  j["rings"] = rings;
  nlohmann::ordered_json jc = nlohmann::ordered_json::array();
  for (const Claim& c : claims) {
    nlohmann::ordered_json e;
    e["description"] = c.description;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["relation"] = c.relation;
    e["verdict"] = c.verdict;
    if (c.has_slack) e["slack"] = c.slack;
    jc.push_back(std::move(e));
  }
  j["claims"] = std::move(jc);
  nlohmann::ordered_json jt = nlohmann::ordered_json::object();
  for (const auto& [k, v] : timings_ms) jt[k] = v;
  j["timings_ms"] = std::move(jt);
  nlohmann::ordered_json jg;
  jg["pairs_processed"] = gb.pairs_processed;
  jg["pairs_discarded"] = gb.pairs_discarded;
  jg["reductions_to_zero"] = gb.reductions_to_zero;
  jg["max_degree"] = gb.max_degree;
  jg["basis_size"] = gb.basis_size;
  j["gb_stats"] = std::move(jg);
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "scenario " << scenario << " seed " << seed << " char " << characteristic << "\n";
  for (const Claim& c : claims) {
    os << "  " << c.verdict << "  " << c.description;
    if (c.relation == "skipped") {
      os << " (" << c.lhs << ")";
    } else if (c.relation == "in") {
      os << ": " << c.lhs << " in " << c.rhs;
    } else {
      os << ": " << c.lhs << " " << c.relation << " " << c.rhs;
    }
    if (c.has_slack) os << " (slack " << c.slack << ")";
    os << "\n";
  }
  int f = fail_count();
  os << (f == 0 ? "OK" : "FAILED") << " " << claims.size() << " claims, " << f
     << " failures\n";
  return os.str();
}

namespace {

/// Shared body for one semigroup instance; claims land in r.
void audit_monomial_curve(Report& r, const std::string& prefix,
                          const std::vector<int64_t>& gens, const Field& field,
                          bool verbose) {
  NumericalSemigroup h(gens);
  int64_t frob = h.frobenius();
  int64_t top_gen = h.gens().back();
  Ideal p = toric_ideal(h, field);
  const Ring& ring = p.ring();
  add_ring(r, ring);
  add_param(r, prefix + "gens", join_i64(h.gens()));
  add_param(r, prefix + "frobenius", std::to_string(frob));

  Ideal m = irrelevant_ideal(ring);
  r.claims.push_back(claim_eq(prefix + "largest generator degree of the maximal ideal equals the top semigroup generator",
                              top_generator_degree(m), top_gen));
  r.claims.push_back(claim_eq(prefix + "postulation number of the semigroup ring equals the largest gap",
                              postulation_number(p), frob));

  int64_t dim = dimension(p);
  int64_t dep = depth_quotient(p);
  r.claims.push_back(claim_eq(prefix + "Krull dimension of the semigroup ring", dim, 1));
  r.claims.push_back(claim_eq(prefix + "depth of the semigroup ring", dep, 1));
  if (dim != 1 || dep != 1) {
    r.claims.push_back(claim_skip(prefix + "symbolic square degree bound",
                                  "quotient is not one-dimensional Cohen-Macaulay"));
    return;
  }

  int64_t b0p = top_generator_degree(p);
  Ideal p2 = power(p, 2);
  Ideal ps = symbolic_square(p);
  int64_t b0p2 = top_generator_degree(p2);
  int64_t b0ps = top_generator_degree(ps);
  add_param(r, prefix + "b0_prime", deg_str(b0p));
  add_param(r, prefix + "b0_square", deg_str(b0p2));
  add_param(r, prefix + "b0_symbolic", deg_str(b0ps));

  int64_t branch_a = b0p + top_gen + frob;
  int64_t branch_double = 2 * b0p;
  int64_t bound = std::max(branch_a, branch_double);
  r.claims.push_back(claim_le(prefix + "largest generator degree of the symbolic square within the semigroup bound",
                              b0ps, bound));
  if (verbose) {
    r.claims.push_back(claim_cmp(prefix + "symbolic square degree against the gap branch alone",
                                 b0ps, branch_a));
    r.claims.push_back(claim_cmp(prefix + "ordinary square degree against twice the prime degree",
                                 b0p2, branch_double));
  }
}

}  // namespace

Report scenario_monomial_curve(const std::vector<int64_t>& gens, const Field& field) {
  Report r;
  r.scenario = "monomial-curve";
  r.characteristic = field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();
  audit_monomial_curve(r, "", gens, field, true);
  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

Report scenario_monomial_curve_random(int trials, uint64_t seed, const Field& field) {
  if (trials < 1) fail_input("BadRange", "trials must be positive");
  Report r;
  r.scenario = "monomial-curve-random";
  r.seed = seed;
  r.characteristic = field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();
  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<uint64_t>(t)));
    std::string prefix = "t" + std::to_string(t) + " ";
    bool built = false;
    for (int attempt = 0; attempt < 200 && !built; ++attempt) {
      int count = 2 + static_cast<int>(rng.below(3));
      std::set<int64_t> draw;
      while (static_cast<int>(draw.size()) < count) draw.insert(rng.range(2, 12));
      std::vector<int64_t> gens(draw.begin(), draw.end());
      try {
        audit_monomial_curve(r, prefix, gens, field, false);
        built = true;
      } catch (const Error& e) {
        if (e.code() != errc::input) throw;
      }
    }
    if (!built) {
      r.claims.push_back(claim_skip(prefix + "semigroup audit",
                                    "no valid random semigroup after 200 draws"));
    }
  }
  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

Report scenario_points(const Ideal& i) {
  Report r;
  r.scenario = "points";
  r.characteristic = i.ring()->field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();
  add_ring(r, i.ring());

  int64_t dim = dimension(i);
  int64_t dep = depth_quotient(i);
  r.claims.push_back(claim_cert("Krull dimension of the quotient", dim, 1));
  r.claims.push_back(claim_cert("depth of the quotient", dep, 1));
  if (dim != 1 || dep != 1) {
    r.claims.push_back(claim_skip("symbolic square degree bounds",
                                  "quotient is not one-dimensional Cohen-Macaulay"));
    r.gb = gb_delta(before, gb_totals_snapshot());
    r.timings_ms.emplace_back("total", sw.ms());
    return r;
  }

  int64_t b0 = top_generator_degree(i);
  int64_t reg = regularity_quotient(i);
  add_param(r, "b0", deg_str(b0));
  add_param(r, "reg_quotient", deg_str(reg));
  r.claims.push_back(claim_eq("regularity of the quotient equals the postulation number plus one",
                              reg, postulation_number(i) + 1));

  FreeRes res = free_resolution(i);
  bool linear = true;
  int64_t gen_deg = res.degs.size() > 1 ? res.degs[1].front() : kMinusInf;
  for (size_t level = 1; level < res.degs.size(); ++level) {
    for (int64_t d : res.degs[level]) {
      if (d != gen_deg + static_cast<int64_t>(level) - 1) linear = false;
    }
  }
  add_param(r, "linear_resolution", linear ? "yes" : "no");

  Ideal sq = power(i, 2);
  Ideal sym = symbolic_square(i);
  int64_t b0sq = top_generator_degree(sq);
  int64_t b0sym = top_generator_degree(sym);
  add_param(r, "b0_square", deg_str(b0sq));
  add_param(r, "b0_symbolic", deg_str(b0sym));

  r.claims.push_back(claim_le("symbolic square degree within b0 plus regularity plus one",
                              b0sym, b0 + reg + 1));
  if (linear) {
    r.claims.push_back(claim_skip("sharpened bound without the plus one",
                                  "the resolution of the ideal is linear"));
  } else {
    r.claims.push_back(claim_le("sharpened bound for a nonlinear resolution",
                                b0sym, b0 + reg));
  }

  std::map<int64_t, int64_t> rel = minimal_generator_degrees(sym, sq);
  int64_t b0rel = rel.empty() ? kMinusInf : rel.rbegin()->first;
  add_param(r, "b0_symbolic_mod_square", deg_str(b0rel));
  r.claims.push_back(claim_le("symbolic square modulo the square within b0 plus regularity",
                              b0rel, b0 + reg));

  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

Report scenario_points_suite(uint64_t seed, const Field& field) {
  Report r;
  r.scenario = "points";
  r.seed = seed;
  r.characteristic = field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();

  {
    Ring ring = standard_ring(field, 3);
    Poly x = Poly::variable(ring, 0);
    Poly y = Poly::variable(ring, 1);
    Poly z = Poly::variable(ring, 2);
    PolyMat m(ring, 2, 3);
    m.at(0, 0) = x;
    m.at(0, 1) = y;
    m.at(0, 2) = z;
    m.at(1, 0) = y;
    m.at(1, 1) = z;
    m.at(1, 2) = x;
    Ideal i = minors_ideal(m, 2);
    merge_into(r, scenario_points(i), "det ");
  }

  {
    Ring ring = standard_ring(field, 3);
    Rng rng(Rng::derive(seed, 1));
    bool done = false;
    for (int attempt = 0; attempt < 5 && !done; ++attempt) {
      std::vector<Ideal> pts;
      for (int k = 0; k < 3; ++k) {
        Ideal pt(ring, {random_form(ring, 1, rng), random_form(ring, 1, rng)});
        if (dimension(pt) != 1) break;
        pts.push_back(pt);
      }
      if (pts.size() != 3) continue;
      Ideal i = intersect(intersect(pts[0], pts[1]), pts[2]);
      if (dimension(i) != 1) continue;
      merge_into(r, scenario_points(i), "pts ");
      done = true;
    }
    if (!done)
      r.claims.push_back(claim_skip("pts random point triple",
                                    "no generic draw after 5 attempts"));
  }

  {
    Ring ring = standard_ring(field, 3);
    Rng rng(Rng::derive(seed, 2));
    bool done = false;
    for (int attempt = 0; attempt < 5 && !done; ++attempt) {
      Ideal i(ring, {random_form(ring, 2, rng), random_form(ring, 2, rng)});
      if (dimension(i) != 1) continue;
      merge_into(r, scenario_points(i), "ci ");
      done = true;
    }
    if (!done)
      r.claims.push_back(claim_skip("ci random quadric pair",
                                    "no generic draw after 5 attempts"));
  }

  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

Report scenario_hyperplane(const Ideal& i, int c, int trials, uint64_t seed) {
  const Ring& ring = i.ring();
  if (!is_standard_graded(*ring)) {
    fail_input("StandardGradingRequired", "hyperplane sections need a standard grading");
  }
  int64_t d = ring->nvars();
  int64_t dimq = dimension(i);
  if (c < 1 || c > dimq - 1) {
    fail_input("BadRange", "section count must lie between 1 and dim - 1");
  }

  Report r;
  r.scenario = "hyperplane";
  r.seed = seed;
  r.characteristic = ring->field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();
  add_ring(r, ring);
  add_param(r, "c", std::to_string(c));
  add_param(r, "dim_quotient", deg_str(dimq));

  FreeRes res = free_resolution(i);
  int64_t b0 = res_level_top(res, 1);
  int64_t b_mid = res_level_top(res, d - c - 1);
  int64_t branch = b_mid == kMinusInf ? kMinusInf : b_mid - d + c + 1;
  int64_t bound = std::max(b0, branch);
  add_param(r, "b0", deg_str(b0));
  add_param(r, "b_level_" + std::to_string(d - c - 2), deg_str(b_mid));
  add_param(r, "bound", deg_str(bound));

  int nbar = static_cast<int>(d) - c;
  std::vector<std::string> vars(ring->vars.begin(), ring->vars.begin() + nbar);
  Ring rbar = make_ring(ring->field, vars, std::vector<int64_t>(nbar, 1));
  add_ring(r, rbar);
  std::vector<Poly> images;
  for (int64_t k = 0; k < d; ++k) {
    images.push_back(k < nbar ? Poly::variable(rbar, static_cast<int>(k)) : Poly(rbar));
  }

  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<uint64_t>(t)));
    std::string prefix = "t" + std::to_string(t) + " ";
    bool done = false;
    for (int attempt = 0; attempt < 5 && !done; ++attempt) {
      FieldMat u = random_invertible(ring->field, static_cast<int>(d), rng);
      Ideal moved = substitute_linear(i, u);
      std::vector<Poly> cut;
      for (const Poly& g : moved.gens()) cut.push_back(substitute(g, rbar, images));
      Ideal ibar(rbar, cut);
      if (dimension(ibar) != dimq - c) continue;
      done = true;
      r.claims.push_back(claim_eq(prefix + "dimension drop of the general section",
                                  dimension(ibar), dimq - c));
      Ideal j = saturate(ibar, irrelevant_ideal(rbar));
      int64_t b0j = top_generator_degree(j);
      r.claims.push_back(claim_le(prefix + "section generator degree within the resolution bound",
                                  b0j, bound));
      if (c == dimq - 1) {
        if (b_mid == kMinusInf) {
          r.claims.push_back(claim_skip(prefix + "refined zero-dimensional bound",
                                        "the required resolution level is empty"));
        } else {
          r.claims.push_back(claim_le(prefix + "refined zero-dimensional bound",
                                      b0j, b_mid - d + c + 2));
        }
      }
    }
    if (!done) {
      r.claims.push_back(claim_skip(prefix + "general section",
                                    "no dimension-dropping section after 5 draws"));
    }
  }

  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

Report scenario_hyperplane_suite(int trials, uint64_t seed, const Field& field) {
  Report r;
  r.scenario = "hyperplane";
  r.seed = seed;
  r.characteristic = field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();
  Ring ring = standard_ring(field, 4);
  Poly x = Poly::variable(ring, 0);
  Poly y = Poly::variable(ring, 1);
  Poly z = Poly::variable(ring, 2);
  Poly w = Poly::variable(ring, 3);

  {
    PolyMat m(ring, 2, 3);
    m.at(0, 0) = x;
    m.at(0, 1) = y;
    m.at(0, 2) = z;
    m.at(1, 0) = y;
    m.at(1, 1) = z;
    m.at(1, 2) = w;
    Ideal i = minors_ideal(m, 2);
    r.claims.push_back(claim_eq("tc depth of the determinantal curve quotient",
                                depth_quotient(i), 2));
    merge_into(r, scenario_hyperplane(i, 1, trials, Rng::derive(seed, 11)), "tc ");
  }

  {
    Ideal i = intersect(Ideal(ring, {x, y}), Ideal(ring, {z, w}));
    r.claims.push_back(claim_eq("ll depth of the two-line quotient", depth_quotient(i), 1));
    merge_into(r, scenario_hyperplane(i, 1, trials, Rng::derive(seed, 12)), "ll ");
  }

  {
    Ideal i(ring, {x * w - y * z, y * y * y - x * x * z, z * z * z - y * w * w,
                   x * z * z - y * y * w});
    r.claims.push_back(claim_eq("rq depth of the quartic curve quotient",
                                depth_quotient(i), 1));
    merge_into(r, scenario_hyperplane(i, 1, trials, Rng::derive(seed, 13)), "rq ");
  }

  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

Report scenario_partial_regularity(const Ideal& i) {
  const Ring& ring = i.ring();
  if (!is_standard_graded(*ring)) {
    fail_input("StandardGradingRequired", "partial regularity needs a standard grading");
  }
  Report r;
  r.scenario = "partial-regularity";
  r.characteristic = ring->field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();
  add_ring(r, ring);

  int64_t d = ring->nvars();
  Ideal sat = saturate(i, irrelevant_ideal(ring));
  bool saturated = sat.equals(i);
  add_param(r, "already_saturated", saturated ? "yes" : "no");
  if (sat.is_unit()) {
    r.claims.push_back(claim_skip("truncated Betti degree bound",
                                  "the saturation is the unit ideal"));
    r.gb = gb_delta(before, gb_totals_snapshot());
    r.timings_ms.emplace_back("total", sw.ms());
    return r;
  }

  std::map<int64_t, int64_t> torsion = minimal_generator_degrees(sat, i);
  int64_t b0_torsion = torsion.empty() ? kMinusInf : torsion.rbegin()->first;
  int64_t reg_sat = regularity_quotient(sat);
  FreeRes res = free_resolution(i);
  int64_t rhs = kMinusInf;
  for (int64_t level = 0; level <= std::min<int64_t>(res.length(), d - 1); ++level) {
    int64_t b = res_level_top(res, level);
    if (b != kMinusInf) rhs = std::max(rhs, b - level);
  }
  add_param(r, "b0_torsion", deg_str(b0_torsion));
  add_param(r, "reg_saturated", deg_str(reg_sat));
  add_param(r, "betti_bound", deg_str(rhs));

  r.claims.push_back(claim_le("torsion generator degrees within the truncated Betti bound",
                              b0_torsion, rhs));
  r.claims.push_back(claim_le("regularity of the saturated quotient within the truncated Betti bound",
                              reg_sat, rhs));

  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

Report scenario_partial_regularity_suite(uint64_t seed, const Field& field) {
  Report r;
  r.scenario = "partial-regularity";
  r.seed = seed;
  r.characteristic = field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();

  {
    Ring ring = standard_ring(field, 4);
    Poly x = Poly::variable(ring, 0);
    Poly y = Poly::variable(ring, 1);
    Poly z = Poly::variable(ring, 2);
    Poly w = Poly::variable(ring, 3);
    PolyMat m(ring, 2, 3);
    m.at(0, 0) = x;
    m.at(0, 1) = y;
    m.at(0, 2) = z;
    m.at(1, 0) = y;
    m.at(1, 1) = z;
    m.at(1, 2) = w;
    merge_into(r, scenario_partial_regularity(minors_ideal(m, 2)), "sat ");
  }

  {
    Ring ring = standard_ring(field, 3);
    Poly x = Poly::variable(ring, 0);
    Poly y = Poly::variable(ring, 1);
    Ideal m2 = irrelevant_power(ring, 2);
    std::vector<Poly> gens;
    for (const Poly& g : m2.gens()) gens.push_back(x * g);
    gens.push_back(y.pow(3));
    merge_into(r, scenario_partial_regularity(Ideal(ring, gens)), "toy ");
  }

  Ring ring = standard_ring(field, 3);
  for (int t = 0; t < 10; ++t) {
    Rng rng(Rng::derive(seed, static_cast<uint64_t>(t)));
    int count = 4 + static_cast<int>(rng.below(3));
    std::vector<Poly> gens;
    for (int k = 0; k < count; ++k) {
      std::vector<int32_t> exps(3, 0);
      int deg = 1 + static_cast<int>(rng.below(4));
      for (int e = 0; e < deg; ++e) exps[rng.below(3)] += 1;
      gens.push_back(Poly::monomial(ring, make_monomial(*ring, exps),
                                    Coeff::one(ring->field)));
    }
    merge_into(r, scenario_partial_regularity(Ideal(ring, gens)),
               "r" + std::to_string(t) + " ");
  }

  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

Report scenario_main10(int d, int n, int trials, uint64_t seed, const Field& field,
                       bool part_b) {
  if (n < 3 || n % 2 == 0) fail_input("OddRequired", "the matrix size must be odd and at least 3");
  if (d < 1) fail_input("BadRange", "the ring needs at least one variable");
  Report r;
  r.scenario = part_b ? "main10b" : "main10a";
  r.seed = seed;
  r.characteristic = field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();
  Ring ring = standard_ring(field, d);
  add_ring(r, ring);
  add_param(r, "d", std::to_string(d));
  add_param(r, "n", std::to_string(n));

  std::vector<std::vector<int>> subsets = subsets_of_size(n, d);

  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<uint64_t>(t)));
    std::string prefix = "t" + std::to_string(t) + " ";

    AltMatrix phi(ring, n);
    ConditionReport cr;
    int64_t ht_top = 0;
    bool certified = false;
    for (int attempt = 0; attempt < 5 && !certified; ++attempt) {
      phi = AltMatrix::random_linear(ring, n, rng);
      ht_top = height(pf_ideal(phi, n - 1));
      if (ht_top != 3) continue;
      cr = check_conditions(phi, d);
      if (cr.ok) certified = true;
    }
    if (!certified) {
      r.claims.push_back(claim_skip(prefix + "height conditions",
                                    "no certified matrix after 5 draws"));
      continue;
    }
    r.claims.push_back(claim_eq(prefix + "height of the almost-maximal Pfaffian ideal",
                                ht_top, 3));
    r.claims.push_back(claim_ok(prefix + "Pfaffian height chain at level " + std::to_string(d),
                                cr.ok, render_conditions(cr), "all required heights attained",
                                "cond"));

    for (int tt = 2; tt <= n - d + 1; tt += 2) {
      r.claims.push_back(claim_ideq(prefix + "Pf_" + std::to_string(tt) +
                                        " equals the maximal ideal power " +
                                        std::to_string(tt / 2),
                                    pf_ideal(phi, tt), irrelevant_power(ring, tt / 2)));
    }

    if (!part_b) continue;

    Ideal top = pf_ideal(phi, n - 1);
    std::vector<Poly> gvec = signed_max_pfaffians(phi);
    struct SubsetOutcome {
      ResidualResult rr;
      std::vector<Poly> members;
    };
    bool family_ok = false;
    std::vector<SubsetOutcome> outcomes;
    for (int attempt = 0; attempt < 5 && !family_ok; ++attempt) {
      std::vector<Recombination> drawn;
      try {
        drawn.push_back(generic_generators(gvec, rng));
      } catch (const Error& e) {
        if (e.code() != errc::input) throw;
        break;
      }
      const Recombination& rec = drawn.front();
      AltMatrix moved = change_presentation(phi, rec.coeffs);
      outcomes.clear();
      bool all_residual = true;
      for (const std::vector<int>& s : subsets) {
        std::vector<Poly> picked;
        for (int idx : s) picked.push_back(rec.gens[idx]);
        SubsetOutcome out{residual_intersection(top, picked, d), {}};
        std::vector<int> comp;
        for (int idx = 0; idx < n; ++idx) {
          if (std::find(s.begin(), s.end(), idx) == s.end()) comp.push_back(idx);
        }
        if (d % 2 == 1) {
          out.members.push_back(pfaffian(moved, comp));
        } else {
          for (int idx : s) {
            std::vector<int> ext = comp;
            ext.insert(std::lower_bound(ext.begin(), ext.end(), idx), idx);
            out.members.push_back(pfaffian(moved, ext));
          }
        }
        all_residual = all_residual && out.rr.is_residual;
        outcomes.push_back(std::move(out));
        if (!all_residual) break;
      }
      family_ok = all_residual;
    }
    if (!family_ok) {
      r.claims.push_back(claim_skip(prefix + "residual intersection family",
                                    "no generic recombination after 5 draws"));
      continue;
    }

    std::vector<Poly> sum_gens;
    for (size_t si = 0; si < subsets.size(); ++si) {
      const std::vector<int>& s = subsets[si];
      const SubsetOutcome& out = outcomes[si];
      std::string tag = prefix + "S=" + render_subset(s) + " ";
      r.claims.push_back(claim_ok(tag + "colon ideal is a residual intersection",
                                  out.rr.is_residual,
                                  "ht " + deg_str(height(out.rr.k)) +
                                      (out.rr.geometric ? ", geometric" : ", not geometric"),
                                  "ht >= " + std::to_string(d), "cond"));
      for (const Poly& p : out.members) {
        r.claims.push_back(claim_member(tag + "bordered Pfaffian lies in the residual",
                                        out.rr.k, p));
      }
      for (const Poly& g : out.rr.k.gens()) sum_gens.push_back(g);
    }
    Ideal total(ring, sum_gens);
    int half_gap = (n - d + 1) / 2;
    r.claims.push_back(claim_ideq(prefix + "sum of all residual intersections equals the maximal ideal power " +
                                      std::to_string(half_gap),
                                  total, irrelevant_power(ring, half_gap)));
  }

  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

Report scenario_minors(int rows, int cols, int nvars, int trials, uint64_t seed,
                       const Field& field) {
  if (rows <= cols || cols < 1) fail_input("BadShape", "need more rows than columns");
  Report r;
  r.scenario = "minors";
  r.seed = seed;
  r.characteristic = field.ch;
  Stopwatch sw;
  GBStats before = gb_totals_snapshot();
  Ring ring = standard_ring(field, nvars);
  add_ring(r, ring);
  add_param(r, "shape", std::to_string(rows) + "x" + std::to_string(cols));

  int64_t d = nvars;
  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<uint64_t>(t)));
    std::string prefix = "t" + std::to_string(t) + " ";
    PolyMat m(ring, rows, cols);
    bool certified = false;
    std::vector<int64_t> hts;
    for (int attempt = 0; attempt < 5 && !certified; ++attempt) {
      for (int a = 0; a < rows; ++a) {
        for (int b = 0; b < cols; ++b) m.at(a, b) = random_form(ring, 1, rng);
      }
      hts.clear();
      bool ok = true;
      for (int i = std::max<int>(1, cols - static_cast<int>(d) + 1); i <= cols; ++i) {
        int64_t h = height(minors_ideal(m, i));
        hts.push_back(h);
        if (h < cols - i + 1) ok = false;
      }
      certified = ok;
    }
    if (!certified) {
      r.claims.push_back(claim_skip(prefix + "minor height chain",
                                    "no certified matrix after 5 draws"));
      continue;
    }
    r.claims.push_back(claim_ok(prefix + "minor height chain", true,
                                "ht=" + join_i64(hts), "each ht I_i >= cols-i+1", "cond"));
    for (int tt = 1; tt <= cols - static_cast<int>(d) + 1; ++tt) {
      r.claims.push_back(claim_ideq(prefix + "I_" + std::to_string(tt) +
                                        " equals the maximal ideal power " +
                                        std::to_string(tt),
                                    minors_ideal(m, tt), irrelevant_power(ring, tt)));
    }
    if (d == rows - cols + 1) {
      int64_t ht_max = height(minors_ideal(m, cols));
      r.claims.push_back(claim_eq(prefix + "height of the maximal minors", ht_max, d));
      if (ht_max == d) {
        r.claims.push_back(claim_ideq(prefix + "maximal minors equal the maximal ideal power " +
                                          std::to_string(cols),
                                      minors_ideal(m, cols), irrelevant_power(ring, cols)));
      }
    }
  }

  r.gb = gb_delta(before, gb_totals_snapshot());
  r.timings_ms.emplace_back("total", sw.ms());
  return r;
}

std::vector<std::string> scenario_names() {
  return {"monomial-curve", "monomial-curve-random", "points",
          "hyperplane",     "partial-regularity",    "main10a",
          "main10b",        "minors"};
}

Report run_named_scenario(const std::string& name, uint64_t seed, const Field& field) {
  if (name == "monomial-curve") return scenario_monomial_curve({3, 4, 5}, field);
  if (name == "monomial-curve-random")
    return scenario_monomial_curve_random(25, seed, field);
  if (name == "points") return scenario_points_suite(seed, field);
  if (name == "hyperplane") return scenario_hyperplane_suite(10, seed, field);
  if (name == "partial-regularity") return scenario_partial_regularity_suite(seed, field);
  if (name == "main10a") {
    Report r;
    r.scenario = "main10a";
    r.seed = seed;
    r.characteristic = field.ch;
    Stopwatch sw;
    GBStats before = gb_totals_snapshot();
    const int pairs[][2] = {{3, 5}, {3, 7}, {4, 5}, {4, 7}, {5, 7}};
    for (int idx = 0; idx < 5; ++idx) {
      int d = pairs[idx][0];
      int n = pairs[idx][1];
      std::string prefix = "d" + std::to_string(d) + "n" + std::to_string(n) + " ";
      merge_into(r, scenario_main10(d, n, 4, Rng::derive(seed, idx), field, false), prefix);
    }
    r.gb = gb_delta(before, gb_totals_snapshot());
    r.timings_ms.emplace_back("total", sw.ms());
    return r;
  }
  if (name == "main10b") {
    Report r;
    r.scenario = "main10b";
    r.seed = seed;
    r.characteristic = field.ch;
    Stopwatch sw;
    GBStats before = gb_totals_snapshot();
    const int sizes[] = {5, 7};
    for (int idx = 0; idx < 2; ++idx) {
      std::string prefix = "d3n" + std::to_string(sizes[idx]) + " ";
      merge_into(r, scenario_main10(3, sizes[idx], 2, Rng::derive(seed, idx), field, true),
                 prefix);
    }
    r.gb = gb_delta(before, gb_totals_snapshot());
    r.timings_ms.emplace_back("total", sw.ms());
    return r;
  }
  if (name == "minors") {
    Report r;
    r.scenario = "minors";
    r.seed = seed;
    r.characteristic = field.ch;
    Stopwatch sw;
    GBStats before = gb_totals_snapshot();
    merge_into(r, scenario_minors(3, 2, 2, 3, Rng::derive(seed, 0), field), "3x2 ");
    merge_into(r, scenario_minors(4, 3, 2, 3, Rng::derive(seed, 1), field), "4x3 ");
    r.gb = gb_delta(before, gb_totals_snapshot());
    r.timings_ms.emplace_back("total", sw.ms());
    return r;
  }
  fail_input("BadScenario", "unknown scenario name: " + name);
}

}  // namespace grex
