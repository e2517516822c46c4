// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch runners behind the CLI: parameter-sweep expansion, the per-case
// cross-check suite, and deterministic text/csv/json rendering. Reports
// carry no timestamps, so identical inputs produce identical bytes.

#ifndef BASECONE_VERIFY_HPP
#define BASECONE_VERIFY_HPP

#include <cstdlib>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "basecone/cone.hpp"
#include "basecone/dd.hpp"
#include "basecone/ehrhart.hpp"
#include "basecone/gorenstein.hpp"
#include "basecone/hilbert.hpp"
#include "basecone/normaliz.hpp"
#include "basecone/presentation.hpp"

namespace basecone {

using Json = nlohmann::json;

inline constexpr const char* kReportSchemaId = "basecone-report/1";

enum class OutputFormat { Text, Json, Csv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("format must be one of text, json, csv");
}

struct RunConfig {
  int n_min = 0;
  int n_max = 0;
  std::optional<int> i_select;      // absent = all valid i
  std::optional<int> shift_select;  // absent = all shifts
  long long degree_bound = 3;       // T for canonical-module checks
  std::optional<long long> t_max;   // series horizon; default n + 4 per case
  long long dilation_max = 3;       // brute-force dilations 0..dilation_max
  OutputFormat format = OutputFormat::Text;
  std::string out_path;             // empty = stdout
  bool unsafe = false;              // lifts the desk-scale guards below
  long long composition_guard = kDefaultCompositionGuard;
  int n_cap = 8;
};

struct CaseId {
  int n = 0;
  int i = 0;
  int shift = 0;
};

inline constexpr long long kDefaultDegreeBoundCap = 6;

inline void validate_config(const RunConfig& c) {
  if (c.n_min < 3) throw std::invalid_argument("n must satisfy n >= 3");
  if (c.n_min > c.n_max) throw std::invalid_argument("empty n range");
  if (!c.unsafe) {
    if (c.n_max > c.n_cap)
      throw std::invalid_argument("n exceeds the desk-scale cap (n <= " + std::to_string(c.n_cap) +
                                  "); pass --unsafe to override");
    if (c.degree_bound > kDefaultDegreeBoundCap)
      throw std::invalid_argument("degree bound exceeds the desk-scale cap (T <= " +
                                  std::to_string(kDefaultDegreeBoundCap) +
                                  "); pass --unsafe to override");
    if (c.composition_guard > kDefaultCompositionGuard)
      throw std::invalid_argument("composition guard above the default requires --unsafe");
  }
  if (c.i_select && *c.i_select < 1) throw std::invalid_argument("i must satisfy i >= 1");
  if (c.shift_select && *c.shift_select < 0) throw std::invalid_argument("shift must be >= 0");
  if (c.degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
  if (c.dilation_max < 0) throw std::invalid_argument("dilation range must be >= 0");
}

inline std::vector<CaseId> expand_cases(const RunConfig& c) {
  validate_config(c);
  std::vector<CaseId> cases;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      if (c.i_select && *c.i_select != i) continue;
      for (int t = 0; t <= n - 1; ++t) {
        if (c.shift_select && *c.shift_select != t) continue;
        cases.push_back(CaseId{n, i, t});
      }
    }
  }
  if (cases.empty()) throw std::invalid_argument("empty parameter range: no (n, i, shift) cases");
  return cases;
}

namespace detail {

inline Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(to_int64(x));
  return a;
}

inline Json vecs_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const Vec& v : vs) a.push_back(vec_json(v));
  return a;
}

inline std::vector<Vec> sorted_primitives(const std::vector<Halfspace>& hs) {
  std::vector<Vec> out;
  for (const Halfspace& h : hs) out.push_back(h.primitive_normal);
  sort_unique(out);
  return out;
}

// Oracle rays rescaled so every ray has coordinate sum n; returns nothing if
// some ray cannot be scaled integrally (which already disproves agreement).
inline std::optional<std::vector<Vec>> rays_scaled_to_sum(const std::vector<Vec>& rays, int n) {
  std::vector<Vec> out;
  for (const Vec& r : rays) {
    Int s = coord_sum(r);
    if (s <= 0 || n % s != 0) return std::nullopt;
    out.push_back(scaled(r, n / s));
  }
  sort_unique(out);
  return out;
}

// The known tabulation slip in the n=4 reference table of these normals.
inline std::string erratum_note_n4() {
  return "n=4 table erratum: the coordinate facet for k=3 is (0,0,4,0) = 4*e_3; "
         "a commonly tabulated variant lists (0,0,0,4), duplicating the k=0 entry.";
}

// Deterministic parallel map over cases; results keep input order.
template <typename Fn>
std::vector<Json> run_cases(const std::vector<CaseId>& cases, Fn fn) {
  std::vector<Json> results(cases.size());
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers > cases.size()) workers = static_cast<unsigned>(cases.size());
  std::vector<std::future<void>> futs;
  for (unsigned w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w]() {
      for (std::size_t k = w; k < cases.size(); k += workers) results[k] = fn(cases[k]);
    }));
  }
  for (auto& f : futs) f.get();
  return results;
}

}  // namespace detail

struct CommandReport {
  std::string command;
  Json params = Json::object();
  std::vector<Json> cases;
  std::vector<std::string> notes;
  bool overall_pass = true;

  Json to_json() const {
    Json doc;
    doc["schema"] = kReportSchemaId;
    doc["command"] = command;
    doc["params"] = params;
    doc["notes"] = notes;
    doc["cases"] = cases;
    doc["overall_pass"] = overall_pass;
    return doc;
  }
};

// ---------------------------------------------------------------------------
// Per-command case runners
// ---------------------------------------------------------------------------

inline Json facets_case(const CaseId& id) {
  Presentation p = build_presentation(id.n, id.i, id.shift);
  BaseSet base = enumerate_base(p);
  std::vector<Halfspace> predicted = predicted_facets(p);
  ConeDescription oracle = dd_hull(base.elements());

  std::vector<Vec> pred_prim = detail::sorted_primitives(predicted);
  std::vector<Vec> oracle_prim = detail::sorted_primitives(oracle.halfspaces);
  bool match = pred_prim == oracle_prim;
  bool count_ok = predicted.size() == static_cast<std::size_t>(id.n) + 1;
  IrreducibilityReport irr = verify_irreducible(predicted, base.elements());

  Json c;
  c["n"] = id.n;
  c["i"] = id.i;
  c["shift"] = id.shift;
  c["facet_count"] = predicted.size();
  c["predicted_primitive"] = detail::vecs_json(pred_prim);
  c["oracle_primitive"] = detail::vecs_json(oracle_prim);
  c["match"] = match;
  c["irreducible"] = irr.irreducible;
  c["full_dimensional"] = oracle.full_dimensional;
  if (id.n == 4) c["erratum_notes"] = Json::array({detail::erratum_note_n4()});
  c["pass"] = match && count_ok && irr.irreducible && oracle.full_dimensional && oracle.pointed;
  return c;
}

inline Json rays_case(const CaseId& id) {
  Presentation p = build_presentation(id.n, id.i, id.shift);
  BaseSet base = enumerate_base(p);
  std::vector<Vec> predicted = predicted_extremal_rays(p);
  ConeDescription oracle = dd_hull(base.elements());
  std::optional<std::vector<Vec>> scaled_rays = detail::rays_scaled_to_sum(oracle.extremal_rays, id.n);

  bool match = scaled_rays.has_value() && *scaled_rays == predicted;
  bool count_ok = predicted.size() == static_cast<std::size_t>(id.i + 1) *
                                          static_cast<std::size_t>(id.n - id.i);
  Json c;
  c["n"] = id.n;
  c["i"] = id.i;
  c["shift"] = id.shift;
  c["ray_count"] = predicted.size();
  c["predicted"] = detail::vecs_json(predicted);
  c["oracle_scaled"] = scaled_rays ? detail::vecs_json(*scaled_rays) : Json::array();
  c["match"] = match;
  c["pass"] = match && count_ok;
  return c;
}

inline Json hilbert_case(const CaseId& id, const RunConfig& cfg) {
  Presentation p = build_presentation(id.n, id.i, id.shift);
  HilbertReport r = h_vector(p);
  bool palindromic = true;
  for (std::size_t j = 0; j < r.h_vector.size(); ++j)
    if (r.h_vector[j] != r.h_vector[r.h_vector.size() - 1 - j]) palindromic = false;
  long long horizon = cfg.t_max.value_or(static_cast<long long>(id.n) + 4);
  SeriesCheck series = series_eval_check(r, horizon);

  Json c;
  c["n"] = id.n;
  c["i"] = id.i;
  c["shift"] = id.shift;
  Json hv = Json::array(), hval = Json::array();
  for (const Int& h : r.h_vector) hv.push_back(to_int64(h));
  for (const Int& h : r.h_values) hval.push_back(to_int64(h));
  c["h_values"] = hval;
  c["h_vector"] = hv;
  c["denominator_exponent"] = r.denominator_exponent;
  c["a_invariant"] = r.a_invariant;
  c["palindromic"] = palindromic;
  c["series_t_max"] = horizon;
  c["series_ok"] = series.ok;
  c["pass"] = series.ok && palindromic && r.a_invariant == -1;
  return c;
}

inline Json gorenstein_case(const CaseId& id, const RunConfig& cfg) {
  Presentation p = build_presentation(id.n, id.i, id.shift);
  CanonicalModuleReport r = gorenstein_certificate(p, cfg.degree_bound);
  Json c;
  c["n"] = id.n;
  c["i"] = id.i;
  c["shift"] = id.shift;
  c["degree_bound"] = r.degree_bound;
  c["interior_count"] = r.interior_points.size();
  c["minimal_generators"] = detail::vecs_json(r.minimal_generators);
  c["min_degree"] = r.min_degree;
  c["gorenstein"] = r.gorenstein;
  c["shift_identity"] = r.shift_identity;
  c["divisibility_ok"] = r.divisibility_ok;
  c["a_invariant"] = r.a_invariant;
  c["pass"] = r.gorenstein && r.shift_identity && r.divisibility_ok && r.min_degree == 1 &&
              r.a_invariant == -1;
  return c;
}

// The full cross-check record for one case: dual-route enumeration, base
// axiom, lattice form, facet/ray/irreducibility agreement, the determinant
// identity, Ehrhart agreement, series shape, both a-invariant routes, the
// canonical-module certificate, and monoid-vs-lattice normality.
inline Json verify_case(const CaseId& id, const RunConfig& cfg) {
  Presentation p = build_presentation(id.n, id.i, id.shift);
  Json c;
  c["n"] = id.n;
  c["i"] = id.i;
  c["shift"] = id.shift;

  BaseSet base = enumerate_base(p);
  BaseSet constrained = enumerate_base_constrained(p);
  bool enumeration_consistent = base.elements() == constrained.elements();

  // Shift consistency: the shifted base is the permuted unshifted base.
  BaseSet unshifted = enumerate_base(build_presentation(id.n, id.i, 0));
  std::vector<Vec> permuted;
  for (const Vec& v : unshifted.elements()) permuted.push_back(apply_cycle_shift(v, id.shift));
  sort_unique(permuted);
  bool shift_consistent = permuted == base.elements();

  bool base_axiom = is_polymatroid_base(base).ok;

  LatticeDescription lattice = lattice_of(base);
  bool lattice_ok = lattice.full_rank() && lattice.index() == id.n &&
                    lattice.is_sum_divisibility_lattice(id.n);

  std::vector<Halfspace> predicted = predicted_facets(p);
  ConeDescription oracle = dd_hull(base.elements());
  bool facet_match = detail::sorted_primitives(predicted) == detail::sorted_primitives(oracle.halfspaces);
  std::optional<std::vector<Vec>> scaled_rays = detail::rays_scaled_to_sum(oracle.extremal_rays, id.n);
  bool ray_match = scaled_rays && *scaled_rays == predicted_extremal_rays(p);
  bool irreducible = verify_irreducible(predicted, base.elements()).irreducible;

  // Halfspace containment, with block-facet values in n * Z>=0.
  bool containment_ok = true;
  const Vec& block = predicted.front().normal;
  for (const Vec& g : base.elements()) {
    for (const Halfspace& h : predicted)
      if (dot(g, h.normal) < 0) containment_ok = false;
    Int bv = dot(g, block);
    if (bv < 0 || bv % id.n != 0) containment_ok = false;
  }

  bool det_ok = true;
  try {
    det_certificate(p);
  } catch (const std::logic_error&) {
    det_ok = false;
  }

  Json ehrhart = Json::array();
  bool ehrhart_ok = true;
  for (long long t = 0; t <= cfg.dilation_max; ++t) {
    Int brute = count_points_bruteforce(p, t, lattice, cfg.composition_guard);
    Int closed = hilbert_closed_form(id.n, id.i, t);
    bool ok = brute == closed;
    ehrhart_ok = ehrhart_ok && ok;
    Json e;
    e["t"] = t;
    e["count"] = to_int64(brute);
    e["match"] = ok;
    ehrhart.push_back(e);
  }

  HilbertReport hr = h_vector(p);
  bool palindromic = true;
  for (std::size_t j = 0; j < hr.h_vector.size(); ++j)
    if (hr.h_vector[j] != hr.h_vector[hr.h_vector.size() - 1 - j]) palindromic = false;
  long long horizon = cfg.t_max.value_or(static_cast<long long>(id.n) + 4);
  bool series_ok = series_eval_check(hr, horizon).ok;

  CanonicalModuleReport cm = gorenstein_certificate(p, cfg.degree_bound);

  // Interior stratum sizes must reproduce the Hilbert values shifted by one.
  MonoidSet monoid = monoid_points(p, cfg.degree_bound);
  InteriorFilter filter = interior_filter(p);
  bool interior_counts_ok = true;
  for (long long t = 1; t <= cfg.degree_bound; ++t) {
    std::size_t count = 0;
    for (const Vec& v : monoid.stratum(t))
      if (filter.is_interior(v)) ++count;
    if (Int(count) != hilbert_closed_form(id.n, id.i, t - 1)) interior_counts_ok = false;
  }

  // Empirical normality: monoid strata coincide with lattice-in-polytope
  // strata up to the degree bound.
  bool normality = true;
  for (long long t = 0; t <= cfg.degree_bound; ++t) {
    std::vector<Vec> strat = monoid.stratum(t);
    std::vector<Vec> brute = list_points_bruteforce(p, t, lattice, cfg.composition_guard);
    if (strat != brute) normality = false;
  }

  c["enumeration_consistent"] = enumeration_consistent;
  c["shift_consistent"] = shift_consistent;
  c["base_axiom"] = base_axiom;
  c["lattice_ok"] = lattice_ok;
  c["facet_match"] = facet_match;
  c["ray_match"] = ray_match;
  c["irreducible"] = irreducible;
  c["containment_ok"] = containment_ok;
  c["det_ok"] = det_ok;
  c["ehrhart"] = ehrhart;
  c["ehrhart_ok"] = ehrhart_ok;
  Json hv = Json::array();
  for (const Int& h : hr.h_vector) hv.push_back(to_int64(h));
  c["h_vector"] = hv;
  c["palindromic"] = palindromic;
  c["series_ok"] = series_ok;
  c["a_invariant_series"] = hr.a_invariant;
  c["a_invariant_canonical"] = cm.a_invariant;
  c["gorenstein"] = cm.gorenstein;
  c["shift_identity"] = cm.shift_identity;
  c["divisibility_ok"] = cm.divisibility_ok;
  c["interior_counts_ok"] = interior_counts_ok;
  c["normality"] = normality;
  if (id.n == 4) c["erratum_notes"] = Json::array({detail::erratum_note_n4()});

  bool pass = enumeration_consistent && shift_consistent && base_axiom && lattice_ok &&
              facet_match && ray_match && irreducible && containment_ok && det_ok && ehrhart_ok &&
              palindromic && series_ok && hr.a_invariant == -1 && cm.a_invariant == -1 &&
              cm.gorenstein && cm.shift_identity && cm.divisibility_ok && interior_counts_ok &&
              normality;
  c["pass"] = pass;
  return c;
}

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

inline Json config_params(const RunConfig& c) {
  Json p;
  p["n_min"] = c.n_min;
  p["n_max"] = c.n_max;
  if (c.i_select) p["i"] = *c.i_select;
  if (c.shift_select) p["shift"] = *c.shift_select;
  p["degree_bound"] = c.degree_bound;
  if (c.t_max) p["t_max"] = *c.t_max;
  p["dilation_max"] = c.dilation_max;
  return p;
}

inline CommandReport finish_report(const std::string& command, const RunConfig& cfg,
                                   std::vector<Json> cases) {
  CommandReport r;
  r.command = command;
  r.params = config_params(cfg);
  r.cases = std::move(cases);
  for (const Json& c : r.cases) {
    if (!c.value("pass", false)) r.overall_pass = false;
    if (c.contains("erratum_notes"))
      for (const auto& note : c["erratum_notes"]) {
        std::string s = note.get<std::string>();
        if (std::find(r.notes.begin(), r.notes.end(), s) == r.notes.end()) r.notes.push_back(s);
      }
  }
  return r;
}

inline CommandReport run_facets(const RunConfig& cfg) {
  std::vector<CaseId> cases = expand_cases(cfg);
  return finish_report("facets", cfg,
                       detail::run_cases(cases, [](const CaseId& id) { return facets_case(id); }));
}

inline CommandReport run_rays(const RunConfig& cfg) {
  std::vector<CaseId> cases = expand_cases(cfg);
  return finish_report("rays", cfg,
                       detail::run_cases(cases, [](const CaseId& id) { return rays_case(id); }));
}

inline CommandReport run_hilbert(const RunConfig& cfg) {
  std::vector<CaseId> cases = expand_cases(cfg);
  return finish_report("hilbert", cfg, detail::run_cases(cases, [&](const CaseId& id) {
                         return hilbert_case(id, cfg);
                       }));
}

inline CommandReport run_gorenstein(const RunConfig& cfg) {
  if (cfg.degree_bound < 2)
    throw std::invalid_argument("gorenstein requires a degree bound of at least 2");
  std::vector<CaseId> cases = expand_cases(cfg);
  return finish_report("gorenstein", cfg, detail::run_cases(cases, [&](const CaseId& id) {
                         return gorenstein_case(id, cfg);
                       }));
}

inline CommandReport run_verify(const RunConfig& cfg) {
  if (cfg.degree_bound < 2)
    throw std::invalid_argument("verify requires a degree bound of at least 2");
  std::vector<CaseId> cases = expand_cases(cfg);
  return finish_report("verify", cfg, detail::run_cases(cases, [&](const CaseId& id) {
                         return verify_case(id, cfg);
                       }));
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::string flag(const Json& c, const char* key) {
  if (!c.contains(key)) return "-";
  return c[key].get<bool>() ? "yes" : "no";
}

inline std::string join_ints(const Json& arr) {
  std::ostringstream os;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (k) os << " ";
    os << arr[k].get<long long>();
  }
  return os.str();
}

inline std::string vec_text(const Json& arr) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (k) os << ",";
    os << arr[k].get<long long>();
  }
  os << ")";
  return os.str();
}

// The n=4 reference table of block and coordinate normals, printed by the
// facets command as a self-documenting smoke test.
inline std::string reference_table_n4() {
  std::ostringstream os;
  os << "reference table, n=4 (rows k=0..3; columns i=1,2,3):\n";
  for (int k = 0; k <= 3; ++k) {
    os << "  k=" << k << ":";
    for (int i = 1; i <= 3; ++i) {
      BlockNormal bn = block_normal(4, i, k);
      os << "  " << vec_to_string(bn.halfspace.normal);
      if (k == 3 && i == 3) os << " [see erratum note]";
    }
    os << "\n";
  }
  os << "  " << erratum_note_n4() << "\n";
  return os.str();
}

}  // namespace detail

inline std::string render_text(const CommandReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  bool printed_table = false;
  for (const Json& c : r.cases) {
    os << "case n=" << c["n"].get<int>() << " i=" << c["i"].get<int>()
       << " shift=" << c["shift"].get<int>() << ": " << (c["pass"].get<bool>() ? "pass" : "FAIL")
       << "\n";
    if (r.command == "facets") {
      os << "  facets=" << c["facet_count"].get<long long>()
         << " match=" << detail::flag(c, "match") << " irreducible=" << detail::flag(c, "irreducible")
         << "\n";
      for (const Json& v : c["oracle_primitive"]) os << "    " << detail::vec_text(v) << "\n";
      if (c["n"].get<int>() == 4 && !printed_table) {
        os << detail::reference_table_n4();
        printed_table = true;
      }
    } else if (r.command == "rays") {
      os << "  rays=" << c["ray_count"].get<long long>() << " match=" << detail::flag(c, "match")
         << "\n";
      for (const Json& v : c["predicted"]) os << "    " << detail::vec_text(v) << "\n";
    } else if (r.command == "hilbert") {
      os << "  h_values=" << detail::join_ints(c["h_values"])
         << "  h_vector=" << detail::join_ints(c["h_vector"])
         << "  a=" << c["a_invariant"].get<long long>()
         << " palindromic=" << detail::flag(c, "palindromic")
         << " series_ok=" << detail::flag(c, "series_ok") << " (t_max="
         << c["series_t_max"].get<long long>() << ")\n";
    } else if (r.command == "gorenstein") {
      os << "  bound=" << c["degree_bound"].get<long long>() << " generators=";
      for (const Json& v : c["minimal_generators"]) os << detail::vec_text(v);
      os << " gorenstein=" << detail::flag(c, "gorenstein")
         << " shift_identity=" << detail::flag(c, "shift_identity")
         << " divisibility=" << detail::flag(c, "divisibility_ok")
         << " a=" << c["a_invariant"].get<long long>() << "\n";
    } else if (r.command == "verify") {
      os << "  facets=" << detail::flag(c, "facet_match") << " rays=" << detail::flag(c, "ray_match")
         << " irreducible=" << detail::flag(c, "irreducible") << " det=" << detail::flag(c, "det_ok")
         << " ehrhart=" << detail::flag(c, "ehrhart_ok") << " series=" << detail::flag(c, "series_ok")
         << "\n  h_vector=" << detail::join_ints(c["h_vector"])
         << " palindromic=" << detail::flag(c, "palindromic")
         << " a_series=" << c["a_invariant_series"].get<long long>()
         << " a_canonical=" << c["a_invariant_canonical"].get<long long>()
         << "\n  gorenstein=" << detail::flag(c, "gorenstein")
         << " shift_identity=" << detail::flag(c, "shift_identity")
         << " divisibility=" << detail::flag(c, "divisibility_ok")
         << " base_axiom=" << detail::flag(c, "base_axiom")
         << " lattice=" << detail::flag(c, "lattice_ok")
         << " normality=" << detail::flag(c, "normality") << "\n";
    }
  }
  for (const std::string& note : r.notes) os << "note: " << note << "\n";
  os << "overall: " << (r.overall_pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

inline std::string render_csv(const CommandReport& r) {
  std::ostringstream os;
  std::vector<const char*> flags;
  if (r.command == "facets")
    flags = {"match", "irreducible", "full_dimensional"};
  else if (r.command == "rays")
    flags = {"match"};
  else if (r.command == "hilbert")
    flags = {"palindromic", "series_ok"};
  else if (r.command == "gorenstein")
    flags = {"gorenstein", "shift_identity", "divisibility_ok"};
  else if (r.command == "verify")
    flags = {"enumeration_consistent", "shift_consistent", "base_axiom",  "lattice_ok",
             "facet_match",            "ray_match",        "irreducible", "containment_ok",
             "det_ok",                 "ehrhart_ok",       "palindromic", "series_ok",
             "gorenstein",             "shift_identity",   "divisibility_ok",
             "interior_counts_ok",     "normality"};
  os << "command,n,i,shift";
  for (const char* f : flags) os << "," << f;
  os << ",pass\n";
  for (const Json& c : r.cases) {
    os << r.command << "," << c["n"].get<int>() << "," << c["i"].get<int>() << ","
       << c["shift"].get<int>();
    for (const char* f : flags)
      os << "," << (c.contains(f) ? (c[f].get<bool>() ? "true" : "false") : "");
    os << "," << (c["pass"].get<bool>() ? "true" : "false") << "\n";
  }
  return os.str();
}

inline std::string render(const CommandReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json:
      return r.to_json().dump(2) + "\n";
    case OutputFormat::Csv:
      return render_csv(r);
    case OutputFormat::Text:
    default:
      return render_text(r);
  }
}

// Relative output paths resolve under BASECONE_OUT_DIR when it is set.
inline std::string resolve_output_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("BASECONE_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::string d(dir);
  if (d.back() != '/') d += '/';
  return d + path;
}

}  // namespace basecone

#endif  // BASECONE_VERIFY_HPP
