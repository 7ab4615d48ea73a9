#pragma once

// Implementations of the kscheck subcommands. Each returns a Report (or,
// for `catalog`, the serialized catalog) so the front end only parses
// arguments and prints.

#include "ksproof/catalog.hpp"
#include "ksproof/cli/report.hpp"
#include "ksproof/cnf.hpp"
#include "ksproof/kscolor.hpp"
#include "ksproof/majorana.hpp"
#include "ksproof/orthograph.hpp"
#include "ksproof/sampling.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ksproof::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr double kRoundtripTolerance = 1e-8;
inline constexpr double kRecoveryTolerance = 1e-7;

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTolerance;
};

enum class CatalogSet { Peres, Penrose, Family };
enum class CatalogFormat { Json, Csv };
enum class ProveMode { Replay, Search, Both };

inline CatalogSet parse_set(std::string_view s) {
  if (s == "peres") return CatalogSet::Peres;
  if (s == "penrose") return CatalogSet::Penrose;
  if (s == "family") return CatalogSet::Family;
  throw std::invalid_argument("unknown set '" + std::string(s) + "' (expected peres, penrose or family)");
}

inline std::string_view to_string(CatalogSet s) {
  switch (s) {
    case CatalogSet::Peres: return "peres";
    case CatalogSet::Penrose: return "penrose";
    case CatalogSet::Family: return "family";
  }
  return "?";
}

inline ProveMode parse_mode(std::string_view s) {
  if (s == "replay") return ProveMode::Replay;
  if (s == "search") return ProveMode::Search;
  if (s == "both") return ProveMode::Both;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "' (expected replay, search or both)");
}

inline void require_finite(const FamilyParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma)) {
    throw std::invalid_argument("family phases must be finite numbers");
  }
}

inline Json params_json(const FamilyParams& p) {
  return Json{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}};
}

namespace detail {

inline std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return os.str();
}

inline std::string csv_header_rays() { return "index,class,c1_re,c1_im,c2_re,c2_im,c3_re,c3_im\n"; }

template <class RayT>
std::string csv_rays(const std::vector<RayT>& rays) {
  std::string out = csv_header_rays();
  for (const auto& r : rays) {
    const int i = *r.index();
    out += std::to_string(i) + "," + std::string(to_string(class_of(i)));
    for (std::size_t k = 0; k < 3; ++k) {
      ApproxComplex z;
      if constexpr (std::is_same_v<RayT, ExactRay>) {
        z = to_approx(r[k]);
      } else {
        z = r[k];
      }
      out += "," + fmt_double(z.re) + "," + fmt_double(z.im);
    }
    out += "\n";
  }
  return out;
}

template <class RayT>
Json json_rays(const std::vector<RayT>& rays) {
  Json entries = Json::array();
  for (const auto& r : rays) {
    const int i = *r.index();
    Json comps = Json::array();
    for (std::size_t k = 0; k < 3; ++k) comps.push_back(complex_value(r[k]));
    entries.push_back({{"index", i}, {"class", std::string(to_string(class_of(i)))}, {"components", comps}});
  }
  return entries;
}

inline Json int_vector(const ExactMVector& v) {
  Json out = Json::array();
  for (const QRoot2& x : v.components()) out.push_back(x.rational_part().convert_to<int>());
  return out;
}

/// Edge-set difference against the reference table, for counterexamples.
inline Json edge_diff(const OrthoGraph& g, const OrthoGraph& ref) {
  Json missing = Json::array();
  Json extra = Json::array();
  for (const Dyad& e : ref.edges()) {
    if (!g.has_edge(e[0], e[1])) missing.push_back(e);
  }
  for (const Dyad& e : g.edges()) {
    if (!ref.has_edge(e[0], e[1])) extra.push_back(e);
  }
  return Json{{"missing_edges", missing}, {"extra_edges", extra}};
}

inline OrthoGraph reference_graph() { return graph_of(table1_reference(), kRayCount); }

/// Edge count, triad/dyad counts and reference-diagram equality.
inline void diagram_checks(Report& rep, const OrthoGraph& g, const std::string& prefix) {
  const OrthoGraph ref = reference_graph();
  rep.check(prefix + "edge_count", g.edge_count() == 72, Json{{"edges", g.edge_count()}},
            edge_diff(g, ref));
  try {
    const TriadDyadDecomposition d = decompose(g);
    rep.check(prefix + "triads", d.triads.size() == 16, Json{{"triads", d.triads.size()}}, Json{{"triads", d.triads}});
    rep.check(prefix + "dyads", d.dyads.size() == 24, Json{{"dyads", d.dyads.size()}}, Json{{"dyads", d.dyads}});
    rep.check(prefix + "table1_match", d == table1_reference(), Json{{"table1_match", d == table1_reference()}},
              edge_diff(g, ref));
  } catch (const AmbiguousDecompositionError& e) {
    rep.check(prefix + "decomposition", false, Json::object(), Json{{"error", e.what()}});
  }
}

/// Smallest overlap2 over the pairs that are not reference edges.
template <class Items, class Overlap>
double min_nonedge_overlap(const Items& items, Overlap overlap) {
  const OrthoGraph ref = reference_graph();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= kRayCount; ++i) {
    for (int j = i + 1; j <= kRayCount; ++j) {
      if (!ref.has_edge(i, j)) best = std::min(best, overlap(items[i - 1], items[j - 1]));
    }
  }
  return best;
}

inline QRoot2 peres_overlap_9_14() {
  const auto p = peres_rays();
  return overlap2(p[8], p[13]);
}

inline QRoot2 penrose_overlap_9_14() {
  const auto m = penrose_mpairs();
  return overlap2_eq3(m[8], m[13]);
}

}  // namespace detail

/// Serialized catalog, JSON or CSV.
inline std::string cmd_catalog(CatalogSet set, const FamilyParams& params, CatalogFormat format) {
  require_finite(params);
  Json doc{{"schema_version", kReportSchemaVersion}, {"set", std::string(to_string(set))}};
  switch (set) {
    case CatalogSet::Peres: {
      const auto rays = peres_rays();
      if (format == CatalogFormat::Csv) return detail::csv_rays(rays);
      doc["parameters"] = Json::object();
      doc["entries"] = detail::json_rays(rays);
      break;
    }
    case CatalogSet::Penrose: {
      const auto pairs = penrose_mpairs();
      if (format == CatalogFormat::Csv) {
        std::string out = "index,class,m1_x,m1_y,m1_z,m2_x,m2_y,m2_z\n";
        for (int i = 1; i <= kRayCount; ++i) {
          out += std::to_string(i) + "," + std::string(to_string(class_of(i)));
          for (const ExactMVector* v : {&pairs[i - 1].first, &pairs[i - 1].second}) {
            for (const QRoot2& x : v->components()) out += "," + x.to_string();
          }
          out += "\n";
        }
        return out;
      }
      doc["parameters"] = Json::object();
      Json entries = Json::array();
      for (int i = 1; i <= kRayCount; ++i) {
        const ExactMPair& p = pairs[i - 1];
        entries.push_back({{"index", i},
                           {"class", std::string(to_string(class_of(i)))},
                           {"mvectors", Json::array({detail::int_vector(p.first), detail::int_vector(p.second)})},
                           {"doubled", p.first == p.second}});
      }
      doc["entries"] = entries;
      break;
    }
    case CatalogSet::Family: {
      const auto coeffs = family_coefficients(params);
      if (auto exact = exact_family_coefficients(params)) {
        const auto rays = family_rays(*exact);
        if (format == CatalogFormat::Csv) return detail::csv_rays(rays);
        doc["entries"] = detail::json_rays(rays);
        doc["exact"] = true;
      } else {
        const auto rays = family_rays(coeffs);
        if (format == CatalogFormat::Csv) return detail::csv_rays(rays);
        doc["entries"] = detail::json_rays(rays);
        doc["exact"] = false;
      }
      doc["parameters"] = params_json(params);
      doc["k"] = Json{{"re", coeffs.k.re}, {"im", coeffs.k.im}, {"abs", coeffs.k.abs()}};
      break;
    }
  }
  return doc.dump(2) + "\n";
}

/// Diagram identity, reference-diagram comparison and inequivalence witnesses.
inline Report cmd_verify(CatalogSet set, const FamilyParams& params, int samples, const GlobalOptions& opts) {
  require_finite(params);
  if (samples < 0) throw std::invalid_argument("--samples must be >= 0");
  Json p{{"set", std::string(to_string(set))}, {"tol", opts.tol}};
  if (set == CatalogSet::Family) {
    if (samples > 0) {
      p["samples"] = samples;
      p["seed"] = opts.seed;
    } else {
      p["phases"] = params_json(params);
    }
  }
  Report rep("verify", p);

  const QRoot2 peres_914 = detail::peres_overlap_9_14();
  const QRoot2 penrose_914 = detail::penrose_overlap_9_14();

  switch (set) {
    case CatalogSet::Peres: {
      const auto rays = peres_rays();
      const OrthoGraph g = build_graph(rays);
      detail::diagram_checks(rep, g, "");
      std::vector<ApproxRay> approx;
      for (const auto& r : rays) approx.push_back(to_approx(r));
      const OrthoGraph fg = build_graph(approx, opts.tol);
      rep.check("exact_agrees_with_floating", fg == g, Json{{"pairs", 528}}, detail::edge_diff(fg, g));
      const double gap = detail::min_nonedge_overlap(approx, [](const ApproxRay& a, const ApproxRay& b) { return overlap2(a, b); });
      rep.check("nonedge_overlap_above_tol", gap > opts.tol, Json{{"min_nonedge_overlap2", gap}});
      const QRoot2 expected(Rational(6, 16), Rational(-4, 16));
      rep.check("overlap_9_14", peres_914 == expected,
                Json{{"overlap2", exact_value(peres_914)}, {"magnitude", exact_sqrt_value(peres_914)}},
                Json{{"expected_magnitude", "(2-1*sqrt2)/4"}});
      rep.witness()["overlap_9_14"] = exact_sqrt_value(peres_914);
      break;
    }
    case CatalogSet::Penrose: {
      const auto pairs = penrose_mpairs();
      const OrthoGraph g = build_graph(pairs);
      detail::diagram_checks(rep, g, "");
      rep.check("same_diagram_as_peres", g == build_graph(peres_rays()), Json::object(),
                detail::edge_diff(g, build_graph(peres_rays())));
      double worst = 0.0;
      for (int i = 0; i < kRayCount; ++i) {
        for (int j = i + 1; j < kRayCount; ++j) {
          const ApproxMPair a = to_approx(pairs[i]);
          const ApproxMPair b = to_approx(pairs[j]);
          worst = std::max(worst, std::abs(overlap2_eq3(a, b) - overlap2(state_from_mpair(a), state_from_mpair(b))));
        }
      }
      rep.check("eq3_matches_state_construction", worst < opts.tol, Json{{"max_deviation", worst}});
      rep.check("overlap_9_14", penrose_914 == QRoot2(Rational(6, 16)),
                Json{{"overlap2", exact_value(penrose_914)}, {"magnitude", exact_sqrt_value(penrose_914)}},
                Json{{"expected_magnitude", "sqrt6/4"}});
      rep.witness()["overlap_9_14"] = exact_sqrt_value(penrose_914);
      break;
    }
    case CatalogSet::Family: {
      const OrthoGraph ref = detail::reference_graph();
      std::vector<FamilyParams> points;
      if (samples > 0) {
        std::mt19937_64 rng(opts.seed);
        for (int s = 0; s < samples; ++s) points.push_back(random_family_params(rng));
      } else {
        points.push_back(params);
      }
      int matched = 0;
      double worst_k = 0.0;
      double min_gap = std::numeric_limits<double>::infinity();
      Json first_failure = nullptr;
      for (const FamilyParams& fp : points) {
        const auto coeffs = family_coefficients(fp);
        const auto rays = family_rays(coeffs);
        const OrthoGraph g = build_graph(rays, opts.tol);
        const double gap = detail::min_nonedge_overlap(rays, [](const ApproxRay& a, const ApproxRay& b) { return overlap2(a, b); });
        worst_k = std::max(worst_k, std::abs(coeffs.k.abs() - 1.0));
        min_gap = std::min(min_gap, gap);
        if (g == ref && gap > opts.tol) {
          ++matched;
        } else if (first_failure.is_null()) {
          first_failure = Json{{"phases", params_json(fp)}, {"diff", detail::edge_diff(g, ref)}, {"min_nonedge_overlap2", gap}};
        }
      }
      const int total = static_cast<int>(points.size());
      rep.check("table1_match", matched == total,
                Json{{"matched", std::to_string(matched) + "/" + std::to_string(total)}, {"min_nonedge_overlap2", min_gap}},
                first_failure);
      rep.check("k_unit_modulus", worst_k < 1e-12, Json{{"max_abs_k_minus_1", worst_k}});
      if (samples == 0) {
        if (auto exact = exact_family_coefficients(params)) {
          const OrthoGraph eg = build_graph(family_rays(*exact));
          rep.check("exact_table1_match", eg == ref, Json{{"k", exact->k.to_string()}}, detail::edge_diff(eg, ref));
        }
      }
      break;
    }
  }
  if (set != CatalogSet::Family) {
    rep.check("peres_penrose_inequivalent", peres_914 != penrose_914,
              Json{{"peres_overlap_9_14", exact_sqrt_value(peres_914)}, {"penrose_overlap_9_14", exact_sqrt_value(penrose_914)}});
  }
  return rep;
}

/// Non-colorability by proof replay, exhaustive search, or both.
inline Report cmd_prove(ProveMode mode, const GlobalOptions&) {
  static constexpr std::string_view kModes[] = {"replay", "search", "both"};
  Report rep("prove", Json{{"mode", kModes[static_cast<int>(mode)]}});
  const auto peres = peres_rays();
  const auto penrose = penrose_mpairs();
  const OrthoGraph g = build_graph(peres);
  const OrthoGraph gm = build_graph(penrose);
  rep.check("peres_penrose_same_diagram", g == gm, Json::object(), detail::edge_diff(gm, g));
  const ConstraintSet cs = ConstraintSet::from_graph(g);

  std::optional<bool> replay_unsat;
  std::optional<bool> search_unsat;

  if (mode != ProveMode::Search) {
    try {
      const ProofTrace trace = replay_table2(cs);
      const auto x = trace.contradiction();
      const bool at_7_15_16 = x && x->kind == Contradiction::Kind::AllRed && members(cs, x->where) == std::vector<int>{7, 15, 16};
      const auto greens = trace.green_rays();
      rep.check("replay_contradiction", at_7_15_16,
                Json{{"contradiction", x ? contradiction_json(cs, *x) : Json(nullptr)}});
      rep.check("replay_choice_steps", trace.choice_count() == 2, Json{{"choices", trace.choice_count()}});
      rep.check("replay_green_count", greens.size() == 7, Json{{"green_rays", greens}, {"count", greens.size()}});
      const auto bad = first_unjustified_step(trace, cs);
      rep.check("replay_steps_justified", !bad, Json{{"steps", trace.steps.size()}},
                bad ? Json{{"step", *bad}} : Json(nullptr));
      rep.witness()["trace"] = trace_json(trace, cs);
      replay_unsat = at_7_15_16;
    } catch (const ReplayDivergenceError& e) {
      rep.check("replay_contradiction", false, Json::object(), Json{{"error", e.what()}});
      replay_unsat = false;
    }
    Json perms = Json::object();
    for (const auto& [name, sym] : {std::pair{"peres", verify_symmetry_reduction(g, peres)},
                                    std::pair{"penrose", verify_symmetry_reduction(gm, penrose)}}) {
      Json detail = Json::object();
      Json failed = Json::array();
      for (const SymmetryCheck& c : sym.checks) {
        detail[c.name] = c.detail;
        if (!c.passed) failed.push_back(c.name);
      }
      rep.check(std::string("symmetry_reduction_") + name, sym.passed(), detail, failed);
      perms[name]["rotation_111"] = sym.rotation_111.cycles();
      for (const auto& [deg, p] : sym.x_rotations) perms[name]["rotation_x" + std::to_string(deg)] = p.cycles();
    }
    rep.witness()["induced_permutations"] = perms;
  }

  if (mode != ProveMode::Replay) {
    SearchStats stats;
    const auto found = search_coloring(cs, &stats);
    rep.check("search_unsat", !found, Json{{"nodes", stats.nodes}, {"exhausted", !found}},
              found ? coloring_json(*found) : Json(nullptr));
    rep.witness()["search_nodes"] = stats.nodes;
    search_unsat = !found;
  }

  if (mode == ProveMode::Both) {
    rep.check("replay_and_search_agree", replay_unsat == search_unsat && replay_unsat.value_or(false),
              Json{{"replay_unsat", *replay_unsat}, {"search_unsat", *search_unsat}});
  }
  return rep;
}

/// The coloring quoted for the ray-1 deletion.
inline constexpr std::array<int, 9> kDelete1Greens = {2, 4, 8, 12, 14, 16, 19, 23, 27};

/// Single-ray deletions are colorable; `ray` empty means all 33.
inline Report cmd_critical(std::optional<int> ray, const GlobalOptions&) {
  if (ray && (*ray < 1 || *ray > kRayCount)) {
    throw std::out_of_range("--ray must be in 1..33, got " + std::to_string(*ray));
  }
  Report rep("critical", Json{{"ray", ray ? Json(*ray) : Json("all")}});
  const OrthoGraph g = build_graph(peres_rays());
  const TriadDyadDecomposition d = decompose(g);

  const ConstraintSet cs1 = ConstraintSet::from_decomposition(d, kRayCount, 1);
  const Coloring quoted = coloring_from_greens(cs1, kDelete1Greens);
  rep.check("quoted_delete_1_coloring_valid", is_valid_coloring(quoted, cs1), Json{{"greens", kDelete1Greens}},
            coloring_json(quoted));

  Json colorings = Json::object();
  int colorable = 0;
  Json uncolorable = Json::array();
  std::vector<int> targets;
  if (ray) {
    targets.push_back(*ray);
  } else {
    for (int v = 1; v <= kRayCount; ++v) targets.push_back(v);
  }
  for (int v : targets) {
    const ConstraintSet cs = ConstraintSet::from_decomposition(d, kRayCount, v);
    const auto found = search_coloring(cs);
    if (found && is_valid_coloring(*found, cs)) {
      ++colorable;
      colorings[std::to_string(v)] = Json{{"class", std::string(to_string(class_of(v)))}, {"greens", found->greens()}};
    } else {
      uncolorable.push_back(v);
    }
  }
  const int total = static_cast<int>(targets.size());
  rep.check(ray ? "deletion_" + std::to_string(*ray) + "_colorable" : "all_deletions_colorable", colorable == total,
            Json{{"colorable", std::to_string(colorable) + "/" + std::to_string(total)}},
            Json{{"non_colorable_deletions", uncolorable}});
  rep.witness()["colorings"] = colorings;
  return rep;
}

/// Writes the DIMACS instance to `path`.
inline Report cmd_export_cnf(const std::string& path, std::optional<int> deleted, const GlobalOptions&) {
  if (deleted && (*deleted < 1 || *deleted > kRayCount)) {
    throw std::out_of_range("--delete must be in 1..33, got " + std::to_string(*deleted));
  }
  Report rep("export-cnf", Json{{"out", path}, {"delete", deleted ? Json(*deleted) : Json(nullptr)}});
  const ConstraintSet cs = ConstraintSet::from_graph(build_graph(peres_rays()), deleted);
  const Cnf cnf = encode_cnf(cs, "peres");
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << to_dimacs(cnf);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
  }
  const std::size_t expected = 4 * cs.triads.size() + cs.pairs.size();
  rep.check("variables", cnf.variables == kRayCount, Json{{"variables", cnf.variables}});
  rep.check("clauses", cnf.clauses.size() == expected, Json{{"clauses", cnf.clauses.size()}, {"expected", expected}});
  const auto found = search_coloring(cs);
  if (found) {
    rep.check("sat_witness_satisfies_cnf", satisfies(cnf, assignment_of(*found)), coloring_json(*found));
  }
  rep.witness()["expected_status"] = found ? "SAT" : "UNSAT";
  return rep;
}

/// Closed-form overlap vs explicit states, roundtrips, catalog sweep and
/// the Penrose recovery pipeline.
inline Report cmd_majorana(int samples, const GlobalOptions& opts) {
  if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
  Report rep("majorana", Json{{"samples", samples}, {"seed", opts.seed}, {"tol", opts.tol}});
  std::mt19937_64 rng(opts.seed);

  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ApproxMPair a = random_mpair(rng);
    const ApproxMPair b = random_mpair(rng);
    worst = std::max(worst, std::abs(overlap2_eq3(a, b) - overlap2(state_from_mpair(a), state_from_mpair(b))));
  }
  rep.check("eq3_vs_state", worst < opts.tol, Json{{"max_deviation", worst}});

  double worst_rt = 0.0;
  for (int s = 0; s < samples; ++s) {
    const SpinState st = random_state(rng);
    worst_rt = std::max(worst_rt, projective_distance(state_from_mpair(mpair_from_state(st)), st));
  }
  rep.check("roundtrip", worst_rt < kRoundtripTolerance, Json{{"max_projective_error", worst_rt}, {"threshold", kRoundtripTolerance}});

  const auto pairs = penrose_mpairs();
  const OrthoGraph ref = detail::reference_graph();
  int zeros = 0;
  int positives = 0;
  Json mismatches = Json::array();
  for (int i = 1; i <= kRayCount; ++i) {
    for (int j = i + 1; j <= kRayCount; ++j) {
      const QRoot2 v = overlap2_eq3(pairs[i - 1], pairs[j - 1]);
      const bool zero = v.is_zero();
      zeros += zero ? 1 : 0;
      positives += v.sign() > 0 ? 1 : 0;
      if (zero != ref.has_edge(i, j) || v.sign() < 0) mismatches.push_back(Json{{"pair", {i, j}}, {"overlap2", v.to_string()}});
    }
  }
  rep.check("penrose_exact_sweep", zeros == 72 && positives == 456 && mismatches.empty(),
            Json{{"exact_zeros", zeros}, {"exact_positive", positives}}, mismatches);

  const auto recovered = recovered_penrose_mpairs();
  int matched = 0;
  Json failures = Json::array();
  for (int i = 0; i < kRayCount; ++i) {
    if (same_pair(recovered[i], to_approx(pairs[i]), kRecoveryTolerance)) {
      ++matched;
    } else {
      failures.push_back(i + 1);
    }
  }
  rep.check("penrose_recovery", matched == kRayCount,
            Json{{"matched", std::to_string(matched) + "/33"}, {"tolerance", kRecoveryTolerance}}, failures);
  return rep;
}

}  // namespace ksproof::cli
