#pragma once

// Red/green colorings of a ray set subject to the Kochen-Specker rules:
// exactly one Green per triad, at most one Green per dyad.
//
// Contents:
//   * propagate           - forcing to a fixpoint, with optional trace
//   * search_coloring     - complete backtracking search
//   * replay_table2       - mechanical replay of the 7-green non-coloring proof
//   * verify_symmetry_reduction - the rotations that justify its two choices
//   * criticality_audit   - a valid coloring for every single-ray deletion

#include "ksproof/orthograph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ksproof {

enum class Color : std::uint8_t { Unassigned, Green, Red };

inline std::string_view to_string(Color c) {
  switch (c) {
    case Color::Green: return "Green";
    case Color::Red: return "Red";
    case Color::Unassigned: return "Unassigned";
  }
  return "?";
}

/// Exactly-one-Green triads and at-most-one-Green pairs over labels 1..vertex_count.
struct ConstraintSet {
  int vertex_count = 0;
  std::vector<int> vertices;  // active labels, ascending
  std::vector<Triad> triads;
  std::vector<Dyad> pairs;
  std::optional<int> deleted;

  /// Deleting a vertex drops its dyads and demotes each of its triads to an
  /// at-most-one pair over the two survivors. Pairs are kept sorted.
  static ConstraintSet from_decomposition(const TriadDyadDecomposition& d, int vertex_count,
                                          std::optional<int> deleted = std::nullopt) {
    if (deleted && (*deleted < 1 || *deleted > vertex_count)) {
      throw std::out_of_range("ConstraintSet: deleted ray " + std::to_string(*deleted) + " out of range");
    }
    ConstraintSet cs;
    cs.vertex_count = vertex_count;
    cs.deleted = deleted;
    for (int v = 1; v <= vertex_count; ++v) {
      if (v != deleted) cs.vertices.push_back(v);
    }
    auto contains = [&](auto const& members) {
      return deleted && std::find(members.begin(), members.end(), *deleted) != members.end();
    };
    for (Triad t : d.triads) {
      std::sort(t.begin(), t.end());
      if (!contains(t)) {
        cs.triads.push_back(t);
        continue;
      }
      Dyad rest{};
      std::size_t k = 0;
      for (int v : t) {
        if (v != *deleted) rest[k++] = v;
      }
      cs.pairs.push_back(rest);
    }
    for (Dyad p : d.dyads) {
      std::sort(p.begin(), p.end());
      if (!contains(p)) cs.pairs.push_back(p);
    }
    std::sort(cs.triads.begin(), cs.triads.end());
    std::sort(cs.pairs.begin(), cs.pairs.end());
    return cs;
  }

  static ConstraintSet from_graph(const OrthoGraph& g, std::optional<int> deleted = std::nullopt) {
    return from_decomposition(decompose(g), g.vertex_count(), deleted);
  }
};

struct ConstraintRef {
  enum class Kind : std::uint8_t { Triad, Pair };
  Kind kind = Kind::Triad;
  int index = 0;

  friend bool operator==(const ConstraintRef&, const ConstraintRef&) = default;
};

inline std::vector<int> members(const ConstraintSet& cs, ConstraintRef r) {
  if (r.kind == ConstraintRef::Kind::Triad) {
    const Triad& t = cs.triads.at(static_cast<std::size_t>(r.index));
    return {t.begin(), t.end()};
  }
  const Dyad& p = cs.pairs.at(static_cast<std::size_t>(r.index));
  return {p.begin(), p.end()};
}

/// Assignment of colors to labels 1..n; label 0 is unused.
class Coloring {
 public:
  explicit Coloring(int vertex_count) : c_(static_cast<std::size_t>(vertex_count + 1), Color::Unassigned) {}

  int vertex_count() const { return static_cast<int>(c_.size()) - 1; }
  Color operator[](int ray) const { return c_.at(static_cast<std::size_t>(ray)); }
  void set(int ray, Color color) { c_.at(static_cast<std::size_t>(ray)) = color; }

  std::vector<int> with(Color color) const {
    std::vector<int> out;
    for (int v = 1; v <= vertex_count(); ++v) {
      if (c_[v] == color) out.push_back(v);
    }
    return out;
  }
  std::vector<int> greens() const { return with(Color::Green); }
  std::vector<int> reds() const { return with(Color::Red); }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> c_;
};

/// Every active ray colored, every triad exactly one Green, every pair at most one.
inline bool is_valid_coloring(const Coloring& c, const ConstraintSet& cs) {
  if (c.vertex_count() != cs.vertex_count) return false;
  for (int v : cs.vertices) {
    if (c[v] == Color::Unassigned) return false;
  }
  for (const Triad& t : cs.triads) {
    if (std::count_if(t.begin(), t.end(), [&](int v) { return c[v] == Color::Green; }) != 1) return false;
  }
  for (const Dyad& p : cs.pairs) {
    if (c[p[0]] == Color::Green && c[p[1]] == Color::Green) return false;
  }
  return true;
}

/// Active rays in `greens` are Green, all other active rays Red.
inline Coloring coloring_from_greens(const ConstraintSet& cs, std::span<const int> greens) {
  Coloring c(cs.vertex_count);
  for (int v : cs.vertices) c.set(v, Color::Red);
  for (int g : greens) c.set(g, Color::Green);
  return c;
}

struct Contradiction {
  enum class Kind : std::uint8_t { AllRed, TwoGreens };
  Kind kind = Kind::AllRed;
  ConstraintRef where;

  friend bool operator==(const Contradiction&, const Contradiction&) = default;
};

struct ChoiceStep {
  std::vector<int> greens;
  std::string justification;
};

struct ForcedStep {
  int ray = 0;
  Color color = Color::Unassigned;
  ConstraintRef reason;
};

struct ContradictionStep {
  Contradiction contradiction;
};

using TraceStep = std::variant<ChoiceStep, ForcedStep, ContradictionStep>;

/// Ordered record of choices, forcings and the terminal contradiction.
struct ProofTrace {
  std::vector<TraceStep> steps;

  std::size_t choice_count() const {
    return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const TraceStep& s) {
      return std::holds_alternative<ChoiceStep>(s);
    }));
  }

  /// Every ray ever colored Green, ascending.
  std::vector<int> green_rays() const {
    std::set<int> out;
    for (const TraceStep& s : steps) {
      if (const auto* c = std::get_if<ChoiceStep>(&s)) out.insert(c->greens.begin(), c->greens.end());
      if (const auto* f = std::get_if<ForcedStep>(&s); f && f->color == Color::Green) out.insert(f->ray);
    }
    return {out.begin(), out.end()};
  }

  std::optional<Contradiction> contradiction() const {
    if (steps.empty()) return std::nullopt;
    if (const auto* c = std::get_if<ContradictionStep>(&steps.back())) return c->contradiction;
    return std::nullopt;
  }
};

struct PropagationResult {
  Coloring coloring;
  std::optional<Contradiction> contradiction;
};

namespace detail {

class Propagator {
 public:
  Propagator(const ConstraintSet& cs, Coloring start, ProofTrace* trace)
      : cs_(cs), c_(std::move(start)), trace_(trace), occurs_(static_cast<std::size_t>(cs.vertex_count + 1)),
        closed_(static_cast<std::size_t>(cs.vertex_count + 1), false) {
    if (c_.vertex_count() != cs.vertex_count) throw std::invalid_argument("propagate: coloring size mismatch");
    for (std::size_t i = 0; i < cs.triads.size(); ++i) {
      for (int v : cs.triads[i]) occurs_[v].push_back({ConstraintRef::Kind::Triad, static_cast<int>(i)});
    }
    for (std::size_t i = 0; i < cs.pairs.size(); ++i) {
      for (int v : cs.pairs[i]) occurs_[v].push_back({ConstraintRef::Kind::Pair, static_cast<int>(i)});
    }
  }

  const Coloring& coloring() const { return c_; }

  std::optional<Contradiction> scan_all() const {
    for (std::size_t i = 0; i < cs_.triads.size(); ++i) {
      if (auto x = check({ConstraintRef::Kind::Triad, static_cast<int>(i)})) return x;
    }
    for (std::size_t i = 0; i < cs_.pairs.size(); ++i) {
      if (auto x = check({ConstraintRef::Kind::Pair, static_cast<int>(i)})) return x;
    }
    return std::nullopt;
  }

  /// Rule (i): each Green ray makes its triad-mates and dyad-partners Red.
  std::optional<Contradiction> close_greens() {
    for (int v = 1; v <= cs_.vertex_count; ++v) {
      if (c_[v] != Color::Green || closed_[v]) continue;
      closed_[v] = true;
      for (const ConstraintRef& r : occurs_[v]) {
        for (int m : members(cs_, r)) {
          if (m == v) continue;
          if (c_[m] == Color::Green) return Contradiction{Contradiction::Kind::TwoGreens, r};
          if (c_[m] != Color::Unassigned) continue;
          assign(m, Color::Red, r);
          for (const ConstraintRef& t : occurs_[m]) {
            if (auto x = check(t)) return x;
          }
        }
      }
    }
    return std::nullopt;
  }

  /// Rule (ii) candidate: first triad with two Red and one Unassigned.
  std::optional<std::pair<int, ConstraintRef>> next_forced_green() const {
    for (std::size_t i = 0; i < cs_.triads.size(); ++i) {
      const Triad& t = cs_.triads[i];
      int reds = 0;
      int open = 0;
      for (int v : t) {
        if (c_[v] == Color::Red) ++reds;
        if (c_[v] == Color::Unassigned) open = v;
      }
      if (reds == 2 && open != 0) return std::pair{open, ConstraintRef{ConstraintRef::Kind::Triad, static_cast<int>(i)}};
    }
    return std::nullopt;
  }

  void assign(int ray, Color color, ConstraintRef why) {
    c_.set(ray, color);
    if (trace_) trace_->steps.emplace_back(ForcedStep{ray, color, why});
  }

  void choose(std::vector<int> greens, std::string justification) {
    for (int g : greens) c_.set(g, Color::Green);
    if (trace_) trace_->steps.emplace_back(ChoiceStep{std::move(greens), std::move(justification)});
  }

  void record(const Contradiction& x) {
    if (trace_) trace_->steps.emplace_back(ContradictionStep{x});
  }

  std::optional<Contradiction> check(ConstraintRef r) const {
    const auto m = members(cs_, r);
    const auto greens = std::count_if(m.begin(), m.end(), [&](int v) { return c_[v] == Color::Green; });
    if (greens > 1) return Contradiction{Contradiction::Kind::TwoGreens, r};
    if (r.kind == ConstraintRef::Kind::Triad &&
        std::all_of(m.begin(), m.end(), [&](int v) { return c_[v] == Color::Red; })) {
      return Contradiction{Contradiction::Kind::AllRed, r};
    }
    return std::nullopt;
  }

 private:
  const ConstraintSet& cs_;
  Coloring c_;
  ProofTrace* trace_;
  std::vector<std::vector<ConstraintRef>> occurs_;
  std::vector<bool> closed_;
};

}  // namespace detail

/// Fixpoint of the forcing rules:
///   (i)  a Green ray makes every triad-mate and dyad-partner Red;
///   (ii) a triad with two Reds makes its third member Green.
/// Rule (i) is closed completely before each single application of rule
/// (ii), which always takes the first eligible triad. Stops at the first
/// all-Red triad or doubly-Green constraint.
inline PropagationResult propagate(const Coloring& start, const ConstraintSet& cs, ProofTrace* trace = nullptr) {
  detail::Propagator p(cs, start, trace);
  if (auto x = p.scan_all()) {
    p.record(*x);
    return {p.coloring(), x};
  }
  while (true) {
    if (auto x = p.close_greens()) {
      p.record(*x);
      return {p.coloring(), x};
    }
    auto next = p.next_forced_green();
    if (!next) break;
    p.assign(next->first, Color::Green, next->second);
  }
  return {p.coloring(), std::nullopt};
}

struct SearchStats {
  std::uint64_t nodes = 0;
};

namespace detail {

inline std::optional<Coloring> search(const Coloring& start, const ConstraintSet& cs, SearchStats& stats) {
  ++stats.nodes;
  PropagationResult r = propagate(start, cs);
  if (r.contradiction) return std::nullopt;
  const Coloring& c = r.coloring;
  // Branch on the unsatisfied triad with the fewest open members.
  const Triad* best = nullptr;
  int best_open = 4;
  for (const Triad& t : cs.triads) {
    if (std::any_of(t.begin(), t.end(), [&](int v) { return c[v] == Color::Green; })) continue;
    const int open = static_cast<int>(std::count_if(t.begin(), t.end(), [&](int v) { return c[v] == Color::Unassigned; }));
    if (open < best_open) {
      best = &t;
      best_open = open;
    }
  }
  if (best == nullptr) {
    Coloring done = c;
    for (int v : cs.vertices) {
      if (done[v] == Color::Unassigned) done.set(v, Color::Red);
    }
    return done;
  }
  for (int v : *best) {
    if (c[v] != Color::Unassigned) continue;
    Coloring next = c;
    next.set(v, Color::Green);
    if (auto found = search(next, cs, stats)) return found;
  }
  return std::nullopt;
}

}  // namespace detail

/// Complete backtracking search with propagation at every node. Returns
/// nothing only after the whole choice tree has been exhausted.
inline std::optional<Coloring> search_coloring(const ConstraintSet& cs, SearchStats* stats = nullptr) {
  SearchStats local;
  SearchStats& s = stats ? *stats : local;
  return detail::search(Coloring(cs.vertex_count), cs, s);
}

class ReplayDivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace proof_script {

inline constexpr int kFirstChoice = 1;
inline constexpr std::array<int, 2> kSecondChoice = {10, 11};
inline constexpr std::array<int, 8> kRedAfterFirstChoice = {2, 3, 4, 5, 26, 29, 30, 33};
inline constexpr std::array<Dyad, 3> kAlternativePairs = {{{10, 12}, {13, 12}, {11, 13}}};
/// Forced rows, in order; the last one ends all Red.
inline constexpr std::array<Triad, 5> kForcedRows = {{{2, 25, 31}, {3, 24, 27}, {3, 23, 28}, {6, 14, 17}, {7, 15, 16}}};

}  // namespace proof_script

namespace detail {

inline ConstraintRef triad_ref(const ConstraintSet& cs, Triad t) {
  std::sort(t.begin(), t.end());
  const auto it = std::find(cs.triads.begin(), cs.triads.end(), t);
  if (it == cs.triads.end()) {
    throw ReplayDivergenceError("replay: triad {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                std::to_string(t[2]) + "} is not a constraint");
  }
  return {ConstraintRef::Kind::Triad, static_cast<int>(it - cs.triads.begin())};
}

inline std::string describe(const ConstraintSet& cs, const Contradiction& x) {
  std::string s = x.kind == Contradiction::Kind::AllRed ? "all-Red " : "two-Green ";
  s += x.where.kind == ConstraintRef::Kind::Triad ? "triad {" : "pair {";
  const auto m = members(cs, x.where);
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "}";
}

}  // namespace detail

/// Replays the two-choice, seven-green non-coloring proof row by row.
/// Each documented row must be forced by the propagation rules from the
/// state reached so far; any deviation throws ReplayDivergenceError.
inline ProofTrace replay_table2(const ConstraintSet& cs) {
  if (cs.vertex_count != kRayCount || cs.deleted) {
    throw ReplayDivergenceError("replay: requires the full 33-ray constraint set");
  }
  ProofTrace trace;
  detail::Propagator p(cs, Coloring(cs.vertex_count), &trace);
  auto fail = [&](const std::string& what) { throw ReplayDivergenceError("replay: " + what); };

  p.choose({proof_script::kFirstChoice}, "120-degree rotation about (1,1,1) maps rays 2 and 3 onto ray 1");
  if (auto x = p.close_greens()) fail("unexpected " + detail::describe(cs, *x) + " after the first choice");
  const std::vector<int> expected_red(proof_script::kRedAfterFirstChoice.begin(), proof_script::kRedAfterFirstChoice.end());
  if (p.coloring().reds() != expected_red) fail("first choice did not force exactly rays 2,3,4,5,26,29,30,33 Red");

  for (Triad t : {Triad{4, 10, 13}, Triad{5, 11, 12}}) detail::triad_ref(cs, t);
  p.choose({proof_script::kSecondChoice.begin(), proof_script::kSecondChoice.end()},
           "90, 180 or 270-degree rotation about x fixes ray 1 and maps (10,12), (13,12), (11,13) onto (10,11)");
  if (auto x = p.close_greens()) fail("unexpected " + detail::describe(cs, *x) + " after the second choice");

  const auto& rows = proof_script::kForcedRows;
  const ConstraintRef last = detail::triad_ref(cs, rows.back());
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const ConstraintRef r = detail::triad_ref(cs, rows[i]);
    int open = 0;
    int reds = 0;
    for (int v : rows[i]) {
      if (p.coloring()[v] == Color::Red) ++reds;
      if (p.coloring()[v] == Color::Unassigned) open = v;
    }
    if (reds != 2 || open == 0) fail("row " + std::to_string(i + 3) + " is not forced by the current state");
    p.assign(open, Color::Green, r);
    if (auto x = p.close_greens()) {
      const bool terminal = i + 2 == rows.size() && x->kind == Contradiction::Kind::AllRed && x->where == last;
      if (!terminal) fail("unexpected " + detail::describe(cs, *x) + " while forcing row " + std::to_string(i + 3));
    }
  }
  if (auto x = p.check(last); !x || x->kind != Contradiction::Kind::AllRed) fail("last row is not all Red");
  p.record({Contradiction::Kind::AllRed, last});
  return trace;
}

/// Replays a trace from the empty coloring, re-deriving every Forced step
/// from the single constraint it cites. Returns the first unjustified step.
inline std::optional<std::size_t> first_unjustified_step(const ProofTrace& trace, const ConstraintSet& cs) {
  Coloring c(cs.vertex_count);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    if (const auto* choice = std::get_if<ChoiceStep>(&s)) {
      for (int g : choice->greens) c.set(g, Color::Green);
    } else if (const auto* f = std::get_if<ForcedStep>(&s)) {
      const auto m = members(cs, f->reason);
      if (c[f->ray] != Color::Unassigned || std::find(m.begin(), m.end(), f->ray) == m.end()) return i;
      bool ok = false;
      if (f->color == Color::Red) {
        ok = std::any_of(m.begin(), m.end(), [&](int v) { return v != f->ray && c[v] == Color::Green; });
      } else if (f->color == Color::Green) {
        ok = f->reason.kind == ConstraintRef::Kind::Triad &&
             std::all_of(m.begin(), m.end(), [&](int v) { return v == f->ray || c[v] == Color::Red; });
      }
      if (!ok) return i;
      c.set(f->ray, f->color);
    } else {
      const auto& x = std::get<ContradictionStep>(s).contradiction;
      const auto m = members(cs, x.where);
      const bool ok = x.kind == Contradiction::Kind::AllRed
                          ? x.where.kind == ConstraintRef::Kind::Triad &&
                                std::all_of(m.begin(), m.end(), [&](int v) { return c[v] == Color::Red; })
                          : std::count_if(m.begin(), m.end(), [&](int v) { return c[v] == Color::Green; }) > 1;
      if (!ok || i + 1 != trace.steps.size()) return i;
    }
  }
  return std::nullopt;
}

struct SymmetryCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SymmetryReport {
  IndexPermutation rotation_111 = IndexPermutation::identity(0);
  std::vector<std::pair<int, IndexPermutation>> x_rotations;  // degrees, permutation
  std::vector<SymmetryCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SymmetryCheck& c) { return c.passed; });
  }
};

/// Confirms the rotations that let the replay consider a single branch:
///  - the 111 rotation is an automorphism cycling {1,2,3};
///  - every x rotation is an automorphism;
///  - each alternative second-step pair is mapped onto {10,11} by some x
///    rotation that fixes ray 1 and permutes the eight forced Reds.
template <class Catalog>
SymmetryReport verify_symmetry_reduction(const OrthoGraph& g, const Catalog& catalog) {
  SymmetryReport rep;
  rep.rotation_111 = induced_permutation(rotation_111(), catalog);
  for (int deg : {90, 180, 270}) rep.x_rotations.emplace_back(deg, induced_permutation(rotation_x(deg), catalog));

  const IndexPermutation& r = rep.rotation_111;
  rep.checks.push_back({"rotation_111_automorphism", is_automorphism(r, g), r.cycles()});
  const bool cycles = r(1) == 2 && r(2) == 3 && r(3) == 1;
  const bool reverse = r(1) == 3 && r(3) == 2 && r(2) == 1;
  rep.checks.push_back({"rotation_111_cycles_1_2_3", cycles || reverse,
                        "1->" + std::to_string(r(1)) + " 2->" + std::to_string(r(2)) + " 3->" + std::to_string(r(3))});

  for (const auto& [deg, p] : rep.x_rotations) {
    rep.checks.push_back({"rotation_x" + std::to_string(deg) + "_automorphism", is_automorphism(p, g), p.cycles()});
  }

  const std::set<int> reds(proof_script::kRedAfterFirstChoice.begin(), proof_script::kRedAfterFirstChoice.end());
  const std::set<int> target(proof_script::kSecondChoice.begin(), proof_script::kSecondChoice.end());
  for (const Dyad& alt : proof_script::kAlternativePairs) {
    std::string witness;
    for (const auto& [deg, p] : rep.x_rotations) {
      if (p(1) != 1) continue;
      if (std::set<int>{p(alt[0]), p(alt[1])} != target) continue;
      std::set<int> moved;
      for (int v : reds) moved.insert(p(v));
      if (moved != reds) continue;
      witness = "x" + std::to_string(deg);
      break;
    }
    rep.checks.push_back({"pair_" + std::to_string(alt[0]) + "_" + std::to_string(alt[1]) + "_maps_to_10_11",
                          !witness.empty(), witness.empty() ? "no x rotation works" : witness});
  }
  return rep;
}

class AuditFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// For every deleted ray, a coloring of the reduced set, each re-validated.
inline std::map<int, Coloring> criticality_audit(const OrthoGraph& g) {
  const TriadDyadDecomposition d = decompose(g);
  std::map<int, Coloring> out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const ConstraintSet cs = ConstraintSet::from_decomposition(d, g.vertex_count(), v);
    auto found = search_coloring(cs);
    if (!found) throw AuditFailure("criticality: deleting ray " + std::to_string(v) + " leaves a non-colorable set");
    if (!is_valid_coloring(*found, cs)) {
      throw AuditFailure("criticality: coloring for deletion of ray " + std::to_string(v) + " fails validation");
    }
    out.emplace(v, std::move(*found));
  }
  return out;
}

}  // namespace ksproof
