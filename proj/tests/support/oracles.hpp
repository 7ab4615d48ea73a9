#pragma once

// Test-only oracles. Nothing here calls the propagation/search engine;
// each oracle works from the plain definitions.

#include "ksproof/cnf.hpp"
#include "ksproof/kscolor.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace ksproof::testing {

/// Validity straight from the rules: exactly one Green per triad, at most
/// one per pair. `green[v]` for labels 1..n.
inline bool valid_by_definition(const std::vector<bool>& green, const ConstraintSet& cs) {
  for (const auto& t : cs.triads) {
    if (int(green[t[0]]) + int(green[t[1]]) + int(green[t[2]]) != 1) return false;
  }
  for (const auto& p : cs.pairs) {
    if (green[p[0]] && green[p[1]]) return false;
  }
  return true;
}

inline bool valid_by_definition(const Coloring& c, const ConstraintSet& cs) {
  std::vector<bool> green(static_cast<std::size_t>(cs.vertex_count + 1), false);
  for (int v : cs.vertices) {
    if (c[v] == Color::Unassigned) return false;
    green[v] = c[v] == Color::Green;
  }
  return valid_by_definition(green, cs);
}

/// Enumerates every Green subset of the active vertices (at most 20 of them).
inline std::optional<std::vector<bool>> brute_force_coloring(const ConstraintSet& cs) {
  const std::size_t n = cs.vertices.size();
  if (n > 20) throw std::invalid_argument("brute_force_coloring: too many vertices");
  std::vector<bool> green(static_cast<std::size_t>(cs.vertex_count + 1), false);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (std::size_t k = 0; k < n; ++k) green[cs.vertices[k]] = (mask >> k) & 1u;
    if (valid_by_definition(green, cs)) return green;
  }
  return std::nullopt;
}

/// Minimal DPLL with unit propagation; returns a model (index 0 unused).
class Dpll {
 public:
  explicit Dpll(const Cnf& cnf) : cnf_(cnf), value_(static_cast<std::size_t>(cnf.variables + 1), 0) {}

  std::optional<std::vector<bool>> solve() {
    if (!search()) return std::nullopt;
    std::vector<bool> model(value_.size(), false);
    for (std::size_t v = 1; v < value_.size(); ++v) model[v] = value_[v] > 0;
    return model;
  }

 private:
  // 1 true, -1 false, 0 free
  int lit_value(int lit) const {
    const int v = value_[static_cast<std::size_t>(std::abs(lit))];
    return lit > 0 ? v : -v;
  }

  bool search() {
    std::vector<int> assigned;
    auto undo = [&] {
      for (int v : assigned) value_[v] = 0;
    };
    // Unit propagation to fixpoint.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : cnf_.clauses) {
        int free_lit = 0;
        int free_count = 0;
        bool sat = false;
        for (int lit : clause) {
          const int lv = lit_value(lit);
          if (lv > 0) {
            sat = true;
            break;
          }
          if (lv == 0) {
            ++free_count;
            free_lit = lit;
          }
        }
        if (sat) continue;
        if (free_count == 0) {
          undo();
          return false;
        }
        if (free_count == 1) {
          value_[static_cast<std::size_t>(std::abs(free_lit))] = free_lit > 0 ? 1 : -1;
          assigned.push_back(std::abs(free_lit));
          changed = true;
        }
      }
    }
    int branch = 0;
    for (std::size_t v = 1; v < value_.size() && branch == 0; ++v) {
      if (value_[v] == 0) branch = static_cast<int>(v);
    }
    if (branch == 0) return true;
    for (int val : {1, -1}) {
      value_[branch] = val;
      if (search()) return true;
    }
    value_[branch] = 0;
    undo();
    return false;
  }

  const Cnf& cnf_;
  std::vector<int> value_;
};

/// Peres rays written out independently of the library's digit strings:
/// each component is 0, +-1, or +-2 where 2 stands for sqrt2.
inline constexpr std::array<std::array<int, 3>, 33> kPeresCoded = {{
    {1, 0, 0},   {0, 1, 0},   {0, 0, 1},   {0, 1, 1},   {0, 1, -1},  {1, 0, 1},   {1, 0, -1},
    {1, -1, 0},  {1, 1, 0},   {2, -1, 1},  {2, 1, 1},   {2, -1, -1}, {2, 1, -1},  {-1, 2, 1},
    {1, 2, 1},   {-1, 2, -1}, {1, 2, -1},  {1, 1, 2},   {-1, 1, 2},  {1, -1, 2},  {-1, -1, 2},
    {1, 0, 2},   {-1, 2, 0},  {1, 2, 0},   {-1, 0, 2},  {0, 1, 2},   {2, -1, 0},  {2, 1, 0},
    {0, -1, 2},  {0, 2, 1},   {2, 0, 1},   {2, 0, -1},  {0, 2, -1},
}};

/// Penrose M-vector pairs with plain integer components.
inline constexpr std::array<std::array<std::array<int, 3>, 2>, 33> kPenroseCoded = {{
    {{{1, 0, 0}, {-1, 0, 0}}},   {{{0, 1, 0}, {0, -1, 0}}},   {{{0, 0, 1}, {0, 0, -1}}},
    {{{0, 1, 1}, {0, -1, -1}}},  {{{0, 1, -1}, {0, -1, 1}}},  {{{1, 0, 1}, {-1, 0, -1}}},
    {{{1, 0, -1}, {-1, 0, 1}}},  {{{1, 1, 0}, {-1, -1, 0}}},  {{{1, -1, 0}, {-1, 1, 0}}},
    {{{0, 1, 1}, {0, 1, 1}}},    {{{0, 1, -1}, {0, 1, -1}}},  {{{0, -1, 1}, {0, -1, 1}}},
    {{{0, -1, -1}, {0, -1, -1}}}, {{{1, 0, 1}, {1, 0, 1}}},   {{{1, 0, -1}, {1, 0, -1}}},
    {{{-1, 0, 1}, {-1, 0, 1}}},  {{{-1, 0, -1}, {-1, 0, -1}}}, {{{1, 1, 0}, {1, 1, 0}}},
    {{{1, -1, 0}, {1, -1, 0}}},  {{{-1, 1, 0}, {-1, 1, 0}}},  {{{-1, -1, 0}, {-1, -1, 0}}},
    {{{0, 1, 1}, {0, 1, -1}}},   {{{0, 1, 1}, {0, -1, 1}}},   {{{0, -1, -1}, {0, 1, -1}}},
    {{{0, -1, -1}, {0, -1, 1}}}, {{{1, 0, 1}, {1, 0, -1}}},   {{{1, 0, 1}, {-1, 0, 1}}},
    {{{-1, 0, -1}, {1, 0, -1}}}, {{{-1, 0, -1}, {-1, 0, 1}}}, {{{1, 1, 0}, {1, -1, 0}}},
    {{{1, 1, 0}, {-1, 1, 0}}},   {{{-1, -1, 0}, {1, -1, 0}}}, {{{-1, -1, 0}, {-1, 1, 0}}},
}};

inline QRoot2 decode_coded(int x) {
  if (x == 2) return QRoot2::sqrt2();
  if (x == -2) return -QRoot2::sqrt2();
  return QRoot2(x);
}

}  // namespace ksproof::testing
