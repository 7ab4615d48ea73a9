#pragma once

// Orthogonality graphs ("Kochen-Specker diagrams"), their triad/dyad
// decomposition, and index permutations induced by cube rotations.

#include "ksproof/catalog.hpp"
#include "ksproof/majorana.hpp"
#include "ksproof/rays.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ksproof {

using Triad = std::array<int, 3>;
using Dyad = std::array<int, 2>;

/// Undirected simple graph on vertices 1..n.
class OrthoGraph {
 public:
  explicit OrthoGraph(int vertex_count) : n_(vertex_count), adj_(static_cast<std::size_t>(vertex_count + 1) * (vertex_count + 1)) {
    if (vertex_count < 0) throw std::invalid_argument("OrthoGraph: negative vertex count");
  }

  int vertex_count() const { return n_; }

  void add_edge(int i, int j) {
    check(i);
    check(j);
    if (i == j) throw std::invalid_argument("OrthoGraph: self-loop at " + std::to_string(i));
    adj_[slot(i, j)] = true;
    adj_[slot(j, i)] = true;
  }

  bool has_edge(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    return adj_[slot(i, j)];
  }

  /// Sorted list of {i, j}, i < j.
  std::vector<Dyad> edges() const {
    std::vector<Dyad> out;
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        if (has_edge(i, j)) out.push_back({i, j});
      }
    }
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

  std::vector<int> neighbors(int i) const {
    check(i);
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j) {
      if (adj_[slot(i, j)]) out.push_back(j);
    }
    return out;
  }

  friend bool operator==(const OrthoGraph&, const OrthoGraph&) = default;

 private:
  std::size_t slot(int i, int j) const { return static_cast<std::size_t>(i) * (n_ + 1) + j; }
  void check(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("OrthoGraph: vertex " + std::to_string(i) + " out of range");
  }

  int n_;
  std::vector<bool> adj_;
};

/// Graph on 1..n with an edge wherever `orthogonal(i, j)` holds (0-based items).
template <class Items, class Pred>
OrthoGraph build_graph_with(const Items& items, Pred orthogonal) {
  const int n = static_cast<int>(std::size(items));
  OrthoGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (orthogonal(items[i], items[j])) g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

namespace detail {
inline void require_catalog_size(std::size_t n) {
  if (n != static_cast<std::size_t>(kRayCount)) {
    throw std::invalid_argument("build_graph: catalog has " + std::to_string(n) + " entries, expected 33");
  }
}
}  // namespace detail

inline OrthoGraph build_graph(std::span<const ExactRay> rays) {
  detail::require_catalog_size(rays.size());
  return build_graph_with(rays, [](const ExactRay& a, const ExactRay& b) { return is_orthogonal(a, b); });
}

inline OrthoGraph build_graph(std::span<const ApproxRay> rays, double tol = kDefaultTolerance) {
  detail::require_catalog_size(rays.size());
  return build_graph_with(rays, [tol](const ApproxRay& a, const ApproxRay& b) { return is_orthogonal(a, b, tol); });
}

/// Edges where the closed-form M-pair overlap vanishes exactly.
inline OrthoGraph build_graph(std::span<const ExactMPair> pairs) {
  detail::require_catalog_size(pairs.size());
  return build_graph_with(pairs, [](const ExactMPair& a, const ExactMPair& b) { return overlap2_eq3(a, b).is_zero(); });
}

/// The closed form yields overlap2 directly with absolute rounding error near
/// machine epsilon, so it is compared against tol rather than tol^2.
inline OrthoGraph build_graph(std::span<const ApproxMPair> pairs, double tol = kDefaultTolerance) {
  detail::require_catalog_size(pairs.size());
  return build_graph_with(pairs, [tol](const ApproxMPair& a, const ApproxMPair& b) {
    return std::abs(overlap2_eq3(a, b)) < tol;
  });
}

class AmbiguousDecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Triads (triangles) and dyads (edges in no triangle), both sorted.
struct TriadDyadDecomposition {
  std::vector<Triad> triads;
  std::vector<Dyad> dyads;

  std::size_t edge_count() const { return 3 * triads.size() + dyads.size(); }

  void normalize() {
    for (auto& t : triads) std::sort(t.begin(), t.end());
    for (auto& d : dyads) std::sort(d.begin(), d.end());
    std::sort(triads.begin(), triads.end());
    std::sort(dyads.begin(), dyads.end());
  }

  friend bool operator==(const TriadDyadDecomposition&, const TriadDyadDecomposition&) = default;
};

/// Every edge must lie in at most one triangle.
inline TriadDyadDecomposition decompose(const OrthoGraph& g) {
  TriadDyadDecomposition out;
  const int n = g.vertex_count();
  std::vector<int> cover(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  auto covered = [&](int i, int j) -> int& { return cover[static_cast<std::size_t>(i) * (n + 1) + j]; };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!g.has_edge(i, j)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (!g.has_edge(i, k) || !g.has_edge(j, k)) continue;
        out.triads.push_back({i, j, k});
        for (auto [u, v] : {std::pair{i, j}, std::pair{i, k}, std::pair{j, k}}) {
          if (++covered(u, v) > 1) {
            throw AmbiguousDecompositionError("decompose: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                              "} lies in more than one triangle");
          }
        }
      }
    }
  }
  for (const Dyad& e : g.edges()) {
    if (covered(e[0], e[1]) == 0) out.dyads.push_back(e);
  }
  return out;
}

/// The common orthogonality table of the Peres and Penrose rays.
inline TriadDyadDecomposition table1_reference() {
  TriadDyadDecomposition t;
  t.triads = {{1, 2, 3},   {1, 4, 5},   {1, 26, 33}, {1, 29, 30}, {2, 6, 7},   {2, 22, 32},
              {2, 25, 31}, {3, 8, 9},   {3, 23, 28}, {3, 24, 27}, {4, 10, 13}, {5, 11, 12},
              {6, 14, 17}, {7, 15, 16}, {8, 18, 21}, {9, 19, 20}};
  t.dyads = {{10, 24}, {10, 25}, {11, 23}, {11, 25}, {12, 22}, {12, 24}, {13, 22}, {13, 23},
             {14, 28}, {14, 29}, {15, 27}, {15, 29}, {16, 26}, {16, 28}, {17, 26}, {17, 27},
             {18, 32}, {18, 33}, {19, 31}, {19, 33}, {20, 30}, {20, 32}, {21, 30}, {21, 31}};
  t.normalize();
  return t;
}

inline OrthoGraph graph_of(const TriadDyadDecomposition& d, int vertex_count) {
  OrthoGraph g(vertex_count);
  for (const Triad& t : d.triads) {
    g.add_edge(t[0], t[1]);
    g.add_edge(t[0], t[2]);
    g.add_edge(t[1], t[2]);
  }
  for (const Dyad& e : d.dyads) g.add_edge(e[0], e[1]);
  return g;
}

/// Bijection on 1..n.
class IndexPermutation {
 public:
  static IndexPermutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return IndexPermutation(std::move(img));
  }

  /// images[i-1] is the image of i.
  explicit IndexPermutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
      if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("IndexPermutation: not a bijection");
      seen[v] = true;
    }
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return img_; }

  IndexPermutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
    return IndexPermutation(std::move(inv));
  }

  /// (p * q)(i) = p(q(i)).
  friend IndexPermutation operator*(const IndexPermutation& p, const IndexPermutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("IndexPermutation: size mismatch");
    std::vector<int> img(q.img_.size());
    for (int i = 1; i <= q.size(); ++i) img[i - 1] = p(q(i));
    return IndexPermutation(std::move(img));
  }

  /// Cycle notation without fixed points, e.g. "(1 2 3)(4 6 8 5)".
  std::string cycles() const {
    std::ostringstream os;
    std::vector<bool> done(img_.size() + 1, false);
    for (int i = 1; i <= size(); ++i) {
      if (done[i] || (*this)(i) == i) continue;
      os << '(';
      for (int j = i; !done[j]; j = (*this)(j)) {
        if (j != i) os << ' ';
        os << j;
        done[j] = true;
      }
      os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const IndexPermutation&, const IndexPermutation&) = default;

 private:
  std::vector<int> img_;
};

/// True iff p maps the edge set onto itself.
inline bool is_automorphism(const IndexPermutation& p, const OrthoGraph& g) {
  if (p.size() != g.vertex_count()) return false;
  for (const Dyad& e : g.edges()) {
    if (!g.has_edge(p(e[0]), p(e[1]))) return false;
  }
  return true;
}

using IntMatrix3 = Matrix3<int>;

/// x -> y -> z -> x: 120 degrees about (1,1,1).
inline IntMatrix3 rotation_111() { return {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}; }

/// Rotation about the x axis by 90, 180 or 270 degrees.
inline IntMatrix3 rotation_x(int degrees) {
  switch (degrees) {
    case 90: return {{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}};
    case 180: return {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};
    case 270: return {{{1, 0, 0}, {0, 0, 1}, {0, -1, 0}}};
    default: throw std::invalid_argument("rotation_x: only 90, 180 and 270 degrees are supported");
  }
}

class NotClosedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_proper_rotation(const IntMatrix3& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += m[i][k] * m[j][k];
      if (s != (i == j ? 1 : 0)) throw DomainError("induced_permutation: matrix is not orthogonal");
    }
  }
  const int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det != 1) throw DomainError("induced_permutation: determinant is not +1");
}

inline ExactMVector apply(const IntMatrix3& m, const ExactMVector& v) {
  std::array<QRoot2, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i] += QRoot2(m[i][j]) * v[j];
  }
  return ExactMVector(out);
}

template <class Items, class Image, class Same>
IndexPermutation induce(const Items& items, Image image_of, Same same) {
  const int n = static_cast<int>(std::size(items));
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto moved = image_of(items[i]);
    int found = 0;
    for (int j = 0; j < n && found == 0; ++j) {
      if (same(moved, items[j])) found = j + 1;
    }
    if (found == 0) throw NotClosedError("induced_permutation: image of item " + std::to_string(i + 1) + " is not in the catalog");
    img[i] = found;
  }
  return IndexPermutation(std::move(img));
}

}  // namespace detail

/// pi with rotation * item(i) projectively equal to item(pi(i)).
inline IndexPermutation induced_permutation(const IntMatrix3& rotation, std::span<const ExactRay> rays) {
  detail::require_proper_rotation(rotation);
  return detail::induce(
      rays, [&](const ExactRay& r) { return apply(rotation, r); },
      [](const ExactRay& a, const ExactRay& b) { return proportional(a, b); });
}

/// The rotation acts on both M-vectors; pairs match unordered.
inline IndexPermutation induced_permutation(const IntMatrix3& rotation, std::span<const ExactMPair> pairs) {
  detail::require_proper_rotation(rotation);
  return detail::induce(
      pairs,
      [&](const ExactMPair& p) {
        return ExactMPair{detail::apply(rotation, p.first), detail::apply(rotation, p.second)};
      },
      [](const ExactMPair& a, const ExactMPair& b) { return same_pair(a, b); });
}

}  // namespace ksproof
