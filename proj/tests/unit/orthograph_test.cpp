#include "ksproof/catalog.hpp"
#include "ksproof/orthograph.hpp"
#include "ksproof/sampling.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <numeric>
#include <set>

namespace {

using namespace ksproof;
using ksproof::testing::kPropertySeed;

const OrthoGraph& peres_graph() {
  static const OrthoGraph g = build_graph(peres_rays());
  return g;
}

bool contains(const std::vector<Triad>& ts, Triad t) { return std::find(ts.begin(), ts.end(), t) != ts.end(); }
bool contains(const std::vector<Dyad>& ds, Dyad d) { return std::find(ds.begin(), ds.end(), d) != ds.end(); }

TEST(OrthoGraph, BasicOperations) {
  OrthoGraph g(4);
  g.add_edge(1, 2);
  g.add_edge(3, 2);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(g.edges(), (std::vector<Dyad>{{1, 2}, {2, 3}}));
  EXPECT_EQ(g.neighbors(2), (std::vector<int>{1, 3}));
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(1, 5), std::out_of_range);
}

TEST(OrthoGraph, BuildRequires33Entries) {
  auto rays = peres_rays();
  rays.pop_back();
  EXPECT_THROW(build_graph(rays), std::invalid_argument);
}

TEST(OrthoGraph, PeresGraphHas72Edges) { EXPECT_EQ(peres_graph().edge_count(), 72u); }

TEST(OrthoGraph, PenroseGraphIdentical) { EXPECT_EQ(build_graph(penrose_mpairs()), peres_graph()); }

TEST(OrthoGraph, PenroseGraphViaFloatingEq3Identical) {
  std::vector<ApproxMPair> pairs;
  for (const auto& p : penrose_mpairs()) pairs.push_back(to_approx(p));
  EXPECT_EQ(build_graph(pairs), peres_graph());
}

TEST(OrthoGraph, FamilyGraphIdentical) {
  std::mt19937_64 rng(kPropertySeed);
  for (int n = 0; n < 20; ++n) EXPECT_EQ(build_graph(family_rays(random_family_params(rng))), peres_graph());
}

TEST(OrthoGraph, EveryVertexHasDegreeAtLeastTwo) {
  for (int v = 1; v <= 33; ++v) EXPECT_GE(peres_graph().neighbors(v).size(), 2u) << v;
}

TEST(Decompose, PeresCounts) {
  const auto d = decompose(peres_graph());
  EXPECT_EQ(d.triads.size(), 16u);
  EXPECT_EQ(d.dyads.size(), 24u);
  EXPECT_TRUE(contains(d.triads, {1, 2, 3}));
  EXPECT_TRUE(contains(d.dyads, {10, 24}));
  EXPECT_EQ(d.edge_count(), 72u);
}

TEST(Decompose, MatchesReferenceDiagram) {
  auto d = decompose(peres_graph());
  d.normalize();
  EXPECT_EQ(d, table1_reference());
}

TEST(Decompose, ReferenceListIsWellFormed) {
  const auto t = table1_reference();
  EXPECT_TRUE(contains(t.triads, {3, 24, 27}));
  EXPECT_TRUE(contains(t.dyads, {21, 31}));
  // Enumerate edges with a duplicate check.
  std::set<std::pair<int, int>> edges;
  std::size_t listed = 0;
  auto add = [&](int a, int b) {
    edges.insert({std::min(a, b), std::max(a, b)});
    ++listed;
  };
  for (const Triad& tr : t.triads) {
    add(tr[0], tr[1]);
    add(tr[0], tr[2]);
    add(tr[1], tr[2]);
  }
  for (const Dyad& d : t.dyads) add(d[0], d[1]);
  EXPECT_EQ(listed, 72u);
  EXPECT_EQ(edges.size(), 72u);
}

TEST(Decompose, NoDyadInsideATriad) {
  const auto t = table1_reference();
  for (const Dyad& d : t.dyads) {
    for (const Triad& tr : t.triads) {
      const bool both = std::count(tr.begin(), tr.end(), d[0]) && std::count(tr.begin(), tr.end(), d[1]);
      EXPECT_FALSE(both);
    }
  }
}

TEST(Decompose, AmbiguousEdgeThrows) {
  // K4: every edge lies in two triangles.
  OrthoGraph g(4);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) g.add_edge(i, j);
  }
  EXPECT_THROW(decompose(g), AmbiguousDecompositionError);
}

TEST(Decompose, GraphOfRoundTrips) {
  EXPECT_EQ(graph_of(decompose(peres_graph()), 33), peres_graph());
}

TEST(Permutation, Basics) {
  const IndexPermutation id = IndexPermutation::identity(5);
  const IndexPermutation p({2, 3, 1, 5, 4});
  EXPECT_EQ(p * p.inverse(), id);
  EXPECT_EQ((p * p)(1), 3);
  EXPECT_EQ(p.cycles(), "(1 2 3)(4 5)");
  EXPECT_EQ(id.cycles(), "()");
  EXPECT_THROW(IndexPermutation({1, 1, 2}), std::invalid_argument);
}

TEST(Induced, Rotation111OnPeres) {
  const auto p = induced_permutation(rotation_111(), peres_rays());
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(2), 3);
  EXPECT_EQ(p(3), 1);
  EXPECT_TRUE(is_automorphism(p, peres_graph()));
  EXPECT_EQ(p * p * p, IndexPermutation::identity(33));
}

TEST(Induced, Rotation111OnPenrose) {
  const auto m = penrose_mpairs();
  const auto p = induced_permutation(rotation_111(), m);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(2), 3);
  EXPECT_EQ(p(3), 1);
  EXPECT_TRUE(is_automorphism(p, build_graph(m)));
}

TEST(Induced, XRotations) {
  for (int deg : {90, 180, 270}) {
    const auto p = induced_permutation(rotation_x(deg), peres_rays());
    const auto q = induced_permutation(rotation_x(deg), penrose_mpairs());
    EXPECT_EQ(p(1), 1) << deg;
    EXPECT_EQ(q(1), 1) << deg;
    EXPECT_TRUE(is_automorphism(p, peres_graph())) << deg;
    EXPECT_TRUE(is_automorphism(q, peres_graph())) << deg;
  }
  EXPECT_THROW(rotation_x(45), std::invalid_argument);
}

TEST(Induced, X90CompositionMatchesX180) {
  const auto rays = peres_rays();
  const auto p90 = induced_permutation(rotation_x(90), rays);
  EXPECT_EQ(p90 * p90, induced_permutation(rotation_x(180), rays));
  EXPECT_EQ(p90 * p90 * p90, induced_permutation(rotation_x(270), rays));
}

// The two catalogs realise the same rotation by different permutations of
// the shared labels, except for the half-turn. See the decisions ledger.
TEST(Induced, PeresAndPenroseAgreeOnHalfTurnOnly) {
  const auto rays = peres_rays();
  const auto pairs = penrose_mpairs();
  EXPECT_EQ(induced_permutation(rotation_x(180), rays), induced_permutation(rotation_x(180), pairs));
  EXPECT_NE(induced_permutation(rotation_x(90), rays), induced_permutation(rotation_x(90), pairs));
  EXPECT_NE(induced_permutation(rotation_111(), rays), induced_permutation(rotation_111(), pairs));
}

TEST(Induced, AllCubeRotationsAreAutomorphismsOfBothCatalogs) {
  const auto rays = peres_rays();
  const auto pairs = penrose_mpairs();
  std::set<std::vector<int>> peres_group;
  std::set<std::vector<int>> penrose_group;
  const std::array<IntMatrix3, 2> gens{rotation_111(), rotation_x(90)};
  // Closure of the generators: all 24 proper cube rotations.
  std::vector<IntMatrix3> group{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const IntMatrix3& g : gens) {
      IntMatrix3 prod{};
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          for (int k = 0; k < 3; ++k) prod[r][c] += g[r][k] * group[i][k][c];
        }
      }
      if (std::find(group.begin(), group.end(), prod) == group.end()) group.push_back(prod);
    }
  }
  ASSERT_EQ(group.size(), 24u);
  for (const IntMatrix3& g : group) {
    const auto p = induced_permutation(g, rays);
    const auto q = induced_permutation(g, pairs);
    EXPECT_TRUE(is_automorphism(p, peres_graph()));
    EXPECT_TRUE(is_automorphism(q, peres_graph()));
    peres_group.insert(p.images());
    penrose_group.insert(q.images());
  }
  EXPECT_EQ(peres_group.size(), 24u);
  EXPECT_EQ(penrose_group.size(), 24u);
}

TEST(Automorphism, Examples) {
  EXPECT_TRUE(is_automorphism(IndexPermutation::identity(33), peres_graph()));
  std::vector<int> swap12(33);
  std::iota(swap12.begin(), swap12.end(), 1);
  std::swap(swap12[0], swap12[1]);
  EXPECT_FALSE(is_automorphism(IndexPermutation(swap12), peres_graph()));
  EXPECT_FALSE(is_automorphism(IndexPermutation::identity(32), peres_graph()));
}

TEST(Induced, NotClosed) {
  const auto all = peres_rays();
  const std::vector<ExactRay> subset(all.begin(), all.begin() + 4);  // x, y, z, (0,1,1)
  EXPECT_THROW(induced_permutation(rotation_x(90), subset), NotClosedError);
  EXPECT_NO_THROW(induced_permutation(rotation_x(180), std::vector<ExactRay>(all.begin(), all.begin() + 3)));
}

TEST(Induced, RejectsImproperMatrices) {
  const IntMatrix3 reflection{{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const IntMatrix3 shear{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  EXPECT_THROW(induced_permutation(reflection, peres_rays()), DomainError);
  EXPECT_THROW(induced_permutation(shear, peres_rays()), DomainError);
  EXPECT_THROW(induced_permutation(reflection, penrose_mpairs()), DomainError);
}

}  // namespace
