#include "ksproof/catalog.hpp"
#include "ksproof/orthograph.hpp"
#include "ksproof/sampling.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

namespace {

using namespace ksproof;
using ksproof::testing::decode_coded;
using ksproof::testing::kPropertySeed;

const ExactComplex kR2 = ExactComplex::sqrt2();

TEST(Catalog, PeresExamples) {
  const auto p = peres_rays();
  ASSERT_EQ(p.size(), 33u);
  EXPECT_EQ(p[9].components(), (std::array<ExactComplex, 3>{kR2, ExactComplex(-1), ExactComplex(1)}));
  EXPECT_EQ(p[0].components(), (std::array<ExactComplex, 3>{ExactComplex(1), ExactComplex(0), ExactComplex(0)}));
  EXPECT_EQ(p[20].components(), (std::array<ExactComplex, 3>{ExactComplex(-1), ExactComplex(-1), kR2}));
  for (int i = 0; i < 33; ++i) EXPECT_EQ(p[i].index(), i + 1);
}

TEST(Catalog, PeresMatchesIndependentTranscription) {
  const auto p = peres_rays();
  for (std::size_t i = 0; i < 33; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(p[i][k], ExactComplex(decode_coded(ksproof::testing::kPeresCoded[i][k]))) << "ray " << i + 1;
    }
  }
}

TEST(Catalog, PenroseExamples) {
  const auto m = penrose_mpairs();
  ASSERT_EQ(m.size(), 33u);
  EXPECT_EQ(m[0].first, ExactMVector(1, 0, 0));
  EXPECT_EQ(m[0].second, ExactMVector(-1, 0, 0));
  EXPECT_EQ(m[9].first, ExactMVector(0, 1, 1));
  EXPECT_EQ(m[9].second, ExactMVector(0, 1, 1));
  EXPECT_TRUE(same_pair(m[21], ExactMPair{ExactMVector(0, 1, 1), ExactMVector(0, 1, -1)}));
}

TEST(Catalog, PenroseMatchesIndependentTranscription) {
  const auto m = penrose_mpairs();
  for (std::size_t i = 0; i < 33; ++i) {
    const auto& coded = ksproof::testing::kPenroseCoded[i];
    const ExactMVector u(coded[0][0], coded[0][1], coded[0][2]);
    const ExactMVector v(coded[1][0], coded[1][1], coded[1][2]);
    EXPECT_EQ(m[i].first, u) << "pair " << i + 1;
    EXPECT_EQ(m[i].second, v) << "pair " << i + 1;
  }
}

TEST(Catalog, PenroseNormsAndDoubling) {
  const auto m = penrose_mpairs();
  for (int i = 1; i <= 33; ++i) {
    for (const ExactMVector* v : {&m[i - 1].first, &m[i - 1].second}) {
      EXPECT_TRUE(v->norm2() == QRoot2(1) || v->norm2() == QRoot2(2)) << i;
    }
    EXPECT_EQ(m[i - 1].first == m[i - 1].second, class_of(i) == RayClass::DoubledEdges) << i;
  }
}

TEST(Catalog, PeresComponentsInAllowedSet) {
  const std::array<ExactComplex, 5> allowed{ExactComplex(0), ExactComplex(1), ExactComplex(-1), kR2, -kR2};
  for (const ExactRay& r : peres_rays()) {
    for (const ExactComplex& z : r.components()) {
      EXPECT_NE(std::find(allowed.begin(), allowed.end(), z), allowed.end());
    }
  }
}

TEST(Catalog, ClassOf) {
  EXPECT_EQ(class_of(1), RayClass::FaceAxes);
  EXPECT_EQ(class_of(15), RayClass::DoubledEdges);
  EXPECT_EQ(class_of(33), RayClass::FaceOppositeEdges);
  EXPECT_THROW(class_of(0), std::out_of_range);
  EXPECT_THROW(class_of(34), std::out_of_range);
  std::map<RayClass, int> sizes;
  for (int i = 1; i <= 33; ++i) ++sizes[class_of(i)];
  EXPECT_EQ(sizes[RayClass::FaceAxes], 3);
  EXPECT_EQ(sizes[RayClass::EdgeAxes], 6);
  EXPECT_EQ(sizes[RayClass::DoubledEdges], 12);
  EXPECT_EQ(sizes[RayClass::FaceOppositeEdges], 12);
}

TEST(Catalog, FamilyAtPeresPoint) {
  const auto coeffs = exact_family_coefficients({0.0, 0.0, 0.0});
  ASSERT_TRUE(coeffs.has_value());
  EXPECT_EQ(coeffs->k, ExactComplex(-1));
  const auto f = family_rays(*coeffs);
  EXPECT_EQ(f[9].components(), (std::array<ExactComplex, 3>{kR2, ExactComplex(-1), ExactComplex(1)}));
  EXPECT_EQ(f[7].components(), (std::array<ExactComplex, 3>{ExactComplex(1), ExactComplex(-1), ExactComplex(0)}));
}

TEST(Catalog, FamilyAtPeresPointIsPeresExactly) {
  const auto f = family_rays(peres_point());
  const auto p = peres_rays();
  for (int i = 0; i < 33; ++i) EXPECT_TRUE(proportional(f[i], p[i])) << "ray " << i + 1;
}

TEST(Catalog, FamilyRayOneIsFixed) {
  std::mt19937_64 rng(kPropertySeed);
  for (int n = 0; n < 20; ++n) {
    const auto f = family_rays(random_family_params(rng));
    EXPECT_EQ(f[0][0], ApproxComplex(1.0));
    EXPECT_EQ(f[0][1], ApproxComplex(0.0));
    EXPECT_EQ(f[0][2], ApproxComplex(0.0));
  }
}

TEST(Catalog, PenrosePointCoefficients) {
  const auto c = penrose_point();
  EXPECT_EQ(c.a, -ExactComplex::i());
  EXPECT_EQ(c.b, ExactComplex(-1));
  EXPECT_EQ(c.c, -kR2);
  // k = -a conj(b) c / conj(c) = -(-i)(-1) = -i
  EXPECT_EQ(c.k, -ExactComplex::i());
  const auto viaPhases = exact_family_coefficients({-std::numbers::pi / 2, std::numbers::pi, std::numbers::pi});
  ASSERT_TRUE(viaPhases.has_value());
  EXPECT_EQ(viaPhases->k, c.k);
  EXPECT_FALSE(exact_family_coefficients({0.3, 0.0, 0.0}).has_value());
}

TEST(CatalogProperty, KHasUnitModulus) {
  std::mt19937_64 rng(kPropertySeed + 1);
  for (int n = 0; n < 1000; ++n) {
    const auto c = family_coefficients(random_family_params(rng));
    ASSERT_NEAR(c.k.abs(), 1.0, 1e-12);
    ASSERT_NEAR(c.a.abs(), 1.0, 1e-12);
    ASSERT_NEAR(c.c.norm2(), 2.0, 1e-12);
  }
  for (int qa = 0; qa < 4; ++qa) {
    for (int qb = 0; qb < 4; ++qb) {
      for (int qc = 0; qc < 4; ++qc) {
        const double q = std::numbers::pi / 2;
        const auto e = exact_family_coefficients({qa * q, qb * q, qc * q});
        ASSERT_TRUE(e.has_value());
        ASSERT_EQ(e->k.norm2(), QRoot2(1));
      }
    }
  }
}

// Independent check of the diagram: counts orthogonal pairs directly
// against the reference edge list instead of going through decompose().
TEST(CatalogProperty, RandomFamilySamplesHaveTheCommonDiagram) {
  const OrthoGraph ref = graph_of(table1_reference(), 33);
  std::mt19937_64 rng(kPropertySeed + 2);
  for (int n = 0; n < 100; ++n) {
    const FamilyParams params = random_family_params(rng);
    const auto f = family_rays(params);
    for (int i = 1; i <= 33; ++i) {
      for (int j = i + 1; j <= 33; ++j) {
        const double ov = overlap2(f[i - 1], f[j - 1]);
        if (ref.has_edge(i, j)) {
          ASSERT_LT(ov, 1e-18) << "sample " << n << " pair " << i << "," << j;
        } else {
          ASSERT_GT(ov, 1e-9) << "sample " << n << " pair " << i << "," << j;
        }
      }
    }
  }
}

TEST(Catalog, ExactFamilyAtAllQuarterPhasesHasTheCommonDiagram) {
  const OrthoGraph ref = graph_of(table1_reference(), 33);
  const double q = std::numbers::pi / 2;
  for (int qa = 0; qa < 4; ++qa) {
    for (int qb = 0; qb < 4; ++qb) {
      for (int qc = 0; qc < 4; ++qc) {
        const auto e = exact_family_coefficients({qa * q, qb * q, qc * q});
        const auto rays = family_rays(*e);
        ASSERT_EQ(build_graph(rays), ref) << qa << qb << qc;
      }
    }
  }
}

TEST(Catalog, RecoveryRotationIsOrthogonal) {
  const auto r = penrose_recovery_rotation();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      QRoot2 s;
      for (int k = 0; k < 3; ++k) s += r[i][k] * r[j][k];
      EXPECT_EQ(s, QRoot2(i == j ? 1 : 0));
    }
  }
}

TEST(Catalog, PenroseFromFamilyRayOne) {
  const auto rec = recovered_penrose_mpairs();
  EXPECT_TRUE(same_pair(rec[0], {ApproxMVector(1, 0, 0), ApproxMVector(-1, 0, 0)}, 1e-7));
}

TEST(Catalog, PenroseFromFamilyRayTenIsDoubled) {
  const auto rec = recovered_penrose_mpairs();
  EXPECT_TRUE(same_direction(rec[9].first, rec[9].second, 1e-7));
  EXPECT_TRUE(same_direction(rec[9].first, ApproxMVector(0, 1, 1), 1e-7));
}

TEST(Catalog, PenroseFromFamilyReproducesAllPairs) {
  const auto rec = recovered_penrose_mpairs();
  const auto m = penrose_mpairs();
  for (int i = 0; i < 33; ++i) EXPECT_TRUE(same_pair(rec[i], to_approx(m[i]), 1e-7)) << "ray " << i + 1;
}

TEST(Catalog, PenroseFromFamilyIsExactAndKeepsTheDiagram) {
  EXPECT_EQ(build_graph(penrose_from_family()), graph_of(table1_reference(), 33));
}

}  // namespace
