#include "harmonic/curvio/invariants.hpp"
#include "harmonic/models/models.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace harmonic::models {
namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void expect_clifford_relations(const std::vector<Eigen::MatrixXd>& js) {
  ASSERT_FALSE(js.empty());
  const int d = int(js.front().rows());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  for (std::size_t a = 0; a < js.size(); ++a) {
    EXPECT_EQ(max_abs(js[a] + js[a].transpose()), 0.0) << "J" << a << " not skew";
    for (std::size_t b = 0; b < js.size(); ++b) {
      const Eigen::MatrixXd anti = js[a] * js[b] + js[b] * js[a];
      EXPECT_EQ(max_abs(anti + (a == b ? 2.0 : 0.0) * id), 0.0) << "J" << a << " J" << b;
    }
    for (int i = 0; i < d * d; ++i) {
      const double x = js[a].data()[i];
      EXPECT_TRUE(x == 0.0 || x == 1.0 || x == -1.0);
    }
  }
}

double max_nabla_r_discrepancy(const MetricLieAlgebra& g, const curvio::CurvaturePoint& cp) {
  const std::vector<double> oracle = testing::operator_route_nabla_r(g);
  double worst = 0.0;
  for (std::size_t i = 0; i < oracle.size(); ++i)
    worst = std::max(worst, std::abs(oracle[i] - cp.derivative_data()[i]));
  return worst;
}

TEST(Clifford, ComplexStructure) {
  const auto js = clifford_module({1, 1, 0});
  ASSERT_EQ(js.size(), 1u);
  Eigen::MatrixXd rot(2, 2);
  rot << 0, -1, 1, 0;
  EXPECT_EQ(js[0], rot);
  expect_clifford_relations(js);
}

TEST(Clifford, QuaternionModule) {
  const auto js = clifford_module({3, 1, 0});
  ASSERT_EQ(js.size(), 3u);
  expect_clifford_relations(js);
  const Eigen::MatrixXd j12 = js[0] * js[1];
  EXPECT_TRUE(max_abs(j12 - js[2]) == 0.0 || max_abs(j12 + js[2]) == 0.0);
}

TEST(Clifford, InequivalentPairIsBlockDiagonal) {
  const auto js = clifford_module({3, 1, 1});
  ASSERT_EQ(js.front().rows(), 8);
  expect_clifford_relations(js);
  for (const auto& j : js) {
    EXPECT_EQ(max_abs(j.block(0, 4, 4, 4)), 0.0);
    EXPECT_EQ(max_abs(j.block(4, 0, 4, 4)), 0.0);
  }
  // J1 J2 J3 acts as opposite multiples of the identity on the two blocks.
  const Eigen::MatrixXd prod = js[0] * js[1] * js[2];
  EXPECT_EQ(max_abs(prod.block(0, 0, 4, 4) + prod.block(4, 4, 4, 4)), 0.0);
  EXPECT_EQ(std::abs(prod(0, 0)), 1.0);
}

TEST(Clifford, OtherCenters) {
  expect_clifford_relations(clifford_module({2, 2, 0}));
  expect_clifford_relations(clifford_module({7, 1, 0}));
  EXPECT_EQ(clifford_module({7, 2, 0}).front().rows(), 16);
}

TEST(Clifford, RejectsBadSpecs) {
  EXPECT_THROW(clifford_module({5, 1, 0}), std::invalid_argument);
  EXPECT_THROW(clifford_module({3, 0, 0}), std::invalid_argument);
  EXPECT_THROW(clifford_module({1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(clifford_module({3, -1, 2}), std::invalid_argument);
}

TEST(DamekRicci, DimensionsAndJacobi) {
  EXPECT_EQ(damek_ricci({3, 2, 0}).dim(), 12);
  EXPECT_EQ(damek_ricci({3, 1, 1}).dim(), 12);
  EXPECT_EQ(damek_ricci({1, 2, 0}).dim(), 6);
  EXPECT_EQ(damek_ricci({0, 5, 0}).dim(), 6);
  EXPECT_EQ(damek_ricci({3, 2, 0}).jacobi_residual(), 0.0);
  EXPECT_EQ(damek_ricci({3, 1, 1}).jacobi_residual(), 0.0);
}

TEST(DamekRicci, JacobiResidualDetectsBadBracket) {
  MetricLieAlgebra g(3);
  g.set_bracket(0, 1, 2, 1.0);
  g.set_bracket(1, 2, 0, 1.0);
  g.set_bracket(0, 2, 2, 1.0);
  EXPECT_GT(g.jacobi_residual(), 0.1);
}

TEST(CurvaturePoint, DegenerateCaseIsHyperbolicQuarter) {
  const auto cp = curvature_point(damek_ricci({0, 5, 0}));
  const auto form = space_form(6, -0.25);
  double worst = 0.0;
  for (std::size_t i = 0; i < form.curvature_data().size(); ++i)
    worst = std::max(worst, std::abs(cp.curvature_data()[i] - form.curvature_data()[i]));
  EXPECT_LT(worst, 1e-12);
  EXPECT_LT(curvio::norm_dr2(cp), 1e-24);
}

TEST(CurvaturePoint, NablaRMatchesOperatorRoute) {
  for (CliffordModuleSpec spec : {CliffordModuleSpec{3, 1, 1}, CliffordModuleSpec{1, 2, 0}}) {
    const auto g = damek_ricci(spec);
    EXPECT_LT(max_nabla_r_discrepancy(g, curvature_point(g)), 1e-12);
  }
}

TEST(CurvaturePoint, SymmetricAndNonsymmetricPair) {
  const auto sym = curvio::invariants(curvature_point(damek_ricci({3, 2, 0})));
  const auto non = curvio::invariants(curvature_point(damek_ricci({3, 1, 1})));
  EXPECT_LT(sym.normDR2, 1e-10);
  EXPECT_NEAR(non.normDR2, 576.0, 1e-9);  // regression constant
  EXPECT_EQ(sym.n, non.n);
  EXPECT_NEAR(sym.C, non.C, 1e-9);
  EXPECT_NEAR(sym.H, non.H, 1e-9);
  EXPECT_NEAR(sym.L, non.L, 1e-9);
}

TEST(CurvaturePoint, SwappingModuleTypesIsAnIsometry) {
  const auto a = curvio::invariants(curvature_point(damek_ricci({3, 2, 0})));
  const auto b = curvio::invariants(curvature_point(damek_ricci({3, 0, 2})));
  const auto c = curvio::invariants(curvature_point(damek_ricci({3, 2, 1})));
  const auto d = curvio::invariants(curvature_point(damek_ricci({3, 1, 2})));
  for (auto [x, y] : {std::pair{&a, &b}, std::pair{&c, &d}}) {
    EXPECT_NEAR(x->C, y->C, 1e-12);
    EXPECT_NEAR(x->H, y->H, 1e-12);
    EXPECT_NEAR(x->L, y->L, 1e-10);
    EXPECT_NEAR(x->normR2, y->normR2, 1e-10);
    EXPECT_NEAR(x->normDR2, y->normDR2, 1e-10);
    EXPECT_NEAR(x->Rhat, y->Rhat, 1e-9);
    EXPECT_NEAR(x->rcirc, y->rcirc, 1e-9);
  }
}

TEST(CurvaturePoint, ComplexHyperbolicIsSymmetric) {
  for (int p : {1, 2, 3}) EXPECT_LT(curvio::norm_dr2(curvature_point(damek_ricci({1, p, 0}))), 1e-20);
}

TEST(CurvaturePoint, ModelsAreEinsteinWithConstantH) {
  for (CliffordModuleSpec spec : {CliffordModuleSpec{1, 1, 0}, CliffordModuleSpec{2, 1, 0}, CliffordModuleSpec{3, 2, 1},
                                  CliffordModuleSpec{7, 1, 0}}) {
    const auto rep = curvio::invariants(curvature_point(damek_ricci(spec)), {1e-9, 500, 1});
    EXPECT_TRUE(rep.einstein) << spec.q;
    EXPECT_LT(rep.h_spread, 1e-9);
    EXPECT_LT(rep.l_spread, 1e-9);
  }
}

TEST(SpaceForm, Values) {
  const auto zero = space_form(4, 0.0);
  for (double x : zero.curvature_data()) EXPECT_EQ(x, 0.0);
  const auto rep = curvio::invariants(space_form(6, -1.0));
  EXPECT_NEAR(rep.C, -5, 1e-12);
  EXPECT_NEAR(rep.H, 5, 1e-12);
  EXPECT_NEAR(rep.L, -160, 1e-12);
  EXPECT_THROW(space_form(1, 1.0), std::invalid_argument);
}

} // namespace
} // namespace harmonic::models
