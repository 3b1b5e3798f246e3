#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "jacasy/quadrature.hpp"

using namespace jacasy;

namespace {

Engine engine(const WeightSpec& w, int T = 8) {
  EngineOptions o;
  o.T = T;
  return Engine(w, o);
}

struct Diff {
  double nodes = 0, weights = 0;
};

Diff compare(const QuadRule& a, const QuadRule& b) {
  Diff d;
  for (int k = 0; k < a.n; ++k) {
    d.nodes = std::max(d.nodes, std::abs(a.nodes[k] - b.nodes[k]));
    d.weights = std::max(d.weights, std::abs(a.weights[k] / b.weights[k] - 1.0));
  }
  return d;
}

}  // namespace

TEST(Quadrature, TwoPointLegendre) {
  const auto r = gauss_rule(engine(WeightSpec(0, 0)), 2);
  EXPECT_EQ(r.method, "golub-welsch");
  EXPECT_NEAR(r.nodes[0], -1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.nodes[1], 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(r.weights[1], 1.0, 1e-15);
}

TEST(Quadrature, ChebyshevClosedForm) {
  const Engine e = engine(WeightSpec(-0.5, -0.5));
  for (int n : {10, 40, 333}) {
    const auto r = gauss_rule(e, n);
    EXPECT_EQ(r.method, n < 20 ? "golub-welsch" : "newton");
    for (int k = 1; k <= n; ++k) {
      EXPECT_NEAR(r.nodes[n - k], std::cos((2 * k - 1) * std::numbers::pi / (2 * n)), 1e-14) << n << " " << k;
      EXPECT_NEAR(r.weights[n - k] / (std::numbers::pi / n), 1.0, n < 20 ? 1e-13 : 2e-13) << n << " " << k;
    }
  }
}

TEST(Quadrature, LegendreAgainstGolubWelsch) {
  const auto ref = gauss_jacobi(0, 0, 100);
  const Diff d = compare(gauss_rule(engine(WeightSpec(0, 0)), 100), ref);
  EXPECT_LT(d.nodes, 1e-12);
  EXPECT_LT(d.weights, 1e-12);
  // with the default four terms the rule is limited by truncation near the disk boundaries
  const Diff d4 = compare(gauss_rule(engine(WeightSpec(0, 0), 4), 100), ref);
  EXPECT_LT(d4.nodes, 1e-11);
  EXPECT_LT(d4.weights, 1e-9);
}

TEST(Quadrature, NonclassicalAgainstGolubWelsch) {
  for (const WeightSpec& w : {WeightSpec(0.3, -0.7), WeightSpec(0, 0, HExpEvenPower{2.0, 1}),
                              WeightSpec(-0.5, -0.5, HExpLinear{2.0}), WeightSpec(1.5, 0.2, HExpLinear{-1.0})}) {
    const int n = 150;
    const Diff d = compare(gauss_rule(engine(w), n), golub_welsch(stieltjes(w, n), n));
    EXPECT_LT(d.nodes, 1e-13);
    EXPECT_LT(d.weights, 1e-10);
  }
}

TEST(Quadrature, MomentsExact) {
  EXPECT_LT(moments_check(gauss_rule(engine(WeightSpec(0, 0)), 5), WeightSpec(0, 0), 9), 1e-13);
  EXPECT_LT(moments_check(gauss_rule(engine(WeightSpec(-0.5, -0.5)), 8), WeightSpec(-0.5, -0.5), 15), 1e-13);
  const WeightSpec g(0, 0, HExpEvenPower{2.0, 1});
  EXPECT_LT(moments_check(gauss_rule(engine(g), 40), g, 79), 1e-10);
  EXPECT_LT(moments_check(gauss_rule(engine(WeightSpec(0, 0)), 100), WeightSpec(0, 0), 199), 1e-12);
  EXPECT_THROW(moments_check(gauss_rule(engine(WeightSpec(0, 0)), 5), WeightSpec(0, 0), 10), Error);
}

TEST(Quadrature, WeightsSumToMassAndArePositive) {
  for (const WeightSpec& w : {WeightSpec(0, 0), WeightSpec(-0.9, 2.5), WeightSpec(0.3, -0.6, HExpLinear{1.5})}) {
    const Engine e = engine(w);
    const double mu0 = moment(w, 0);
    for (int n : {60, 200, 3000}) {
      const auto r = gauss_rule(e, n);
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        EXPECT_GT(r.weights[k], 0.0);
        EXPECT_GT(r.nodes[k], -1.0);
        EXPECT_LT(r.nodes[k], 1.0);
        if (k) {
          EXPECT_GT(r.nodes[k], r.nodes[k - 1]);
        }
        s += r.weights[k];
      }
      EXPECT_LT(std::abs(s / mu0 - 1.0), 1e-12) << n;
    }
  }
}

TEST(Quadrature, Interlacing) {
  const Engine e = engine(WeightSpec(0.3, -0.6, HExpLinear{1.5}));
  for (int n : {19, 20, 57, 120, 199}) {
    const auto a = gauss_rule(e, n), b = gauss_rule(e, n + 1);
    for (int k = 0; k < n; ++k) {
      EXPECT_LT(b.nodes[k], a.nodes[k]) << n << " " << k;
      EXPECT_LT(a.nodes[k], b.nodes[k + 1]) << n << " " << k;
    }
  }
}

TEST(Quadrature, SymmetricWeight) {
  const auto r = gauss_rule(engine(WeightSpec(0.4, 0.4, HExpEvenPower{7.0, 2})), 121);
  for (int k = 0; k < r.n; ++k) {
    EXPECT_NEAR(r.nodes[k], -r.nodes[r.n - 1 - k], 1e-14);
    EXPECT_NEAR(r.weights[k] / r.weights[r.n - 1 - k], 1.0, 1e-13);
  }
  EXPECT_NEAR(r.nodes[60], 0.0, 1e-15);
}

TEST(Quadrature, LargeRule) {
  const auto r = gauss_rule(engine(WeightSpec(0, 0), 4), 10000);
  EXPECT_EQ(r.method, "newton");
  EXPECT_LT(r.max_residual, 1e-14);
  double s = 0.0;
  for (double w : r.weights) s += w;
  EXPECT_NEAR(s, 2.0, 1e-12);
  // middle nodes against the classical interior approximation cos((k - 1/4) pi / (n + 1/2))
  EXPECT_NEAR(r.nodes[4999], std::cos((5001 - 0.25) * std::numbers::pi / 10000.5), 1e-8);
}

TEST(Quadrature, Errors) {
  EXPECT_THROW(gauss_rule(engine(WeightSpec(0, 0)), 0), Error);
}
