#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "jacasy/oracle.hpp"

using namespace jacasy;

TEST(Oracle, LegendreClosedForm) {
  const auto t = jacobi_recurrence(0, 0, 50);
  EXPECT_DOUBLE_EQ(t.mu0, 2.0);
  for (int k = 1; k < 50; ++k) {
    EXPECT_EQ(t.alpha_rec[k], 0.0);
    EXPECT_NEAR(t.beta_rec[k], double(k) * k / (4.0 * k * k - 1.0), 1e-16);
  }
}

TEST(Oracle, JacobiAgainstDiscretisedStieltjes) {
  // Jacobi(a+1, b+2) from a Jacobi(a, b) base rule times (1-x)(1+x)^2, which
  // the base rule integrates exactly: checks the closed forms and the procedure
  for (auto [a, b] : {std::pair{0.3, -0.6}, {-0.5, 0.5}, {-0.9, 0.25}}) {
    const auto t = jacobi_recurrence(a + 1, b + 2, 30);
    const auto base = gauss_jacobi(a, b, 80);
    std::vector<double> w(80);
    for (int j = 0; j < 80; ++j) w[j] = base.weights[j] * (1 - base.nodes[j]) * std::pow(1 + base.nodes[j], 2);
    const auto s = detail::discrete_stieltjes(base.nodes, w, 30);
    EXPECT_NEAR(s.mu0, t.mu0, 1e-14 * t.mu0);
    for (int k = 0; k < 30; ++k) {
      EXPECT_NEAR(s.alpha_rec[k], t.alpha_rec[k], 1e-14) << a << " " << b << " " << k;
      EXPECT_NEAR(s.beta_rec[k], t.beta_rec[k], 1e-13 * t.beta_rec[k]) << a << " " << b << " " << k;
    }
  }
}

TEST(Oracle, RecurrenceBasics) {
  const auto t = jacobi_recurrence(-0.5, -0.5, 10);
  EXPECT_EQ(eval_recurrence(t, 0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(eval_recurrence(t, 1, 0.3), 0.3 - t.alpha_rec[0]);
  const double x = 0.3;
  EXPECT_NEAR(eval_recurrence(t, 5, x), (16 * std::pow(x, 5) - 20 * std::pow(x, 3) + 5 * x) / 16.0, 1e-16);
  EXPECT_THROW(eval_recurrence(t, 11, x), Error);
}

TEST(Oracle, OrthonormalChebyshev) {
  const auto t = jacobi_recurrence(-0.5, -0.5, 12);
  const double x = 0.1;
  EXPECT_NEAR(eval_recurrence(t, 8, x, true), std::sqrt(2.0 / std::numbers::pi) * std::cos(8 * std::acos(x)), 1e-15);
  const auto sv = eval_recurrence_scaled(t, 8, x, true);
  EXPECT_NEAR(sv.derivative(), std::sqrt(2.0 / std::numbers::pi) * 8 * std::sin(8 * std::acos(x)) / std::sqrt(1 - x * x),
              1e-13);
}

TEST(Oracle, GolubWelschClosedForms) {
  const auto leg = gauss_jacobi(0, 0, 2);
  EXPECT_NEAR(leg.nodes[0], -1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(leg.nodes[1], 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(leg.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(leg.weights[1], 1.0, 1e-15);
  const auto ch = gauss_jacobi(-0.5, -0.5, 4);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_NEAR(ch.nodes[4 - k], std::cos((2 * k - 1) * std::numbers::pi / 8), 1e-15);
    EXPECT_NEAR(ch.weights[4 - k], std::numbers::pi / 4, 1e-14);
  }
}

TEST(Oracle, WeightsSumToMu0) {
  for (int n : {5, 64, 501}) {
    const auto t = jacobi_recurrence(0.7, -0.3, n);
    const auto r = golub_welsch(t, n);
    double s = 0;
    for (double w : r.weights) s += w;
    EXPECT_NEAR(s, t.mu0, 1e-14 * t.mu0 * std::sqrt(double(n)));
  }
}

TEST(Oracle, StieltjesLegendreAndDoubling) {
  // a weight that looks nontrivial to the procedure but is Legendre
  const WeightSpec w(0, 0, HExpLinear{0.0});
  ASSERT_FALSE(w.trivial_h());
  const auto t = stieltjes(w, 40);
  for (int k = 1; k <= 40; ++k) {
    EXPECT_NEAR(t.alpha_rec[k], 0.0, 1e-14);
    EXPECT_NEAR(t.beta_rec[k], double(k) * k / (4.0 * k * k - 1.0), 1e-14);
  }
}

TEST(Oracle, TodaLimits) {
  const WeightSpec w(-0.5, -0.5, HExpLinear{2.0});
  const auto t = stieltjes(w, 300);
  EXPECT_LT(std::abs(t.alpha_rec[300]), 1e-4);
  EXPECT_LT(std::abs(t.beta_rec[300] - 0.25), 1e-4);
}

TEST(Oracle, OrthogonalityOfGaussRule) {
  const WeightSpec w(0.2, -0.4, HExpEvenPower{1.5, 2});
  const int n = 40;
  const auto t = stieltjes(w, n);
  const auto r = golub_welsch(t, n);
  for (int i = 0; i <= 19; ++i)
    for (int j = i; j <= 19; ++j) {
      double s = 0;
      for (int k = 0; k < n; ++k)
        s += r.weights[k] * eval_recurrence(t, i, r.nodes[k], true) * eval_recurrence(t, j, r.nodes[k], true);
      EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-11) << i << " " << j;
    }
}

TEST(Oracle, MomentsOfLegendreWeight) {
  const WeightSpec w(0, 0);
  for (int j = 0; j <= 9; ++j) EXPECT_NEAR(moment(w, j), j % 2 ? 0.0 : 2.0 / (j + 1), 1e-14);
}
