#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "jacasy/branches.hpp"

using namespace jacasy;

TEST(Branches, PhiExamples) {
  EXPECT_EQ(phi(cplx(1.0)), cplx(1.0));
  EXPECT_EQ(phi(cplx(-1.0)), cplx(-1.0));
  EXPECT_NEAR(std::abs(phi(cplx(2.0)) - (2.0 + std::sqrt(3.0))), 0.0, 1e-15);
  // phi(z) ~ 2z at infinity
  const cplx big(3e6, -4e6);
  EXPECT_NEAR(std::abs(phi(big) / (2.0 * big) - 1.0), 0.0, 1e-12);
}

TEST(Branches, ThetaExamples) {
  EXPECT_EQ(theta(cplx(0.5, 1.0)), 1);
  EXPECT_EQ(theta(cplx(0.5)), 1);
  EXPECT_EQ(theta(cplx(2.0)), -1);
  EXPECT_EQ(theta(cplx(1.0)), -1);
  EXPECT_EQ(theta(cplx(0.5, -1.0)), -1);
}

TEST(Branches, AcosExamples) {
  EXPECT_EQ(acos_cut(cplx(1.0)), cplx(0.0));
  EXPECT_NEAR(std::abs(acos_cut(cplx(0.0)) - std::numbers::pi / 2), 0.0, 1e-15);
  const cplx plus = acos_cut(cplx(2.0), Side::Above);
  EXPECT_NEAR(std::abs(plus - cplx(0.0, -std::log(2.0 + std::sqrt(3.0)))), 0.0, 1e-15);
  const cplx minus = acos_cut(cplx(2.0), Side::Below);
  EXPECT_NEAR(std::abs(minus + plus), 0.0, 1e-15);
  // cut values agree with limits from the plane
  for (double x : {-3.0, -1.5, 1.2, 4.0}) {
    EXPECT_NEAR(std::abs(acos_cut(cplx(x), Side::Above) - std::acos(cplx(x, 1e-14))), 0.0, 1e-7) << x;
    EXPECT_NEAR(std::abs(acos_cut(cplx(x), Side::Below) - std::acos(cplx(x, -1e-14))), 0.0, 1e-7) << x;
  }
}

TEST(Branches, AlgPowers) {
  const auto p = alg_powers(cplx(-2.0));
  EXPECT_NEAR(std::abs(p.sq_plus + std::sqrt(3.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(alg_powers(cplx(0.0)).q4_minus - 1.0), 0.0, 1e-15);
  const cplx z(0.6, 0.8);
  const auto q = alg_powers(z);
  EXPECT_NEAR(std::abs(std::pow(q.q4_plus, 4) - (z * z - 1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(q.q4_plus * q.q4_plus - q.sq_plus), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(q.q4_minus * q.q4_minus - q.sq_minus), 0.0, 1e-14);
  // (z^2-1)^{1/2} = i theta (1-z^2)^{1/2}
  EXPECT_NEAR(std::abs(q.sq_plus - cplx(0, theta(z)) * q.sq_minus), 0.0, 1e-14);
}

TEST(Branches, BoundaryValuesOnInterval) {
  for (double x : {-0.9, -0.3, 0.0, 0.4, 0.99}) {
    const double r = std::sqrt(1.0 - x * x);
    EXPECT_NEAR(std::abs(sq_plus(cplx(x), Side::Above) - cplx(0, r)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(sq_plus(cplx(x), Side::Below) - cplx(0, -r)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(sq_minus(cplx(x)) - r), 0.0, 1e-15);
  }
}

TEST(BranchesProperty, RandomGrid) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  int count = 0;
  while (count < 10000) {
    const cplx z(u(rng), u(rng));
    if (std::abs(z) > 10.0 || z.imag() == 0.0) continue;
    ++count;
    const cplx f = phi(z);
    ASSERT_GT(std::abs(f), 1.0);
    ASSERT_NEAR(std::abs(phi(std::conj(z)) - std::conj(f)), 0.0, 1e-13 * std::abs(f));
    ASSERT_NEAR(std::abs(std::exp(cplx(0, theta(z)) * acos_cut(z)) - f), 0.0, 1e-13 * std::abs(f)) << z;
  }
}

TEST(BranchesProperty, NoCutOnImaginaryAxis) {
  for (double y = -10.0; y <= 10.0; y += 0.25) {
    EXPECT_NEAR(std::abs(phi(cplx(1e-12, y)) - phi(cplx(-1e-12, y))), 0.0, 1e-10) << y;
  }
}

TEST(Branches, JetDerivatives) {
  const cplx z(0.3, 0.4);
  const double h = 1e-6;
  auto fd = [&](auto f) { return (f(z + h) - f(z - h)) / (2 * h); };
  EXPECT_NEAR(std::abs(phi(Jet::variable(z)).d - fd([](cplx x) { return phi(x); })), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(acos_cut(Jet::variable(z)).d - fd([](cplx x) { return acos_cut(x); })), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(sq_minus(Jet::variable(z)).d - fd([](cplx x) { return sq_minus(x); })), 0.0, 1e-8);
}
