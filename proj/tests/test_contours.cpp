#include <gtest/gtest.h>

#include <numbers>

#include "jacasy/contours.hpp"

using namespace jacasy;

namespace {

WeightSpec shifted_root() { return {-0.5, 0.0, HLinearFactors{{{cplx(-3.0), -0.5}}}}; }

// Independent oracle: the same Cauchy integrals on the circle |s| = r.
cplx circle_integral(const std::function<cplx(cplx)>& f, double r, int M) {
  cplx s = 0.0;
  for (int k = 0; k < M; ++k) {
    const cplx e = std::polar(1.0, 2 * std::numbers::pi * k / M);
    s += f(r * e) * r * e;
  }
  return s / double(M);
}

}  // namespace

TEST(Contours, TrapezoidExamples) {
  // the integrand's poles sit at |e^{it}| = 1/rho, so the error is about rho^{-M}
  EXPECT_NEAR(std::abs(trapezoid_ellipse([](cplx z) { return 1.0 / z; }, 2.0, 32) - 1.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(trapezoid_ellipse([](cplx z) { return 1.0 / z; }, 2.0, 64) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(trapezoid_ellipse([](cplx) { return cplx(1.0); }, 1.7, 20)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(trapezoid_ellipse([](cplx z) { return 1.0 / sq_plus(z); }, 2.0, 64) - 1.0), 0.0, 1e-10);
}

TEST(Contours, ClosedFormCoefficients) {
  auto one = compute_cn_dn(WeightSpec(0.3, 0.1), 6);
  for (auto c : one.cn) EXPECT_EQ(c, cplx(0.0));
  for (auto d : one.dn) EXPECT_EQ(d, cplx(0.0));

  auto lin = compute_cn_dn(WeightSpec(0, 0, HExpLinear{2.0}), 4);
  EXPECT_EQ(lin.cn[0], cplx(-2.0));
  EXPECT_EQ(lin.dn[0], cplx(-2.0));
  for (int n = 1; n < 4; ++n) EXPECT_EQ(lin.cn[n], cplx(0.0));

  const WeightSpec e(0, 0, HExpEvenPower{7.0, 2});
  auto ex = compute_cn_dn(e, 6);
  EXPECT_NEAR(ex.cn[0].real(), -10.5, 1e-14);
  for (int n = 4; n < 6; ++n) EXPECT_EQ(ex.cn[n], cplx(0.0));
  // trapezoid on rho = 2, M = 128 as an independent route
  for (int n = 0; n < 4; ++n) {
    const cplx t = trapezoid_ellipse(
        [&](cplx z) { return -7.0 * std::pow(z, 4) / sq_plus(z) / std::pow(z - 1.0, n + 1); }, 2.0, 128);
    EXPECT_NEAR(std::abs(t - ex.cn[n]), 0.0, 1e-10) << n;
    const cplx u = trapezoid_ellipse(
        [&](cplx z) { return -7.0 * std::pow(z, 4) / sq_plus(z) / std::pow(z + 1.0, n + 1); }, 2.0, 128);
    EXPECT_NEAR(std::abs(u - ex.dn[n]), 0.0, 1e-10) << n;
  }
}

TEST(Contours, Dinf) {
  EXPECT_NEAR(compute_Dinf(WeightSpec(0.5, 1.5)), 0.5, 1e-15);
  EXPECT_NEAR(compute_Dinf(WeightSpec(0, 0, HExpEvenPower{7.0, 2})), std::exp(-21.0 / 16), 1e-15);
  // numerical route for the same weight
  const WeightSpec g(0, 0, HGeneric{[](cplx z) { return -7.0 * std::pow(z, 4); }, {}, 3.0});
  EXPECT_NEAR(compute_Dinf(g, {.rho = 1.5}), std::exp(-21.0 / 16), 1e-12);
}

TEST(Contours, ShiftedRootCoefficients) {
  const WeightSpec w = shifted_root();
  const auto a = compute_cn_dn(w, 8);
  EXPECT_GT(a.rho_used, 3.5);
  EXPECT_LT(a.rho_used, w.rho_max());
  for (int n = 0; n < 8; ++n) {
    auto c = circle_integral(
        [&](cplx z) { return -0.5 * std::log(3.0 + z) / sq_plus(z) / std::pow(z - 1.0, n + 1); }, 2.0, 4096);
    auto d = circle_integral(
        [&](cplx z) { return -0.5 * std::log(3.0 + z) / sq_plus(z) / std::pow(z + 1.0, n + 1); }, 2.0, 4096);
    EXPECT_NEAR(std::abs(a.cn[n] - c), 0.0, 1e-12) << n;
    EXPECT_NEAR(std::abs(a.dn[n] - d), 0.0, 1e-12) << n;
  }
  // M = 80 on rho = 4 is already converged
  const double rho = 4.0;
  for (int n = 0; n < 3; ++n) {
    auto f = [&](cplx z) { return logh_unchecked(w, z) / sq_plus(z) / std::pow(z - 1.0, n + 1); };
    EXPECT_NEAR(std::abs(trapezoid_ellipse(f, rho, 80) - trapezoid_ellipse(f, rho, 160)), 0.0, 1e-10);
  }
}

TEST(Contours, EvenSymmetry) {
  const WeightSpec w(0, 0, HLinearFactors{{{cplx(2.0), -0.5}, {cplx(-2.0), -0.5}}});
  const auto a = compute_cn_dn(w, 10);
  for (int n = 0; n < 10; ++n) EXPECT_NEAR(std::abs(a.dn[n] - (n % 2 ? 1.0 : -1.0) * a.cn[n]), 0.0, 1e-12);
  const auto e = compute_cn_dn(WeightSpec(0, 0, HExpEvenPower{3.0, 3}), 6);
  for (int n = 0; n < 6; ++n) EXPECT_NEAR(std::abs(e.dn[n] - (n % 2 ? 1.0 : -1.0) * e.cn[n]), 0.0, 1e-14);
}

TEST(Contours, NoConvergence) {
  try {
    compute_cn_dn(shifted_root(), 4, {.M = 8, .Mmax = 16});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
  }
}

TEST(Contours, PsiExamples) {
  const WeightSpec leg(0, 0);
  const auto a0 = compute_aux(leg, 4);
  EXPECT_NEAR(std::abs(compute_psi(leg, cplx(0.3, 0.2), a0)), 0.0, 1e-15);

  const WeightSpec toda(0, 0, HExpLinear{2.0});
  EXPECT_NEAR(std::abs(compute_psi(toda, 0.0, compute_aux(toda, 4)) + 1.0), 0.0, 1e-15);

  const WeightSpec cheb(-0.5, 0);
  EXPECT_NEAR(std::abs(compute_psi(cheb, 0.0, compute_aux(cheb, 4)) - std::numbers::pi / 8), 0.0, 1e-15);

  // Toda phase on the interval
  for (double x : {-0.7, 0.1, 0.95}) {
    const double ref = -std::sqrt(1 - x * x);
    EXPECT_NEAR(std::abs(compute_psi(toda, x, compute_aux(toda, 4)) - ref), 0.0, 1e-14);
  }
}

TEST(Contours, PsiRealOnInterval) {
  const WeightSpec w = shifted_root();
  const auto a = compute_aux(w, 6);
  for (double x = -0.99; x < 1.0; x += 0.09) EXPECT_NEAR(compute_psi(w, x, a).imag(), 0.0, 1e-12) << x;
}

TEST(Contours, PsiAgainstDirectDefinition) {
  const WeightSpec w = shifted_root();
  const auto a = compute_aux(w, 6);
  for (cplx z : {cplx(0.2, 0.5), cplx(-0.8, -0.3), cplx(1.5, 0.2)}) {
    const cplx m = circle_integral([&](cplx s) { return -0.5 * std::log(3.0 + s) / sq_plus(s) / (s - z); }, 2.0, 4096);
    const cplx ref = -0.25 * acos_cut(z) + 0.25 * std::numbers::pi + 0.5 * sq_minus(z) * m;
    EXPECT_NEAR(std::abs(compute_psi(w, z, a) - ref), 0.0, 1e-12) << z;
  }
}

TEST(Contours, PsiGuard) {
  const WeightSpec w = shifted_root();
  const auto a = compute_aux(w, 4);
  // a point beyond the analyticity ellipse cannot be enclosed
  try {
    compute_psi(w, cplx(0.0, 3.0), a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContourTooClose);
  }
  // a point next to the working ellipse is handled by growing it
  const cplx near = ellipse_point(a.rho_used, 1.0) * 0.999;
  EXPECT_NO_THROW(compute_psi(w, near, a));
}

TEST(Contours, PsiEndpointSeries) {
  const WeightSpec leg(0, 0);
  const auto s0 = psi_series_endpoint(leg, compute_aux(leg, 4), 1, 3);
  for (auto c : s0.coeffs) EXPECT_EQ(c, cplx(0.0));

  for (const WeightSpec& w : {WeightSpec(0, 0, HExpLinear{2.0}), shifted_root(), WeightSpec(0.3, -0.4, HExpEvenPower{1.5, 1})}) {
    const auto a = compute_aux(w, 8);
    for (int e : {1, -1}) {
      const auto s = psi_series_endpoint(w, a, e, 6);
      for (cplx v : {cplx(-1e-3), cplx(-1e-3, 1e-3), cplx(5e-4, 5e-4)}) {
        const cplx z = double(e) + double(e) * v;
        EXPECT_NEAR(std::abs(s(z) - compute_psi(w, z, a)), 0.0, 1e-14) << e << " " << v;
      }
    }
  }
  EXPECT_THROW(psi_series_endpoint(shifted_root(), compute_aux(shifted_root(), 3), 1, 5), Error);
}
