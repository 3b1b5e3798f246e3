#include <gtest/gtest.h>

#include <random>

#include "jacasy/weights.hpp"

using namespace jacasy;

namespace {

WeightSpec shifted_root() { return {-0.5, 0.0, HLinearFactors{{{cplx(-3.0), -0.5}}}}; }

}  // namespace

TEST(Weights, RejectsBadExponents) {
  EXPECT_THROW(WeightSpec(-1.0, 0.0), Error);
  EXPECT_THROW(WeightSpec(0.0, -2.0), Error);
  EXPECT_THROW(WeightSpec(0.0, 0.0, HLinearFactors{{{cplx(0.5), 1.0}}}), Error);
}

TEST(Weights, EvalW) {
  EXPECT_NEAR(std::abs(eval_w(WeightSpec(0, 0), 0.3) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eval_w(shifted_root(), 0.0) - 1.0 / std::sqrt(3.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eval_w(WeightSpec(0, 0, HExpLinear{2.0}), 1.0) - std::exp(-2.0)), 0.0, 1e-15);
  try {
    eval_w(WeightSpec(-0.5, 0.0), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PoleAtEndpoint);
  }
}

TEST(Weights, EvalLogh) {
  EXPECT_EQ(eval_logh(WeightSpec(0, 0), cplx(3, 4)), cplx(0.0));
  EXPECT_NEAR(std::abs(eval_logh(WeightSpec(0, 0, HExpEvenPower{7.0, 2}), cplx(0, 1)) + 7.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(eval_logh(WeightSpec(0, 0, HExpLinear{-2.0}), 0.5) - 1.0), 0.0, 1e-15);
  try {
    eval_logh(shifted_root(), cplx(-3.5, 0.1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideAnalyticRegion);
  }
}

TEST(Weights, EntireFlag) {
  EXPECT_TRUE(is_entire_logh(WeightSpec(0, 0)));
  EXPECT_TRUE(is_entire_logh(WeightSpec(0, 0, HExpEvenPower{1.0, 1})));
  EXPECT_TRUE(is_entire_logh(WeightSpec(0, 0, HExpLinear{1.0})));
  EXPECT_FALSE(is_entire_logh(shifted_root()));
}

TEST(Weights, RhoMaxOfRoot) {
  EXPECT_NEAR(shifted_root().rho_max(), 3.0 + std::sqrt(8.0), 1e-14);
}

TEST(Weights, EvenDetection) {
  EXPECT_TRUE(WeightSpec(0, 0, HExpEvenPower{1.0, 2}).even_h());
  EXPECT_FALSE(WeightSpec(0, 0, HExpLinear{1.0}).even_h());
  EXPECT_FALSE(shifted_root().even_h());
  EXPECT_TRUE(WeightSpec(0, 0, HLinearFactors{{{cplx(2.0), 0.5}, {cplx(-2.0), 0.5}}}).even_h());
}

TEST(WeightsProperty, ExpLoghMatchesDirectProduct) {
  // h(x) = (x+3)^{-1/2} (x - 2i)^{1/3} (x + 2i)^{1/3}, compared with real arithmetic
  // on the line and with the product of principal powers nearby.
  const WeightSpec w(0, 0, HLinearFactors{{{cplx(-3.0), -0.5}, {cplx(0, 2), 1.0 / 3}, {cplx(0, -2), 1.0 / 3}}, 1.5});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> t(0, 2 * std::numbers::pi), r(0, 0.999);
  for (int i = 0; i < 1000; ++i) {
    const cplx z = ellipse_point(1.0 + r(rng) * (w.rho_max() - 1.0), t(rng));
    const cplx direct = 1.5 * std::pow(3.0 * (1.0 + z / 3.0), -0.5) *
                        std::pow(2.0 * (1.0 - z / cplx(0, 2)), 1.0 / 3) * std::pow(2.0 * (1.0 - z / cplx(0, -2)), 1.0 / 3);
    ASSERT_NEAR(std::abs(std::exp(eval_logh(w, z)) - direct), 0.0, 1e-13 * std::abs(direct)) << z;
  }
  for (double x = -1.0; x <= 1.0; x += 0.125) {
    const double direct = 1.5 / std::sqrt(x + 3.0) * std::pow(x * x + 4.0, 1.0 / 3);
    EXPECT_NEAR(std::abs(eval_h(w, x) - direct), 0.0, 1e-14);
  }
}

TEST(Weights, ParseAndPrint) {
  auto w = parse_weight("jacobi(-0.5, 0) * (x+3)^(-0.5)");
  EXPECT_EQ(w.alpha(), -0.5);
  const auto& f = std::get<HLinearFactors>(w.h());
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].root, cplx(-3.0));
  EXPECT_EQ(f.factors[0].exponent, -0.5);

  auto e = parse_weight("jacobi(0,0)*exp(-7*x^4)");
  EXPECT_EQ(std::get<HExpEvenPower>(e.h()).c, 7.0);
  EXPECT_EQ(std::get<HExpEvenPower>(e.h()).m, 2);
  EXPECT_EQ(std::get<HExpLinear>(parse_weight("jacobi(0.5,1)*exp(-2*x)").h()).t, 2.0);
  EXPECT_TRUE(std::holds_alternative<HOne>(parse_weight("jacobi(1,2)").h()));
  EXPECT_TRUE(std::holds_alternative<HOne>(parse_weight("jacobi(1,2)*1").h()));

  auto c = parse_weight("jacobi(0,0)*(x-(0.5+2i))^1*(x-(0.5-2i))^1");
  EXPECT_EQ(std::get<HLinearFactors>(c.h()).factors[0].root, cplx(0.5, 2));

  for (const auto* s : {"jacobi(-0.5,0)*(x+3)^(-0.5)", "jacobi(0,0)*exp(-7*x^4)", "jacobi(0.25,1)*exp(-2*x)",
                        "jacobi(0,0)*(x-(0.5+2i))^1*(x-(0.5-2i))^1"}) {
    const auto a = parse_weight(s);
    EXPECT_EQ(to_string(parse_weight(to_string(a))), to_string(a)) << s;
  }
  EXPECT_THROW(parse_weight("legendre"), Error);
  EXPECT_THROW(parse_weight("jacobi(0,0)*exp(-x^3)"), Error);
  EXPECT_THROW(parse_weight("jacobi(0,0)*(x+3"), Error);
}

TEST(Weights, PositiveRealPartCheck) {
  // exp(-x^2) has Re h < 0 on large ellipses
  const WeightSpec w(0, 0, HGeneric{[](cplx z) { return -z * z; }, {}, 10.0});
  EXPECT_NO_THROW(check_positive_real_part(w, 1.3));
  EXPECT_THROW(check_positive_real_part(w, 5.0), Error);
}
