#pragma once

// Built-in consistency suites: closed-form golden coefficients, branch-cut
// identities on a fixed grid, and Chebyshev exactness.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "jacasy/branches.hpp"
#include "jacasy/coeffs.hpp"
#include "jacasy/contours.hpp"
#include "jacasy/eval.hpp"
#include "jacasy/golden.hpp"

namespace jacasy {

struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int checks = 0;
  std::string worst;  ///< description of the largest residual
  bool passed() const { return max_residual <= tolerance; }
};

struct SelfcheckOptions {
  double perturb_u = 0.0;  ///< added to the computed U_{1,1}^right(0,0); for fault-injection tests
};

namespace detail {

inline void record(SuiteResult& r, double res, const std::string& what) {
  ++r.checks;
  if (!(res <= r.max_residual)) {
    r.max_residual = std::isnan(res) ? INFINITY : res;
    r.worst = what;
  }
}

}  // namespace detail

/// U_{k,m}, k <= 4, both endpoints, from the W recursion against the closed
/// forms, with c_0, c_1, d_0, d_1 of the Toda and exp(-7x^4) presets. The
/// residual is the largest absolute entry error of D^{-s3} U D^{s3}.
inline SuiteResult check_golden(const SelfcheckOptions& o = {}) {
  SuiteResult r{"golden-U", 0.0, 1e-12, 0, ""};
  const double pairs[][2] = {{0, 0}, {-0.5, 0}, {0.3, -0.7}, {2.5, 0}, {-0.9, -0.9}, {1, 1}};
  for (const auto& ab : pairs) {
    for (const HSpec& h : {HSpec(HExpLinear{2.0}), HSpec(HExpEvenPower{7.0, 2})}) {
      const WeightSpec w(ab[0], ab[1], h);
      const AuxData aux = compute_aux(w, series_length(4, 2));
      CoeffTable t = build_coeff_table(w.alpha(), w.beta(), aux, 4, 2);
      t.right.U[1][1](0, 0) += o.perturb_u;
      const double c0 = aux.cn[0].real(), c1 = aux.cn[1].real(), d0 = aux.dn[0].real(), d1 = aux.dn[1].real();
      for (const auto& [key, U] : golden::closed_form_U({ab[0], ab[1], c0, d0, c1, d1, aux.Dinf})) {
        const auto [sigma, k, m] = key;
        std::ostringstream what;
        what << "U(" << (sigma > 0 ? "right" : "left") << ",k=" << k << ",m=" << m << ") for " << to_string(w);
        // compared without the common D_inf^{sigma_3} similarity, which scales
        // off-diagonal entries (and their rounding) by D_inf^{+-2}
        detail::record(r, max_abs(conj_sigma3(t.at(sigma).u(k, m) - U, 1.0 / aux.Dinf)), what.str());
      }
    }
  }
  return r;
}

/// |phi| > 1, conjugate symmetry and exp(i theta arccos z) = phi(z) on a grid.
inline SuiteResult check_branches() {
  SuiteResult r{"branch-cuts", 0.0, 1e-13, 0, ""};
  for (int i = -40; i <= 40; ++i)
    for (int j = -40; j <= 40; ++j) {
      const cplx z(0.25 * i + 0.01, 0.25 * j + (j == 0 ? 1e-3 : 0.0));
      const cplx f = phi(z);
      std::ostringstream what;
      what << "z=" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
      detail::record(r, std::abs(f) > 1.0 ? 0.0 : 1.0, "|phi|<=1 at " + what.str());
      detail::record(r, std::abs(phi(std::conj(z)) - std::conj(f)) / std::abs(f), "conjugate symmetry at " + what.str());
      detail::record(r, std::abs(std::exp(cplx(0, theta(z)) * acos_cut(z)) - f) / std::abs(f), "exp(i theta acos) at " + what.str());
    }
  return r;
}

/// One-term lens evaluation of monic Chebyshev polynomials, n = 1..50,
/// against T_n(x) / 2^{n-1} at 100 interior points.
inline SuiteResult check_chebyshev() {
  SuiteResult r{"chebyshev", 0.0, 1e-13, 0, ""};
  EngineOptions o;
  o.T = 1;
  const Engine e(WeightSpec(-0.5, -0.5), o);
  for (int n = 1; n <= 50; ++n)
    for (int i = 0; i < 100; ++i) {
      const double x = -1.0 + 2.0 * (i + 0.5) / 100;
      const double ref = std::cos(n * std::acos(x)) * std::ldexp(1.0, 1 - n);
      const EvalResult v = e.eval_monic(n, x, RegionTag::Lens);
      // relative to the envelope 2^{1-n}: the closed form has roots
      const double res = std::abs(v.value.real() - ref) / std::ldexp(1.0, 1 - n);
      std::ostringstream what;
      what << "n=" << n << " x=" << x;
      detail::record(r, res, what.str());
    }
  return r;
}

inline std::vector<SuiteResult> selfcheck(const SelfcheckOptions& o = {}) {
  return {check_golden(o), check_branches(), check_chebyshev()};
}

}  // namespace jacasy
