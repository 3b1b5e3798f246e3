#pragma once

// Gauss rules for w = (1-x)^a (1+x)^b h(x) in O(n): Newton's method on the
// asymptotic evaluators, started from the leading-order zeros (cosine phase
// in the interior, Bessel zeros near the endpoints).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "jacasy/bessel.hpp"
#include "jacasy/eval.hpp"
#include "jacasy/oracle.hpp"
#include "jacasy/quad_rule.hpp"

namespace jacasy {

struct QuadOptions {
  int max_iterations = 20;
  double tolerance = 1e-14;  ///< on the Newton step |pi_n / pi_n'|
  int fallback_below = 20;   ///< n below this uses Golub-Welsch on oracle coefficients
};

namespace detail {

/// Angles theta_k (x_k = cos theta_k), k = 1..n, of the leading-order zeros.
inline std::vector<double> initial_angles(const Engine& e, int n) {
  const double a = e.spec().alpha(), b = e.spec().beta(), pi = std::numbers::pi;
  const double N = n + 0.5 * (a + b + 1.0);
  auto mreal = [&](double x) { return e.m_inside(Jet(cplx(x))).v.real(); };
  // interior: lambda_1(theta) = (k - 1/2) pi, fixed point in the h-term
  std::vector<double> th(n);
  for (int k = 1; k <= n; ++k) {
    const double target = (k - 0.5) * pi + 0.5 * a * pi + 0.25 * pi;
    double t = target / N;
    for (int it = 0; it < 4; ++it) {
      const double tc = std::clamp(t, 1e-3, pi - 1e-3);
      t = (target - 0.5 * std::sin(tc) * mreal(std::cos(tc))) / N;
    }
    th[k - 1] = std::clamp(t, 0.0, pi);
  }
  // hard edges: J_a((n + c_1) theta) = 0 near +1, J_b likewise near -1
  const int kb = std::min(10, n / 2);
  const double cr = N + 0.5 * mreal(1.0), cl = N - 0.5 * mreal(-1.0);
  for (int k = 1; k <= kb; ++k) {
    const double tr = besselj_zero(a, k) / cr;
    if (tr < 0.3) th[k - 1] = tr;
    const double tl = besselj_zero(b, k) / cl;
    if (tl < 0.3) th[n - k] = pi - tl;
  }
  return th;
}

}  // namespace detail

/// n-point Gauss rule for the engine's weight.
inline QuadRule gauss_rule(const Engine& e, int n, const QuadOptions& q = {}) {
  if (n < 1) throw Error(ErrorCode::InvalidDegree, "n must be >= 1");
  if (n < q.fallback_below) {
    const WeightSpec& w = e.spec();
    return golub_welsch(w.trivial_h() ? jacobi_recurrence(w.alpha(), w.beta(), n) : stieltjes(w, n), n);
  }
  const std::vector<double> th = detail::initial_angles(e, n);
  const double log_ratio = e.log_gamma_ratio(n);
  QuadRule rule;
  rule.n = n;
  rule.method = "newton";
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    double x = std::cos(th[k]), dx = INFINITY;
    auto step = [&](double at, double& logp) {
      const auto [v, d] = e.eval_with_derivative(n, at);
      logp = v.log_abs();
      return (v.scaled / d.scaled).real();
    };
    double logp = 0.0, r = step(x, logp);
    int it = 0;
    for (; it < q.max_iterations && std::abs(r) > q.tolerance; ++it) {
      double h = r, xn = 0.0, logn = 0.0, rn = 0.0;
      // halve the step while the residual grows or the iterate leaves (-1, 1)
      for (int damp = 0; damp < 30; ++damp, h *= 0.5) {
        xn = x - h;
        if (std::abs(xn) >= 1.0) continue;
        rn = step(xn, logn);
        if (logn <= logp + 1e-12 || damp == 29) break;
      }
      dx = std::abs(x - xn);
      x = xn, r = rn, logp = logn;
      if (dx <= q.tolerance) break;
    }
    const double res = std::min(std::abs(r), dx);
    if (!(res <= q.tolerance) && !(it < q.max_iterations))
      throw Error(ErrorCode::NewtonStall, "Newton did not converge for node " + std::to_string(k + 1) + " of " +
                                              std::to_string(n) + " (last step " + std::to_string(res) + ")");
    rule.max_residual = std::max(rule.max_residual, res);
    // the last (quadratically small) correction still matters: near +-1 the
    // weight formula amplifies node errors by ~n^2 / (1 - |x|)
    x -= r;
    // lambda_k = (gamma_n / gamma_{n-1}) / (p_{n-1}(x_k) p_n'(x_k)) for orthonormal
    // p, written as the confluent Christoffel-Darboux kernel, which is smooth
    // in x: p_{n-1} p_n' alone moves by ~n^2 dx at the rounded node
    const auto [v, d] = e.eval_with_derivative(n, x, {}, true);
    const auto [p, pd] = e.eval_with_derivative(n - 1, x, {}, true);
    const double s = (d.scaled * p.scaled - pd.scaled * v.scaled).real();
    if (!(s > 0.0)) throw Error(ErrorCode::NoConvergence, "non-positive Gauss weight at node " + std::to_string(k + 1));
    // the kernel still carries pi_n'(x) at the rounded node; move it to the
    // exact root x + delta using the endpoint-singular part of pi_n''/pi_n'
    const double a = e.spec().alpha(), b = e.spec().beta();
    const double delta = -(v.scaled / d.scaled).real();
    const double curv = (a + 1.0) / (1.0 - x) - (b + 1.0) / (1.0 + x);
    rule.nodes[n - 1 - k] = x;
    rule.weights[n - 1 - k] = std::exp(log_ratio - p.log_scale - v.log_scale - std::log(s)) * (1.0 - curv * delta);
  }
  for (int k = 0; k + 1 < n; ++k) {
    const double gap0 = std::cos(th[n - 2 - k]) - std::cos(th[n - 1 - k]);
    if (!(rule.nodes[k + 1] - rule.nodes[k] > 1e-3 * std::abs(gap0)))
      throw Error(ErrorCode::DuplicateRoot, "nodes " + std::to_string(k + 1) + " and " + std::to_string(k + 2) +
                                                " converged together");
  }
  return rule;
}

/// Largest |sum_k w_k x_k^j - mu_j| over j = 0..degree.
inline double moments_check(const QuadRule& rule, const WeightSpec& w, int degree) {
  if (degree < 0 || degree > 2 * rule.n - 1) throw Error(ErrorCode::InvalidArgument, "degree must be in [0, 2n-1]");
  double err = 0.0;
  for (int j = 0; j <= degree; ++j) {
    double s = 0.0;
    for (int k = 0; k < rule.n; ++k) s += rule.weights[k] * std::pow(rule.nodes[k], j);
    err = std::max(err, std::abs(s - moment(w, j)));
  }
  return err;
}

struct TimingReport {
  std::vector<int> n;
  std::vector<double> rule_seconds;  ///< one gauss_rule call
  std::vector<double> eval_seconds;  ///< mean per point of eval_monic
  double rule_exponent = 0.0;        ///< least-squares slope of log time vs log n
  double eval_ratio = 0.0;           ///< eval time at the largest n over the smallest
};

namespace detail {

inline double loglog_slope(const std::vector<int>& n, const std::vector<double>& t) {
  const int m = int(n.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    const double x = std::log(double(n[i])), y = std::log(t[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

template <class F>
double best_of(int reps, F&& f) {
  double best = INFINITY;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace detail

/// Wall time of gauss_rule and of single evaluations over a list of degrees.
inline TimingReport timing_profile(const Engine& e, const std::vector<int>& n_list, int eval_points = 400) {
  if (n_list.size() < 2) throw Error(ErrorCode::InvalidArgument, "timing_profile needs at least two degrees");
  TimingReport rep;
  rep.n = n_list;
  volatile double sink = 0.0;
  for (int n : n_list) {
    rep.rule_seconds.push_back(detail::best_of(n <= 1000 ? 3 : 1, [&] { sink = sink + gauss_rule(e, n).nodes[0]; }));
    const double t = detail::best_of(3, [&] {
      for (int i = 0; i < eval_points; ++i) sink = sink + e.eval_monic(n, -0.999 + 1.998 * (i + 0.5) / eval_points).scaled.real();
    });
    rep.eval_seconds.push_back(t / eval_points);
  }
  rep.rule_exponent = detail::loglog_slope(rep.n, rep.rule_seconds);
  rep.eval_ratio = rep.eval_seconds.back() / rep.eval_seconds.front();
  return rep;
}

}  // namespace jacasy
