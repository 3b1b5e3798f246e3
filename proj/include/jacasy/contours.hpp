#pragma once

// Scalar auxiliary data: D_inf, the Taylor coefficients c_n, d_n of
//   m(z) = (1/2 pi i) \oint log h(s) / ((s^2-1)^{1/2} (s - z)) ds
// at z = 1 and z = -1, and the phase psi(z). Entire log h uses residues at
// infinity; anything else uses the trapezoidal rule on a Bernstein ellipse.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "jacasy/branches.hpp"
#include "jacasy/errors.hpp"
#include "jacasy/series.hpp"
#include "jacasy/weights.hpp"

namespace jacasy {

struct ContourParams {
  double rho = 0.0;  ///< 0 selects default_rho()
  int M = 16;        ///< starting number of trapezoid points
  double tol = 1e-13;
  int Mmax = 1 << 14;
};

struct AuxData {
  double Dinf = 1.0;
  std::vector<cplx> cn;
  std::vector<cplx> dn;
  double rho_used = 0.0;
  int M_used = 0;
  bool exact = false;  ///< closed forms; cn/dn vanish beyond the stored length
};

/// Working ellipse: halfway, along the real axis, between [-1,1] and the
/// nearest singularity of log h.
inline double default_rho(const WeightSpec& w) {
  const double rmax = w.rho_max();
  if (!std::isfinite(rmax)) return 2.0;
  const double xmax = 0.5 * (rmax + 1.0 / rmax);
  const double xmid = 0.5 * (1.0 + xmax);
  return xmid + std::sqrt(xmid * xmid - 1.0);
}

inline double resolve_rho(const WeightSpec& w, const ContourParams& p) {
  const double rho = p.rho > 0.0 ? p.rho : default_rho(w);
  if (!(rho > 1.0)) throw Error(ErrorCode::InvalidArgument, "contour rho must exceed 1");
  if (rho >= w.rho_max()) throw Error(ErrorCode::OutsideAnalyticRegion, "contour rho exceeds the analyticity ellipse");
  return rho;
}

/// dz/dt on E_rho.
inline cplx ellipse_tangent(double rho, double t) {
  const cplx e = std::polar(1.0, t);
  return cplx(0.0, 0.5) * (rho * e - 1.0 / (rho * e));
}

/// (1/2 pi i) \oint_{E_rho} F with M equispaced nodes.
template <class F>
cplx trapezoid_ellipse(F&& f, double rho, int M) {
  if (M < 4) throw Error(ErrorCode::InvalidArgument, "trapezoid needs M >= 4");
  cplx s = 0.0;
  for (int k = 0; k < M; ++k) {
    const double t = 2.0 * std::numbers::pi * k / M;
    s += f(ellipse_point(rho, t)) * ellipse_tangent(rho, t);
  }
  return s / cplx(0.0, double(M));
}

struct DoublingResult {
  std::vector<cplx> values;
  int M_used = 0;
};

/// Vector-valued trapezoid with successive doubling. f(zeta, out) fills the
/// integrand values for all components.
template <class F>
DoublingResult trapezoid_doubling(F&& f, std::size_t size, double rho, const ContourParams& p) {
  auto run = [&](int M) {
    std::vector<cplx> acc(size, 0.0), buf(size);
    for (int k = 0; k < M; ++k) {
      const double t = 2.0 * std::numbers::pi * k / M;
      f(ellipse_point(rho, t), buf);
      const cplx jac = ellipse_tangent(rho, t);
      for (std::size_t i = 0; i < size; ++i) acc[i] += buf[i] * jac;
    }
    for (auto& a : acc) a /= cplx(0.0, double(M));
    return acc;
  };
  int M = std::max(4, p.M);
  std::vector<cplx> prev = run(M);
  double resid = 0.0;
  while (2 * M <= p.Mmax) {
    M *= 2;
    std::vector<cplx> cur = run(M);
    resid = 0.0;
    for (std::size_t i = 0; i < size; ++i)
      resid = std::max(resid, std::abs(cur[i] - prev[i]) / std::max(1.0, std::abs(cur[i])));
    prev = std::move(cur);
    if (resid < p.tol) return {std::move(prev), M};
  }
  std::ostringstream os;
  os << "trapezoid doubling did not converge: M=" << M << ", residual=" << resid;
  throw Error(ErrorCode::NoConvergence, os.str());
}

namespace detail {

// Closed-form c_n for h = exp(-c x^{2m}).
inline std::vector<cplx> exp_even_cn(const HExpEvenPower& e) {
  const int m2 = 2 * e.m;
  std::vector<cplx> c(m2);
  for (int n = 0; n < m2; ++n) {
    double s = 0.0;
    for (int j = 0; j <= (m2 - n - 1) / 2; ++j)
      s += binom(j - 0.5, j) * binom(m2 - 1 - 2 * j, m2 - n - 1 - 2 * j);
    c[n] = -e.c * s;
  }
  return c;
}

}  // namespace detail

/// c_0..c_{N-1} and d_0..d_{N-1}.
inline AuxData compute_cn_dn(const WeightSpec& w, std::size_t N, const ContourParams& p = {}) {
  AuxData a;
  a.cn.assign(N, 0.0);
  a.dn.assign(N, 0.0);
  const HSpec& h = w.h();
  if (w.is_entire_logh()) {
    a.exact = true;
    std::vector<cplx> c;
    if (const auto* e = std::get_if<HExpEvenPower>(&h)) c = detail::exp_even_cn(*e);
    if (const auto* l = std::get_if<HExpLinear>(&h)) c = {-l->t};
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (n < N) a.cn[n] = c[n];
      if (n < N) a.dn[n] = (n % 2 == 0 ? -1.0 : 1.0) * c[n];
    }
    if (const auto* l = std::get_if<HExpLinear>(&h)) {
      if (N > 0) a.dn[0] = -l->t;
    }
    // keep the full finite support even if N is small
    if (c.size() > N) {
      a.cn = c;
      a.dn.resize(c.size());
      for (std::size_t n = 0; n < c.size(); ++n) a.dn[n] = (n % 2 == 0 ? -1.0 : 1.0) * c[n];
      if (std::holds_alternative<HExpLinear>(h)) a.dn[0] = c[0];
    }
    return a;
  }
  const double rho = resolve_rho(w, p);
  check_positive_real_part(w, rho);
  auto integrand = [&](cplx z, std::vector<cplx>& out) {
    const cplx base = logh_unchecked(w, z) / sq_plus(z);
    const cplx ip = 1.0 / (z - 1.0), im = 1.0 / (z + 1.0);
    cplx fp = base * ip, fm = base * im;
    for (std::size_t n = 0; n < N; ++n) {
      out[n] = fp;
      out[N + n] = fm;
      fp *= ip;
      fm *= im;
    }
    out[2 * N] = base;
  };
  auto r = trapezoid_doubling(integrand, 2 * N + 1, rho, p);
  std::copy(r.values.begin(), r.values.begin() + N, a.cn.begin());
  std::copy(r.values.begin() + N, r.values.begin() + 2 * N, a.dn.begin());
  a.rho_used = rho;
  a.M_used = r.M_used;
  a.Dinf = std::pow(2.0, -0.5 * (w.alpha() + w.beta())) * std::exp(0.5 * r.values[2 * N].real());
  return a;
}

/// D_inf = lim D(z) at infinity.
inline double compute_Dinf(const WeightSpec& w, const ContourParams& p = {}) {
  const double base = std::pow(2.0, -0.5 * (w.alpha() + w.beta()));
  const HSpec& h = w.h();
  if (const auto* e = std::get_if<HExpEvenPower>(&h)) return base * std::exp(-0.5 * e->c * binom(e->m - 0.5, e->m));
  if (w.is_entire_logh()) return base;
  const double rho = resolve_rho(w, p);
  auto r = trapezoid_doubling(
      [&](cplx z, std::vector<cplx>& out) { out[0] = logh_unchecked(w, z) / sq_plus(z); }, 1, rho, p);
  return base * std::exp(0.5 * r.values[0].real());
}

/// All auxiliary data with N Taylor coefficients per endpoint.
inline AuxData compute_aux(const WeightSpec& w, std::size_t N, const ContourParams& p = {}) {
  AuxData a = compute_cn_dn(w, N, p);
  if (a.exact) a.Dinf = compute_Dinf(w, p);
  return a;
}

/// m(z) (and m'(z)) as a Cauchy sum over fixed ellipse nodes. For z outside
/// the ellipse the same sum gives the continuation m~(z) = m(z) - log h(z)/s(z)
/// whose contour does not enclose z. Entire log h uses the exact polynomial.
class MFunction {
 public:
  MFunction() = default;

  MFunction(const WeightSpec& w, const AuxData& aux, double rho = 0.0, int M = 256) {
    if (aux.exact) {
      poly_ = aux.cn;
      exact_ = true;
      return;
    }
    rho_ = rho > 0.0 ? rho : aux.rho_used;
    nodes_.resize(M);
    weights_.resize(M);
    for (int k = 0; k < M; ++k) {
      const double t = 2.0 * std::numbers::pi * k / M;
      const cplx z = ellipse_point(rho_, t);
      nodes_[k] = z;
      weights_[k] = logh_unchecked(w, z) / sq_plus(z) * ellipse_tangent(rho_, t) / cplx(0.0, double(M));
    }
  }

  bool exact() const { return exact_; }
  double rho() const { return rho_; }
  bool encloses(cplx z) const { return exact_ || bernstein_rho(z) < rho_; }

  /// M * |log(rho_z / rho)|: the trapezoid error is roughly exp(-gap).
  double gap(cplx z) const {
    if (exact_) return INFINITY;
    return nodes_.size() * std::abs(std::log(bernstein_rho(z) / rho_));
  }

  double min_distance(cplx z) const {
    double d = INFINITY;
    for (const auto& n : nodes_) d = std::min(d, std::abs(n - z));
    return d;
  }

  Jet operator()(const Jet& z) const {
    if (exact_) return poly_.empty() ? Jet(0.0) : horner(poly_, z - 1.0);
    cplx v = 0.0, d = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const cplx r = 1.0 / (nodes_[k] - z.v);
      v += weights_[k] * r;
      d += weights_[k] * r * r;
    }
    return chain(z, v, d);
  }
  cplx operator()(cplx z) const { return (*this)(Jet(z)).v; }

 private:
  bool exact_ = false;
  std::vector<cplx> poly_;
  double rho_ = 0.0;
  std::vector<cplx> nodes_;
  std::vector<cplx> weights_;
};

/// psi(z) = (alpha+beta)/2 acos z - alpha pi/2 + (1-z^2)^{1/2} m(z)/2.
inline Jet psi_jet(const WeightSpec& w, const Jet& z, const Jet& mz, Side side = Side::Principal) {
  return 0.5 * (w.alpha() + w.beta()) * acos_cut(z, side) - 0.5 * w.alpha() * std::numbers::pi +
         0.5 * sq_minus(z, side) * mz;
}

/// psi(z) for z inside the contour. The ellipse grows (up to rho_max) when
/// z sits too close to it.
inline cplx compute_psi(const WeightSpec& w, cplx z, const AuxData& aux, const ContourParams& p = {},
                        Side side = Side::Principal) {
  if (aux.exact) return psi_jet(w, Jet(z), MFunction(w, aux)(Jet(z)), side).v;
  double rho = aux.rho_used;
  const double rz = bernstein_rho(z);
  int M = 256;
  auto too_close = [&](double r) {
    if (rz >= r) return true;
    const MFunction probe(w, aux, r, 64);
    return probe.min_distance(z) < 0.05;
  };
  if (too_close(rho)) {
    const double grown = 0.5 * (rz + w.rho_max());
    if (!std::isfinite(grown) || grown >= w.rho_max() || too_close(grown))
      throw Error(ErrorCode::ContourTooClose, "z is too close to the contour and rho cannot grow");
    rho = grown;
  }
  // enough nodes for the Cauchy sum to resolve z
  const double need = 40.0 / std::log(rho / rz);
  while (M < need && M < p.Mmax) M *= 2;
  return psi_jet(w, Jet(z), MFunction(w, aux, rho, M)(Jet(z)), side).v;
}

/// psi near an endpoint: psi = constant + sigma (-2 sigma v)^{1/2} sum coeffs[n] v^n.
struct PsiEndpointSeries {
  int sigma = 1;
  double constant = 0.0;
  std::vector<cplx> coeffs;

  cplx operator()(cplx z) const {
    const cplx v = z - double(sigma);
    return constant + double(sigma) * std::sqrt(-2.0 * sigma * v) * (coeffs.empty() ? cplx(0.0) : horner(coeffs, v));
  }
};

inline PsiEndpointSeries psi_series_endpoint(const WeightSpec& w, const AuxData& aux, int endpoint, std::size_t order) {
  const int sigma = endpoint >= 0 ? 1 : -1;
  const auto& e = sigma > 0 ? aux.cn : aux.dn;
  if (!aux.exact && order >= e.size())
    throw Error(ErrorCode::InsufficientCoefficients, "not enough Taylor coefficients of m for this order");
  const auto f = logphi_f(sigma, order + 1);
  const double gamma = w.alpha() + w.beta();
  PsiEndpointSeries s;
  s.sigma = sigma;
  s.constant = sigma > 0 ? -0.5 * w.alpha() * std::numbers::pi : 0.5 * w.beta() * std::numbers::pi;
  s.coeffs.assign(order + 1, 0.0);
  for (std::size_t n = 0; n <= order; ++n) {
    cplx r = gamma * f[n];
    for (std::size_t j = 0; j <= n; ++j) {
      const cplx en = (n - j) < e.size() ? e[n - j] : cplx(0.0);
      r += double(sigma) * binom(0.5, int(j)) * std::pow(2.0 * sigma, -double(j)) * en;
    }
    s.coeffs[n] = 0.5 * r;
  }
  return s;
}

}  // namespace jacasy
