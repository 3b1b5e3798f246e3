#pragma once

// Reference machinery that does not use the asymptotic expansions:
// recurrence coefficients by a discretised Stieltjes procedure on a
// Gauss-Jacobi base rule, polynomial values by forward recurrence and
// Gauss rules by the Golub-Welsch eigenvalue method. O(n^2) and slow on
// purpose-simple; used by tests and the small-n quadrature fallback.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "jacasy/errors.hpp"
#include "jacasy/quad_rule.hpp"
#include "jacasy/weights.hpp"

namespace jacasy {

/// Monic recurrence x pi_k = pi_{k+1} + a_k pi_k + b_k pi_{k-1}; b[0] = mu_0.
struct RecurrenceTable {
  std::vector<double> alpha_rec;
  std::vector<double> beta_rec;
  double mu0 = 0.0;
  int size() const { return int(alpha_rec.size()); }
};

/// Classical Jacobi coefficients for (1-x)^a (1+x)^b, k = 0..n-1.
inline RecurrenceTable jacobi_recurrence(double a, double b, int n) {
  RecurrenceTable t;
  t.alpha_rec.resize(n);
  t.beta_rec.resize(n);
  const double ab = a + b;
  t.mu0 = std::exp((ab + 1.0) * std::log(2.0) + boost::math::lgamma(a + 1.0) + boost::math::lgamma(b + 1.0) -
                   boost::math::lgamma(ab + 2.0));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    // a_0 = (b-a)/(a+b+2) is the k = 0 case, but a + b = 0 makes s = 0
    t.alpha_rec[k] = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (k == 0) {
      t.beta_rec[k] = t.mu0;
    } else if (k == 1) {
      t.beta_rec[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      t.beta_rec[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  return t;
}

namespace detail {

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
/// d: diagonal (eigenvalues on return); e: sub-diagonal, e[i] couples i and
/// i+1. z: on return the first component of each normalised eigenvector.
inline void tridiagonal_eigen(std::vector<double>& d, std::vector<double> e, std::vector<double>& z) {
  const int n = int(d.size());
  z.assign(n, 0.0);
  if (n == 0) return;
  z[0] = 1.0;
  e.resize(n, 0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-17 * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw Error(ErrorCode::EigenFailure, "QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? r : -r));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

/// n-point Gauss rule of the measure described by the table.
inline QuadRule golub_welsch(const RecurrenceTable& t, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidDegree, "n must be >= 1");
  if (n > t.size()) throw Error(ErrorCode::DegreeExceedsTable, "rule size exceeds the recurrence table");
  std::vector<double> d(t.alpha_rec.begin(), t.alpha_rec.begin() + n), e(n - 1), z;
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(t.beta_rec[k]);
  detail::tridiagonal_eigen(d, e, z);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
  QuadRule r;
  r.n = n;
  r.method = "golub-welsch";
  for (int i : idx) {
    r.nodes.push_back(d[i]);
    r.weights.push_back(t.mu0 * z[i] * z[i]);
  }
  return r;
}

inline QuadRule gauss_jacobi(double a, double b, int n) { return golub_welsch(jacobi_recurrence(a, b, n), n); }

namespace detail {

// Orthonormal Stieltjes procedure on a discrete measure (x_j, w_j).
inline RecurrenceTable discrete_stieltjes(const std::vector<double>& x, const std::vector<double>& w, int n) {
  const std::size_t N = x.size();
  RecurrenceTable t;
  t.alpha_rec.resize(n);
  t.beta_rec.resize(n);
  t.mu0 = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> p(N, 1.0 / std::sqrt(t.mu0)), pm(N, 0.0);
  double sb = 0.0;  // sqrt(beta_k)
  for (int k = 0; k < n; ++k) {
    double a = 0.0;
    for (std::size_t j = 0; j < N; ++j) a += w[j] * x[j] * p[j] * p[j];
    t.alpha_rec[k] = a;
    t.beta_rec[k] = k == 0 ? t.mu0 : sb * sb;
    if (k + 1 == n) break;
    double nrm = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      const double q = (x[j] - a) * p[j] - sb * pm[j];
      pm[j] = p[j];
      p[j] = q;
      nrm += w[j] * q * q;
    }
    sb = std::sqrt(nrm);
    for (auto& v : p) v /= sb;
  }
  return t;
}

}  // namespace detail

/// Recurrence coefficients k = 0..n_max of w = (1-x)^a (1+x)^b h(x).
/// The base Gauss-Jacobi rule is doubled until the last coefficients agree.
inline RecurrenceTable stieltjes(const WeightSpec& w, int n_max, double tol = 1e-13) {
  if (n_max < 0 || n_max > 2000) throw Error(ErrorCode::InvalidArgument, "n_max must be in [0, 2000]");
  const int n = n_max + 1;
  if (w.trivial_h()) return jacobi_recurrence(w.alpha(), w.beta(), n);
  RecurrenceTable prev;
  for (int N = std::max(2 * n, 64); N <= 32768; N *= 2) {
    const QuadRule base = gauss_jacobi(w.alpha(), w.beta(), N);
    std::vector<double> wh(N);
    for (int j = 0; j < N; ++j) wh[j] = base.weights[j] * std::exp(logh_unchecked(w, base.nodes[j]).real());
    RecurrenceTable cur = detail::discrete_stieltjes(base.nodes, wh, n);
    if (prev.size() == n) {
      // the highest coefficients are the last to be resolved by the base rule;
      // lower ones then agree to roundoff (~1e-13 at n ~ 1000)
      const int k = n - 1;
      const double diff = std::max(std::abs(cur.alpha_rec[k] - prev.alpha_rec[k]),
                                   std::abs(cur.beta_rec[k] - prev.beta_rec[k]) / cur.beta_rec[k]);
      if (diff <= tol) return cur;
    }
    prev = std::move(cur);
  }
  throw Error(ErrorCode::NoConvergence, "Stieltjes discretisation did not stabilise");
}

/// Value with a separate exponent: value = scaled * exp(log_scale).
template <class T>
struct ScaledValue {
  T scaled{};
  T deriv{};  ///< derivative, same scale
  double log_scale = 0.0;
  T value() const { return scaled * std::exp(log_scale); }
  T derivative() const { return deriv * std::exp(log_scale); }
};

/// pi_n(x) (monic) or p_n(x) (orthonormal) and its derivative by forward
/// recurrence, rescaled as it goes so that no intermediate over/underflows.
template <class T>
ScaledValue<T> eval_recurrence_scaled(const RecurrenceTable& t, int n, T x, bool orthonormal = false) {
  if (n < 0) throw Error(ErrorCode::InvalidDegree, "n must be >= 0");
  if (n > t.size()) throw Error(ErrorCode::DegreeExceedsTable, "degree exceeds table");
  T p0 = orthonormal ? T(1.0 / std::sqrt(t.mu0)) : T(1.0), pm = T(0.0);
  T d0 = T(0.0), dm = T(0.0);
  double ls = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = t.alpha_rec[k];
    const double b = k == 0 ? 0.0 : t.beta_rec[k];
    T p1, d1;
    if (orthonormal) {
      const double sb = std::sqrt(b);
      const double sn = std::sqrt(t.beta_rec.size() > std::size_t(k + 1) ? t.beta_rec[k + 1] : 0.0);
      if (!(sn > 0.0)) throw Error(ErrorCode::DegreeExceedsTable, "orthonormal recurrence needs beta_{n}");
      p1 = ((x - a) * p0 - sb * pm) / sn;
      d1 = (p0 + (x - a) * d0 - sb * dm) / sn;
    } else {
      p1 = (x - a) * p0 - b * pm;
      d1 = p0 + (x - a) * d0 - b * dm;
    }
    pm = p0;
    p0 = p1;
    dm = d0;
    d0 = d1;
    const double m = std::max(std::abs(p0), std::abs(pm));
    if (m > 1e100 || (m < 1e-100 && m > 0.0)) {
      const double s = std::log(m);
      p0 /= m;
      pm /= m;
      d0 /= m;
      dm /= m;
      ls += s;
    }
  }
  return {p0, d0, ls};
}

template <class T>
T eval_recurrence(const RecurrenceTable& t, int n, T x, bool orthonormal = false) {
  return eval_recurrence_scaled(t, n, x, orthonormal).value();
}

/// Leading coefficient of p_n: prod_{k<=n} beta_k^{-1/2}, as a log.
inline double log_gamma_recurrence(const RecurrenceTable& t, int n) {
  if (n >= t.size()) throw Error(ErrorCode::DegreeExceedsTable, "degree exceeds table");
  double s = -0.5 * std::log(t.mu0);
  for (int k = 1; k <= n; ++k) s -= 0.5 * std::log(t.beta_rec[k]);
  return s;
}

/// int x^j w(x) dx from Gauss-Jacobi base rules of increasing size.
inline double moment(const WeightSpec& w, int j, double tol = 1e-14) {
  double prev = NAN;
  for (int N = std::max(64, j + 32); N <= 16384; N *= 2) {
    const QuadRule base = gauss_jacobi(w.alpha(), w.beta(), N);
    double s = 0.0;
    for (int k = 0; k < N; ++k)
      s += base.weights[k] * std::pow(base.nodes[k], j) * std::exp(logh_unchecked(w, base.nodes[k]).real());
    if (std::abs(s - prev) <= tol * std::max(1.0, std::abs(s))) return s;
    prev = s;
  }
  throw Error(ErrorCode::NoConvergence, "moment quadrature did not stabilise");
}

}  // namespace jacasy
