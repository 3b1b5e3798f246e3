#pragma once

// Higher-order correction data for R(z) = I + sum_k R_k(z)/n^k.
//
// Per endpoint (sigma = +1 right, -1 left, v = z - sigma):
//   s_k(z) ~ sum_{m >= -ceil(k/2)} W_{k,m} v^m        (Laurent data of the jumps)
//   R_k^O(z) = sum_m U^R_{k,m}/(z-1)^m + U^L_{k,m}/(z+1)^m
//   R_k^disk(z) ~ sum_n Q_{k,n} v^n
// W comes from explicit power series (no symbolic algebra); U and Q from the
// simplified jump relation. All stored matrices are already conjugated by
// D_inf^{sigma_3}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "jacasy/branches.hpp"
#include "jacasy/contours.hpp"
#include "jacasy/errors.hpp"
#include "jacasy/mat2.hpp"
#include "jacasy/series.hpp"

namespace jacasy {

inline int ceil_half(int k) { return (k + 1) / 2; }

/// (q, m) = prod_{n=1}^m (4q^2 - (2n-1)^2) / (4^m m!)
inline double bracket(double q, int m) {
  double p = 1.0;
  for (int n = 1; n <= m; ++n) p *= (4.0 * q * q - (2.0 * n - 1.0) * (2.0 * n - 1.0)) / (4.0 * n);
  return p;
}

/// log(sigma phi)^{-k} = (2 sigma v)^{-k/2} sum_n g[k][n] v^n, with the f_n of
/// log(sigma phi) = (2 sigma v)^{1/2} sum f_n v^n.
struct LogPhiSeries {
  int sigma = 1;
  std::vector<double> f;
  std::vector<std::vector<double>> g;  // g[0] = delta
};

inline LogPhiSeries logphi_series(int sigma, int T, std::size_t NS) {
  LogPhiSeries s;
  s.sigma = sigma;
  s.f = logphi_f(sigma, NS);
  s.g.assign(T + 1, std::vector<double>(NS, 0.0));
  s.g[0][0] = 1.0;
  if (T == 0) return s;
  auto& g1 = s.g[1];
  g1[0] = 1.0;
  for (std::size_t n = 1; n < NS; ++n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += g1[j] * s.f[n - j];
    g1[n] = -acc;
  }
  for (int k = 2; k <= T; ++k) s.g[k] = convolve(s.g[k - 1], g1, NS);
  return s;
}

/// y_gamma^k = (-i)^k (2 sigma v)^{k/2} sum_n rho[k][n] v^n for k = 0..K, where
/// y_gamma = -i gamma log(sigma phi) - i (z^2-1)^{1/2} m(z). e holds c_n (right)
/// or d_n (left).
inline std::vector<std::vector<cplx>> rho_series(const std::vector<cplx>& e, double gamma, int K, int sigma,
                                                 std::size_t NS, bool exact = false) {
  if (!exact && e.size() < NS)
    throw Error(ErrorCode::InsufficientCoefficients, "rho_series needs " + std::to_string(NS) + " coefficients of m");
  const auto f = logphi_f(sigma, NS);
  std::vector<cplx> r1(NS);
  for (std::size_t n = 0; n < NS; ++n) {
    cplx acc = gamma * f[n];
    for (std::size_t j = 0; j <= n; ++j)
      if (n - j < e.size()) acc += double(sigma) * binom(0.5, int(j)) * std::pow(2.0 * sigma, -double(j)) * e[n - j];
    r1[n] = acc;
  }
  std::vector<std::vector<cplx>> rho(K + 1, std::vector<cplx>(NS, 0.0));
  rho[0][0] = 1.0;
  if (K >= 1) rho[1] = r1;
  for (int k = 2; k <= K; ++k) rho[k] = convolve(rho[k - 1], r1, NS);
  return rho;
}

namespace detail {

// Series of cos(y_gamma)/(z^2-1)^{1/2} and sin(y_gamma)/(z^2-1)^{1/2}, up to the
// endpoint-dependent prefactors absorbed into the G matrices.
struct TrigSeries {
  std::vector<cplx> C;
  std::vector<cplx> S;
};

inline TrigSeries trig_series(const std::vector<cplx>& e, double gamma, int sigma, std::size_t NS, bool exact) {
  const auto rho = rho_series(e, gamma, int(2 * NS + 1), sigma, NS, exact);
  std::vector<cplx> Ho(NS, 0.0), He(NS, 0.0);
  for (std::size_t n = 0; n < NS; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      const double p = std::pow(2.0 * sigma, double(j));
      Ho[n] += p * rho[2 * j][n - j] / factorial(int(2 * j));
      He[n] += p * rho[2 * j + 1][n - j] / factorial(int(2 * j + 1));
    }
  }
  std::vector<cplx> B(NS);
  for (std::size_t j = 0; j < NS; ++j) B[j] = binom(-0.5, int(j)) * std::pow(2.0 * sigma, -double(j));
  return {convolve(B, Ho, NS), convolve(B, He, NS)};
}

}  // namespace detail

/// Inputs shared by every order k at one endpoint.
struct EndpointSeries {
  int sigma = 1;
  double q = 0.0;  ///< alpha at the right endpoint, beta at the left
  std::size_t NS = 0;
  LogPhiSeries logphi;
  std::vector<double> B, Z;
  detail::TrigSeries trig[3];  ///< gamma = alpha+beta-1, alpha+beta, alpha+beta+1

  const detail::TrigSeries& at(int shift) const { return trig[shift + 1]; }
};

inline EndpointSeries endpoint_series(double alpha, double beta, const AuxData& aux, int sigma, int T,
                                      std::size_t NS) {
  EndpointSeries s;
  s.sigma = sigma;
  s.q = sigma > 0 ? alpha : beta;
  s.NS = NS;
  s.logphi = logphi_series(sigma, T, NS);
  s.B.resize(NS);
  s.Z.resize(NS);
  for (std::size_t n = 0; n < NS; ++n) {
    s.B[n] = binom(-0.5, int(n)) * std::pow(2.0 * sigma, -double(n));
    s.Z[n] = (2.0 * n + 1.0) * binom(n - 1.5, int(n)) * std::pow(-2.0 * sigma, -double(n));
  }
  const auto& e = sigma > 0 ? aux.cn : aux.dn;
  for (int d = -1; d <= 1; ++d) s.trig[d + 1] = detail::trig_series(e, alpha + beta + d, sigma, NS, aux.exact);
  return s;
}

/// Taylor coefficient matrices of (2 sigma v)^{1/2} G_k(z) (odd k) or G_k(z)
/// (even k) around the endpoint; without the D_inf conjugation.
inline std::vector<Mat2> G_matrices(const EndpointSeries& s, int k) {
  const double a = (s.q * s.q + 0.5 * k - 0.25) / k;
  const double sg = s.sigma;
  const cplx b(0.0, -sg * (k - 0.5));
  const cplx I(0.0, 1.0);
  const auto& C0 = s.at(0);
  const auto& Cp = s.at(1);
  const auto& Cm = s.at(-1);
  std::vector<Mat2> G(s.NS);
  for (std::size_t n = 0; n < s.NS; ++n) {
    if (k % 2) {
      G[n] = {-a * s.Z[n] + I * b * sg * C0.C[n], I * a * sg * s.B[n] + b * Cp.C[n],
              I * a * sg * s.B[n] + b * Cm.C[n], a * s.Z[n] - I * b * sg * C0.C[n]};
    } else {
      const double dn = n == 0 ? a : 0.0;
      G[n] = {dn + I * b * sg * C0.S[n], b * Cp.S[n], b * Cm.S[n], dn - I * b * sg * C0.S[n]};
    }
  }
  return G;
}

/// Laurent coefficients W_{k,m}, m = -ceil(k/2) .. NS-1-ceil(k/2), conjugated by D.
inline std::vector<Mat2> W_coeffs(const EndpointSeries& s, int k, double Dinf) {
  const auto G = G_matrices(s, k);
  const int h = ceil_half(k);
  const double pre = bracket(s.q, k - 1) * std::pow(2.0, -k) * std::pow(2.0 * s.sigma, -h);
  const auto& g = s.logphi.g[k];
  std::vector<Mat2> W(s.NS);
  for (std::size_t idx = 0; idx < s.NS; ++idx) {
    Mat2 M = Mat2::zero();
    for (std::size_t j = 0; j <= idx; ++j) M += g[j] * G[idx - j];
    if (k % 2 == 0) M -= ((4.0 * s.q * s.q + 2.0 * k - 1.0) / (2.0 * k) * g[idx]) * Mat2::identity();
    W[idx] = conj_sigma3(M * pre, Dinf);
  }
  return W;
}

/// Coefficient tables for one endpoint.
struct EndpointCoeffs {
  int sigma = 1;
  std::vector<std::vector<Mat2>> W;  ///< W[k][m + ceil(k/2)]
  std::vector<std::vector<Mat2>> U;  ///< U[k][m], 1 <= m <= ceil(k/2); U[k][0] unused
  std::vector<std::vector<Mat2>> Q;  ///< Q[k][n], 0 <= n <= n_max

  Mat2 w(int k, int m) const {
    const int idx = m + ceil_half(k);
    if (idx < 0 || idx >= int(W[k].size())) return Mat2::zero();
    return W[k][idx];
  }
  Mat2 u(int k, int m) const {
    if (m < 1 || m > ceil_half(k)) return Mat2::zero();
    return U[k][m];
  }
};

struct CoeffTable {
  int T = 0;      ///< orders 1..T stored
  int n_max = 0;  ///< Q[k][n] for n <= n_max
  double alpha = 0.0, beta = 0.0, Dinf = 1.0;
  EndpointCoeffs right, left;
  LogPhiSeries logphi_right, logphi_left;

  const EndpointCoeffs& at(int sigma) const { return sigma > 0 ? right : left; }
};

namespace detail {

// Taylor coefficients at endpoint sigma of the part of R_k^O that is regular
// there: sum_i U^{-sigma}_{k,i} (z + sigma)^{-i}.
inline Mat2 regular_part(const EndpointCoeffs& other, int k, int n, int sigma) {
  Mat2 r = Mat2::zero();
  for (int i = 1; i <= ceil_half(k); ++i)
    r += (pochhammer(1.0 - i - n, n) / (factorial(n) * std::pow(2.0 * sigma, double(i + n)))) * other.u(k, i);
  return r;
}

// Laurent coefficient p of R_j^O at endpoint sigma (R_0^O = I).
inline Mat2 outer_laurent(const EndpointCoeffs& same, const EndpointCoeffs& other, int j, int p, int sigma) {
  if (j == 0) return p == 0 ? Mat2::identity() : Mat2::zero();
  if (p < 0) return same.u(j, -p);
  return regular_part(other, j, p, sigma);
}

}  // namespace detail

/// U_{k,m} for both endpoints from the W tables, in increasing k.
inline void U_from_W(EndpointCoeffs& right, EndpointCoeffs& left, int T) {
  for (auto* e : {&right, &left}) e->U.assign(T + 1, {});
  for (int k = 1; k <= T; ++k) {
    for (auto* es : {&right, &left}) {
      EndpointCoeffs& s = *es;
      const EndpointCoeffs& o = es == &right ? left : right;
      const int sigma = s.sigma;
      s.U[k].assign(ceil_half(k) + 1, Mat2::zero());
      for (int m = 1; m <= ceil_half(k); ++m) {
        Mat2 X = s.w(k, -m);
        for (int j = 1; j < k; ++j) {
          for (int l = std::max(m - ceil_half(j), 1); l <= ceil_half(k - j); ++l) X += s.u(k - j, l) * s.w(j, l - m);
          for (int n = 0; n <= ceil_half(j) - m; ++n) {
            Mat2 reg = Mat2::zero();
            for (int i = 1; i <= ceil_half(k - j); ++i)
              reg += (pochhammer(1.0 - i - n, n) / std::pow(2.0 * sigma, double(i))) * o.u(k - j, i);
            X += (reg * s.w(j, -n - m)) * (1.0 / (std::pow(2.0 * sigma, double(n)) * factorial(n)));
          }
        }
        s.U[k][m] = X;
      }
    }
  }
}

/// Q_{k,n}: Taylor coefficients of R_k^disk = R_k^O - sum_j R_{k-j}^O s_j.
inline Mat2 Q_from_U_W(const EndpointCoeffs& same, const EndpointCoeffs& other, int k, int n) {
  const int sigma = same.sigma;
  Mat2 Q = detail::regular_part(other, k, n, sigma);
  for (int j = 1; j <= k; ++j) {
    const int pmin = -ceil_half(k - j);
    const int pmax = n + ceil_half(j);
    for (int p = pmin; p <= pmax; ++p) Q -= detail::outer_laurent(same, other, k - j, p, sigma) * same.w(j, n - p);
  }
  return Q;
}

/// Number of series terms needed for orders <= T and Q up to n_max.
inline std::size_t series_length(int T, int n_max) { return std::size_t(n_max + 2 * T + 4); }

inline CoeffTable build_coeff_table(double alpha, double beta, const AuxData& aux, int T, int n_max) {
  if (T < 0) throw Error(ErrorCode::InvalidArgument, "number of terms must be >= 0");
  CoeffTable t;
  t.T = T;
  t.n_max = n_max;
  t.alpha = alpha;
  t.beta = beta;
  t.Dinf = aux.Dinf;
  const std::size_t NS = series_length(T, n_max);
  t.right.sigma = 1;
  t.left.sigma = -1;
  for (EndpointCoeffs* e : {&t.right, &t.left}) {
    const auto s = endpoint_series(alpha, beta, aux, e->sigma, std::max(T, 1), NS);
    (e->sigma > 0 ? t.logphi_right : t.logphi_left) = s.logphi;
    e->W.assign(T + 1, {});
    for (int k = 1; k <= T; ++k) e->W[k] = W_coeffs(s, k, aux.Dinf);
  }
  U_from_W(t.right, t.left, T);
  for (EndpointCoeffs* e : {&t.right, &t.left}) {
    const EndpointCoeffs& o = e == &t.right ? t.left : t.right;
    e->Q.assign(T + 1, {});
    for (int k = 1; k <= T; ++k)
      for (int n = 0; n <= n_max; ++n) e->Q[k].push_back(Q_from_U_W(*e, o, k, n));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Direct (non-series) evaluation of Delta_k and s_k at a point.

/// Scalars needed at z: log(sigma phi), (z^2-1)^{1/2}, m(z).
struct JumpPoint {
  int sigma = 1;
  Jet z;
  Jet log_sphi;
  Jet s;
  Jet m;
};

inline JumpPoint jump_point(const Jet& z, int sigma, const Jet& mz, Side side = Side::Principal) {
  JumpPoint p;
  p.sigma = sigma;
  p.z = z;
  const Jet f = phi(z, side) * double(sigma);
  p.log_sphi = chain(f, std::log(f.v), 1.0 / f.v);
  p.s = sq_plus(z, side);
  p.m = mz;
  return p;
}

/// Delta_k(z) at one endpoint, conjugated by D.
inline Mat2J delta_direct(const JumpPoint& p, double alpha, double beta, double Dinf, int k) {
  const double q = p.sigma > 0 ? alpha : beta;
  const double a = (q * q + 0.5 * k - 0.25) / k;
  const double sg = p.sigma;
  const cplx b(0.0, -sg * (k - 0.5));
  const cplx I(0.0, 1.0);
  auto y = [&](double gamma) { return -I * (gamma * p.log_sphi + p.s * p.m); };
  const double g = alpha + beta;
  Mat2J G;
  if (k % 2) {
    const Jet c0 = cos(y(g)), cp = cos(y(g + 1)), cm = cos(y(g - 1));
    G = {(-a * p.z + I * b * c0) / p.s, (I * a + b * sg * cp) / p.s, (I * a + b * sg * cm) / p.s,
         (a * p.z - I * b * c0) / p.s};
  } else {
    const Jet s0 = sin(y(g)), sp = sin(y(g + 1)), sm = sin(y(g - 1));
    const Jet bs = b / p.s;
    G = {a - bs * s0, I * sg * bs * sp, I * sg * bs * sm, a + bs * s0};
  }
  Jet pre = Jet(bracket(q, k - 1));
  const Jet l2 = 2.0 * p.log_sphi;
  for (int i = 0; i < k; ++i) pre = pre / l2;
  return conj_sigma3(G * pre, Dinf);
}

/// s_k(z) = Delta_k(z), minus a multiple of I for even k.
inline Mat2J s_direct(const JumpPoint& p, double alpha, double beta, double Dinf, int k) {
  Mat2J d = delta_direct(p, alpha, beta, Dinf, k);
  if (k % 2 == 0) {
    const double q = p.sigma > 0 ? alpha : beta;
    Jet c = Jet((4.0 * q * q + 2.0 * k - 1.0) * bracket(q, k - 1) / (std::pow(2.0, k + 1) * k));
    for (int i = 0; i < k; ++i) c = c / p.log_sphi;
    d.a[0] -= c;
    d.a[3] -= c;
  }
  return d;
}

/// R_k^O(z) for k = 1..K from the U tables.
inline std::vector<Mat2J> outer_terms(const CoeffTable& t, const Jet& z, int K) {
  std::vector<Mat2J> R(K + 1, Mat2J::zero());
  const Jet ir = 1.0 / (z - 1.0), il = 1.0 / (z + 1.0);
  for (int k = 1; k <= K; ++k) {
    Jet pr = ir, pl = il;
    for (int m = 1; m <= ceil_half(k); ++m) {
      R[k] += scale(t.right.u(k, m), pr) + scale(t.left.u(k, m), pl);
      pr = pr * ir;
      pl = pl * il;
    }
  }
  return R;
}

/// Jump-relation check: residual of R_k^O = R_k^disk + sum_j R_{k-j}^disk Delta_j
/// on a ring around each endpoint, with R^disk from the Q tables and Delta
/// evaluated directly. Returns the largest residual over both endpoints.
inline double crosscheck_jump(const CoeffTable& t, const MFunction& m, int T_small, double radius = 0.1,
                              int points = 16) {
  double worst = 0.0;
  for (int sigma : {1, -1}) {
    const EndpointCoeffs& e = t.at(sigma);
    for (int i = 0; i < points; ++i) {
      const cplx v = std::polar(radius, 2.0 * std::numbers::pi * (i + 0.5) / points);
      const Jet z(double(sigma) + v);
      const JumpPoint p = jump_point(z, sigma, m(z));
      const auto RO = outer_terms(t, z, T_small);
      std::vector<Mat2> Rd(T_small + 1, Mat2::zero());
      Rd[0] = Mat2::identity();
      for (int k = 1; k <= T_small; ++k) Rd[k] = horner(e.Q[k], v);
      for (int k = 1; k <= T_small; ++k) {
        Mat2 rhs = Rd[k];
        for (int j = 1; j <= k; ++j) rhs += Rd[k - j] * values(delta_direct(p, t.alpha, t.beta, t.Dinf, j));
        worst = std::max(worst, max_abs(values(RO[k]) - rhs));
      }
    }
  }
  return worst;
}

}  // namespace jacasy
