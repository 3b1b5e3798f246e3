#pragma once

// Bessel functions of real order nu > -1.
//
// Real arguments are delegated to Boost.Math. Complex arguments (disk points
// off the real line) use the ascending series near 0, Miller's backward
// recurrence in the middle range and the
// Hankel expansion for large |u|.
//
// The disk formulas need J only through the entire, even functions
//   Jhat_nu(u) = J_nu(u) (u/2)^{-nu} = sum_k (-u^2/4)^k / (k! Gamma(nu+k+1))
// so that is what the complex routines return.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "jacasy/errors.hpp"
#include "jacasy/jet.hpp"

namespace jacasy {

namespace detail {

inline void check_order(double nu) {
  if (!(nu > -1.0) || !std::isfinite(nu)) throw Error(ErrorCode::DomainError, "Bessel order must be > -1");
}

}  // namespace detail

/// J_nu(x) for x >= 0, nu > -1.
inline double besselj(double nu, double x) {
  detail::check_order(nu);
  if (!(x >= 0.0)) throw Error(ErrorCode::DomainError, "besselj needs x >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : INFINITY);
  return boost::math::cyl_bessel_j(nu, x);
}

/// J_nu'(x) = (nu/x) J_nu(x) - J_{nu+1}(x), x > 0.
inline double besselj_prime(double nu, double x) {
  detail::check_order(nu);
  if (!(x > 0.0)) throw Error(ErrorCode::DomainError, "besselj_prime needs x > 0");
  return nu / x * besselj(nu, x) - besselj(nu + 1.0, x);
}

/// k-th positive zero of J_nu.
inline double besselj_zero(double nu, int k) {
  detail::check_order(nu);
  if (k < 1) throw Error(ErrorCode::DomainError, "zero index must be >= 1");
  return boost::math::cyl_bessel_j_zero(nu, k);
}

namespace detail {

// sum_k (-u^2/4)^k / (k! Gamma(nu+k+1)) for nu, nu+1, nu+2.
inline std::array<cplx, 3> jhat_series(double nu, cplx u) {
  std::array<cplx, 3> out{};
  const cplx w = -0.25 * u * u;
  for (int j = 0; j < 3; ++j) {
    const double mu = nu + j;
    cplx term = 1.0 / boost::math::tgamma(mu + 1.0);
    cplx sum = term;
    for (int k = 1; k < 200; ++k) {
      term *= w / (double(k) * (mu + k));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    out[j] = sum;
  }
  return out;
}

// Miller's algorithm: backward recurrence from a high order, normalised by
//   e^{isu} (u/2)^nu = Gamma(nu) sum_k (nu+k) (is)^k (2nu)_k/k! J_{nu+k}(u)
// with s = -sign(Im u), so the left side has the same size as the terms.
inline std::array<cplx, 3> jhat_miller(double nu, cplx u, double shift) {
  const int N = 2 * (int(std::abs(u)) + 30) + 2 * int(std::abs(nu));
  const cplx is{0.0, u.imag() > 0.0 ? -1.0 : 1.0};
  // Gamma(nu+1) c_k with c_0 = 1, c_k = 2 (nu+k) (2nu+1)_{k-1} / k! (is)^k
  std::vector<cplx> c{1.0};
  double ratio = 1.0;  // (2nu+1)_{k-1} / k!
  cplx isk = 1.0;
  for (int k = 1; k <= N; ++k) {
    ratio /= k;
    isk *= is;
    c.push_back(2.0 * (nu + k) * ratio * isk);
    ratio *= 2.0 * nu + k;
  }
  cplx fp1 = 0.0, f = 1e-300, norm = 0.0;
  std::array<cplx, 3> top{};
  for (int j = N; j >= 0; --j) {
    if (j <= 2) top[j] = f;
    norm += c[j] * f;
    if (j == 0) break;
    const cplx fm1 = 2.0 * (nu + j) / u * f - fp1;
    fp1 = f;
    f = fm1;
    if (std::abs(f) > 1e250) {
      f *= 1e-250;
      fp1 *= 1e-250;
      norm *= 1e-250;
      for (auto& t : top) t *= 1e-250;
    }
  }
  const cplx e = std::exp(is * u - shift) / (norm * boost::math::tgamma(nu + 1.0));
  const cplx h = 0.5 * u;
  return {top[0] * e, top[1] * e / h, top[2] * e / (h * h)};
}

// Hankel expansion of J_mu for large |u|, |arg u| < pi, times e^{-shift}.
inline cplx j_hankel(double mu, cplx u, double shift) {
  const double m4 = 4.0 * mu * mu;
  cplx P = 1.0, Q = 0.0, term = 1.0;
  const cplx inv8u = 1.0 / (8.0 * u);
  double last = INFINITY;
  for (int k = 1; k < 60; ++k) {
    term *= (m4 - (2.0 * k - 1) * (2.0 * k - 1)) / double(k) * inv8u;
    const double mag = std::abs(term);
    if (mag > last) break;  // asymptotic series: stop at the smallest term
    last = mag;
    switch (k % 4) {
      case 1: Q += term; break;
      case 2: P -= term; break;
      case 3: Q -= term; break;
      default: P += term; break;
    }
    if (mag < 1e-17) break;
  }
  const cplx om = u - (0.5 * mu + 0.25) * std::numbers::pi;
  // P cos(om) - Q sin(om), with the exponentials scaled before they can overflow
  const cplx I(0.0, 1.0);
  const cplx c = 0.5 * ((P + I * Q) * std::exp(I * om - shift) + (P - I * Q) * std::exp(-I * om - shift));
  return std::sqrt(2.0 / (std::numbers::pi * u)) * c;
}

}  // namespace detail

/// Jhat_nu, Jhat_{nu+1}, Jhat_{nu+2} at u (Re u >= 0). With scaled = true
/// the values carry an extra factor e^{-|Im u|}, which keeps them O(1).
inline std::array<cplx, 3> reduced_bessel_triple(double nu, cplx u, bool scaled = false) {
  detail::check_order(nu);
  const double shift = scaled ? std::abs(u.imag()) : 0.0;
  const double au = std::abs(u);
  if (au < 1.0) {
    auto out = detail::jhat_series(nu, u);
    for (auto& x : out) x *= std::exp(-shift);
    return out;
  }
  if (u.imag() == 0.0 && u.real() > 0.0) {
    std::array<cplx, 3> out{};
    for (int j = 0; j < 3; ++j)
      out[j] = besselj(nu + j, u.real()) * std::pow(0.5 * u.real(), -(nu + j));
    return out;
  }
  if (au <= 200.0) return detail::jhat_miller(nu, u, shift);
  std::array<cplx, 3> out{};
  for (int j = 0; j < 3; ++j) out[j] = detail::j_hankel(nu + j, u, shift) * std::pow(0.5 * u, -(nu + j));
  return out;
}

/// J_nu(u) for complex u with Re u >= 0 (principal branch of (u/2)^nu).
inline cplx besselj(double nu, cplx u) {
  if (u.imag() == 0.0 && u.real() >= 0.0) return besselj(nu, u.real());
  return reduced_bessel_triple(nu, u)[0] * std::pow(0.5 * u, nu);
}

/// The pair used by the disk formulas, as functions of u:
///   Jhat(u) = J_nu(u) (u/2)^{-nu},  K(u) = u J_nu'(u) (u/2)^{-nu}.
/// With scaled = true both carry the factor e^{-log_scale}, log_scale = |Im u|.
struct ReducedBessel {
  Jet jhat;
  Jet k;
  double log_scale = 0.0;
};

inline ReducedBessel reduced_bessel(double nu, const Jet& u, bool scaled = false) {
  const auto t = reduced_bessel_triple(nu, u.v, scaled);
  const cplx x = u.v;
  const cplx j0 = t[0], j1 = t[1], j2 = t[2];
  const cplx K = nu * j0 - 0.5 * x * x * j1;
  const cplx dJ = -0.5 * x * j1;
  const cplx dK = -0.5 * nu * x * j1 - x * j1 + 0.25 * x * x * x * j2;
  return {chain(u, j0, dJ), chain(u, K, dK), scaled ? std::abs(x.imag()) : 0.0};
}

}  // namespace jacasy
