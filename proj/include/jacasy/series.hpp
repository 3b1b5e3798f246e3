#pragma once

// Truncated power-series helpers shared by the contour and coefficient code.

#include <complex>
#include <cstddef>
#include <vector>

#include "jacasy/jet.hpp"

namespace jacasy {

/// Generalised binomial coefficient binom(x, k) for integer k >= 0.
inline double binom(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (x - i) / (i + 1);
  return r;
}

/// Pochhammer symbol (x)_k.
inline double pochhammer(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x + i;
  return r;
}

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Cauchy product of two series truncated to n terms.
template <class T>
std::vector<T> convolve(const std::vector<T>& a, const std::vector<T>& b, std::size_t n) {
  std::vector<T> r(n, T{});
  for (std::size_t i = 0; i < n && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// Coefficients f_n with log(sigma*phi(z)) = (2 sigma v)^{1/2} sum f_n v^n,
/// v = z - sigma, sigma = +1 (right endpoint) or -1 (left endpoint).
inline std::vector<double> logphi_f(int sigma, std::size_t n) {
  std::vector<double> f(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int ik = static_cast<int>(k);
    double p = 1.0;
    for (int i = 0; i < ik; ++i) p *= (-2.0 * sigma);
    f[k] = pochhammer(0.5, ik) / (p * factorial(ik) * (2.0 * ik + 1.0));
  }
  return f;
}

/// Evaluates sum c_n x^n by Horner's rule; c must be non-empty.
template <class T, class X>
auto horner(const std::vector<T>& c, const X& x) {
  using R = decltype(c[0] * x);
  R r = R(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) r = r * x + c[i];
  return r;
}

}  // namespace jacasy
