#pragma once

// 2x2 matrices over complex numbers (or Jets) for the Riemann-Hilbert
// corrections.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "jacasy/jet.hpp"

namespace jacasy {

template <class T>
struct Mat2T {
  std::array<T, 4> a{};  // row major: a11 a12 a21 a22

  constexpr Mat2T() = default;
  constexpr Mat2T(T x11, T x12, T x21, T x22) : a{x11, x12, x21, x22} {}

  static Mat2T identity() { return {T(1.0), T(0.0), T(0.0), T(1.0)}; }
  static Mat2T zero() { return {T(0.0), T(0.0), T(0.0), T(0.0)}; }

  T& operator()(int i, int j) { return a[2 * i + j]; }
  const T& operator()(int i, int j) const { return a[2 * i + j]; }

  Mat2T& operator+=(const Mat2T& o) {
    for (int i = 0; i < 4; ++i) a[i] += o.a[i];
    return *this;
  }
  Mat2T& operator-=(const Mat2T& o) {
    for (int i = 0; i < 4; ++i) a[i] -= o.a[i];
    return *this;
  }
  template <class S>
  Mat2T& operator*=(const S& s) {
    for (auto& x : a) x = x * s;
    return *this;
  }
};

using Mat2 = Mat2T<cplx>;
using Mat2J = Mat2T<Jet>;

template <class T>
Mat2T<T> operator+(Mat2T<T> x, const Mat2T<T>& y) { return x += y; }
template <class T>
Mat2T<T> operator-(Mat2T<T> x, const Mat2T<T>& y) { return x -= y; }
template <class T>
Mat2T<T> operator-(const Mat2T<T>& x) { return Mat2T<T>::zero() - x; }

template <class T>
Mat2T<T> operator*(const Mat2T<T>& x, const Mat2T<T>& y) {
  return {x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0), x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
          x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0), x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1)};
}

template <class T>
Mat2T<T> operator*(Mat2T<T> x, cplx s) { return x *= s; }
template <class T>
Mat2T<T> operator*(cplx s, Mat2T<T> x) { return x *= s; }
template <class T>
Mat2T<T> operator*(Mat2T<T> x, double s) { return x *= s; }
template <class T>
Mat2T<T> operator*(double s, Mat2T<T> x) { return x *= s; }
inline Mat2J operator*(Mat2J x, const Jet& s) { return x *= s; }
inline Mat2J operator*(const Jet& s, Mat2J x) { return x *= s; }

/// Constant matrix times a scalar Jet.
inline Mat2J scale(const Mat2& m, const Jet& s) {
  return {m.a[0] * s, m.a[1] * s, m.a[2] * s, m.a[3] * s};
}

inline Mat2J lift(const Mat2& m) { return {Jet(m.a[0]), Jet(m.a[1]), Jet(m.a[2]), Jet(m.a[3])}; }

inline Mat2 values(const Mat2J& m) { return {m.a[0].v, m.a[1].v, m.a[2].v, m.a[3].v}; }

template <class T>
T det(const Mat2T<T>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

template <class T>
Mat2T<T> inverse(const Mat2T<T>& m) {
  const T d = det(m);
  return {m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d};
}

/// d^{sigma3} M d^{-sigma3}.
template <class T>
Mat2T<T> conj_sigma3(const Mat2T<T>& m, cplx d) {
  return {m(0, 0), m(0, 1) * (d * d), m(1, 0) / (d * d), m(1, 1)};
}

/// Largest entry modulus.
inline double max_abs(const Mat2& m) {
  double r = 0.0;
  for (const auto& x : m.a) r = std::max(r, std::abs(x));
  return r;
}

}  // namespace jacasy
