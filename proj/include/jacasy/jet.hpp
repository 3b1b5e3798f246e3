#pragma once

// Forward-mode derivative carrier over complex numbers. The evaluators are
// written once against Jet so that values and z-derivatives come out of the
// same expression tree.

#include <cmath>
#include <complex>

namespace jacasy {

using cplx = std::complex<double>;

struct Jet {
  cplx v{};
  cplx d{};

  constexpr Jet() = default;
  constexpr Jet(cplx value, cplx deriv = {}) : v(value), d(deriv) {}
  constexpr Jet(double value) : v(value), d(0.0) {}

  static Jet variable(cplx z) { return {z, 1.0}; }

  Jet& operator+=(const Jet& o) { v += o.v; d += o.d; return *this; }
  Jet& operator-=(const Jet& o) { v -= o.v; d -= o.d; return *this; }
  Jet& operator*=(const Jet& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Jet& operator/=(const Jet& o) {
    const cplx q = v / o.v;
    d = (d - q * o.d) / o.v;
    v = q;
    return *this;
  }
};

inline Jet operator-(const Jet& a) { return {-a.v, -a.d}; }
inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }
inline Jet operator+(Jet a, cplx b) { a.v += b; return a; }
inline Jet operator+(cplx b, Jet a) { a.v += b; return a; }
inline Jet operator-(Jet a, cplx b) { a.v -= b; return a; }
inline Jet operator-(cplx b, const Jet& a) { return {b - a.v, -a.d}; }
inline Jet operator*(Jet a, cplx b) { a.v *= b; a.d *= b; return a; }
inline Jet operator*(cplx b, Jet a) { a.v *= b; a.d *= b; return a; }
inline Jet operator/(Jet a, cplx b) { a.v /= b; a.d /= b; return a; }
inline Jet operator/(cplx b, const Jet& a) {
  const cplx q = b / a.v;
  return {q, -q * a.d / a.v};
}
inline Jet operator+(Jet a, double b) { return a + cplx(b); }
inline Jet operator+(double b, Jet a) { return a + cplx(b); }
inline Jet operator-(Jet a, double b) { return a - cplx(b); }
inline Jet operator-(double b, const Jet& a) { return cplx(b) - a; }
inline Jet operator*(Jet a, double b) { a.v *= b; a.d *= b; return a; }
inline Jet operator*(double b, Jet a) { a.v *= b; a.d *= b; return a; }
inline Jet operator/(Jet a, double b) { a.v /= b; a.d /= b; return a; }
inline Jet operator/(double b, const Jet& a) { return cplx(b) / a; }

/// Applies a scalar function with known derivative: f(a) and f'(a.v).
inline Jet chain(const Jet& a, cplx fv, cplx dfv) { return {fv, dfv * a.d}; }

inline Jet exp(const Jet& a) {
  const cplx e = std::exp(a.v);
  return chain(a, e, e);
}
inline Jet sin(const Jet& a) { return chain(a, std::sin(a.v), std::cos(a.v)); }
inline Jet cos(const Jet& a) { return chain(a, std::cos(a.v), -std::sin(a.v)); }

/// sin(a)/a, analytic at 0.
inline Jet sinc(const Jet& a) {
  const cplx x = a.v;
  if (std::abs(x) < 1e-4) {
    const cplx x2 = x * x;
    return chain(a, 1.0 - x2 / 6.0 + x2 * x2 / 120.0, -x / 3.0 + x * x2 / 30.0);
  }
  const cplx s = std::sin(x) / x;
  return chain(a, s, (std::cos(x) - s) / x);
}

/// x / (2 sin(x/2)), analytic at 0.
inline Jet half_angle_ratio(const Jet& a) {
  const cplx x = a.v;
  if (std::abs(x) < 1e-4) {
    const cplx x2 = x * x;
    return chain(a, 1.0 + x2 / 24.0 + 7.0 * x2 * x2 / 5760.0, x / 12.0 + 7.0 * x * x2 / 1440.0);
  }
  const cplx s = std::sin(0.5 * x);
  const cplx r = x / (2.0 * s);
  return chain(a, r, (1.0 - r * std::cos(0.5 * x)) / (2.0 * s));
}

/// Principal power of a base that stays off the negative real axis.
inline Jet pow(const Jet& a, double p) {
  const cplx f = std::pow(a.v, p);
  return chain(a, f, p * f / a.v);
}

/// Natural log with an explicit imaginary part for the value: useful when
/// the caller tracks the branch itself.
inline Jet log_with_arg(const Jet& a, double arg) {
  return chain(a, cplx(std::log(std::abs(a.v)), arg), 1.0 / a.v);
}

}  // namespace jacasy
