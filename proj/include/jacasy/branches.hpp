#pragma once

// Branch-cut primitives. Every multivalued function used by the expansions
// goes through here so that the cut placement is decided in one place:
//   phi(z) = z + (z^2-1)^{1/2}       cut on [-1,1]
//   acos(z)                          cuts on (-inf,-1] and [1,inf)
//   (1-z^2)^{1/2}, (1-z^2)^{1/4}     cuts on (-inf,-1] and [1,inf)
//   (z^2-1)^{1/2}                    cut on [-1,1], ~ z at infinity
// Points on a cut take an explicit Side to pick a boundary value.

#include <cmath>
#include <complex>
#include <numbers>

#include "jacasy/jet.hpp"

namespace jacasy {

/// Which boundary value to take when a point sits on a branch cut.
/// Principal means the limit from Im z > 0, the same value std:: functions
/// produce for a +0 imaginary part.
enum class Side { Principal, Above, Below };

constexpr Side flip(Side s) {
  return s == Side::Below ? Side::Above : Side::Below;
}

namespace detail {

inline bool on_real_axis(cplx w) { return w.imag() == 0.0; }

inline bool takes_below(Side s) { return s == Side::Below; }

}  // namespace detail

/// Argument of w in (-pi, pi]; on the negative real axis the side decides +-pi.
inline double sided_arg(cplx w, Side s) {
  if (detail::on_real_axis(w)) {
    if (w.real() < 0.0) return detail::takes_below(s) ? -std::numbers::pi : std::numbers::pi;
    return 0.0;
  }
  return std::arg(w);
}

/// Principal-branch w^p with the side choosing the value on the negative axis.
inline cplx sided_pow(cplx w, double p, Side s) {
  const double r = std::abs(w);
  if (r == 0.0) {
    if (p == 0.0) return 1.0;
    return p > 0.0 ? cplx(0.0) : cplx(INFINITY);
  }
  if (detail::on_real_axis(w) && w.real() > 0.0) return std::pow(w.real(), p);
  return std::polar(std::pow(r, p), p * sided_arg(w, s));
}

inline cplx sided_sqrt(cplx w, Side s) {
  if (detail::on_real_axis(w)) {
    const double a = std::sqrt(std::abs(w.real()));
    if (w.real() >= 0.0) return a;
    return detail::takes_below(s) ? cplx(0.0, -a) : cplx(0.0, a);
  }
  return std::sqrt(w);
}

inline cplx sided_log(cplx w, Side s) { return {std::log(std::abs(w)), sided_arg(w, s)}; }

/// (z^2-1)^{1/2}, analytic off [-1,1] and ~ z at infinity.
inline cplx sq_plus(cplx z, Side s = Side::Principal) {
  return sided_sqrt(z - 1.0, s) * sided_sqrt(z + 1.0, s);
}

/// (1-z^2)^{1/2}, positive on (-1,1).
inline cplx sq_minus(cplx z, Side s = Side::Principal) {
  return sided_sqrt(1.0 - z, flip(s)) * sided_sqrt(1.0 + z, s);
}

/// phi(z) = z + (z^2-1)^{1/2}; maps C\[-1,1] onto |w| > 1.
inline cplx phi(cplx z, Side s = Side::Principal) { return z + sq_plus(z, s); }

/// theta(z) = 1 if arg(z-1) > 0, else -1. On the real axis this is
/// -sgn(z-1) for Principal, with arg(0) = 0 so theta(1) = -1.
inline int theta(cplx z, Side s = Side::Principal) {
  if (z.imag() > 0.0) return 1;
  if (z.imag() < 0.0) return -1;
  if (s == Side::Above) return 1;
  if (s == Side::Below) return -1;
  return z.real() < 1.0 ? 1 : -1;
}

/// Arccosine with cuts on (-inf,-1] and [1,inf). On the cuts the Above
/// (resp. Below) limit is -+ i log((x^2-1)^{1/2}+x) for x >= 1 and
/// pi -+ i log((x^2-1)^{1/2}-x) for x <= -1.
inline cplx acos_cut(cplx z, Side s = Side::Principal) {
  if (detail::on_real_axis(z)) {
    const double x = z.real();
    const double sgn = detail::takes_below(s) ? 1.0 : -1.0;
    if (x > 1.0) return {0.0, sgn * std::acosh(x)};
    if (x < -1.0) return {std::numbers::pi, sgn * std::acosh(-x)};
    return std::acos(x);
  }
  return std::acos(z);
}

/// The four algebraic powers used by the expansions, on consistent branches.
struct AlgPowers {
  cplx sq_plus;   ///< (z^2-1)^{1/2}
  cplx sq_minus;  ///< (1-z^2)^{1/2}
  cplx q4_plus;   ///< (z^2-1)^{1/4} = (z-1)^{1/4}(z+1)^{1/4}
  cplx q4_minus;  ///< (1-z^2)^{1/4}
};

inline AlgPowers alg_powers(cplx z, Side s = Side::Principal) {
  return {
      sq_plus(z, s),
      sq_minus(z, s),
      sided_pow(z - 1.0, 0.25, s) * sided_pow(z + 1.0, 0.25, s),
      sided_pow(1.0 - z, 0.25, flip(s)) * sided_pow(1.0 + z, 0.25, s),
  };
}

/// Bernstein-ellipse parameter of z: |phi(z)|, equal to 1 on [-1,1].
inline double bernstein_rho(cplx z) { return std::abs(phi(z)); }

/// Point of E_rho at angle t.
inline cplx ellipse_point(double rho, double t) {
  const cplx e = std::polar(1.0, t);
  return 0.5 * rho * e + 0.5 / rho / e;
}

// Jet versions; the derivative is taken on the same branch as the value.

inline Jet sided_pow(const Jet& w, double p, Side s) {
  const cplx f = sided_pow(w.v, p, s);
  return chain(w, f, p * f / w.v);
}

inline Jet sided_log(const Jet& w, Side s) { return chain(w, sided_log(w.v, s), 1.0 / w.v); }

inline Jet sq_plus(const Jet& z, Side s = Side::Principal) {
  const cplx r = sq_plus(z.v, s);
  return chain(z, r, z.v / r);
}

inline Jet sq_minus(const Jet& z, Side s = Side::Principal) {
  const cplx r = sq_minus(z.v, s);
  return chain(z, r, -z.v / r);
}

inline Jet phi(const Jet& z, Side s = Side::Principal) {
  const cplx r = sq_plus(z.v, s);
  // phi' = phi / (z^2-1)^{1/2}
  return chain(z, z.v + r, (z.v + r) / r);
}

inline Jet acos_cut(const Jet& z, Side s = Side::Principal) {
  return chain(z, acos_cut(z.v, s), -1.0 / sq_minus(z.v, s));
}

}  // namespace jacasy
