#pragma once

// Jacobi-type weights w(x) = (1-x)^alpha (1+x)^beta h(x) with h drawn from a
// small grammar whose logarithm can be continued exactly into the plane.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "jacasy/branches.hpp"
#include "jacasy/errors.hpp"

namespace jacasy {

inline constexpr double kRhoInfinity = std::numeric_limits<double>::infinity();

struct HOne {};

/// h(x) = exp(-c x^{2m})
struct HExpEvenPower {
  double c = 0.0;
  int m = 1;
};

/// h(x) = exp(-t x)
struct HExpLinear {
  double t = 0.0;
};

/// One factor (x - root)^exponent of a LinearFactors weight.
struct LinearFactor {
  cplx root;
  double exponent = 0.0;
};

/// h(x) = scale * prod |x - r_j|^{p_j}, continued off the real line as
/// scale * prod (|r_j| (1 - x/r_j))^{p_j}. Non-real roots must come in
/// conjugate pairs with equal exponents so that h is real on [-1,1].
struct HLinearFactors {
  std::vector<LinearFactor> factors;
  double scale = 1.0;
};

/// User-supplied analytic log h with a user-asserted region of analyticity.
struct HGeneric {
  std::function<cplx(cplx)> logh;
  std::function<cplx(cplx)> dlogh;  ///< optional; finite differences if empty
  double rho_max = kRhoInfinity;
  bool even = false;
  std::string label = "generic";
};

using HSpec = std::variant<HOne, HExpEvenPower, HExpLinear, HLinearFactors, HGeneric>;

class WeightSpec {
 public:
  WeightSpec() = default;
  WeightSpec(double alpha, double beta, HSpec h = HOne{}) : alpha_(alpha), beta_(beta), h_(std::move(h)) {
    if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
      throw Error(ErrorCode::InvalidArgument, "alpha and beta must be finite and > -1");
    validate();
  }

  static WeightSpec jacobi(double alpha, double beta) { return {alpha, beta}; }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const HSpec& h() const { return h_; }
  /// Largest Bernstein parameter inside which log h is analytic.
  double rho_max() const { return rho_max_; }
  /// h(-x) = h(x).
  bool even_h() const { return even_; }
  bool is_entire_logh() const {
    return std::holds_alternative<HOne>(h_) || std::holds_alternative<HExpEvenPower>(h_) ||
           std::holds_alternative<HExpLinear>(h_);
  }
  bool trivial_h() const { return std::holds_alternative<HOne>(h_); }

 private:
  void validate();

  double alpha_ = 0.0;
  double beta_ = 0.0;
  HSpec h_ = HOne{};
  double rho_max_ = kRhoInfinity;
  bool even_ = true;
};

inline bool is_entire_logh(const WeightSpec& w) { return w.is_entire_logh(); }

namespace detail {

inline double root_rho(cplx r) { return std::abs(r + sq_plus(r)); }

// log(1 - z/r) with the principal branch; the cut is the ray from r away
// from the origin, which stays outside E_rho for rho < rho(r).
inline cplx log_factor(cplx z, cplx r) { return std::log(1.0 - z / r); }

}  // namespace detail

inline void WeightSpec::validate() {
  if (const auto* e = std::get_if<HExpEvenPower>(&h_)) {
    if (e->m < 1) throw Error(ErrorCode::InvalidArgument, "ExpEvenPower needs m >= 1");
    if (!std::isfinite(e->c)) throw Error(ErrorCode::InvalidArgument, "non-finite c");
  } else if (const auto* l = std::get_if<HExpLinear>(&h_)) {
    if (!std::isfinite(l->t)) throw Error(ErrorCode::InvalidArgument, "non-finite t");
    even_ = l->t == 0.0;
  } else if (const auto* f = std::get_if<HLinearFactors>(&h_)) {
    if (!(f->scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "LinearFactors scale must be > 0");
    rho_max_ = kRhoInfinity;
    for (const auto& fac : f->factors) {
      const cplx r = fac.root;
      if (r.imag() == 0.0 && std::abs(r.real()) <= 1.0)
        throw Error(ErrorCode::InvalidArgument, "LinearFactors root lies on [-1,1]");
      if (!std::isfinite(fac.exponent)) throw Error(ErrorCode::InvalidArgument, "non-finite exponent");
      rho_max_ = std::min(rho_max_, detail::root_rho(r));
      if (r.imag() != 0.0) {
        bool paired = false;
        for (const auto& g : f->factors)
          if (g.root == std::conj(r) && g.exponent == fac.exponent) paired = true;
        if (!paired)
          throw Error(ErrorCode::InvalidArgument, "complex LinearFactors roots need conjugate partners");
      }
    }
    even_ = true;
    for (const auto& fac : f->factors) {
      bool mirrored = false;
      for (const auto& g : f->factors)
        if (std::abs(g.root + fac.root) < 1e-15 * std::abs(fac.root) && g.exponent == fac.exponent)
          mirrored = true;
      even_ = even_ && mirrored;
    }
  } else if (const auto* g = std::get_if<HGeneric>(&h_)) {
    if (!g->logh) throw Error(ErrorCode::InvalidArgument, "Generic weight needs a log h function");
    if (!(g->rho_max > 1.0)) throw Error(ErrorCode::InvalidArgument, "Generic rho_max must exceed 1");
    rho_max_ = g->rho_max;
    even_ = g->even;
  }
}

/// log h(z) and its derivative, without the region check.
inline Jet logh_jet_unchecked(const WeightSpec& w, const Jet& z) {
  const HSpec& h = w.h();
  if (std::holds_alternative<HOne>(h)) return Jet(0.0);
  if (const auto* e = std::get_if<HExpEvenPower>(&h)) {
    const cplx zm = std::pow(z.v, 2 * e->m - 1);
    return chain(z, -e->c * zm * z.v, -e->c * double(2 * e->m) * zm);
  }
  if (const auto* l = std::get_if<HExpLinear>(&h)) return -l->t * z;
  if (const auto* f = std::get_if<HLinearFactors>(&h)) {
    cplx v = std::log(f->scale);
    cplx d = 0.0;
    for (const auto& fac : f->factors) {
      v += fac.exponent * (std::log(std::abs(fac.root)) + detail::log_factor(z.v, fac.root));
      d += fac.exponent / (z.v - fac.root);
    }
    // conjugate pairs contribute a real total on the real line
    if (z.v.imag() == 0.0) v.imag(0.0);
    return chain(z, v, d);
  }
  const auto& g = std::get<HGeneric>(h);
  const cplx v = g.logh(z.v);
  cplx d;
  if (g.dlogh) {
    d = g.dlogh(z.v);
  } else {
    const double step = 1e-5;
    d = (g.logh(z.v + step) - g.logh(z.v - step) + cplx(0, 1) * (g.logh(z.v - cplx(0, step)) - g.logh(z.v + cplx(0, step)))) /
        (4.0 * step);
  }
  return chain(z, v, d);
}

inline cplx logh_unchecked(const WeightSpec& w, cplx z) { return logh_jet_unchecked(w, Jet(z)).v; }

/// Analytic continuation of log h from [-1,1]; z must lie inside E_{rho_max}.
inline cplx eval_logh(const WeightSpec& w, cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorCode::InvalidArgument, "non-finite z");
  if (std::isfinite(w.rho_max()) && bernstein_rho(z) >= w.rho_max())
    throw Error(ErrorCode::OutsideAnalyticRegion, "z lies outside the analyticity ellipse of log h");
  return logh_unchecked(w, z);
}

inline cplx eval_h(const WeightSpec& w, cplx z) { return std::exp(eval_logh(w, z)); }

/// (1-z)^alpha (1+z)^beta h(z) with the endpoint powers on the given side.
inline cplx eval_w(const WeightSpec& w, cplx z, Side side = Side::Principal) {
  if ((z == cplx(1.0) && w.alpha() < 0.0) || (z == cplx(-1.0) && w.beta() < 0.0))
    throw Error(ErrorCode::PoleAtEndpoint, "weight is singular at this endpoint");
  return sided_pow(1.0 - z, w.alpha(), flip(side)) * sided_pow(1.0 + z, w.beta(), side) *
         std::exp(eval_logh(w, z));
}

/// Throws unless Re h > 0 on 256 points of E_rho.
inline void check_positive_real_part(const WeightSpec& w, double rho) {
  if (w.trivial_h()) return;
  for (int k = 0; k < 256; ++k) {
    const cplx z = ellipse_point(rho, 2.0 * std::numbers::pi * k / 256.0);
    const cplx hz = std::exp(logh_unchecked(w, z));
    if (!(hz.real() > 0.0)) {
      std::ostringstream os;
      os << "Re h(z) <= 0 on E_rho (rho=" << rho << ") at z=" << z << "; choose a smaller rho";
      throw Error(ErrorCode::OutsideAnalyticRegion, os.str());
    }
  }
}

// ---------------------------------------------------------------------------
// Text form: jacobi(alpha, beta) * <h-expr>
//   h-expr := 1 | exp(-c*x^(2m)) | exp(-t*x) | factor (* factor)*
//   factor := number | (x - r)^p | (x + r)^p      r real or complex a+bi

namespace detail {

class WeightParser {
 public:
  explicit WeightParser(std::string s) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
  }

  WeightSpec parse() {
    expect("jacobi(");
    const double a = number();
    expect(",");
    const double b = number();
    expect(")");
    if (done()) return {a, b};
    expect("*");
    HSpec h = hexpr();
    if (!done()) fail("trailing characters");
    return {a, b, std::move(h)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "weight '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
  }
  bool done() const { return pos_ >= text_.size(); }
  bool accept(const std::string& tok) {
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }
  bool at_number() const {
    if (done()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+';
  }
  double number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }
  // a, a+bi, bi, or a parenthesised form of these
  cplx complex_number() {
    const bool paren = accept("(");
    cplx r = 0.0;
    const double first = number();
    if (accept("i")) {
      r = {0.0, first};
    } else {
      r = first;
      if (!done() && (text_[pos_] == '+' || text_[pos_] == '-') && pos_ + 1 < text_.size()) {
        const std::size_t save = pos_;
        const double second = number();
        if (accept("i")) r.imag(second);
        else pos_ = save;
      }
    }
    if (paren) expect(")");
    return r;
  }
  double exponent() {
    if (accept("(")) {
      const double p = number();
      expect(")");
      return p;
    }
    return number();
  }

  HSpec hexpr() {
    if (accept("exp(")) {
      // [sign][coef*]x[^pow]
      double coef = 1.0;
      if (accept("-")) coef = -1.0;
      else accept("+");
      if (!accept("x")) {
        coef *= number();
        expect("*");
        expect("x");
      }
      double p = 1.0;
      if (accept("^")) p = exponent();
      expect(")");
      if (p == 1.0) return HExpLinear{-coef};
      const int ip = static_cast<int>(p);
      if (double(ip) != p || ip < 2 || ip % 2 != 0) fail("exp() exponent must be 1 or an even integer");
      return HExpEvenPower{-coef, ip / 2};
    }
    if (text_.compare(pos_, std::string::npos, "1") == 0) {
      pos_ = text_.size();
      return HOne{};
    }
    HLinearFactors f;
    do {
      if (accept("(x")) {
        double sgn;
        if (accept("-")) sgn = 1.0;
        else if (accept("+")) sgn = -1.0;
        else fail("expected '+' or '-' after x");
        const cplx r = sgn * complex_number();
        expect(")");
        double p = 1.0;
        if (accept("^")) p = exponent();
        f.factors.push_back({r, p});
      } else if (at_number()) {
        f.scale *= number();
      } else {
        fail("expected a factor");
      }
    } while (accept("*"));
    return f;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace detail

inline WeightSpec parse_weight(const std::string& text) { return detail::WeightParser(text).parse(); }

/// Canonical text form; round-trips through parse_weight for grammar weights.
inline std::string to_string(const WeightSpec& w) {
  using detail::fmt;
  std::string s = "jacobi(" + fmt(w.alpha()) + "," + fmt(w.beta()) + ")*";
  const HSpec& h = w.h();
  if (std::holds_alternative<HOne>(h)) return s + "1";
  if (const auto* e = std::get_if<HExpEvenPower>(&h))
    return s + "exp(" + fmt(-e->c) + "*x^" + std::to_string(2 * e->m) + ")";
  if (const auto* l = std::get_if<HExpLinear>(&h)) return s + "exp(" + fmt(-l->t) + "*x)";
  if (const auto* f = std::get_if<HLinearFactors>(&h)) {
    s += fmt(f->scale);
    for (const auto& fac : f->factors) {
      s += "*(x-(" + fmt(fac.root.real());
      if (fac.root.imag() != 0.0) s += (fac.root.imag() < 0 ? "" : "+") + fmt(fac.root.imag()) + "i";
      s += "))^(" + fmt(fac.exponent) + ")";
    }
    return s;
  }
  return s + std::get<HGeneric>(h).label;
}

}  // namespace jacasy
