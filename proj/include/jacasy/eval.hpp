#pragma once

// Evaluation of pi_n(z), p_n(z) and their derivatives from the large-n
// expansions, with automatic choice between the lens, the outer region, the
// endpoint disks and (very close to +-1) the endpoint Taylor form of R.
//
// Every evaluator returns value = scaled * exp(log_scale); the 2^{-n},
// n^{nu+1/2} and exponentially large phase factors live in log_scale so that
// large n never overflows before the caller combines them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacasy/bessel.hpp"
#include "jacasy/branches.hpp"
#include "jacasy/coeffs.hpp"
#include "jacasy/contours.hpp"
#include "jacasy/errors.hpp"
#include "jacasy/jet.hpp"
#include "jacasy/mat2.hpp"
#include "jacasy/weights.hpp"

namespace jacasy {

enum class RegionTag { Lens, Outer, RightDisk, LeftDisk, RightSeries, LeftSeries };

inline const char* to_string(RegionTag r) {
  switch (r) {
    case RegionTag::Lens: return "lens";
    case RegionTag::Outer: return "outer";
    case RegionTag::RightDisk: return "right";
    case RegionTag::LeftDisk: return "left";
    case RegionTag::RightSeries: return "right-series";
    case RegionTag::LeftSeries: return "left-series";
  }
  return "?";
}

inline std::optional<RegionTag> parse_region(const std::string& s) {
  for (RegionTag r : {RegionTag::Lens, RegionTag::Outer, RegionTag::RightDisk, RegionTag::LeftDisk,
                      RegionTag::RightSeries, RegionTag::LeftSeries})
    if (s == to_string(r)) return r;
  if (s == "rightdisk") return RegionTag::RightDisk;
  if (s == "leftdisk") return RegionTag::LeftDisk;
  if (s == "auto") return std::nullopt;
  throw Error(ErrorCode::ParseError, "unknown region '" + s + "'");
}

inline bool is_disk(RegionTag r) { return r != RegionTag::Lens && r != RegionTag::Outer; }
inline int disk_sigma(RegionTag r) { return r == RegionTag::RightDisk || r == RegionTag::RightSeries ? 1 : -1; }
inline bool is_series(RegionTag r) { return r == RegionTag::RightSeries || r == RegionTag::LeftSeries; }

struct EngineOptions {
  int T = 4;                    ///< number of correction terms in R
  double disk_radius = 0.2;     ///< radius of the endpoint disks
  double series_radius = 0.05;  ///< below this |z -+ 1| R comes from its Taylor series
  double lens_height = 0.6;     ///< lens: Re z in [-1,1], |Im z| <= lens_height
  int n_max = 0;                ///< Taylor length of R near +-1 (0: max(T+2, 16))
  int cauchy_points = 256;      ///< minimum nodes for the Cauchy sum giving m(z)
  bool tilde_outer = false;     ///< always use the outer form that avoids log h(z)
  ContourParams contour;
};

struct EvalResult {
  cplx value;             ///< scaled * exp(log_scale); may overflow for huge n
  cplx scaled;
  double log_scale = 0.0;
  RegionTag region = RegionTag::Lens;
  int terms_used = 0;
  double next_term_estimate = 0.0;  ///< size of the first omitted term of R
  std::string warning;

  /// log|value| without forming value.
  double log_abs() const { return std::log(std::abs(scaled)) + log_scale; }
};

class Engine {
 public:
  explicit Engine(WeightSpec w, EngineOptions o = {}) : spec_(std::move(w)), opt_(o) {
    if (opt_.T < 0 || opt_.T > 12) throw Error(ErrorCode::InvalidArgument, "T must be in [0, 12]");
    if (!(opt_.disk_radius > 0.0 && opt_.disk_radius < 1.0))
      throw Error(ErrorCode::InvalidArgument, "disk radius must lie in (0, 1)");
    if (!(opt_.series_radius >= 0.0 && opt_.series_radius <= opt_.disk_radius))
      throw Error(ErrorCode::InvalidArgument, "series radius must lie in [0, disk radius]");
    if (!(opt_.lens_height > 0.0)) throw Error(ErrorCode::InvalidArgument, "lens height must be positive");
    if (opt_.n_max <= 0) opt_.n_max = std::max(opt_.T + 2, 16);
    // one extra order so that the first omitted term can be reported
    aux_ = compute_aux(spec_, series_length(opt_.T + 1, opt_.n_max), opt_.contour);
    table_ = build_coeff_table(spec_.alpha(), spec_.beta(), aux_, opt_.T + 1, opt_.n_max);
    int M = opt_.cauchy_points;
    if (!aux_.exact) M = std::max(M, int(std::ceil(kGap / std::log(aux_.rho_used))));
    m_ = MFunction(spec_, aux_, aux_.rho_used, M);
  }

  const WeightSpec& spec() const { return spec_; }
  const EngineOptions& options() const { return opt_; }
  const AuxData& aux() const { return aux_; }
  const CoeffTable& table() const { return table_; }
  int T() const { return opt_.T; }
  double Dinf() const { return aux_.Dinf; }

  RegionTag select_region(cplx z) const {
    const double dr = std::abs(z - 1.0), dl = std::abs(z + 1.0);
    if (dr < opt_.disk_radius) return dr <= opt_.series_radius ? RegionTag::RightSeries : RegionTag::RightDisk;
    if (dl < opt_.disk_radius) return dl <= opt_.series_radius ? RegionTag::LeftSeries : RegionTag::LeftDisk;
    if (std::abs(z.imag()) <= opt_.lens_height && z.real() >= -1.0 && z.real() <= 1.0) return RegionTag::Lens;
    return RegionTag::Outer;
  }

  /// m(z) with a contour that encloses z (lens, disks, outer with psi).
  Jet m_inside(const Jet& z) const {
    if (m_.exact()) return m_(z);
    const double rz = bernstein_rho(z.v);
    if (m_.encloses(z.v) && m_.gap(z.v) >= kGap) return m_(z);
    const double rmax = spec_.rho_max();
    if (rz >= rmax) throw Error(ErrorCode::OutsideAnalyticRegion, "no contour can enclose z inside the analyticity ellipse");
    const double rho = std::isfinite(rmax) ? std::sqrt(rz * rmax) : 2.0 * rz;
    double ratio = std::log(rho / rz);
    if (std::isfinite(rmax)) ratio = std::min(ratio, std::log(rmax / rho));
    return MFunction(spec_, aux_, rho, contour_points(ratio))(z);
  }

  /// The continuation m~(z) = m(z) - log h(z) / (z^2-1)^{1/2}, from a contour
  /// that leaves z outside; needs no log h at z.
  Jet m_outside(const Jet& z) const {
    if (m_.exact()) return m_(z) - logh_jet_unchecked(spec_, z) / sq_plus(z);
    if (!m_.encloses(z.v) && m_.gap(z.v) >= kGap) return m_(z);
    const double rho = std::sqrt(std::min(bernstein_rho(z.v), spec_.rho_max()));
    return MFunction(spec_, aux_, rho, contour_points(std::log(rho)))(z);
  }

 private:
  static constexpr double kGap = 36.0;  // trapezoid error ~ e^{-kGap}

  int contour_points(double log_ratio) const {
    const double M = kGap / log_ratio;
    if (!(M <= opt_.contour.Mmax)) throw Error(ErrorCode::ContourTooClose, "z is too close to the analyticity boundary");
    return std::max(64, int(std::ceil(M)));
  }

  struct Core {
    Jet scaled;
    double log_scale = 0.0;
    double next = 0.0;
  };

  static void check_k(int k_max) {
    if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "k_max must be >= 0");
  }

  std::vector<Mat2J> outer_jets(const Jet& z, int K) const {
    if (K > table_.T) throw Error(ErrorCode::InsufficientCoefficients, "more orders requested than tabulated");
    auto R = outer_terms(table_, z, K);
    R[0] = Mat2J::identity();
    return R;
  }

  std::vector<Mat2J> disk_jets(const Jet& z, int sigma, int K, bool series) const {
    if (K > table_.T) throw Error(ErrorCode::InsufficientCoefficients, "more orders requested than tabulated");
    if (series) {
      std::vector<Mat2J> R(K + 1, Mat2J::zero());
      R[0] = Mat2J::identity();
      const Jet v = z - double(sigma);
      const auto& Q = table_.at(sigma).Q;
      for (int k = 1; k <= K; ++k)
        for (auto it = Q[k].rbegin(); it != Q[k].rend(); ++it) R[k] = R[k] * v + lift(*it);
      return R;
    }
    // R_k = R^O_k - sum_m R^O_{k-m} s_m
    const auto RO = outer_jets(z, K);
    const auto p = jump_point(z, sigma, m_inside(z));
    std::vector<Mat2J> s(K + 1);
    for (int m = 1; m <= K; ++m) s[m] = s_direct(p, spec_.alpha(), spec_.beta(), aux_.Dinf, m);
    std::vector<Mat2J> R(RO);
    for (int k = 1; k <= K; ++k)
      for (int m = 1; m <= k; ++m) R[k] -= RO[k - m] * s[m];
    return R;
  }

  // First row of I + sum_{k<=T} R_k n^{-k}, plus the size of the R_{T+1} term.
  std::pair<std::array<Jet, 2>, double> first_row(const std::vector<Mat2J>& R, int n) const {
    std::array<Jet, 2> row{Jet(1.0), Jet(0.0)};
    double p = 1.0;
    for (int k = 1; k <= opt_.T; ++k) {
      p /= n;
      row[0] += R[k](0, 0) * p;
      row[1] += R[k](0, 1) * p;
    }
    const Mat2 last = values(R[opt_.T + 1]);
    const double next = std::max(std::abs(last(0, 0)), std::abs(last(0, 1))) * p / n;
    return {row, next};
  }

  // sqrt(h(z)) = half_h * exp(log_h_half) with the magnitude kept as a log
  std::pair<Jet, double> sqrt_h(const Jet& z) const {
    const Jet lh = 0.5 * logh_jet_unchecked(spec_, z);
    const double mag = lh.v.real();
    return {exp(lh - mag), mag};
  }

  Core lens_core(int n, const Jet& z) const {
    const double a = spec_.alpha(), b = spec_.beta(), D = aux_.Dinf, pi = std::numbers::pi;
    const cplx I(0.0, 1.0);
    const Jet th = acos_cut(z);
    const Jet psi = 0.5 * (a + b) * th - 0.5 * a * pi + 0.5 * sin(th) * m_inside(z);
    const Jet l1 = (n + 0.5) * th + psi - 0.25 * pi, l2 = l1 - th;
    const double S = std::abs(l1.v.imag());
    auto cos_scaled = [&](const Jet& l) { return 0.5 * (exp(I * l - S) + exp(-I * l - S)); };
    // sqrt(w) (1-z^2)^{1/4} in terms of theta/2, stable near the endpoints
    const auto [hh, hmag] = sqrt_h(z);
    const Jet den = std::pow(2.0, 0.5 * (a + b + 1.0)) * pow(sin(0.5 * th), a + 0.5) * pow(cos(0.5 * th), b + 0.5) * hh;
    const auto [row, next] = first_row(outer_jets(z, opt_.T + 1), n);
    const Jet br = row[0] * D * cos_scaled(l1) - I * row[1] / D * cos_scaled(l2);
    return {std::sqrt(2.0) * br / den, S - hmag, next};
  }

  Core outer_core(int n, const Jet& z, bool tilde) const {
    const double a = spec_.alpha(), b = spec_.beta(), D = aux_.Dinf, pi = std::numbers::pi;
    const cplx I(0.0, 1.0);
    // on the real axis right of 1 the boundary value from below matches theta = -1
    const Side side = (z.v.imag() == 0.0 && z.v.real() > 1.0) ? Side::Below : Side::Principal;
    const double tz = theta(z.v, side);
    const Jet th = acos_cut(z, side);
    const Jet m = tilde ? m_outside(z) : m_inside(z);
    const Jet psi = 0.5 * (a + b) * th - 0.5 * a * pi + 0.5 * sq_minus(z, side) * m;
    const Jet e1 = I * tz * ((n + 0.5) * th + psi - 0.25 * pi), e2 = e1 - I * tz * th;
    const double S = e1.v.real();
    Jet den = sided_pow(1.0 - z, 0.5 * a + 0.25, flip(side)) * sided_pow(1.0 + z, 0.5 * b + 0.25, side);
    double hmag = 0.0;
    if (!tilde) {
      const auto hs = sqrt_h(z);
      den = den * hs.first;
      hmag = hs.second;
    }
    const auto [row, next] = first_row(outer_jets(z, opt_.T + 1), n);
    const Jet br = row[0] * D * exp(e1 - S) - I * row[1] / D * exp(e2 - S);
    return {br / (std::sqrt(2.0) * den), S - hmag, next};
  }

  // Disk forms rewritten in t = arccos(sigma z): Jhat = J_nu(u)(u/2)^{-nu} and
  // K = u J_nu'(u)(u/2)^{-nu} with u = n t absorb the endpoint powers of the
  // weight, and the phases are t times a function that is even in t.
  Core disk_core(int n, const Jet& z, int sigma, bool series) const {
    const double a = spec_.alpha(), b = spec_.beta(), D = aux_.Dinf;
    const double nu = sigma > 0 ? a : b, other = sigma > 0 ? b : a;
    const cplx I(0.0, 1.0);
    const Jet t = acos_cut(sigma > 0 ? z : -z);
    const Jet c1 = 0.5 * (a + b + 1.0) + 0.5 * sigma * sinc(t) * m_inside(z), c2 = c1 - 1.0;
    const Jet z1 = t * c1, z2 = t * c2;
    const auto jb = reduced_bessel(nu, double(n) * t, true);
    const Jet b1 = cos(z1) * jb.jhat + c1 * sinc(z1) / double(n) * jb.k;
    const Jet b2 = cos(z2) * jb.jhat + c2 * sinc(z2) / double(n) * jb.k;
    const auto [row, next] = first_row(disk_jets(z, sigma, opt_.T + 1, series), n);
    const Jet br = row[0] * D * b1 - double(sigma) * I * row[1] / D * b2;
    const auto [hh, hmag] = sqrt_h(z);
    Jet pre = std::sqrt(std::numbers::pi) * std::pow(2.0, -0.5 * nu) * pow(half_angle_ratio(t), nu) *
              pow(sinc(t), -0.5) / (pow(sigma > 0 ? 1.0 + z : 1.0 - z, 0.5 * other) * hh);
    if (sigma < 0 && n % 2) pre = -pre;
    return {pre * br, (nu + 0.5) * std::log(double(n)) + jb.log_scale - hmag, next};
  }

  Core dispatch(int n, const Jet& z, RegionTag r) const {
    switch (r) {
      case RegionTag::Lens: return lens_core(n, z);
      case RegionTag::Outer: {
        const double rmax = spec_.rho_max();
        const bool tilde = opt_.tilde_outer || (!m_.exact() && bernstein_rho(z.v) > 0.9 * rmax);
        return outer_core(n, z, tilde);
      }
      default: return disk_core(n, z, disk_sigma(r), is_series(r));
    }
  }

  // log gamma_n - n ln 2; the 2^n cancels against the monic scale exactly
  double log_gamma_rest(int n) const {
    if (n < 0) throw Error(ErrorCode::InvalidDegree, "n must be >= 0");
    const double D = aux_.Dinf;
    cplx s = 0.0;
    double p = 1.0;
    for (int k = 1; k <= opt_.T; ++k) {
      p /= n + 1.0;
      s += (table_.right.u(k, 1) + table_.left.u(k, 1))(1, 0) * p;
    }
    const double c = 1.0 + (cplx(0.0, 2.0 * D * D) * s).real();
    if (!(c > 0.0)) throw Error(ErrorCode::NegativeSquare, "truncated gamma_n^2 is not positive; n is too small for T");
    return -0.5 * std::log(std::numbers::pi) - std::log(D) + 0.5 * std::log(c);
  }

  std::string validity_warning(RegionTag r, cplx z) const {
    bool far = false;
    if (is_disk(r)) far = std::abs(z - double(disk_sigma(r))) > (is_series(r) ? opt_.disk_radius : 0.5);
    else if (r == RegionTag::Lens) far = std::abs(z.imag()) > 1.0 || std::abs(z.real()) > 1.2;
    else far = bernstein_rho(z) < 1.05;
    if (!far) return {};
    return std::string("RegionForcedOutsideValidity: z is far outside the ") + to_string(r) + " region";
  }

 public:
  /// R_0 = I and the terms R_1..R_{k_max} of R^O at z (outside both disks).
  std::vector<Mat2> R_outer(cplx z, int k_max) const {
    check_k(k_max);
    if (std::abs(z - 1.0) < opt_.disk_radius || std::abs(z + 1.0) < opt_.disk_radius)
      throw Error(ErrorCode::InsideDisk, "R_outer needs z outside both disks");
    std::vector<Mat2> out;
    for (const auto& m : outer_jets(Jet(z), k_max)) out.push_back(values(m));
    return out;
  }

  /// R_0 = I and R_1..R_{k_max} of the disk solution at endpoint sigma.
  /// series: nullopt picks the Taylor form within series_radius.
  std::vector<Mat2> R_disk(cplx z, int sigma, int k_max, std::optional<bool> series = {}) const {
    check_k(k_max);
    const double d = std::abs(z - double(sigma));
    if (!(d < opt_.disk_radius)) throw Error(ErrorCode::OutsideDisk, "R_disk needs z inside the disk");
    std::vector<Mat2> out;
    for (const auto& m : disk_jets(Jet(z), sigma, k_max, series.value_or(d <= opt_.series_radius)))
      out.push_back(values(m));
    return out;
  }

  /// log gamma_n, gamma_n the leading coefficient of the orthonormal p_n.
  double log_gamma_n(int n) const { return n * std::numbers::ln2 + log_gamma_rest(n); }

  /// log(gamma_n / gamma_{n-1}), without the cancellation of the two 2^n factors.
  double log_gamma_ratio(int n) const {
    if (n < 1) throw Error(ErrorCode::InvalidDegree, "n must be >= 1");
    return std::numbers::ln2 + log_gamma_rest(n) - log_gamma_rest(n - 1);
  }

  double gamma_n(int n) const { return std::exp(log_gamma_n(n)); }

  /// (alpha_n, beta_n) of x pi_n = pi_{n+1} + alpha_n pi_n + beta_n pi_{n-1}.
  std::pair<double, double> recurrence_coeffs(int n) const {
    if (n < 1) throw Error(ErrorCode::InvalidDegree, "n must be >= 1");
    const double D = aux_.Dinf;
    const cplx I(0.0, 1.0);
    cplx a = 0.0, b21 = 1.0 / (2.0 * I * D * D), b12 = -D * D / (2.0 * I);
    for (int k = 1; k <= opt_.T; ++k) {
      const Mat2 U = table_.right.u(k, 1) + table_.left.u(k, 1);
      a -= U(0, 0) / std::pow(n + 1.0, k) + U(1, 1) / std::pow(double(n), k);
      b21 += U(1, 0) / std::pow(double(n), k);
      b12 += U(0, 1) / std::pow(double(n), k);
    }
    return {a.real(), (b21 * b12).real()};
  }

  /// Value and z-derivative of pi_n (or p_n when orthonormal) at z.
  std::pair<EvalResult, EvalResult> eval_with_derivative(int n, cplx z, std::optional<RegionTag> region = {},
                                                         bool orthonormal = false) const {
    if (n < 1) throw Error(ErrorCode::InvalidDegree, "n must be >= 1");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error(ErrorCode::InvalidArgument, "non-finite z");
    const RegionTag r = region.value_or(select_region(z));
    const Core c = dispatch(n, Jet::variable(z), r);
    cplx d = c.scaled.d;
    if (is_disk(r) && z == cplx(disk_sigma(r))) d = circle_derivative(n, z, r, c.log_scale);
    EvalResult v;
    v.scaled = c.scaled.v;
    v.log_scale = c.log_scale + (orthonormal ? log_gamma_rest(n) : -n * std::numbers::ln2);
    v.value = v.scaled * std::exp(v.log_scale);
    v.region = r;
    v.terms_used = opt_.T;
    v.next_term_estimate = c.next;
    if (region) v.warning = validity_warning(r, z);
    EvalResult dv = v;
    dv.scaled = d;
    dv.value = d * std::exp(dv.log_scale);
    return {v, dv};
  }

  EvalResult eval_monic(int n, cplx z, std::optional<RegionTag> region = {}) const {
    return eval_with_derivative(n, z, region).first;
  }
  EvalResult eval_orthonormal(int n, cplx z, std::optional<RegionTag> region = {}) const {
    return eval_with_derivative(n, z, region, true).first;
  }
  EvalResult eval_derivative(int n, cplx z, std::optional<RegionTag> region = {}, bool orthonormal = false) const {
    return eval_with_derivative(n, z, region, orthonormal).second;
  }

 private:
  // At z = +-1 itself the chain rule through arccos breaks down (the formula
  // is even in arccos, so the singular factors cancel); use a Cauchy integral
  // on a small circle instead. Result is scaled by exp(-log_ref).
  cplx circle_derivative(int n, cplx z, RegionTag r, double log_ref) const {
    const int M = 32;
    const double rad = std::min(0.01, 0.25 / (double(n) * n));
    cplx acc = 0.0;
    for (int k = 0; k < M; ++k) {
      const cplx e = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / M);
      const Core c = dispatch(n, Jet(z + rad * e), r);
      acc += c.scaled.v * std::exp(c.log_scale - log_ref) / e;
    }
    return acc / (double(M) * rad);
  }

  WeightSpec spec_;
  EngineOptions opt_;
  AuxData aux_;
  CoeffTable table_;
  MFunction m_;
};

}  // namespace jacasy
