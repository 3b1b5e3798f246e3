#pragma once

// Closed forms of U_{k,m} for k <= 4 (both endpoints), used as golden
// vectors for the numerical coefficient pipeline (tests and selfcheck).

#include <map>
#include <tuple>

#include "jacasy/mat2.hpp"

namespace jacasy::golden {

struct Inputs {
  double a, b, c0, d0, c1, d1, D;
};

// key: (sigma, k, m)
inline std::map<std::tuple<int, int, int>, Mat2> closed_form_U(const Inputs& in) {
  const double a = in.a, b = in.b, c0 = in.c0, d0 = in.d0, c1 = in.c1, d1 = in.d1;
  const cplx I(0, 1);
  std::map<std::tuple<int, int, int>, Mat2> r;
  auto mat = [](double s, cplx x11, cplx x12, cplx x21, cplx x22) { return Mat2{s * x11, s * x12, s * x21, s * x22}; };

  r[{1, 1, 1}] = mat((4 * a * a - 1) / 16, -1.0, I, I, 1.0);
  r[{-1, 1, 1}] = mat((4 * b * b - 1) / 16, 1.0, I, I, -1.0);

  auto A2 = [](double a, double b, double c) { return 8 * a + 8 * b + 8 * c - 4 * b * b + 1; };
  auto B2 = [](double a, double b, double c) { return -8 * a - 8 * b - 8 * c + 4 * a * a + 4 * b * b - 10; };
  auto C2 = [](double a, double b, double c) { return -8 * a - 8 * b - 8 * c - 4 * a * a - 4 * b * b + 10; };
  auto D2 = [](double a, double b, double c) { return -8 * a - 8 * b - 8 * c - 4 * b * b + 1; };
  r[{1, 2, 1}] = mat((4 * a * a - 1) / 256, A2(a, b, c0), I * B2(a, b, c0), I * C2(a, b, c0), D2(a, b, c0));
  r[{-1, 2, 1}] = mat((4 * b * b - 1) / 256, -A2(b, a, -d0), I * B2(b, a, -d0), I * C2(b, a, -d0), -D2(b, a, -d0));

  auto A3 = [](double a, double b, double f, double g) {
    return 16 * (4 * b * b - 1) * (f + g + 2 * a + 2 * b) - 2 * (4 * b * b - 1) * (2 * a * a + 2 * b * b - 1) -
           128 * ((a + b) * (a + b) + f * (f + 2 * a + 2 * b));
  };
  auto q3 = [](double a, double b, double f, double) {
    return 128 * (a + b) * (a + b) + 128 * f * (f + 2 * a + 2 * b) - 388.0 / 3 * a * a - 84 * b * b +
           64.0 / 3 * a * a * a * a + 16 * b * b * b * b + 48 * a * a * b * b + 176;
  };
  auto r3 = [](double a, double b, double f, double g) {
    return -128 * (a + b) * (a * a + b * b) + 320 * (a + b) - 64 * b * b * (f + g) - 128 * f * a * a + 304 * f + 16 * g;
  };
  auto D3 = [](double a, double b, double f, double g) {
    return 16 * (4 * b * b - 1) * (f + g + 2 * a + 2 * b) + 2 * (4 * b * b - 1) * (2 * a * a + 2 * b * b - 1) +
           128 * ((a + b) * (a + b) + f * (f + 2 * a + 2 * b));
  };
  {
    const double x[4] = {a, b, c0, -d0}, y[4] = {b, a, -d0, c0};
    auto Q = [&](const double* p) { return q3(p[0], p[1], p[2], p[3]); };
    auto R = [&](const double* p) { return r3(p[0], p[1], p[2], p[3]); };
    r[{1, 3, 1}] = mat((4 * a * a - 1) / 8192, A3(x[0], x[1], x[2], x[3]), I * (Q(x) + R(x)), I * (Q(x) - R(x)),
                       D3(x[0], x[1], x[2], x[3]));
    r[{-1, 3, 1}] = mat((4 * b * b - 1) / 8192, -A3(y[0], y[1], y[2], y[3]), I * (Q(y) + R(y)), I * (Q(y) - R(y)),
                        -D3(y[0], y[1], y[2], y[3]));
  }
  r[{1, 3, 2}] = mat((4 * a * a - 1) * (4 * a * a - 9) * (4 * a * a - 25) / 12288, -1.0, I, I, 1.0);
  r[{-1, 3, 2}] = mat((4 * b * b - 1) * (4 * b * b - 9) * (4 * b * b - 25) / 12288, -1.0, -I, -I, 1.0);

  auto v4 = [](double a, double b, double f0, double g0, double) {
    return (1 - 4 * b * b) / 6 *
           (384 * (f0 * f0 + g0 * g0 - f0 * g0 + 3 * (a + b) * (f0 - g0)) + 16 * ((a * a + b * b) * (a * a + b * b) + a * a * b * b) +
            1196 * (a + b) * (a + b) - 88 * a * b - 219);
  };
  auto w4 = [](double a, double b, double f0, double g0, double f1) {
    return -4 * ((4 * b * b - 1) * (8 * b * b + 4 * a * a - 11) * g0 + 48 * (4 * a * a - 9) * f1 - 768 * a * b * f0 -
                 f0 * (128 * f0 * (f0 + 3 * (a + b)) + 16 * b * b * (b * b + 2 * a * a + 25) + 312 * a * a + 139) -
                 2 * (a + b) * (b * b * (24 * b * b + 24 * a * a + 46) + 58 * a * a + 128 * a * b + 3));
  };
  auto x4 = [](double a, double b, double f0, double g0, double f1) {
    return 4 * ((4 * b * b - 1) * (8 * b * b + 12 * a * a - 29) * g0 + 48 * (4 * a * a - 9) * f1 - 768 * a * b * f0 -
                f0 * (128 * f0 * (f0 + 3 * (a + b)) + 16 * b * b * (b * b + 6 * a * a + 16) + 8 * a * a * (8 * a * a - 7) + 643) -
                4 * (a + b) * (b * b * (12 * b * b + 36 * a * a - 31) + a * a * (16 * a * a - 65) + 64 * a * b + 132));
  };
  auto y4 = [](double a, double b, double f0, double g0, double) {
    const double a2 = a * a, b2 = b * b;
    return 4.0 / 3 *
           (48 * (4 * b2 - 1) * g0 * (g0 - f0 - 3 * (a + b)) + b2 * b2 * (48 * a2 + 542) + 48 * f0 * f0 * (4 * b2 + 12 * a2 - 28) +
            144 * (a + b) * (4 * b2 + 8 * a2 - 19) * f0 + a2 * a2 * (56 * b2 + 422) + a * b * (1152 * (a2 + b2) + 988 * a * b - 2880) +
            16 * a2 * a2 * a2 - 1393 * b2 - 951 * a2 - 498 + 8 * b2 * b2 * b2);
  };
  {
    auto V = [&](auto f, const double* p) { return f(p[0], p[1], p[2], p[3], p[4]); };
    const double x[5] = {a, b, c0, d0, c1}, y[5] = {b, a, -d0, -c0, d1};
    r[{1, 4, 1}] = mat((4 * a * a - 1) / 65536, V(v4, x) + V(w4, x), I * (V(x4, x) + V(y4, x)), I * (V(x4, x) - V(y4, x)),
                       V(v4, x) - V(w4, x));
    r[{-1, 4, 1}] = mat((4 * b * b - 1) / 65536, -(V(v4, y) + V(w4, y)), I * (V(x4, y) + V(y4, y)),
                        I * (V(x4, y) - V(y4, y)), -(V(v4, y) - V(w4, y)));
  }
  {
    const double k = (4 * a * a - 1) * (4 * a * a - 9) * (4 * a * a - 25) / (131072.0 * 3);
    const double E = -4 * a * a - 8 * b * b + 48 * c0 + 48 * a + 48 * b + 3;
    const double F = 8 * a * a + 8 * b * b - 48 * c0 - 48 * a - 48 * b - 52;
    const double G = -8 * a * a - 8 * b * b - 48 * c0 - 48 * a - 48 * b + 52;
    const double H = -4 * a * a - 8 * b * b - 48 * c0 - 48 * a - 48 * b + 3;
    r[{1, 4, 2}] = mat(k, E, I * F, I * G, H);
  }
  {
    const double k = (4 * b * b - 1) * (4 * b * b - 9) * (4 * b * b - 25) / (131072.0 * 3);
    const double Iv = -8 * a * a - 4 * b * b - 48 * d0 + 48 * a + 48 * b + 3;
    const double J = -8 * a * a - 8 * b * b - 48 * d0 + 48 * a + 48 * b + 52;
    const double K = 8 * a * a + 8 * b * b - 48 * d0 + 48 * a + 48 * b - 52;
    const double L = -8 * a * a - 4 * b * b + 48 * d0 - 48 * a - 48 * b + 3;
    r[{-1, 4, 2}] = mat(k, Iv, I * J, I * K, L);
  }
  for (auto& [key, m] : r) m = jacasy::conj_sigma3(m, in.D);
  return r;
}

}  // namespace jacasy::golden
