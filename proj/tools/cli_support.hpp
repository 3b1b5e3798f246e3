#pragma once

// Parsing and formatting for the command-line front end: point lists,
// degree ranges and 17-digit number output.

#include <cctype>
#include <cstdio>
#include <string>
#include <vector>

#include "jacasy/errors.hpp"
#include "jacasy/mat2.hpp"

namespace jacasy::cli {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// re+imi, or a plain real number when the imaginary part is zero.
inline std::string fmt(cplx z) {
  if (z.imag() == 0.0) return fmt(z.real());
  const std::string im = fmt(z.imag());
  return fmt(z.real()) + (im[0] == '-' ? "" : "+") + im + "i";
}

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

/// Split at commas (or `sep`) that are not inside parentheses.
inline std::vector<std::string> split_top(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail("not a number: '" + s + "'");
  }
  if (used != s.size()) fail("not a number: '" + s + "'");
  return v;
}

inline int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    fail("not an integer: '" + s + "'");
  }
  if (used != s.size()) fail("not an integer: '" + s + "'");
  return v;
}

inline std::vector<double> call_args(const std::string& s, const std::string& name, std::size_t count) {
  const std::string body = s.substr(name.size() + 1, s.size() - name.size() - 2);
  std::vector<double> a;
  for (const auto& t : split_top(body)) a.push_back(to_double(t));
  if (a.size() != count) fail(name + "(...) takes " + std::to_string(count) + " arguments");
  return a;
}

inline bool is_call(const std::string& s, const std::string& name) {
  return s.size() > name.size() + 1 && s.compare(0, name.size() + 1, name + "(") == 0 && s.back() == ')';
}

}  // namespace detail

/// A real or complex literal: 0.3, -2e-3, 0.2+0.5i, 1-i, 4i.
inline cplx parse_complex(const std::string& text) {
  const std::string s = detail::trim(text);
  if (s.empty()) detail::fail("empty number");
  if (s.back() != 'i') return detail::to_double(s);
  // the sign that separates real and imaginary parts is not at the start and
  // does not belong to an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag = [](std::string t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return detail::to_double(t);
  };
  if (split == std::string::npos) return {0.0, imag(s.substr(0, s.size() - 1))};
  return {detail::to_double(s.substr(0, split)), imag(s.substr(split, s.size() - 1 - split))};
}

/// Comma-separated points; items are literals, linspace(a,b,k) on the real
/// line, or grid(re0,re1,k,im0,im1,m) (real part varying fastest).
inline std::vector<cplx> parse_points(const std::string& text) {
  std::vector<cplx> pts;
  for (const auto& item : detail::split_top(text)) {
    if (detail::is_call(item, "linspace")) {
      const auto a = detail::call_args(item, "linspace", 3);
      const int k = int(a[2]);
      if (k < 1 || a[2] != k) detail::fail("linspace needs a positive integer count");
      for (int i = 0; i < k; ++i) pts.emplace_back(k == 1 ? a[0] : a[0] + (a[1] - a[0]) * i / (k - 1));
    } else if (detail::is_call(item, "grid")) {
      const auto a = detail::call_args(item, "grid", 6);
      const int k = int(a[2]), m = int(a[5]);
      if (k < 1 || m < 1 || a[2] != k || a[5] != m) detail::fail("grid needs positive integer counts");
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < k; ++i)
          pts.emplace_back(k == 1 ? a[0] : a[0] + (a[1] - a[0]) * i / (k - 1),
                           m == 1 ? a[3] : a[3] + (a[4] - a[3]) * j / (m - 1));
    } else {
      pts.push_back(parse_complex(item));
    }
  }
  return pts;
}

/// Comma-separated integers and ranges a..b; `doubling` makes a..b mean
/// a, 2a, 4a, ... <= b.
inline std::vector<int> parse_int_list(const std::string& text, bool doubling = false) {
  std::vector<int> out;
  for (const auto& item : detail::split_top(text)) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(detail::to_int(item));
      continue;
    }
    const int a = detail::to_int(item.substr(0, dots)), b = detail::to_int(item.substr(dots + 2));
    if (b < a) detail::fail("empty range '" + item + "'");
    if (doubling) {
      if (a < 1) detail::fail("doubling range must start at a positive integer");
      for (long long v = a; v <= b; v *= 2) out.push_back(int(v));
    } else {
      for (int v = a; v <= b; ++v) out.push_back(v);
    }
  }
  return out;
}

}  // namespace jacasy::cli
