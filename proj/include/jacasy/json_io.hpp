#pragma once

// JSON form of coefficient tables, auxiliary data, rules and evaluations.
// Complex numbers are [re, im]; 2x2 matrices are row-major [[a, b], [c, d]].

#include "json.hpp"

#include "jacasy/coeffs.hpp"
#include "jacasy/contours.hpp"
#include "jacasy/eval.hpp"
#include "jacasy/quad_rule.hpp"

namespace jacasy {

using json = nlohmann::json;

inline json to_json_value(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json_value(const Mat2& m) {
  return json::array({json::array({to_json_value(m(0, 0)), to_json_value(m(0, 1))}),
                      json::array({to_json_value(m(1, 0)), to_json_value(m(1, 1))})});
}

inline Mat2 mat2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
    throw Error(ErrorCode::ParseError, "matrix must be [[a, b], [c, d]]");
  return {cplx_from_json(j[0][0]), cplx_from_json(j[0][1]), cplx_from_json(j[1][0]), cplx_from_json(j[1][1])};
}

namespace detail {

inline json cplx_list(const std::vector<cplx>& v) {
  json a = json::array();
  for (cplx z : v) a.push_back(to_json_value(z));
  return a;
}

inline std::vector<cplx> cplx_list_from(const json& j) {
  std::vector<cplx> v;
  for (const auto& e : j) v.push_back(cplx_from_json(e));
  return v;
}

inline json mat_table(const std::vector<std::vector<Mat2>>& t) {
  json a = json::array();
  for (const auto& row : t) {
    json r = json::array();
    for (const Mat2& m : row) r.push_back(to_json_value(m));
    a.push_back(std::move(r));
  }
  return a;
}

inline std::vector<std::vector<Mat2>> mat_table_from(const json& j) {
  std::vector<std::vector<Mat2>> t;
  for (const auto& row : j) {
    t.emplace_back();
    for (const auto& m : row) t.back().push_back(mat2_from_json(m));
  }
  return t;
}

}  // namespace detail

inline json to_json_value(const AuxData& a) {
  return {{"Dinf", a.Dinf},     {"cn", detail::cplx_list(a.cn)}, {"dn", detail::cplx_list(a.dn)},
          {"rho", a.rho_used}, {"M", a.M_used},                 {"exact", a.exact}};
}

inline AuxData aux_from_json(const json& j) {
  AuxData a;
  a.Dinf = j.at("Dinf").get<double>();
  a.cn = detail::cplx_list_from(j.at("cn"));
  a.dn = detail::cplx_list_from(j.at("dn"));
  a.rho_used = j.at("rho").get<double>();
  a.M_used = j.at("M").get<int>();
  a.exact = j.at("exact").get<bool>();
  return a;
}

/// W[k][m + ceil(k/2)], U[k][m] and Q[k][n] per endpoint, indexed as stored.
inline json to_json_value(const EndpointCoeffs& e) {
  return {{"sigma", e.sigma}, {"W", detail::mat_table(e.W)}, {"U", detail::mat_table(e.U)}, {"Q", detail::mat_table(e.Q)}};
}

inline EndpointCoeffs endpoint_from_json(const json& j) {
  EndpointCoeffs e;
  e.sigma = j.at("sigma").get<int>();
  e.W = detail::mat_table_from(j.at("W"));
  e.U = detail::mat_table_from(j.at("U"));
  e.Q = detail::mat_table_from(j.at("Q"));
  return e;
}

/// The matrix tables of a CoeffTable (the log phi series are not stored).
inline json to_json_value(const CoeffTable& t) {
  return {{"T", t.T},         {"n_max", t.n_max},         {"alpha", t.alpha},       {"beta", t.beta},
          {"Dinf", t.Dinf},   {"right", to_json_value(t.right)}, {"left", to_json_value(t.left)}};
}

inline CoeffTable coeff_table_from_json(const json& j) {
  CoeffTable t;
  t.T = j.at("T").get<int>();
  t.n_max = j.at("n_max").get<int>();
  t.alpha = j.at("alpha").get<double>();
  t.beta = j.at("beta").get<double>();
  t.Dinf = j.at("Dinf").get<double>();
  t.right = endpoint_from_json(j.at("right"));
  t.left = endpoint_from_json(j.at("left"));
  return t;
}

inline json to_json_value(const QuadRule& r) {
  return {{"n", r.n}, {"method", r.method}, {"max_residual", r.max_residual}, {"nodes", r.nodes}, {"weights", r.weights}};
}

inline json to_json_value(const EvalResult& r) {
  json j = {{"value", to_json_value(r.value)},
            {"scaled", to_json_value(r.scaled)},
            {"log_scale", r.log_scale},
            {"region", to_string(r.region)},
            {"terms", r.terms_used},
            {"next_term_estimate", r.next_term_estimate}};
  if (!r.warning.empty()) j["warning"] = r.warning;
  return j;
}

}  // namespace jacasy
