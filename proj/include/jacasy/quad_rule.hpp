#pragma once

#include <string>
#include <vector>

namespace jacasy {

struct QuadRule {
  int n = 0;
  std::vector<double> nodes;    ///< strictly increasing, inside (-1, 1)
  std::vector<double> weights;  ///< positive
  double max_residual = 0.0;    ///< largest final Newton step |p_n / p_n'|
  std::string method;           ///< "newton" or "golub-welsch"
};

}  // namespace jacasy
