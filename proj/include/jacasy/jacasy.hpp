#pragma once

// Umbrella header. json_io.hpp (needs vendor/json.hpp) is included separately.

#include "jacasy/bessel.hpp"
#include "jacasy/branches.hpp"
#include "jacasy/coeffs.hpp"
#include "jacasy/contours.hpp"
#include "jacasy/errors.hpp"
#include "jacasy/eval.hpp"
#include "jacasy/oracle.hpp"
#include "jacasy/quadrature.hpp"
#include "jacasy/weights.hpp"
