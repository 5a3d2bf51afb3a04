#pragma once

#include <string>

#include "omega/omega_point.hpp"

namespace omega {

// Built-in holomorphic functions addressable from the command line:
//   "pfm:m,n"   Poisson Fourier mode P_n^{-m}
//   "f:p,q"     old-basis function f_{p,q}
//   "geom"      1/(1 - zw)
//   "exp:K"     truncated series sum_{j<=K} (zw)^j / j!
// Throws std::invalid_argument for anything else.
Evaluator catalogue_function(const std::string& spec);

}  // namespace omega
