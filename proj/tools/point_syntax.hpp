#pragma once

#include <string>
#include <vector>

#include "omega/omega_point.hpp"

namespace omega::cli {

// "re", "re+imi", "re-imi" or "inf"
ExtendedComplex parse_extended(const std::string& token);

Complex parse_complex(const std::string& token);  // finite only

// "z,w"
OmegaPoint parse_point(const std::string& token);

// comma-separated list of extended-complex tokens
std::vector<ExtendedComplex> parse_extended_list(const std::string& token);

std::string format_extended(const ExtendedComplex& v);

}  // namespace omega::cli
