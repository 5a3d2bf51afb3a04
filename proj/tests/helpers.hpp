#pragma once

#include <complex>
#include <vector>

#include "omega/omega_point.hpp"
#include "omega/sampling.hpp"

namespace omega::test {

inline std::vector<OmegaPoint> sample_points(int count, std::uint64_t seed = 42,
                                             double radius = 0.6) {
    Sampler s(seed);
    std::vector<OmegaPoint> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.push_back(s.omega_point_in_disk(radius));
    return pts;
}

inline double cdist(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace omega::test
