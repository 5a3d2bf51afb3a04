#pragma once

#include <cmath>
#include <random>
#include <span>
#include <utility>

#include "omega/moebius.hpp"
#include "omega/omega_point.hpp"

namespace omega {

/// Deterministic sample generator for verification sweeps. Identical seeds
/// give identical samples, so reports are reproducible byte for byte.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(rng_);
    }

    Complex disk(double radius) {
        double r = radius * std::sqrt(uniform(0.0, 1.0));
        double t = uniform(0.0, 2.0 * M_PI);
        return std::polar(r, t);
    }

    Complex unit_modulus() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }

    // point of Omega with both coordinates in the disk of the given radius and
    // 1 - zw bounded away from zero
    OmegaPoint omega_point_in_disk(double radius = 0.6, double margin = 0.1) {
        for (;;) {
            Complex z = disk(radius), w = disk(radius);
            if (std::abs(1.0 - z * w) > margin) return {z, w};
        }
    }

    // point with larger coordinates, still well inside Omega
    OmegaPoint omega_point_wide(double radius = 2.0, double margin = 0.2) {
        for (;;) {
            Complex z = disk(radius), w = disk(radius);
            if (std::abs(1.0 - z * w) > margin) return {z, w};
        }
    }

    // moderate Moebius map of Omega: rho_gamma o T_{alpha,beta} (o flip)
    MoebiusMap moebius_map(bool allow_flip = true) {
        Complex gamma = std::polar(std::exp(uniform(-0.4, 0.4)), uniform(0.0, 2.0 * M_PI));
        Complex alpha = disk(0.4), beta = disk(0.4);
        MoebiusMap T = compose(rho(gamma), t_zw(alpha, beta));
        if (allow_flip && uniform(0.0, 1.0) < 0.5) T = compose(T, flip_map());
        return T;
    }

  private:
    std::mt19937_64 rng_;
};

// Every image coordinate under T stays finite, moderate in size and away from
// the degenerate set zw = 1. Invariance residual tolerances assume this.
inline bool well_conditioned(const MoebiusMap& T,
                             std::span<const std::pair<OmegaPoint, OmegaPoint>> pairs,
                             double margin = 0.2, double radius = 4.0) {
    for (const auto& [p1, p2] : pairs) {
        for (const OmegaPoint& q : {apply(T, p1), apply(T, p2)}) {
            if (q.z.inf || q.w.inf) return false;
            if (std::abs(1.0 - q.z.v * q.w.v) < margin) return false;
            if (std::abs(q.z.v) > radius || std::abs(q.w.v) > radius) return false;
        }
    }
    return true;
}

}  // namespace omega
