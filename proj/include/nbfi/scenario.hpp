#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "nbfi/bitrate.hpp"
#include "nbfi/radio.hpp"

namespace nbfi {

// Ring radii (km) assigning bitrates to concentric rings around the BS, and
// the induced per-class share p. r_max[0] is the deployment radius; the inner
// edge of the innermost ring is implicitly zero. Ring for class i covers
// (r_max[i], r_max[i-1]] (1-based classes).
struct Allocation {
    std::array<double, kNumBn> r_max{};  // r1 >= r2 >= r3 >= r4 >= 0
    std::array<double, kNumBn> p{};      // p[i] = (r_i^2 - r_{i+1}^2) / r_1^2

    double ring_outer(int bn) const { return r_max[static_cast<size_t>(bn - 1)]; }
    double ring_inner(int bn) const { return bn == kNumBn ? 0.0 : r_max[static_cast<size_t>(bn)]; }
    bool used(int bn) const { return p[static_cast<size_t>(bn - 1)] > 0.0; }
};

// Builds an Allocation from ring radii. r_star_km are the per-class maximum
// feasible distances (see max_distance_km). Throws ConstraintViolation on
// broken ordering, radii above r1, or a ring extending past its class range.
Allocation allocation_from_radii(std::span<const double, kNumBn> radii_km, double r1_km,
                                 std::span<const double, kNumBn> r_star_km);

enum class FreqMode { continuous, discrete_exact };

// Full deployment + traffic description shared by the model and the
// simulator. Aggregate arrival rate lambda is network-wide; the per-sensor
// rate is lambda/n_sensors.
struct Scenario {
    int n_sensors = 1000;
    double radius_r1_km = 1.0;
    double lambda_fps = 0.1;  // aggregate packet generation rate
    double e_t_dbm = 14.0;
    double nu_db = 7.0;
    double b_ul_hz = 51200.0;
    int rl = 7;  // max transmission attempts per packet
    Allocation allocation{};
    std::uint64_t seed = 1;

    PropagationParams prop = PropagationParams::okumura_hata();
    NoiseModel noise{};
    FreqMode freq_mode = FreqMode::continuous;
    double jitter_hz = 0.0;  // extra uniform +-jitter in discrete_exact mode

    std::array<double, kNumBn> r_star_km() const;

    // Throws ConstraintViolation/ConfigError when any invariant is broken.
    void validate() const;
};

}  // namespace nbfi
