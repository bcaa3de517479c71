#include "nbfi/scenario.hpp"

#include <cmath>
#include <string>

#include "nbfi/errors.hpp"

namespace nbfi {

Allocation allocation_from_radii(std::span<const double, kNumBn> radii_km, double r1_km,
                                 std::span<const double, kNumBn> r_star_km) {
    if (r1_km <= 0) throw ConstraintViolation("allocation: deployment radius must be positive");
    Allocation a;
    double prev = r1_km;
    for (int i = 0; i < kNumBn; ++i) {
        const double r = radii_km[static_cast<size_t>(i)];
        if (r < 0) throw ConstraintViolation("allocation: negative radius");
        if (r > prev + 1e-12)
            throw ConstraintViolation("allocation: radii must be non-increasing and <= r1");
        if (r > r_star_km[static_cast<size_t>(i)] * (1.0 + 1e-12))
            throw ConstraintViolation("allocation: ring " + std::to_string(i + 1) +
                                      " extends past the feasible range of its class");
        a.r_max[static_cast<size_t>(i)] = r;
        prev = r;
    }
    const double r1sq = a.r_max[0] * a.r_max[0];
    if (r1sq <= 0) throw ConstraintViolation("allocation: outer ring radius must be positive");
    for (int i = 0; i < kNumBn; ++i) {
        const double outer = a.r_max[static_cast<size_t>(i)];
        const double inner = (i + 1 < kNumBn) ? a.r_max[static_cast<size_t>(i + 1)] : 0.0;
        const double diff = outer * outer - inner * inner;
        if (diff < -1e-12) throw ConstraintViolation("allocation: negative ring area");
        a.p[static_cast<size_t>(i)] = std::max(diff, 0.0) / r1sq;
    }
    return a;
}

std::array<double, kNumBn> Scenario::r_star_km() const {
    std::array<double, kNumBn> r{};
    for (int i = 0; i < kNumBn; ++i)
        r[static_cast<size_t>(i)] =
            max_distance_km(bitrate_palette()[static_cast<size_t>(i)], e_t_dbm, nu_db, prop,
                            noise.temp_k);
    return r;
}

void Scenario::validate() const {
    if (n_sensors < 1) throw ConstraintViolation("scenario: n_sensors must be >= 1");
    if (radius_r1_km <= 0) throw ConstraintViolation("scenario: radius must be positive");
    if (lambda_fps <= 0) throw ConstraintViolation("scenario: lambda must be positive");
    if (rl < 1) throw ConstraintViolation("scenario: rl must be >= 1");
    if (b_ul_hz < 51200.0) throw ConfigError("scenario: UL band must be at least 51.2 kHz");
    if (std::abs(allocation.r_max[0] - radius_r1_km) > 1e-9)
        throw ConstraintViolation("scenario: allocation must cover the deployment radius");
    double psum = 0;
    const auto r_star = r_star_km();
    for (int i = 0; i < kNumBn; ++i) {
        psum += allocation.p[static_cast<size_t>(i)];
        if (allocation.r_max[static_cast<size_t>(i)] > r_star[static_cast<size_t>(i)] * (1 + 1e-12))
            throw ConstraintViolation("scenario: ring assigned beyond feasible class range");
    }
    if (std::abs(psum - 1.0) > 1e-12)
        throw ConstraintViolation("scenario: ring shares must sum to 1");
}

}  // namespace nbfi
