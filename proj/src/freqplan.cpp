#include "nbfi/freqplan.hpp"

#include <algorithm>
#include <cmath>

#include "nbfi/errors.hpp"

namespace nbfi {

void SubbandPlan::validate() const {
    if (w_ul < 0 || w_ul > 7) throw ConfigError("subband: w_ul must be in 0..7");
    if (o_ul < -63 || o_ul > 63) throw ConfigError("subband: o_ul must be in -63..63");
}

double ul_center_frequency(const SubbandPlan& plan, const BitrateClass& bn, int parity,
                           std::uint32_t id, std::uint32_t mic0_7) {
    const double b = plan.b_ul_hz();
    double g = 0.0;
    if (b > 2.0 * bn.delta_hz + 2000.0) g = (b - 2.0 * bn.delta_hz - 2000.0) / 2.0;
    const double sign = (parity % 2 == 0) ? -1.0 : 1.0;
    const double residue = static_cast<double>((id + mic0_7) % 256u) / 255.0;
    return plan.f_base_hz + plan.o_ul_band_hz() + sign * g * residue;
}

double sample_center_frequency(const BitrateClass& bn, double b_ul_hz, FreqVariant variant,
                               Rng& rng) {
    const double omega = guard_halfwidth_hz(bn);
    if (2.0 * omega >= b_ul_hz) return b_ul_hz / 2.0;
    if (variant == FreqVariant::initial) return rng.uniform(omega, b_ul_hz - omega);
    return rng.uniform(b_ul_hz / 2.0, b_ul_hz - omega);
}

FreqDiffCdf::FreqDiffCdf(FreqVariant variant, double omega_i_hz, double omega_j_hz,
                         double b_ul_hz)
    : variant_(variant) {
    const double b = b_ul_hz;
    const double w_lo = std::min(omega_i_hz, omega_j_hz);
    const double w_hi = std::max(omega_i_hz, omega_j_hz);
    const bool wide_lo = 2.0 * w_lo >= b;   // the narrower-guard packet is wide
    const bool wide_hi = 2.0 * w_hi >= b;

    auto push = [&](double lo, double hi, double c0, double c1, double c2) {
        if (hi - lo > 0) segments_.push_back({lo, hi, c0, c1, c2});
    };

    if (wide_lo && wide_hi) {
        // Both centers pinned to b/2: the difference is identically zero.
        case_id_ = 1;
        atom_ = 1.0;
        support_max_ = 0.0;
        return;
    }
    if (wide_hi) {
        // One center pinned, the other uniform around b/2. The retry variant
        // gives the same law: |f - b/2| is uniform on [0, b/2 - w_lo] either way.
        case_id_ = (omega_j_hz >= omega_i_hz) ? 2 : 3;
        support_max_ = (b - 2.0 * w_lo) / 2.0;
        push(0.0, support_max_, 0.0, 2.0 / (b - 2.0 * w_lo), 0.0);
        return;
    }

    case_id_ = 4;
    if (variant_ == FreqVariant::initial) {
        // |U - V| with U, V independent uniforms centered on b/2 with spans
        // b - 2w: trapezoidal difference law.
        const double l_max = b - 2.0 * w_lo;
        const double l_min = b - 2.0 * w_hi;
        const double gap = w_hi - w_lo;
        const double m = b - omega_i_hz - omega_j_hz;  // support end
        support_max_ = m;
        push(0.0, gap, 0.0, 2.0 / l_max, 0.0);
        const double inv = 1.0 / (l_max * l_min);
        push(gap, m, -gap * gap * inv, 2.0 * m * inv, -inv);
        return;
    }

    // Retry: both uniform on the same half, [b/2, b - w]. With span lengths
    // l1 >= l2 sharing a common endpoint, |U - V| has CDF
    //   1 - [area above v=u+x] - [area below v=u-x]  over the l1 x l2 box.
    const double l1 = b / 2.0 - w_lo;
    const double l2 = b / 2.0 - w_hi;
    const double d = l1 - l2;
    support_max_ = l1;
    const double inv = 1.0 / (l1 * l2);
    const double b1 = std::min(d, l2);
    const double b2 = std::max(d, l2);
    // x below both d and l2: triangle + trapezoid regions shrink linearly.
    push(0.0, b1, 0.0, 2.0 / l1, -0.5 * inv);
    if (d < l2) {
        // Two corner triangles remain.
        push(b1, b2, 1.0 - (l1 * l1 + l2 * l2) * 0.5 * inv, (l1 + l2) * inv, -inv);
    } else if (d > l2) {
        // Only the lower trapezoid remains.
        push(b1, b2, l2 / (2.0 * l1), 1.0 / l1, 0.0);
    }
    push(b2, l1, 1.0 - l1 * l1 * 0.5 * inv, l1 * inv, -0.5 * inv);
}

double FreqDiffCdf::cdf(double x) const {
    if (x < 0) return 0.0;
    if (x >= support_max_) return 1.0;
    for (const auto& s : segments_)
        if (x < s.hi) return atom_ + s.eval(x);
    return 1.0;
}

double FreqDiffCdf::pdf(double x) const {
    if (x < 0 || x >= support_max_) return 0.0;
    for (const auto& s : segments_)
        if (x < s.hi) return s.c1 + 2.0 * s.c2 * x;
    return 0.0;
}

CdfSegment FreqDiffCdf::segment_at(double x) const {
    if (x < 0) return {-1e300, 0.0, 0.0, 0.0, 0.0};
    if (x >= support_max_) return {support_max_, 1e300, 1.0, 0.0, 0.0};
    for (const auto& s : segments_)
        if (x < s.hi) {
            CdfSegment out = s;
            out.c0 += atom_;
            return out;
        }
    return {support_max_, 1e300, 1.0, 0.0, 0.0};
}

}  // namespace nbfi
