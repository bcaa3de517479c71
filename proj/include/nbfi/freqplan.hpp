#pragma once

#include <cstdint>
#include <vector>

#include "nbfi/bitrate.hpp"
#include "nbfi/rng.hpp"

namespace nbfi {

// Operator-side subband description. The subband width is 6400*2^w_ul and its
// center sits at f_base + b_ul*o_ul.
struct SubbandPlan {
    double f_base_hz = 868.8e6;
    int w_ul = 3;   // 0..7
    int o_ul = 0;   // -63..63

    double b_ul_hz() const { return 6400.0 * static_cast<double>(1 << w_ul); }
    double o_ul_band_hz() const { return b_ul_hz() * o_ul; }

    void validate() const;
};

// Guard half-width keeping a packet's occupied band plus margin inside the
// subband: delta + 1000 Hz.
inline double guard_halfwidth_hz(const BitrateClass& bn) { return bn.delta_hz + 1000.0; }

// Deterministic center frequency of an UL frame per the standard: the frame
// parity picks the subband half, (id + mic) mod 256 the position within it.
// Returns an absolute frequency.
double ul_center_frequency(const SubbandPlan& plan, const BitrateClass& bn, int parity,
                           std::uint32_t id, std::uint32_t mic0_7);

enum class FreqVariant { initial, retry };

// Continuous-model draw of a center frequency, relative to the subband start
// (so the result lies in (0, b_ul)). Initial attempts are uniform over the
// whole guarded span; retries are confined to one half of the subband.
double sample_center_frequency(const BitrateClass& bn, double b_ul_hz, FreqVariant variant,
                               Rng& rng);

// One piece of a piecewise-quadratic CDF: value c0 + c1 x + c2 x^2 on [lo, hi).
struct CdfSegment {
    double lo, hi;
    double c0, c1, c2;

    double eval(double x) const { return c0 + x * (c1 + x * c2); }
};

// Distribution of |f_i - f_j| for two overlapping packets, with both centers
// drawn by the continuous model. The retry variant places both packets in the
// same subband half. Wholly determined by the two guard half-widths and the
// subband width.
class FreqDiffCdf {
public:
    FreqDiffCdf(FreqVariant variant, double omega_i_hz, double omega_j_hz, double b_ul_hz);

    double cdf(double x) const;
    double pdf(double x) const;  // density of the continuous part
    double atom_at_zero() const { return atom_; }
    double support_max() const { return support_max_; }
    int case_id() const { return case_id_; }
    FreqVariant variant() const { return variant_; }
    const std::vector<CdfSegment>& segments() const { return segments_; }

    // Segment covering x, with the regions below 0 and above the support
    // folded into constant segments. Used by the quadrature kernels.
    CdfSegment segment_at(double x) const;

private:
    FreqVariant variant_;
    int case_id_ = 0;
    double atom_ = 0.0;
    double support_max_ = 0.0;
    std::vector<CdfSegment> segments_;
};

}  // namespace nbfi
