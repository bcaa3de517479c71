#pragma once

#include <array>
#include <cstddef>

namespace nbfi {

inline constexpr int kNumBn = 4;
inline constexpr int kFrameBits = 288;  // every frame is 36 bytes on air

// Per-bitrate constants of the four NB-Fi rate classes. Times are seconds,
// bandwidth is hertz, sensitivity is dBm, distances are kilometers.
struct BitrateClass {
    int bn = 0;              // 1..4
    double bitrate = 0;      // bit/s
    double delta_hz = 0;     // occupied bandwidth
    double t_data = 0;       // frame duration
    double s_crit_dbm = 0;   // nominal receiver sensitivity
    double t_delay = 0;      // start-of-frame to end of ACK wait offset
    double t_listen = 0;     // DL listen window after t_delay
    double t_rnd = 0;        // retry backoff window width
    double snr_rxtx_db = 0;  // rate-adaptation reference SNR
    double r_star_km = 0;    // nominal maximum distance

    double w_min() const { return t_delay + t_listen; }
    double w_max() const { return t_delay + t_listen + t_rnd; }
};

// The four standard classes (50/400/3200/25600 bit/s).
const std::array<BitrateClass, kNumBn>& bitrate_palette();

inline const BitrateClass& bn_class(int bn) { return bitrate_palette()[static_cast<size_t>(bn - 1)]; }

}  // namespace nbfi
