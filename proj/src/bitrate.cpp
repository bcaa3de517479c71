#include "nbfi/bitrate.hpp"

namespace nbfi {

const std::array<BitrateClass, kNumBn>& bitrate_palette() {
    // bn, bitrate, delta, t_data, s_crit, t_delay, t_listen, t_rnd, snr_rxtx, r_star
    static const std::array<BitrateClass, kNumBn> palette = {{
        {1, 50.0, 50.0, 5.760, -150.0, 5.900, 60.0, 5.0, 0.0, 10.869},
        {2, 400.0, 400.0, 0.720, -141.0, 0.740, 30.0, 1.0, 9.0, 6.023},
        {3, 3200.0, 3200.0, 0.090, -132.0, 0.095, 6.0, 0.1, 18.0, 3.337},
        {4, 25600.0, 25600.0, 0.01125, -123.0, 0.015, 6.0, 0.1, 27.0, 1.849},
    }};
    return palette;
}

}  // namespace nbfi
