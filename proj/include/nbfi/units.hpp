#pragma once

#include <cmath>

// Unit discipline: everything internal is SI (seconds, hertz, watts, meters
// where it matters). dBm and kilometers appear only at API boundaries.

namespace nbfi {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K

inline double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double w_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }

inline double lin_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace nbfi
