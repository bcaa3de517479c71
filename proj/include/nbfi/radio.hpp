#pragma once

#include "nbfi/bitrate.hpp"
#include "nbfi/units.hpp"

namespace nbfi {

// Log-distance propagation E(r) = e_t - a_db - b_db*log10(r_km).
//
// a_db/b_db default to the Okumura-Hata urban (large city) form:
//   A = 69.55 + 26.16 log10 f - 13.82 log10 hB - (3.2 (log10(11.75 hM))^2 - 4.97)
//   B = 44.9 - 6.55 log10 hB
// which reproduces the nominal per-class maximum distances within 2%.
struct PropagationParams {
    double a_db = 0;
    double b_db = 0;
    double f_mhz = 868.8;
    double h_b_m = 30.0;
    double h_m_m = 1.0;

    static PropagationParams okumura_hata(double f_mhz = 868.8, double h_b_m = 30.0,
                                          double h_m_m = 1.0);
};

struct NoiseModel {
    double temp_k = 290.0;
    double n_base_db = 2.0;
    double snr_ber_db = 5.0;
};

// Required receiver sensitivity for a band of width delta_hz, in dBm.
double sensitivity_dbm(double delta_hz, const NoiseModel& noise = NoiseModel{});

// Received power at distance r_km for transmit power e_t_dbm.
double rx_power_dbm(double r_km, double e_t_dbm, const PropagationParams& prop);

// Thermal noise power in a band of width delta_hz, watts.
inline double thermal_noise_w(double delta_hz, double temp_k = 290.0) {
    return kBoltzmann * temp_k * delta_hz;
}

// Largest distance at which class bn still reaches SINR nu_db against thermal
// noise alone: the root of E(r) = Z + nu. Throws InfeasibleLink if none.
double max_distance_km(const BitrateClass& bn, double e_t_dbm, double nu_db,
                       const PropagationParams& prop, double temp_k = 290.0);

// Power that a transmission of width delta_j_hz and total power e_j_w leaks
// into a victim band of width delta_i_hz when the centers differ by
// f_delta_hz. Rectangular spectra: the overlap width times the interferer's
// spectral density.
double interference_power_w(double e_j_w, double delta_i_hz, double delta_j_hz,
                            double f_delta_hz);

// Smallest center-frequency offset at which the victim (power e_i_w, band
// delta_i) decodes against an interferer (power e_j_w, band delta_j) and
// thermal noise z_i_w at linear SINR threshold nu_lin. Zero when even full
// overlap is survivable. Throws InfeasibleLink when the victim cannot be
// received even interference-free (e_i < z_i*nu).
double min_clear_offset_hz(double e_i_w, double e_j_w, double delta_i_hz,
                           double delta_j_hz, double z_i_w, double nu_lin);

}  // namespace nbfi
