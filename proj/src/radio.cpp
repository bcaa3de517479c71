#include "nbfi/radio.hpp"

#include <algorithm>
#include <cmath>

#include "nbfi/errors.hpp"

namespace nbfi {

PropagationParams PropagationParams::okumura_hata(double f_mhz, double h_b_m, double h_m_m) {
    PropagationParams p;
    p.f_mhz = f_mhz;
    p.h_b_m = h_b_m;
    p.h_m_m = h_m_m;
    const double lf = std::log10(f_mhz);
    const double lhb = std::log10(h_b_m);
    const double corr = 3.2 * std::pow(std::log10(11.75 * h_m_m), 2.0) - 4.97;
    p.a_db = 69.55 + 26.16 * lf - 13.82 * lhb - corr;
    p.b_db = 44.9 - 6.55 * lhb;
    return p;
}

double sensitivity_dbm(double delta_hz, const NoiseModel& noise) {
    if (delta_hz <= 0) throw DomainError("sensitivity_dbm: delta must be positive");
    return w_to_dbm(kBoltzmann * noise.temp_k * delta_hz) + noise.n_base_db + noise.snr_ber_db;
}

double rx_power_dbm(double r_km, double e_t_dbm, const PropagationParams& prop) {
    if (r_km <= 0) throw DomainError("rx_power_dbm: distance must be positive");
    return e_t_dbm - prop.a_db - prop.b_db * std::log10(r_km);
}

double max_distance_km(const BitrateClass& bn, double e_t_dbm, double nu_db,
                       const PropagationParams& prop, double temp_k) {
    const double z_dbm = w_to_dbm(thermal_noise_w(bn.delta_hz, temp_k));
    const double exponent = (e_t_dbm - prop.a_db - z_dbm - nu_db) / prop.b_db;
    const double r = std::pow(10.0, exponent);
    if (!(r > 0) || !std::isfinite(r)) throw InfeasibleLink("max_distance_km: no positive root");
    return r;
}

double interference_power_w(double e_j_w, double delta_i_hz, double delta_j_hz,
                            double f_delta_hz) {
    const double eps_j = e_j_w / delta_j_hz;
    const double half_sum = 0.5 * (delta_i_hz + delta_j_hz);
    const double half_gap = 0.5 * std::abs(delta_i_hz - delta_j_hz);
    if (f_delta_hz >= half_sum) return 0.0;
    if (f_delta_hz <= half_gap) return eps_j * std::min(delta_i_hz, delta_j_hz);
    return eps_j * (half_sum - f_delta_hz);
}

double min_clear_offset_hz(double e_i_w, double e_j_w, double delta_i_hz,
                           double delta_j_hz, double z_i_w, double nu_lin) {
    const double headroom = e_i_w - z_i_w * nu_lin;  // max tolerable interference * nu
    if (headroom < 0)
        throw InfeasibleLink("min_clear_offset_hz: victim undecodable without interference");
    const double eps_j = e_j_w / delta_j_hz;
    const double half_sum = 0.5 * (delta_i_hz + delta_j_hz);
    const double full_overlap = eps_j * std::min(delta_i_hz, delta_j_hz);
    if (e_i_w >= (full_overlap + z_i_w) * nu_lin) return 0.0;
    const double phi = half_sum - headroom / (eps_j * nu_lin);
    return std::clamp(phi, 0.0, half_sum);
}

}  // namespace nbfi
