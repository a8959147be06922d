#include "cci/radio.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cci {

double shannon_capacity(double bandwidth_hz, double signal_w, double noise_w) {
    if (!(noise_w > 0.0)) throw std::domain_error("shannon_capacity: noise must be positive");
    if (!(bandwidth_hz > 0.0)) throw std::domain_error("shannon_capacity: bandwidth must be positive");
    if (signal_w < 0.0) throw std::domain_error("shannon_capacity: negative signal");
    return bandwidth_hz * std::log2(1.0 + signal_w / noise_w);
}

double friis_received_power(double tx_power_w, double rx_directivity,
                            double tx_directivity, double distance_m,
                            double frequency_hz) {
    if (!(distance_m > 0.0)) throw std::domain_error("friis_received_power: distance must be positive");
    if (!(frequency_hz > 0.0)) throw std::domain_error("friis_received_power: frequency must be positive");
    const double ratio = speed_of_light_mps / (4.0 * std::numbers::pi * distance_m * frequency_hz);
    return tx_power_w * rx_directivity * tx_directivity * ratio * ratio;
}

double pc_capacity(const Link& link, double tx_power_w, double distance_m) {
    const double received = friis_received_power(tx_power_w, link.rx_directivity,
                                                 link.tx_directivity, distance_m,
                                                 link.frequency_hz);
    return shannon_capacity(link.bandwidth_hz, received, link.noise_w);
}

double rpf_gain(double theta_rad, double beamwidth_w) {
    if (!(beamwidth_w > 0.0)) throw std::domain_error("rpf_gain: beamwidth must be positive");
    return std::exp(-4.0 * theta_rad * theta_rad /
                    (std::numbers::sqrt2 * beamwidth_w * beamwidth_w));
}

double angle_of_reception(const Antenna& receiver, Vec2 interferer_pos) {
    if (receiver.position == interferer_pos)
        throw std::domain_error("angle_of_reception: interferer coincides with receiver");
    return angular_offset(receiver.boresight_rad, bearing(receiver.position, interferer_pos));
}

double interference_kernel(double tx_power_w, double distance_m,
                           double theta_rad, double beamwidth_w) {
    if (!(distance_m > 0.0)) throw std::domain_error("interference_kernel: distance must be positive");
    return tx_power_w * rpf_gain(theta_rad, beamwidth_w) /
           (4.0 * std::numbers::pi * distance_m * distance_m);
}

double interference_power_at(const Antenna& victim_receiver, Vec2 interferer_pos,
                             double tx_power_w) {
    const double d = distance(victim_receiver.position, interferer_pos);
    const double theta = angle_of_reception(victim_receiver, interferer_pos);
    return interference_kernel(tx_power_w, d, theta, victim_receiver.beamwidth_w);
}

double watts_to_dbm(double watts) {
    if (!(watts > 0.0)) throw std::domain_error("watts_to_dbm: power must be positive");
    return 10.0 * std::log10(watts * 1e3);
}

double dbm_to_watts(double dbm) {
    return std::pow(10.0, dbm / 10.0) * 1e-3;
}

} // namespace cci
