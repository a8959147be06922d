#pragma once

#include "cci/model.hpp"

namespace cci {

inline constexpr double speed_of_light_mps = 299792458.0;

// Shannon-Hartley capacity in bit/s. `signal` and `noise` in watts.
double shannon_capacity(double bandwidth_hz, double signal_w, double noise_w);

// Free-space received power (Friis). Throws std::domain_error for
// non-positive distance or frequency.
double friis_received_power(double tx_power_w, double rx_directivity,
                            double tx_directivity, double distance_m,
                            double frequency_hz);

// Capacity of a link transmitting at tx_power_w over distance_m, i.e. the
// Shannon capacity of the Friis-received signal against the link's noise.
double pc_capacity(const Link& link, double tx_power_w, double distance_m);

// Reception-pattern gain z for a signal arriving at angular offset theta_rad
// from boresight, for an antenna of width parameter beamwidth_w.
double rpf_gain(double theta_rad, double beamwidth_w);

// Angular offset between a receiving antenna's boresight and the direction
// towards an interfering transmitter, in [0, pi].
double angle_of_reception(const Antenna& receiver, Vec2 interferer_pos);

// Interference power coupled into a victim receiver: transmit power scaled by
// the receiver's angular gain and inverse-square spreading (no frequency
// term; this kernel is distinct from Friis and used only for interference).
// Throws std::domain_error for non-positive distance.
double interference_kernel(double tx_power_w, double distance_m,
                           double theta_rad, double beamwidth_w);

// Convenience composition: kernel evaluated for a concrete victim antenna and
// interferer position.
double interference_power_at(const Antenna& victim_receiver, Vec2 interferer_pos,
                             double tx_power_w);

double watts_to_dbm(double watts);
double dbm_to_watts(double dbm);

} // namespace cci
