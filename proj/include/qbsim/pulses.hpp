#pragma once

// Gaussian pump/Stokes envelopes, the mixing angle they define, and the
// auxiliary counterdiabatic drive derived from its rate of change.

#include <cmath>

#include "qbsim/config.hpp"

namespace qbsim {

// Instantaneous drive amplitudes and the auxiliary-field phase at one time.
struct PulseSample {
  double omega_p = 0.0;   // pump, couples levels 1 <-> 2
  double omega_s = 0.0;   // Stokes, couples levels 2 <-> 3
  double omega_cd = 0.0;  // auxiliary drive, couples levels 1 <-> 3 (signed)
  double phase = 0.0;
};

// Gaussian envelope: peak amplitude omega0, width T, center c.
inline double gaussian_envelope(double t, double omega0, double width,
                                double center) {
  const double u = (t - center) / width;
  return omega0 * std::exp(-u * u);
}

// Pump is centered at +tau when charging and -tau when discharging; the
// Stokes pulse mirrors it, so the two swap their order in time.
inline double pump_amplitude(double t, const ProtocolConfig& cfg) {
  return gaussian_envelope(t, cfg.omega0, cfg.width,
                           direction_sign(cfg.direction) * cfg.tau);
}

inline double stokes_amplitude(double t, const ProtocolConfig& cfg) {
  return gaussian_envelope(t, cfg.omega0, cfg.width,
                           -direction_sign(cfg.direction) * cfg.tau);
}

// tan(theta) = omega_p / omega_s. For equal-width, equal-peak Gaussians the
// ratio collapses to exp(s * 4 tau t / T^2), which is used directly if both
// envelopes underflow to zero far outside the pulse region.
inline double mixing_angle(double t, const ProtocolConfig& cfg) {
  const double p = pump_amplitude(t, cfg);
  const double s = stokes_amplitude(t, cfg);
  if (p == 0.0 && s == 0.0) {
    const double k = 4.0 * cfg.tau / (cfg.width * cfg.width);
    return std::atan(std::exp(direction_sign(cfg.direction) * k * t));
  }
  return std::atan2(p, s);
}

// d(theta)/dt in closed form: s * (2 tau / T^2) * sech(4 tau t / T^2).
inline double mixing_angle_rate(double t, const ProtocolConfig& cfg) {
  const double k = 4.0 * cfg.tau / (cfg.width * cfg.width);
  return direction_sign(cfg.direction) * 0.5 * k / std::cosh(k * t);
}

// The auxiliary amplitude is exactly twice the mixing-angle rate; it is
// identically zero for the bare protocol and whenever tau = 0.
inline double cd_amplitude(double t, const ProtocolConfig& cfg) {
  if (cfg.protocol != Protocol::CdStirap) return 0.0;
  return 2.0 * mixing_angle_rate(t, cfg);
}

inline PulseSample sample_pulses(double t, const ProtocolConfig& cfg) {
  PulseSample out;
  out.omega_p = pump_amplitude(t, cfg);
  out.omega_s = stokes_amplitude(t, cfg);
  out.omega_cd = cd_amplitude(t, cfg);
  out.phase = cfg.phase;
  return out;
}

}  // namespace qbsim
