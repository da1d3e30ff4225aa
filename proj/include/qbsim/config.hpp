#pragma once

// Run configuration for the three-level battery protocols.

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qbsim/errors.hpp"

namespace qbsim {

enum class Protocol { Stirap, CdStirap };
enum class Direction { Charge, Discharge };

// Bare level energies (epsilon_1, epsilon_2, epsilon_3), nondecreasing.
using Spectrum = std::array<double, 3>;

inline constexpr Spectrum kDefaultSpectrum{0.0, 1.0, 1.95};

// +1 for charging pulse order (Stokes before pump), -1 for discharging.
inline double direction_sign(Direction d) {
  return d == Direction::Charge ? 1.0 : -1.0;
}

// Half-width of the default integration window for a given pulse geometry:
// wide enough that both Gaussians are negligible at the edges.
inline double default_half_window(double tau, double width) {
  return tau + 4.0 * width;
}

struct ProtocolConfig {
  Protocol protocol = Protocol::CdStirap;
  Direction direction = Direction::Charge;
  double omega0 = 1.0;           // peak Rabi amplitude of pump/Stokes
  double width = 1.0;            // Gaussian envelope width T
  double tau = 0.7;              // pulse-center offset from t = 0
  Spectrum eps = kDefaultSpectrum;
  double phase = std::numbers::pi / 2.0;  // phase of the auxiliary 1<->3 drive
  double t_start = -4.7;
  double t_end = 4.7;
  double dt = 1.0 / 2000.0;      // integrator step (width / 2000 by default)

  // Fully derived default configuration for a protocol/direction pair.
  static ProtocolConfig defaults(Protocol protocol = Protocol::CdStirap,
                                 Direction direction = Direction::Charge) {
    ProtocolConfig cfg;
    cfg.protocol = protocol;
    cfg.direction = direction;
    cfg.tau = 0.7 * cfg.width;
    const double half = default_half_window(cfg.tau, cfg.width);
    cfg.t_start = -half;
    cfg.t_end = half;
    cfg.dt = cfg.width / 2000.0;
    return cfg;
  }

  void validate() const {
    if (!std::isfinite(omega0) || omega0 <= 0.0)
      throw ConfigError("omega0 must be finite and > 0");
    if (!std::isfinite(width) || width <= 0.0)
      throw ConfigError("width must be finite and > 0");
    if (!std::isfinite(tau) || tau < 0.0)
      throw ConfigError("tau must be finite and >= 0");
    for (double e : eps)
      if (!std::isfinite(e)) throw ConfigError("eps entries must be finite");
    if (!(eps[0] <= eps[1] && eps[1] <= eps[2]))
      throw ConfigError("eps must be nondecreasing");
    if (!std::isfinite(phase)) throw ConfigError("phase must be finite");
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || t_start >= t_end)
      throw ConfigError("time window requires t_start < t_end");
    if (!std::isfinite(dt) || dt <= 0.0)
      throw ConfigError("dt must be finite and > 0");
    if (dt > t_end - t_start)
      throw ConfigError("dt must not exceed the time window");
  }
};

inline std::string to_string(Protocol p) {
  return p == Protocol::Stirap ? "stirap" : "cdstirap";
}

inline std::string to_string(Direction d) {
  return d == Direction::Charge ? "charge" : "discharge";
}

}  // namespace qbsim
