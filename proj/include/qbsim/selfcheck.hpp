#pragma once

// Built-in validation suite: closed-form oracles and cross-checks that guard
// the integrator, the pulse definitions, and the adiabatic-frame algebra.
// The injection knobs in SelfCheckOptions exist so tests can verify that a
// broken setup is actually caught; production callers use the defaults.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qbsim/config.hpp"
#include "qbsim/dynamics.hpp"
#include "qbsim/integrate.hpp"
#include "qbsim/metrics.hpp"
#include "qbsim/operators.hpp"
#include "qbsim/pulses.hpp"

namespace qbsim {

struct SelfCheckOptions {
  // Scales the auxiliary drive fed to the frame-decoupling check; anything
  // but 1.0 must make that check fail.
  double cd_field_scale = 1.0;
  // Overrides the integrator step of the conservation checks; 0 keeps the
  // default (width / 2000).
  double dt_override = 0.0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.passed) return false;
  return true;
}

namespace detail {

inline std::string measured(double value, double tol) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "max deviation %.3e (tolerance %.1e)", value,
                tol);
  return buf;
}

// Two-level Rabi oracle: constant pump drive, P2(t) = sin^2(Omega t / 2).
inline CheckResult check_rabi_oracle() {
  constexpr double kTol = 1e-6;
  const double omega = 1.0;
  Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
  h(0, 1) = h(1, 0) = 0.5 * omega;
  const auto deriv = [&h](double, const Eigen::Vector3cd& s) {
    return Eigen::Vector3cd(std::complex<double>(0.0, -1.0) * (h * s));
  };

  Eigen::Vector3cd psi = level_state(1);
  const double step = 1e-3;
  double worst = 0.0;
  for (long i = 1; i <= 4000; ++i) {
    psi = rk4_step(static_cast<double>(i - 1) * step, step, psi, deriv);
    const double t = static_cast<double>(i) * step;
    const double expected = std::pow(std::sin(0.5 * omega * t), 2);
    worst = std::max(worst, std::abs(std::norm(psi(1)) - expected));
  }
  return {"rabi-oscillation", worst < kTol, measured(worst, kTol)};
}

inline CheckResult check_norm_conservation(double dt_override) {
  constexpr double kTol = 1e-9;
  ProtocolConfig cfg = ProtocolConfig::defaults();
  if (dt_override > 0.0) cfg.dt = dt_override;
  try {
    const Trajectory traj = evolve_pure(initial_state(cfg), cfg);
    double worst = 0.0;
    for (const TrajectorySample& s : traj.samples)
      worst = std::max(worst, s.norm_error);
    return {"norm-conservation", worst < kTol, measured(worst, kTol)};
  } catch (const NormDrift& e) {
    return {"norm-conservation", false, e.what()};
  }
}

inline CheckResult check_trace_conservation(double dt_override) {
  constexpr double kTol = 1e-9;
  ProtocolConfig cfg = ProtocolConfig::defaults();
  if (dt_override > 0.0) cfg.dt = dt_override;
  const Eigen::Vector3cd psi = initial_state(cfg);
  try {
    const Trajectory traj = evolve_density(psi * psi.adjoint(), cfg);
    double worst = 0.0;
    for (const TrajectorySample& s : traj.samples)
      worst = std::max(worst, s.norm_error);
    return {"trace-conservation", worst < kTol, measured(worst, kTol)};
  } catch (const TraceDrift& e) {
    return {"trace-conservation", false, e.what()};
  }
}

// A pure run and the density-matrix run started from the same projector must
// produce the same populations at every recorded node.
inline CheckResult check_pure_density_agreement(double dt_override) {
  constexpr double kTol = 1e-8;
  ProtocolConfig cfg = ProtocolConfig::defaults();
  if (dt_override > 0.0) cfg.dt = dt_override;
  const Eigen::Vector3cd psi = initial_state(cfg);
  try {
    const Trajectory pure = evolve_pure(psi, cfg);
    const Trajectory mixed = evolve_density(psi * psi.adjoint(), cfg);
    if (pure.samples.size() != mixed.samples.size())
      return {"pure-density-agreement", false, "sample counts differ"};
    double worst = 0.0;
    for (std::size_t i = 0; i < pure.samples.size(); ++i)
      for (int n = 0; n < 3; ++n)
        worst = std::max(worst,
                         std::abs(pure.samples[i].populations[n] -
                                  mixed.samples[i].populations[n]));
    return {"pure-density-agreement", worst < kTol, measured(worst, kTol)};
  } catch (const std::exception& e) {
    return {"pure-density-agreement", false, e.what()};
  }
}

// The auxiliary amplitude must equal twice the mixing-angle rate; the rate
// is checked against a central difference of the angle itself.
inline CheckResult check_cd_tracks_angle_rate() {
  constexpr double kTol = 1e-6;
  const ProtocolConfig cfg = ProtocolConfig::defaults();
  const double h = 1e-6 * cfg.width;
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double t =
        cfg.t_start + (cfg.t_end - cfg.t_start) * static_cast<double>(i) / 2000.0;
    const double fd =
        (mixing_angle(t + h, cfg) - mixing_angle(t - h, cfg)) / (2.0 * h);
    worst = std::max(worst, std::abs(cd_amplitude(t, cfg) - 2.0 * fd));
  }
  return {"cd-tracks-angle-rate", worst < kTol, measured(worst, kTol)};
}

// With the auxiliary drive at exactly twice the mixing-angle rate, the
// adiabatic-frame Hamiltonian must be diagonal to rounding error.
inline CheckResult check_frame_decoupling(double cd_field_scale) {
  constexpr double kTol = 1e-10;
  const ProtocolConfig cfg = ProtocolConfig::defaults();
  double worst = 0.0;
  for (int i = 0; i <= 999; ++i) {
    const double t =
        cfg.t_start + (cfg.t_end - cfg.t_start) * static_cast<double>(i) / 999.0;
    PulseSample pulse = sample_pulses(t, cfg);
    pulse.omega_cd *= cd_field_scale;
    const Eigen::Matrix3cd hp =
        to_adiabatic_frame(pulse, mixing_angle_rate(t, cfg)).matrix;
    const double rabi = std::hypot(pulse.omega_p, pulse.omega_s);
    const double off =
        std::max({std::abs(hp(0, 1)), std::abs(hp(0, 2)), std::abs(hp(1, 2))});
    worst = std::max(worst, off / rabi);
  }
  return {"frame-decoupling", worst < kTol, measured(worst, kTol)};
}

}  // namespace detail

inline std::vector<CheckResult> run_self_checks(
    const SelfCheckOptions& opts = {}) {
  std::vector<CheckResult> results;
  results.push_back(detail::check_rabi_oracle());
  results.push_back(detail::check_norm_conservation(opts.dt_override));
  results.push_back(detail::check_trace_conservation(opts.dt_override));
  results.push_back(detail::check_pure_density_agreement(opts.dt_override));
  results.push_back(detail::check_cd_tracks_angle_rate());
  results.push_back(detail::check_frame_decoupling(opts.cd_field_scale));
  return results;
}

}  // namespace qbsim
