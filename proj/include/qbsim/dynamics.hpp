#pragma once

// Time evolution of pure states and density matrices under the driven
// three-level Hamiltonian, with per-step conservation checks and a decimated
// trajectory record.

#include <algorithm>
#include <array>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qbsim/config.hpp"
#include "qbsim/errors.hpp"
#include "qbsim/integrate.hpp"
#include "qbsim/metrics.hpp"
#include "qbsim/operators.hpp"
#include "qbsim/pulses.hpp"

namespace qbsim {

// Evolution aborts if the state norm (or density trace) drifts from 1 by
// more than this.
inline constexpr double kDriftTolerance = 1e-6;

// Trajectories are decimated so no run records more than about this many
// rows; the first and last grid nodes are always kept.
inline constexpr long kMaxTrajectoryRows = 5000;

inline Eigen::Vector3cd level_state(int level) {
  if (level < 1 || level > 3)
    throw ConfigError("level_state: level must be 1, 2, or 3");
  Eigen::Vector3cd psi = Eigen::Vector3cd::Zero();
  psi(level - 1) = 1.0;
  return psi;
}

// Charging starts from the ground level, discharging from the top level.
inline Eigen::Vector3cd initial_state(const ProtocolConfig& cfg) {
  return level_state(cfg.direction == Direction::Charge ? 1 : 3);
}

inline bool is_normalized(const Eigen::Vector3cd& psi, double tol = 1e-9) {
  return std::abs(psi.squaredNorm() - 1.0) <= tol;
}

inline bool is_valid_density(const Eigen::Matrix3cd& rho, double tol = 1e-9) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace().real() - 1.0) > tol ||
      std::abs(rho.trace().imag()) > tol)
    return false;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(rho);
  return solver.eigenvalues().minCoeff() >= -1e-10;
}

// Overlap of the state with the instantaneous dark state of the drive.
inline double dark_fidelity(const Eigen::Vector3cd& psi,
                            const PulseSample& pulse) {
  const Eigen::Vector3cd dark = eigensystem(pulse).dark;
  return std::norm(dark.dot(psi));
}

inline double dark_fidelity(const Eigen::Matrix3cd& rho,
                            const PulseSample& pulse) {
  const Eigen::Vector3cd dark = eigensystem(pulse).dark;
  return dark.dot(rho * dark).real();
}

// One recorded instant of a run.
struct TrajectorySample {
  double t = 0.0;
  std::array<double, 3> populations{};
  double energy = 0.0;
  double ergotropy = 0.0;
  double power = 0.0;            // average charging power since t_start
  double discharge_power = 0.0;  // average discharging power since t_start
  double dark_fidelity = 0.0;
  double norm_error = 0.0;       // |norm - 1| (pure) or |trace - 1| (mixed)
  double purity = 0.0;
};

struct Trajectory {
  ProtocolConfig config;
  std::vector<TrajectorySample> samples;
};

namespace detail {

inline std::string drift_message(const char* what, double t, double err) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s drifted to %.3e at t = %.6g", what, err,
                t);
  return buf;
}

struct PureEvolution {
  using State = Eigen::Vector3cd;

  static void check_initial(const State& psi) {
    if (!is_normalized(psi))
      throw ConfigError("evolve_pure: initial state is not normalized");
  }
  static State derivative(const Eigen::Matrix3cd& h, const State& psi) {
    return std::complex<double>(0.0, -1.0) * (h * psi);
  }
  static double weight_error(const State& psi) {
    return std::abs(psi.squaredNorm() - 1.0);
  }
  static double purity(const State& psi) {
    const double n = psi.squaredNorm();
    return n * n;
  }
  static double dark_projection(const State& psi, const PulseSample& pulse) {
    return qbsim::dark_fidelity(psi, pulse);
  }
  static std::array<double, 3> level_populations(const State& psi) {
    return populations(psi);
  }
  [[noreturn]] static void fail(double t, double err) {
    throw NormDrift(drift_message("state norm", t, err));
  }
};

struct DensityEvolution {
  using State = Eigen::Matrix3cd;

  static void check_initial(const State& rho) {
    if (!is_valid_density(rho))
      throw ConfigError("evolve_density: initial state is not a density matrix");
  }
  static State derivative(const Eigen::Matrix3cd& h, const State& rho) {
    return std::complex<double>(0.0, -1.0) * (h * rho - rho * h);
  }
  static double weight_error(const State& rho) {
    return std::abs(rho.trace() - std::complex<double>(1.0, 0.0));
  }
  static double purity(const State& rho) { return (rho * rho).trace().real(); }
  static double dark_projection(const State& rho, const PulseSample& pulse) {
    return qbsim::dark_fidelity(rho, pulse);
  }
  static std::array<double, 3> level_populations(const State& rho) {
    return populations(rho);
  }
  [[noreturn]] static void fail(double t, double err) {
    throw TraceDrift(drift_message("density trace", t, err));
  }
};

template <class Policy>
TrajectorySample make_sample(double t, const typename Policy::State& state,
                             const ProtocolConfig& cfg, double err) {
  const PulseSample pulse = sample_pulses(t, cfg);
  const double elapsed = t - cfg.t_start;
  TrajectorySample out;
  out.t = t;
  out.populations = Policy::level_populations(state);
  out.energy = energy(out.populations, cfg.eps);
  out.ergotropy = out.energy - cfg.eps[0];
  out.power = charging_power(out.ergotropy, elapsed);
  out.discharge_power = discharging_power(out.energy, cfg.eps, elapsed);
  out.dark_fidelity = Policy::dark_projection(state, pulse);
  out.norm_error = err;
  out.purity = Policy::purity(state);
  return out;
}

template <class Policy>
Trajectory evolve_impl(typename Policy::State state,
                       const ProtocolConfig& cfg) {
  cfg.validate();
  Policy::check_initial(state);

  const TimeGrid grid = TimeGrid::make(cfg.t_start, cfg.t_end, cfg.dt);
  const long stride = std::max(
      1L, (grid.steps + kMaxTrajectoryRows - 1) / kMaxTrajectoryRows);

  Trajectory traj;
  traj.config = cfg;
  traj.samples.reserve(static_cast<std::size_t>(grid.steps / stride) + 2);

  const auto deriv = [&cfg](double t, const typename Policy::State& s) ->
      typename Policy::State {
    return Policy::derivative(h_total(sample_pulses(t, cfg)).matrix, s);
  };

  for (long i = 0;; ++i) {
    const bool last = i == grid.steps;
    const double t = last ? cfg.t_end : grid.time_at(i);
    const double err = Policy::weight_error(state);
    if (err > kDriftTolerance) Policy::fail(t, err);
    if (i % stride == 0 || last)
      traj.samples.push_back(make_sample<Policy>(t, state, cfg, err));
    if (last) break;
    state = rk4_step(t, grid.h, state, deriv);
  }
  return traj;
}

}  // namespace detail

// Integrate i d(psi)/dt = H(t) psi over the configured window.
inline Trajectory evolve_pure(const Eigen::Vector3cd& psi0,
                              const ProtocolConfig& cfg) {
  return detail::evolve_impl<detail::PureEvolution>(psi0, cfg);
}

// Integrate i d(rho)/dt = [H(t), rho] over the configured window.
inline Trajectory evolve_density(const Eigen::Matrix3cd& rho0,
                                 const ProtocolConfig& cfg) {
  return detail::evolve_impl<detail::DensityEvolution>(rho0, cfg);
}

// Peak and final figures of merit of one charging run.
struct TrajectoryExtrema {
  double c_max = 0.0;
  double p_max = 0.0;
  double c_final = 0.0;
};

inline TrajectoryExtrema trajectory_maxima(const Trajectory& traj) {
  if (traj.samples.empty())
    throw ConfigError("trajectory_maxima: empty trajectory");
  TrajectoryExtrema out;
  out.c_max = traj.samples.front().ergotropy;
  out.p_max = traj.samples.front().power;
  for (const TrajectorySample& s : traj.samples) {
    out.c_max = std::max(out.c_max, s.ergotropy);
    out.p_max = std::max(out.p_max, s.power);
  }
  out.c_final = traj.samples.back().ergotropy;
  return out;
}

}  // namespace qbsim
