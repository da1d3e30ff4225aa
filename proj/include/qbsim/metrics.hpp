#pragma once

// Battery observables: level populations, stored energy, extractable work
// (ergotropy), and charging/discharging power.

#include <algorithm>
#include <array>
#include <complex>

#include <Eigen/Dense>

#include "qbsim/config.hpp"

namespace qbsim {

inline std::array<double, 3> populations(const Eigen::Vector3cd& psi) {
  return {std::norm(psi(0)), std::norm(psi(1)), std::norm(psi(2))};
}

inline std::array<double, 3> populations(const Eigen::Matrix3cd& rho) {
  return {rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real()};
}

// Mean bare energy sum_n P_n eps_n.
inline double energy(const std::array<double, 3>& pops, const Spectrum& eps) {
  return pops[0] * eps[0] + pops[1] * eps[1] + pops[2] * eps[2];
}

inline double energy(const Eigen::Vector3cd& psi, const Spectrum& eps) {
  return energy(populations(psi), eps);
}

inline double energy(const Eigen::Matrix3cd& rho, const Spectrum& eps) {
  return energy(populations(rho), eps);
}

// Work extractable from a population-diagonal state: energy above the ground
// level, E - eps1.
inline double ergotropy_simple(const std::array<double, 3>& pops,
                               const Spectrum& eps) {
  return energy(pops, eps) - eps[0];
}

inline double ergotropy_simple(const Eigen::Vector3cd& psi,
                               const Spectrum& eps) {
  return energy(psi, eps) - eps[0];
}

inline double ergotropy_simple(const Eigen::Matrix3cd& rho,
                               const Spectrum& eps) {
  return energy(rho, eps) - eps[0];
}

// Work extractable from an arbitrary density matrix by unitaries:
//   W = Tr(rho H0) - sum_n r_n^down eps_n^up,
// pairing the state's spectrum sorted descending with the level energies
// sorted ascending (the passive arrangement). rho must be a valid density
// matrix (Hermitian, unit trace, nonnegative spectrum).
inline double ergotropy_general(const Eigen::Matrix3cd& rho,
                                const Spectrum& eps) {
  Spectrum level = eps;
  std::sort(level.begin(), level.end());

  std::array<double, 3> r{};
  const bool diagonal = rho(0, 1) == 0.0 && rho(0, 2) == 0.0 &&
                        rho(1, 0) == 0.0 && rho(1, 2) == 0.0 &&
                        rho(2, 0) == 0.0 && rho(2, 1) == 0.0;
  if (diagonal) {
    r = {rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real()};
    std::sort(r.begin(), r.end());
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(rho);
    const Eigen::Vector3d lam = solver.eigenvalues();  // ascending
    r = {lam(0), lam(1), lam(2)};
  }

  const double active = energy(rho, eps);
  const double passive = r[2] * level[0] + r[1] * level[1] + r[0] * level[2];
  return active - passive;
}

// Average charging power: ergotropy accumulated per unit elapsed time.
inline double charging_power(double ergotropy, double elapsed) {
  return elapsed > 0.0 ? ergotropy / elapsed : 0.0;
}

// Average discharging power: energy released from the top level per unit
// elapsed time, (eps3 - E) / elapsed.
inline double discharging_power(double mean_energy, const Spectrum& eps,
                                double elapsed) {
  return elapsed > 0.0 ? (eps[2] - mean_energy) / elapsed : 0.0;
}

// Snapshot of the battery bookkeeping at one instant of a charging run.
struct BatteryReadout {
  double energy = 0.0;
  double ergotropy = 0.0;
  double elapsed = 0.0;
  double power = 0.0;
};

inline BatteryReadout battery_readout(const std::array<double, 3>& pops,
                                      const Spectrum& eps, double elapsed) {
  BatteryReadout out;
  out.energy = energy(pops, eps);
  out.ergotropy = out.energy - eps[0];
  out.elapsed = elapsed;
  out.power = charging_power(out.ergotropy, elapsed);
  return out;
}

}  // namespace qbsim
