#pragma once

// Hamiltonians of the driven three-level ladder, their instantaneous
// eigenbasis, and the rotation into the adiabatic frame.

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "qbsim/config.hpp"
#include "qbsim/errors.hpp"
#include "qbsim/pulses.hpp"

namespace qbsim {

enum class Basis { Bare, Adiabatic };

// A 3x3 Hermitian operator tagged with the basis it is expressed in.
struct Operator3 {
  Eigen::Matrix3cd matrix = Eigen::Matrix3cd::Zero();
  Basis basis = Basis::Bare;
};

// Static Hamiltonian of the undriven battery: diag(eps1, eps2, eps3).
inline Operator3 h_bare(const Spectrum& eps) {
  Operator3 out;
  out.matrix(0, 0) = eps[0];
  out.matrix(1, 1) = eps[1];
  out.matrix(2, 2) = eps[2];
  return out;
}

// Rotating-frame two-photon-resonant drive Hamiltonian:
//   (1/2) [[0, w_p, 0], [w_p, 0, w_s], [0, w_s, 0]].
inline Operator3 h_stirap(const PulseSample& pulse) {
  Operator3 out;
  out.matrix(0, 1) = out.matrix(1, 0) = 0.5 * pulse.omega_p;
  out.matrix(1, 2) = out.matrix(2, 1) = 0.5 * pulse.omega_s;
  return out;
}

// Auxiliary 1 <-> 3 drive: (w_cd / 2) e^{i phase} in the (1,3) slot plus the
// Hermitian conjugate.
inline Operator3 h_cd(const PulseSample& pulse) {
  Operator3 out;
  const std::complex<double> upper =
      0.5 * pulse.omega_cd *
      std::complex<double>(std::cos(pulse.phase), std::sin(pulse.phase));
  out.matrix(0, 2) = upper;
  out.matrix(2, 0) = std::conj(upper);
  return out;
}

inline Operator3 h_total(const PulseSample& pulse) {
  Operator3 out;
  out.matrix = h_stirap(pulse).matrix + h_cd(pulse).matrix;
  return out;
}

// Instantaneous eigenbasis of the bare drive Hamiltonian. The dark state
// carries eigenvalue 0; the bright pair sits at -Omega/2 and +Omega/2 with
// Omega = hypot(w_p, w_s).
struct Eigensystem3 {
  double theta = 0.0;  // mixing angle, tan(theta) = w_p / w_s
  double rabi = 0.0;   // rms Rabi amplitude Omega
  double lambda_minus = 0.0;
  double lambda_zero = 0.0;
  double lambda_plus = 0.0;
  Eigen::Vector3cd minus = Eigen::Vector3cd::Zero();
  Eigen::Vector3cd dark = Eigen::Vector3cd::Zero();
  Eigen::Vector3cd plus = Eigen::Vector3cd::Zero();
};

inline Eigensystem3 eigensystem(const PulseSample& pulse) {
  const double rabi = std::hypot(pulse.omega_p, pulse.omega_s);
  if (rabi == 0.0)
    throw DegeneratePulse("eigensystem: both drive amplitudes are zero");
  Eigensystem3 out;
  out.theta = std::atan2(pulse.omega_p, pulse.omega_s);
  out.rabi = rabi;
  out.lambda_minus = -0.5 * rabi;
  out.lambda_zero = 0.0;
  out.lambda_plus = 0.5 * rabi;
  const double s = std::sin(out.theta);
  const double c = std::cos(out.theta);
  const double r = 1.0 / std::sqrt(2.0);
  out.minus << s * r, -r, c * r;
  out.dark << c, 0.0, -s;
  out.plus << s * r, r, c * r;
  return out;
}

// Orthogonal rotation whose rows are the instantaneous eigenbras in the
// order (minus, dark, plus); it maps bare-basis states into that frame.
inline Operator3 frame_transform(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3d u;
  u << s * r, -r, c * r,
       c, 0.0, -s,
       s * r, r, c * r;
  Operator3 out;
  out.matrix = u.cast<std::complex<double>>();
  out.basis = Basis::Adiabatic;
  return out;
}

// d/d(theta) of frame_transform(theta).
inline Eigen::Matrix3d frame_transform_rate(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3d du;
  du << c * r, 0.0, -s * r,
        -s, 0.0, -c,
        c * r, 0.0, -s * r;
  return du;
}

// Full drive Hamiltonian expressed in the rotating (adiabatic) frame:
//   H' = U H U^T + i theta_rate (dU/dtheta) U^T.
// Off-diagonal entries are proportional to (theta_rate - w_cd / 2), so the
// frame decouples exactly when the auxiliary drive tracks twice the
// mixing-angle rate; the diagonal is (-Omega/2, 0, +Omega/2).
inline Operator3 to_adiabatic_frame(const PulseSample& pulse,
                                    double theta_rate) {
  const double theta = std::atan2(pulse.omega_p, pulse.omega_s);
  const Eigen::Matrix3cd u = frame_transform(theta).matrix;
  const Eigen::Matrix3cd du =
      frame_transform_rate(theta).cast<std::complex<double>>();
  const std::complex<double> i_unit(0.0, 1.0);
  Operator3 out;
  out.matrix = u * h_total(pulse).matrix * u.transpose() +
               i_unit * theta_rate * (du * u.transpose());
  out.basis = Basis::Adiabatic;
  return out;
}

}  // namespace qbsim
