#pragma once

// Plain-text CSV emission for trajectories and sweep tables. All numbers are
// printed with %.15g so reruns of the same build are byte-identical.

#include <cstdio>
#include <ostream>
#include <string>

#include "qbsim/dynamics.hpp"
#include "qbsim/sweep.hpp"

namespace qbsim {

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  const bool discharge = traj.config.direction == Direction::Discharge;
  os << "t,P1,P2,P3,energy,ergotropy,power,dark_fidelity,norm_error";
  if (discharge) os << ",discharge_power";
  os << "\n";
  for (const TrajectorySample& s : traj.samples) {
    os << format_double(s.t) << ',' << format_double(s.populations[0]) << ','
       << format_double(s.populations[1]) << ','
       << format_double(s.populations[2]) << ',' << format_double(s.energy)
       << ',' << format_double(s.ergotropy) << ',' << format_double(s.power)
       << ',' << format_double(s.dark_fidelity) << ','
       << format_double(s.norm_error);
    if (discharge) os << ',' << format_double(s.discharge_power);
    os << "\n";
  }
}

inline void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "param,value,protocol,C_max,P_max,C_final,status\n";
  const std::string param = to_string(result.spec.parameter);
  for (const SweepRow& row : result.rows) {
    os << param << ',' << format_double(row.value) << ','
       << to_string(row.protocol) << ',';
    if (row.ok) {
      os << format_double(row.c_max) << ',' << format_double(row.p_max) << ','
         << format_double(row.c_final) << ",ok\n";
    } else {
      os << ",,,failed\n";
    }
  }
}

}  // namespace qbsim
