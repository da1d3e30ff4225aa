#pragma once

// Parameter sweeps: rerun the charging protocols across a grid of pulse
// delays or peak amplitudes and collect per-run figures of merit.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "qbsim/config.hpp"
#include "qbsim/dynamics.hpp"
#include "qbsim/errors.hpp"

namespace qbsim {

enum class SweepParameter { Tau, Omega0 };

inline std::string to_string(SweepParameter p) {
  return p == SweepParameter::Tau ? "tau" : "omega0";
}

// Default grids: tau in {0, 0.1, ..., 1.0} x width; omega0 in {0.2, ..., 3.0}.
inline std::vector<double> default_tau_grid(double width) {
  std::vector<double> values;
  values.reserve(11);
  for (int i = 0; i <= 10; ++i)
    values.push_back(static_cast<double>(i) / 10.0 * width);
  return values;
}

inline std::vector<double> default_omega0_grid() {
  std::vector<double> values;
  values.reserve(15);
  for (int i = 1; i <= 15; ++i)
    values.push_back(static_cast<double>(i) / 5.0);
  return values;
}

struct SweepSpec {
  SweepParameter parameter = SweepParameter::Tau;
  std::vector<double> values;
  ProtocolConfig base = ProtocolConfig::defaults();
  std::vector<Protocol> protocols{Protocol::Stirap, Protocol::CdStirap};

  void validate() const {
    base.validate();
    if (base.direction != Direction::Charge)
      throw ConfigError("sweeps are defined for charging runs");
    if (values.empty()) throw ConfigError("sweep needs at least one value");
    if (protocols.empty())
      throw ConfigError("sweep needs at least one protocol");
    for (double v : values) {
      if (!std::isfinite(v)) throw ConfigError("sweep values must be finite");
      if (parameter == SweepParameter::Tau && v < 0.0)
        throw ConfigError("tau sweep values must be >= 0");
      if (parameter == SweepParameter::Omega0 && v <= 0.0)
        throw ConfigError("omega0 sweep values must be > 0");
    }
  }
};

struct SweepRow {
  double value = 0.0;
  Protocol protocol = Protocol::Stirap;
  double c_max = 0.0;
  double p_max = 0.0;
  double c_final = 0.0;
  bool ok = false;
  std::string error;  // empty when ok
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
};

// Configuration for one grid point. A tau sweep re-derives the integration
// window for each delay so wider pulse separations stay fully covered.
inline ProtocolConfig derived_config(const SweepSpec& spec, double value,
                                     Protocol protocol) {
  ProtocolConfig cfg = spec.base;
  cfg.protocol = protocol;
  if (spec.parameter == SweepParameter::Tau) {
    cfg.tau = value;
    const double half = default_half_window(value, cfg.width);
    cfg.t_start = -half;
    cfg.t_end = half;
  } else {
    cfg.omega0 = value;
  }
  return cfg;
}

namespace detail {

inline SweepRow compute_sweep_row(const SweepSpec& spec, double value,
                                  Protocol protocol) {
  SweepRow row;
  row.value = value;
  row.protocol = protocol;
  try {
    const ProtocolConfig cfg = derived_config(spec, value, protocol);
    const Trajectory traj = evolve_pure(initial_state(cfg), cfg);
    const TrajectoryExtrema ext = trajectory_maxima(traj);
    row.c_max = ext.c_max;
    row.p_max = ext.p_max;
    row.c_final = ext.c_final;
    row.ok = true;
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace detail

// Run every (value, protocol) combination; rows keep grid order regardless
// of worker count, and a failed row is reported in place rather than
// aborting the sweep.
inline SweepResult run_sweep(const SweepSpec& spec, unsigned workers = 1) {
  spec.validate();

  SweepResult result;
  result.spec = spec;
  const std::size_t n = spec.values.size() * spec.protocols.size();
  result.rows.resize(n);

  const auto compute = [&spec, &result](std::size_t idx) {
    const std::size_t vi = idx / spec.protocols.size();
    const std::size_t pi = idx % spec.protocols.size();
    result.rows[idx] =
        detail::compute_sweep_row(spec, spec.values[vi], spec.protocols[pi]);
  };

  if (workers <= 1) {
    for (std::size_t idx = 0; idx < n; ++idx) compute(idx);
    return result;
  }

  std::atomic<std::size_t> next{0};
  const std::size_t pool_size =
      std::min<std::size_t>(workers, std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  pool.reserve(pool_size);
  for (std::size_t w = 0; w < pool_size; ++w) {
    pool.emplace_back([&compute, &next, n] {
      for (std::size_t idx; (idx = next.fetch_add(1)) < n;) compute(idx);
    });
  }
  for (std::thread& worker : pool) worker.join();
  return result;
}

}  // namespace qbsim
