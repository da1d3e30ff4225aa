#pragma once

// Exception types thrown by the simulation library.

#include <stdexcept>
#include <string>

namespace qbsim {

// Invalid or inconsistent configuration (bad grids, non-finite values,
// unsorted spectra, malformed config files).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Both drive amplitudes vanished where an instantaneous eigenbasis was
// requested; the bright/dark decomposition is undefined there.
class DegeneratePulse : public std::runtime_error {
 public:
  explicit DegeneratePulse(const std::string& what) : std::runtime_error(what) {}
};

// State norm left the unit sphere beyond the integrator tolerance.
class NormDrift : public std::runtime_error {
 public:
  explicit NormDrift(const std::string& what) : std::runtime_error(what) {}
};

// Density-matrix trace drifted away from one during propagation.
class TraceDrift : public std::runtime_error {
 public:
  explicit TraceDrift(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbsim
