#pragma once

// Umbrella header for the three-level battery simulator.

#include "qbsim/config.hpp"
#include "qbsim/config_io.hpp"
#include "qbsim/csv.hpp"
#include "qbsim/dynamics.hpp"
#include "qbsim/errors.hpp"
#include "qbsim/integrate.hpp"
#include "qbsim/metrics.hpp"
#include "qbsim/operators.hpp"
#include "qbsim/pulses.hpp"
#include "qbsim/selfcheck.hpp"
#include "qbsim/sweep.hpp"
