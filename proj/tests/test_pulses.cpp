#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qbsim/pulses.hpp"

namespace qbsim {
namespace {

ProtocolConfig random_config(std::mt19937& rng) {
  std::uniform_real_distribution<double> tau(0.0, 2.0);
  std::uniform_real_distribution<double> width(0.3, 3.0);
  std::uniform_real_distribution<double> omega0(0.2, 3.0);
  std::bernoulli_distribution coin;
  ProtocolConfig cfg = ProtocolConfig::defaults(
      coin(rng) ? Protocol::Stirap : Protocol::CdStirap,
      coin(rng) ? Direction::Charge : Direction::Discharge);
  cfg.omega0 = omega0(rng);
  cfg.width = width(rng);
  cfg.tau = tau(rng);
  const double half = default_half_window(cfg.tau, cfg.width);
  cfg.t_start = -half;
  cfg.t_end = half;
  cfg.dt = cfg.width / 2000.0;
  return cfg;
}

TEST(Pulses, EnvelopePeaksAtCenterWithConfiguredAmplitude) {
  const ProtocolConfig cfg = ProtocolConfig::defaults();
  EXPECT_DOUBLE_EQ(pump_amplitude(cfg.tau, cfg), cfg.omega0);
  EXPECT_DOUBLE_EQ(stokes_amplitude(-cfg.tau, cfg), cfg.omega0);
  EXPECT_NEAR(pump_amplitude(0.0, cfg), std::exp(-0.49), 1e-15);
  EXPECT_NEAR(stokes_amplitude(0.0, cfg), std::exp(-0.49), 1e-15);
}

TEST(Pulses, ChargeEnvelopesMirrorEachOtherInTime) {
  const ProtocolConfig cfg = ProtocolConfig::defaults();
  for (double t : {-3.3, -1.0, -0.25, 0.0, 0.4, 1.7, 4.2})
    EXPECT_DOUBLE_EQ(pump_amplitude(t, cfg), stokes_amplitude(-t, cfg));
}

TEST(Pulses, DischargeSwapsPumpAndStokes) {
  ProtocolConfig charge = ProtocolConfig::defaults();
  ProtocolConfig discharge =
      ProtocolConfig::defaults(Protocol::CdStirap, Direction::Discharge);
  for (double t : {-2.0, -0.3, 0.0, 1.1, 3.9}) {
    EXPECT_DOUBLE_EQ(pump_amplitude(t, discharge), stokes_amplitude(t, charge));
    EXPECT_DOUBLE_EQ(stokes_amplitude(t, discharge), pump_amplitude(t, charge));
  }
}

TEST(Pulses, EnvelopesPositiveAndBoundedOnWindow) {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 25; ++trial) {
    const ProtocolConfig cfg = random_config(rng);
    for (int i = 0; i <= 200; ++i) {
      const double t =
          cfg.t_start + (cfg.t_end - cfg.t_start) * static_cast<double>(i) / 200.0;
      const double p = pump_amplitude(t, cfg);
      const double s = stokes_amplitude(t, cfg);
      EXPECT_GT(p, 0.0);
      EXPECT_GT(s, 0.0);
      EXPECT_LE(p, cfg.omega0);
      EXPECT_LE(s, cfg.omega0);
    }
  }
}

TEST(Pulses, MixingAngleSweepsZeroToRightAngleWhenCharging) {
  const ProtocolConfig cfg = ProtocolConfig::defaults();
  EXPECT_LT(mixing_angle(cfg.t_start, cfg), 1e-5);
  EXPECT_GT(mixing_angle(cfg.t_end, cfg), std::numbers::pi / 2.0 - 1e-5);
  EXPECT_DOUBLE_EQ(mixing_angle(0.0, cfg), std::numbers::pi / 4.0);

  double prev = -1.0;
  for (int i = 0; i <= 2000; ++i) {
    const double t =
        cfg.t_start + (cfg.t_end - cfg.t_start) * static_cast<double>(i) / 2000.0;
    const double theta = mixing_angle(t, cfg);
    EXPECT_GE(theta, prev);
    prev = theta;
  }
}

TEST(Pulses, MixingAngleMatchesClosedFormRatio) {
  // For equal-width Gaussians the amplitude ratio is a pure exponential,
  // so theta = atan(exp(sign * 4 tau t / width^2)).
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 25; ++trial) {
    const ProtocolConfig cfg = random_config(rng);
    const double k = 4.0 * cfg.tau / (cfg.width * cfg.width);
    const double sg = direction_sign(cfg.direction);
    for (int i = 0; i <= 100; ++i) {
      const double t =
          cfg.t_start + (cfg.t_end - cfg.t_start) * static_cast<double>(i) / 100.0;
      EXPECT_NEAR(mixing_angle(t, cfg), std::atan(std::exp(sg * k * t)), 1e-12);
    }
  }
}

TEST(Pulses, MixingAngleFallbackFarOutsideThePulses) {
  // 40 widths out, both Gaussians underflow to exactly zero and the closed
  // form takes over; the angle must still saturate cleanly.
  ProtocolConfig cfg = ProtocolConfig::defaults();
  cfg.tau = 0.5;
  EXPECT_EQ(pump_amplitude(-40.0, cfg), 0.0);
  EXPECT_EQ(stokes_amplitude(-40.0, cfg), 0.0);
  EXPECT_NEAR(mixing_angle(-40.0, cfg), 0.0, 1e-12);
  EXPECT_NEAR(mixing_angle(40.0, cfg), std::numbers::pi / 2.0, 1e-12);
}

TEST(Pulses, RatePeaksAtZeroWithKnownValue) {
  const ProtocolConfig cfg = ProtocolConfig::defaults();
  EXPECT_DOUBLE_EQ(mixing_angle_rate(0.0, cfg), 1.4);  // 2 tau / width^2
  for (double t : {-2.0, -0.9, 0.4, 3.1}) {
    EXPECT_LE(std::abs(mixing_angle_rate(t, cfg)), 1.4);
    EXPECT_DOUBLE_EQ(mixing_angle_rate(t, cfg), mixing_angle_rate(-t, cfg));
  }
}

TEST(Pulses, RateMatchesCentralDifferenceOfAngle) {
  std::mt19937 rng(20240813);
  for (int trial = 0; trial < 25; ++trial) {
    const ProtocolConfig cfg = random_config(rng);
    const double h = 1e-6 * cfg.width;
    for (int i = 0; i <= 50; ++i) {
      const double t =
          cfg.t_start + (cfg.t_end - cfg.t_start) * static_cast<double>(i) / 50.0;
      const double fd =
          (mixing_angle(t + h, cfg) - mixing_angle(t - h, cfg)) / (2.0 * h);
      EXPECT_NEAR(mixing_angle_rate(t, cfg), fd, 1e-6);
    }
  }
}

TEST(Pulses, DischargeRateIsSignFlippedCharge) {
  const ProtocolConfig charge = ProtocolConfig::defaults();
  ProtocolConfig discharge = charge;
  discharge.direction = Direction::Discharge;
  for (double t : {-4.0, -1.2, 0.0, 0.8, 3.5})
    EXPECT_DOUBLE_EQ(mixing_angle_rate(t, discharge),
                     -mixing_angle_rate(t, charge));
}

TEST(Pulses, AuxiliaryAmplitudeIsExactlyTwiceTheRate) {
  std::mt19937 rng(20240814);
  for (int trial = 0; trial < 25; ++trial) {
    ProtocolConfig cfg = random_config(rng);
    cfg.protocol = Protocol::CdStirap;
    for (int i = 0; i <= 100; ++i) {
      const double t =
          cfg.t_start + (cfg.t_end - cfg.t_start) * static_cast<double>(i) / 100.0;
      EXPECT_EQ(cd_amplitude(t, cfg), 2.0 * mixing_angle_rate(t, cfg));
    }
  }
}

TEST(Pulses, AuxiliaryAmplitudeVanishesForBareProtocolAndZeroDelay) {
  ProtocolConfig bare = ProtocolConfig::defaults(Protocol::Stirap);
  ProtocolConfig zero_delay = ProtocolConfig::defaults();
  zero_delay.tau = 0.0;
  for (double t : {-3.0, 0.0, 2.2}) {
    EXPECT_EQ(cd_amplitude(t, bare), 0.0);
    EXPECT_EQ(cd_amplitude(t, zero_delay), 0.0);
    EXPECT_EQ(mixing_angle_rate(t, zero_delay), 0.0);
  }
  EXPECT_DOUBLE_EQ(cd_amplitude(0.0, ProtocolConfig::defaults()), 2.8);
}

TEST(Pulses, SampleBundlesTheIndividualFields) {
  std::mt19937 rng(20240815);
  std::uniform_real_distribution<double> times(-5.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ProtocolConfig cfg = random_config(rng);
    const double t = times(rng);
    const PulseSample s = sample_pulses(t, cfg);
    EXPECT_EQ(s.omega_p, pump_amplitude(t, cfg));
    EXPECT_EQ(s.omega_s, stokes_amplitude(t, cfg));
    EXPECT_EQ(s.omega_cd, cd_amplitude(t, cfg));
    EXPECT_EQ(s.phase, cfg.phase);
  }
}

TEST(Pulses, RmsRabiAmplitudeIdentity) {
  const ProtocolConfig cfg = ProtocolConfig::defaults();
  for (double t : {-2.5, -0.7, 0.0, 1.3}) {
    const PulseSample s = sample_pulses(t, cfg);
    const double theta = mixing_angle(t, cfg);
    const double rabi = std::hypot(s.omega_p, s.omega_s);
    EXPECT_NEAR(s.omega_p, rabi * std::sin(theta), 1e-14);
    EXPECT_NEAR(s.omega_s, rabi * std::cos(theta), 1e-14);
  }
}

}  // namespace
}  // namespace qbsim
