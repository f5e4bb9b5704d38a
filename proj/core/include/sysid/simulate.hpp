#pragma once

#include "sysid/state_space.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace sysid {

struct NoNoise {};

/// w_t ~ N(0, sigma_w^2 I), z_t ~ N(0, sigma_z^2 I), independent over t.
struct GaussianNoise {
  double sigma_w = 1.0;
  double sigma_z = 1.0;
};

/// Bounded oblivious noise: each generator is a deterministic function of t,
/// so it is trivially measurable with respect to any delayed filtration.
/// Every sample must satisfy ||w_t||^2 <= d_w and ||z_t||^2 <= d_z.
struct AdversarialNoise {
  enum class Generator { ConstantSign, SquareWave, AlignedSign };
  Generator generator = Generator::ConstantSign;
  /// Per-coordinate magnitude; values above 1 break the norm bound.
  double amplitude = 1.0;
  /// Half-period of the square wave, in steps.
  Index period = 1;
  /// Fixed directions for AlignedSign; coordinates take the sign of these.
  Vector w_direction;
  Vector z_direction;
};

using NoiseModel = std::variant<NoNoise, GaussianNoise, AdversarialNoise>;

std::string noise_name(const NoiseModel& noise);

/// Simulated sequences for t = 1..N; row t-1 holds time t.
struct Trajectory {
  Matrix u, x, y, w, z;
  std::uint64_t seed = 0;
  NoiseModel noise;

  Index N() const { return u.rows(); }
};

struct SimulateOptions {
  /// Debug switch that replaces the Gaussian inputs with u = 0.
  bool zero_input = false;
};

/// Draws u_t ~ N(0, I_p) and the requested noise, then runs the recursion.
/// Identical (sys, N, noise, seed) give bit-identical trajectories.
Trajectory simulate(const StateSpace& sys, Index N, const NoiseModel& noise,
                    std::uint64_t seed, SimulateOptions opts = {});

/// Runs the recursion on caller-supplied input and noise sequences.
Trajectory simulate_with(const StateSpace& sys, const Matrix& u, const Matrix& w,
                         const Matrix& z);

}  // namespace sysid
