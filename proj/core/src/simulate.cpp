#include "sysid/simulate.hpp"

#include "sysid/errors.hpp"

#include <cmath>
#include <random>
#include <string>

namespace sysid {

namespace {

constexpr double kBoundSlack = 1e-12;

Vector adversarial_sample(const AdversarialNoise& adv, Index t, Index dim, const Vector& dir) {
  Vector v(dim);
  switch (adv.generator) {
    case AdversarialNoise::Generator::ConstantSign:
      v.setConstant(adv.amplitude);
      break;
    case AdversarialNoise::Generator::SquareWave: {
      const Index half = std::max<Index>(adv.period, 1);
      const double sign = ((t - 1) / half) % 2 == 0 ? 1.0 : -1.0;
      v.setConstant(sign * adv.amplitude);
      break;
    }
    case AdversarialNoise::Generator::AlignedSign: {
      if (dir.size() != dim) {
        throw DimensionMismatch("AlignedSign: direction length must equal noise dimension");
      }
      for (Index i = 0; i < dim; ++i) v(i) = (dir(i) >= 0.0 ? 1.0 : -1.0) * adv.amplitude;
      break;
    }
  }
  if (v.squaredNorm() > static_cast<double>(dim) + kBoundSlack) {
    throw NoiseBoundViolation("adversarial sample at t=" + std::to_string(t) +
                              " has squared norm " + std::to_string(v.squaredNorm()) +
                              " > " + std::to_string(dim));
  }
  return v;
}

}  // namespace

std::string noise_name(const NoiseModel& noise) {
  struct {
    std::string operator()(const NoNoise&) const { return "none"; }
    std::string operator()(const GaussianNoise&) const { return "gaussian"; }
    std::string operator()(const AdversarialNoise& a) const {
      switch (a.generator) {
        case AdversarialNoise::Generator::ConstantSign: return "adversarial:constant-sign";
        case AdversarialNoise::Generator::SquareWave: return "adversarial:square-wave";
        case AdversarialNoise::Generator::AlignedSign: return "adversarial:aligned-sign";
      }
      return "adversarial";
    }
  } visitor;
  return std::visit(visitor, noise);
}

Trajectory simulate_with(const StateSpace& sys, const Matrix& u, const Matrix& w,
                         const Matrix& z) {
  const Index N = u.rows();
  if (N < 1) throw InvalidArgument("simulate: N must be >= 1");
  if (u.cols() != sys.p() || w.rows() != N || w.cols() != sys.dw() || z.rows() != N ||
      z.cols() != sys.dz()) {
    throw DimensionMismatch("simulate_with: input/noise sequences do not match the system");
  }
  Trajectory traj;
  traj.u = u;
  traj.w = w;
  traj.z = z;
  traj.x.resize(N, sys.n());
  traj.y.resize(N, sys.m());
  Vector x = sys.x1();
  for (Index t = 0; t < N; ++t) {
    traj.x.row(t) = x.transpose();
    Vector y = sys.C() * x + sys.D() * u.row(t).transpose();
    if (sys.dz() > 0) y.noalias() += sys.Dz() * z.row(t).transpose();
    traj.y.row(t) = y.transpose();
    Vector next = sys.A() * x + sys.B() * u.row(t).transpose();
    if (sys.dw() > 0) next.noalias() += sys.Bw() * w.row(t).transpose();
    x = std::move(next);
  }
  return traj;
}

Trajectory simulate(const StateSpace& sys, Index N, const NoiseModel& noise, std::uint64_t seed,
                    SimulateOptions opts) {
  if (N < 1) throw InvalidArgument("simulate: N must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Matrix u = Matrix::Zero(N, sys.p());
  Matrix w = Matrix::Zero(N, sys.dw());
  Matrix z = Matrix::Zero(N, sys.dz());

  const auto* gauss = std::get_if<GaussianNoise>(&noise);
  const auto* adv = std::get_if<AdversarialNoise>(&noise);
  if (adv && adv->period < 1) throw InvalidArgument("AdversarialNoise: period must be >= 1");

  // Draw order per step is fixed: u_t, then w_t, then z_t.
  for (Index t = 0; t < N; ++t) {
    for (Index i = 0; i < sys.p(); ++i) {
      const double g = normal(rng);
      u(t, i) = opts.zero_input ? 0.0 : g;
    }
    if (gauss) {
      for (Index i = 0; i < sys.dw(); ++i) w(t, i) = gauss->sigma_w * normal(rng);
      for (Index i = 0; i < sys.dz(); ++i) z(t, i) = gauss->sigma_z * normal(rng);
    } else if (adv) {
      if (sys.dw() > 0) w.row(t) = adversarial_sample(*adv, t + 1, sys.dw(), adv->w_direction);
      if (sys.dz() > 0) z.row(t) = adversarial_sample(*adv, t + 1, sys.dz(), adv->z_direction);
    }
  }

  Trajectory traj = simulate_with(sys, u, w, z);
  traj.seed = seed;
  traj.noise = noise;
  return traj;
}

}  // namespace sysid
