#include "sysid/bench/presets.hpp"

#include "sysid/errors.hpp"

#include <random>

namespace sysid::bench {

namespace {

Matrix gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix M(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) M(r, c) = normal(rng);
  }
  return M;
}

// Unit-step discretization of a point mass observed in position.
StateSpace double_integrator() {
  Matrix A(2, 2);
  A << 1.0, 1.0, 0.0, 1.0;
  Matrix B(2, 1);
  B << 0.0, 1.0;
  Matrix C(1, 2);
  C << 1.0, 0.0;
  return StateSpace(A, B, C, Matrix::Zero(1, 1), Matrix::Identity(2, 2), Matrix::Identity(1, 1));
}

StateSpace scalar_marginal() {
  const Matrix one = Matrix::Identity(1, 1);
  return StateSpace(one, one, one, Matrix::Zero(1, 1), one, one);
}

StateSpace stable_random() {
  constexpr Index n = 3;
  std::mt19937_64 rng(20240611);
  Matrix A = gaussian(rng, n, n);
  A *= 0.5 / spectral_radius(A);
  Matrix B = gaussian(rng, n, 1);
  Matrix C = gaussian(rng, 1, n);
  return StateSpace(A, B, C, Matrix::Zero(1, 1), Matrix::Identity(n, n), Matrix::Identity(1, 1));
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"double-integrator", "scalar-marginal", "stable-random"};
}

bool is_preset(std::string_view name) {
  for (const auto& p : preset_names()) {
    if (p == name) return true;
  }
  return false;
}

StateSpace preset(std::string_view name) {
  if (name == "double-integrator") return double_integrator();
  if (name == "scalar-marginal") return scalar_marginal();
  if (name == "stable-random") return stable_random();
  throw InvalidArgument("unknown preset '" + std::string(name) + "'");
}

}  // namespace sysid::bench
