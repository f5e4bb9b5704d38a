#include "helpers.hpp"

#include "sysid/estimators.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sysid;

namespace {

StateSpace double_integrator() {
  Matrix A(2, 2);
  A << 1, 1, 0, 1;
  Matrix B(2, 1);
  B << 0, 1;
  Matrix C(1, 2);
  C << 1, 0;
  return StateSpace(A, B, C, Matrix::Zero(1, 1), Matrix::Identity(2, 2), Matrix::Identity(1, 1));
}

}  // namespace

TEST_CASE("log_plus and p_tilde") {
  CHECK(est::log_plus(0.5) == 1.0);
  CHECK(est::log_plus(-1.0) == 1.0);
  CHECK(est::log_plus(std::exp(3.0)) == doctest::Approx(3.0));
  // T p small: the T branch of the min is active.
  CHECK(est::p_tilde(1, 5) == doctest::Approx(5.0));
  const double a = std::log(std::numbers::e * 200.0), b = std::log(200.0);
  CHECK(est::p_tilde(2, 100) == doctest::Approx(2.0 * std::min(100.0, a * a * b * b)));
}

TEST_CASE("single candidate") {
  const Trajectory tr = simulate(double_integrator(), 500, GaussianNoise{}, 1);
  const auto r = est::select_L(tr, 5, 1, 1.0, 0.1);
  CHECK(r.L == 1);
  CHECK(r.candidates.size() == 1);
}

TEST_CASE("zero outputs favour the shortest filter") {
  Trajectory tr = simulate(double_integrator(), 2000, GaussianNoise{}, 2);
  tr.y.setZero();
  const auto r = est::select_L(tr, 5, 4, 1.0, 0.1);
  CHECK(r.L == 1);
  for (const auto& c : r.candidates) CHECK(c.opt_hat == 0.0);
}

TEST_CASE("candidates share the same rows") {
  const Trajectory tr = simulate(double_integrator(), 3000, GaussianNoise{}, 3);
  const auto r = est::select_L(tr, 5, 3, 1.0, 0.1);
  REQUIRE(r.candidates.size() == 3);
  // Longer filters can only fit at least as well on shared rows.
  CHECK(r.candidates[1].opt_hat <= r.candidates[0].opt_hat * (1.0 + 1e-9) + 1.0);
  for (const auto& c : r.candidates) {
    CHECK(c.conf > 0.0);
    CHECK(std::isfinite(c.admissibility_lhs));
  }
}

TEST_CASE("double integrator selects a filter long enough for the Jordan block") {
  std::vector<double> picks;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    const Trajectory tr = simulate(double_integrator(), 1 << 14, GaussianNoise{}, seed);
    picks.push_back(static_cast<double>(est::select_L(tr, 5, 5, 1.0, 0.1).L));
  }
  CHECK(median(Eigen::Map<Vector>(picks.data(), static_cast<Index>(picks.size()))) >= 2.0);
}

TEST_CASE("empty admissible set falls back with a warning") {
  const Trajectory tr = simulate(double_integrator(), 60, GaussianNoise{}, 4);
  est::SelectLOptions opts;
  opts.C1 = 1e6;
  const auto r = est::select_L(tr, 5, 3, 1.0, 0.1, opts);
  CHECK(r.admissible_set_empty);
  CHECK_FALSE(r.warning.empty());
  CHECK(r.L >= 1);
}
