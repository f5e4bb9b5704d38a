#include "helpers.hpp"

#include "sysid/errors.hpp"
#include "sysid/regression.hpp"

#include <doctest.h>

using namespace sysid;

namespace {

Trajectory random_trajectory(Index N, Index p, Index m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const StateSpace s = testing::random_system(rng, 3, p, m, 0.9);
  return simulate(s, N, NoNoise{}, seed);
}

}  // namespace

TEST_CASE("smallest case: L = T = 1, N1 = 2") {
  const Trajectory tr = random_trajectory(10, 1, 1, 1);
  const auto d = est::build_regression_data(tr, 1, 1, 2);
  CHECK(d.rows() == 9);
  for (Index i = 0; i < d.rows(); ++i) {
    const Index t = 2 + i;  // 1-indexed time
    CHECK(d.Ubar(i, 0) == tr.u(t - 1, 0));
    CHECK(d.K(i, 0) == tr.y(t - 2, 0));
    CHECK(d.Y(i, 0) == tr.y(t - 1, 0));
  }
}

TEST_CASE("input blocks are in decreasing time order") {
  const Trajectory tr = random_trajectory(20, 1, 1, 2);
  const auto d = est::build_regression_data(tr, 2, 1);
  CHECK(d.N1 == 3);
  for (Index i = 0; i < d.rows(); ++i) {
    const Index t = d.N1 + i;
    CHECK(d.Ubar(i, 0) == tr.u(t - 1, 0));
    CHECK(d.Ubar(i, 1) == tr.u(t - 2, 0));
  }
}

TEST_CASE("features and inputs round-trip bit-exactly") {
  const Index T = 3, L = 2, p = 2, m = 2;
  const Trajectory tr = random_trajectory(60, p, m, 3);
  const auto d = est::build_regression_data(tr, T, L, 10);
  CHECK(d.rows() == 51);
  CHECK(d.Ubar.cols() == T * p);
  CHECK(d.K.cols() == L * m);
  for (Index i = 0; i < d.rows(); ++i) {
    const Index t = d.N1 + i;
    for (Index j = 0; j < T; ++j) {
      CHECK(d.Ubar.row(i).segment(j * p, p) == tr.u.row(t - 1 - j));
    }
    for (Index l = 1; l <= L; ++l) {
      CHECK(d.K.row(i).segment((l - 1) * m, m) == tr.y.row(t - 1 - l * T));
    }
  }
}

TEST_CASE("index preconditions") {
  const Trajectory tr = random_trajectory(30, 1, 1, 4);
  CHECK_THROWS_AS(est::build_regression_data(tr, 2, 3, 6), IndexUnderflow);
  CHECK_NOTHROW(est::build_regression_data(tr, 2, 3, 7));
  CHECK_THROWS_AS(est::build_regression_data(tr, 2, 3, 31), InvalidArgument);
}
