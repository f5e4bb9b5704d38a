#include "helpers.hpp"

#include "sysid/errors.hpp"
#include "sysid/theory.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sysid;
using namespace sysid::analysis;

namespace {

Matrix scalar(double v) { return Matrix::Constant(1, 1, v); }

StateSpace double_integrator() {
  Matrix A(2, 2);
  A << 1, 1, 0, 1;
  Matrix B(2, 1);
  B << 0, 1;
  Matrix C(1, 2);
  C << 1, 0;
  return StateSpace(A, B, C, scalar(0.0));
}

}  // namespace

TEST_CASE("eval_Hf examples") {
  const JordanSpec half{{{0.5, 1}}, {}};
  const HfValue cancelled = eval_Hf(MonicPolynomial({-0.5}), half, 1, NormKind::Hinf);
  CHECK_FALSE(cancelled.infinite);
  CHECK(cancelled.value == 0.0);

  const HfValue z = eval_Hf(MonicPolynomial({0.0}), half, 1, NormKind::Hinf);
  CHECK(z.value == doctest::Approx(2.0).epsilon(1e-9));
  const HfValue z2 = eval_Hf(MonicPolynomial({0.0}), half, 1, NormKind::H2);
  CHECK(z2.value == doctest::Approx(norm_constant(NormKind::H2) * std::sqrt(2.0)).epsilon(1e-9));

  const HfValue inf = eval_Hf(MonicPolynomial({0.0}), JordanSpec{{{1.0, 1}}, {}}, 1, NormKind::Hinf);
  CHECK(inf.infinite);
  CHECK(std::isinf(inf.value));
  // (z - 1) kills a size-1 block at 1 but not a size-2 one.
  CHECK_FALSE(eval_Hf(MonicPolynomial({-1.0}), JordanSpec{{{1.0, 1}}, {}}, 3, NormKind::Hinf).infinite);
  CHECK(eval_Hf(MonicPolynomial({-1.0}), JordanSpec{{{1.0, 2}}, {}}, 3, NormKind::Hinf).infinite);
  CHECK_THROWS_AS(eval_Hf(MonicPolynomial({0.0}), half, 1, NormKind::Hinf, 16), InvalidArgument);
}

TEST_CASE("k1 branches") {
  CHECK(k1(JordanSpec{{{1.0, 2}}, {}}, 2, 1, 1.0, NormKind::Hinf) == 0.0);
  // T (1 + alpha) = 20, |lambda| = 0.96 is above 1 - 1/20.
  CHECK(k1(JordanSpec{{{0.96, 1}}, {}}, 1, 10, 1.0, NormKind::Hinf) == doctest::Approx(20.0));
  CHECK(k1(JordanSpec{{{0.96, 1}}, {}}, 3, 10, 1.0, NormKind::Hinf) == doctest::Approx(80.0));
  for (Index d = 0; d <= 4; ++d) {
    CHECK(k1(JordanSpec{{{0.9, 1}}, {}}, d, 10, 1.0, NormKind::Hinf) ==
          doctest::Approx(10.0 * std::pow(2.0, static_cast<double>(d))));
  }
  CHECK_THROWS_AS(k1(JordanSpec{{{0.9, 1}}, {}}, 1, 10, 0.5, NormKind::Hinf), InvalidArgument);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = static_cast<int>(testing::uniform_int(rng, 1, 3));
    const Index d = testing::uniform_int(rng, k, 6);
    const Index T = testing::uniform_int(rng, 1, 8);
    const double alpha = testing::uniform(rng, 1.0, 3.0);
    const JordanSpec s{{{testing::uniform(rng, 0.0, 0.999), k}}, {}};
    const double kd = k;
    for (NormKind q : {NormKind::Hinf, NormKind::H2}) {
      const double e = q == NormKind::H2 ? 0.5 : 0.0;
      const double bound = kd * kd * norm_constant(q) *
                           std::pow(static_cast<double>(T) * (1.0 + alpha), kd - e) *
                           std::pow(2.0, static_cast<double>(d));
      CHECK(k1(s, d, T, alpha, q) <= bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("k2 examples") {
  CHECK(k2(JordanSpec{{{1.0, 1}}, {}}, 4.0) == doctest::Approx(2.0));
  CHECK(k2(JordanSpec{{{0.5, 1}}, {}}, 1e6) == doctest::Approx(std::sqrt(2.0)));
  CHECK(m_tilde(2, 9.0) == doctest::Approx(std::pow(9.0, 1.5) * std::numbers::e));
  double prev = 0.0;
  for (double N = 1.0; N <= 4096.0; N *= 2.0) {
    for (int k = 1; k <= 4; ++k) {
      CHECK(m_tilde(k, N) <= std::numbers::e * std::pow(N, k - 0.5) * (1.0 + 1e-12));
    }
    const double v = k2(JordanSpec{{{1.0, 3}, {0.9, 2}}, {}}, N);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(k2(JordanSpec{{{1.0, 1}}, {}}, 0.5), InvalidArgument);
}

TEST_CASE("m_constants") {
  std::mt19937_64 rng(7);
  const StateSpace s(testing::gaussian(rng, 3, 3) * 0.3, testing::gaussian(rng, 3, 2),
                     testing::gaussian(rng, 2, 3), testing::gaussian(rng, 2, 2),
                     testing::gaussian(rng, 3, 3), testing::gaussian(rng, 2, 2));
  const ComplexMatrix I = ComplexMatrix::Identity(3, 3);
  const MConstants c = m_constants(s, I, 100.0);
  CHECK(c.M0 == 0.0);
  CHECK(c.MC == doctest::Approx(op_norm(s.C())));
  CHECK(c.MB == doctest::Approx(op_norm(s.B()) + op_norm(s.Bw())));
  CHECK(c.MD == doctest::Approx(op_norm(s.D()) + op_norm(s.Dz())));
  CHECK(c.Mbar == doctest::Approx(c.MB * c.MC + c.MD));

  const StateSpace s2(s.A(), 2.0 * s.B(), s.C(), s.D(), s.Bw(), s.Dz(), Vector::Ones(3));
  const MConstants c2 = m_constants(s2, I, 100.0);
  CHECK(c2.MB - op_norm(s.Bw()) == doctest::Approx(2.0 * op_norm(s.B())));
  CHECK(c2.M0 == doctest::Approx(std::sqrt(3.0)));

  const MConstants adv = m_constants(s, I, 100.0, AdversarialDims{2, 3});
  CHECK(adv.adversarial);
  CHECK(adv.MB == doctest::Approx(op_norm(s.B()) + std::sqrt(18.0) * op_norm(s.Bw())));

  ComplexMatrix S = ComplexMatrix::Identity(3, 3);
  S(2, 2) = 0.0;
  CHECK_THROWS_AS(m_constants(s, S, 100.0), SingularSimilarity);
}

TEST_CASE("opt_hat and opt_bracket") {
  std::mt19937_64 rng(9);
  const Matrix K = testing::gaussian(rng, 20, 4);
  CHECK(opt_hat(Matrix::Zero(20, 2), K, 1.0) == doctest::Approx(0.0));
  const Matrix Y = testing::gaussian(rng, 20, 2);
  CHECK(opt_hat(Y, Matrix::Zero(20, 4), 1.0) == doctest::Approx(op_norm(Y)));
  CHECK(opt_hat(Y, K, 0.7) == doctest::Approx(opt_bracket(Y, K, 0.7).upper));
  CHECK(opt_hat(Y, K, 0.7) <= std::sqrt(2.0) * Y.norm());

  const OptBracket zero = opt_bracket(Matrix::Zero(20, 2), K, 1.0);
  CHECK(zero.upper == doctest::Approx(0.0));
  const OptBracket noK = opt_bracket(Y, Matrix::Zero(20, 4), 1.0);
  CHECK(noK.lower == doctest::Approx(op_norm(Y)));
  CHECK(noK.upper == doctest::Approx(op_norm(Y)));
  CHECK(noK.phi_star.length() == 2);
  CHECK_THROWS_AS(opt_bracket(Y, testing::gaussian(rng, 20, 3), 1.0), DimensionMismatch);
}

TEST_CASE("opt_bracket contains a grid minimum") {
  std::mt19937_64 rng(13);
  const Matrix K = testing::gaussian(rng, 6, 2);
  const Matrix Delta = testing::gaussian(rng, 6, 1);
  const double mu = 0.8;
  const OptBracket b = opt_bracket(Delta, K, mu);
  double best = std::numeric_limits<double>::infinity();
  const int steps = 400;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= steps; ++j) {
      Matrix phi(1, 2);
      phi << -4.0 + 8.0 * i / steps, -4.0 + 8.0 * j / steps;
      best = std::min(best, op_norm(Matrix(Delta - K * phi.transpose())) + mu * op_norm(phi));
    }
  }
  CHECK(b.lower <= best + 1e-12);
  CHECK(best <= b.upper + 0.1);
}

TEST_CASE("strong observability filter") {
  Matrix A(2, 2);
  A << 1, 1, 0, 1;
  Matrix C(1, 2);
  C << 1, 0;
  const StrongObservability so = strong_obs_filter(A, C, 2, 1);
  CHECK(so.rank == 2);
  CHECK(so.phi.block(1)(0, 0) == doctest::Approx(2.0));
  CHECK(so.phi.block(2)(0, 0) == doctest::Approx(-1.0));
  const StateSpace s(A, Matrix::Ones(2, 1), C, scalar(0.0));
  CHECK(testing::max_abs(c_phi(s, so.phi, 1)) <= 1e-9);

  const StrongObservability one = strong_obs_filter(scalar(1.0), scalar(1.0), 1, 3);
  CHECK(one.phi.block(1)(0, 0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(strong_obs_filter(A, Matrix::Zero(1, 2), 2, 1), NotStronglyObservable);
  CHECK_THROWS_AS(strong_obs_filter(A, C, 0, 1), InvalidArgument);
}

TEST_CASE("gramian sum") {
  const StateSpace marginal(scalar(1.0), scalar(1.0), scalar(1.0), scalar(0.0));
  for (Index N : {1, 5, 100, 1000}) {
    const double n = static_cast<double>(N);
    CHECK(gramian_sum_opnorm(marginal, N) ==
          doctest::Approx(std::sqrt((n + 1.0) * (n + 2.0) / 2.0)).epsilon(1e-12));
  }
  Vector Ns(7), vals(7);
  for (int i = 0; i < 7; ++i) {
    Ns(i) = std::pow(2.0, 8 + i);
    vals(i) = gramian_sum_opnorm(double_integrator(), static_cast<Index>(Ns(i)));
  }
  CHECK(loglog_slope(Ns, vals) == doctest::Approx(2.0).epsilon(0.05));
  CHECK_THROWS_AS(gramian_sum_opnorm(marginal, 0), InvalidArgument);
}
