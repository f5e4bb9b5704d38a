#include "sysid/theory.hpp"

#include "sysid/errors.hpp"
#include "sysid/estimators.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sysid::analysis {

namespace {

constexpr double kUnitTol = 1e-12;

bool on_unit_circle(Complex lambda) { return std::abs(std::abs(lambda) - 1.0) <= kUnitTol; }

double half_if_h2(NormKind q) { return q == NormKind::H2 ? 0.5 : 0.0; }

// Multiplicity of lambda as a root of f(z^T).
Index composed_root_order(const MonicPolynomial& f, Complex lambda, Index T) {
  if (std::abs(lambda) == 0.0) return T * f.root_order(Complex(0.0, 0.0));
  return f.root_order(std::pow(lambda, static_cast<int>(T)));
}

double vector_norm(const ComplexMatrix& v) { return v.norm(); }

}  // namespace

double norm_constant(NormKind q) {
  return q == NormKind::H2 ? std::sqrt(1.0 + 2.0 / std::numbers::pi) : 1.0;
}

double opt_hat(const Matrix& Y, const Matrix& K, double mu) {
  const Matrix phi = est::ridge(K, Y, mu);
  return op_norm(Matrix(Y - K * phi.transpose())) + mu * op_norm(phi);
}

OptBracket opt_bracket(const Matrix& Delta, const Matrix& K, double mu) {
  const Index m = Delta.cols();
  if (m < 1) throw DimensionMismatch("opt_bracket: Delta must have at least one column");
  if (K.cols() % m != 0) throw DimensionMismatch("opt_bracket: K must have L m columns");
  const Matrix phi = est::ridge(K, Delta, mu);
  const double fit = op_norm(Matrix(Delta - K * phi.transpose()));
  const double reg = mu * op_norm(phi);
  OptBracket out;
  out.lower = std::max(fit, reg);
  out.upper = fit + reg;
  out.phi_star = Filter::from_flat(phi);
  return out;
}

HfValue eval_Hf(const MonicPolynomial& f, const JordanSpec& spec, Index T, NormKind q,
                Index grid_points) {
  if (grid_points < 32) throw InvalidArgument("eval_Hf: grid_points must be >= 32");
  if (T < 1) throw InvalidArgument("eval_Hf: T must be >= 1");
  const MonicPolynomial g = f.compose_power(T);
  const double c = norm_constant(q);
  HfValue out;
  for (const auto& b : spec.blocks) {
    if (composed_root_order(f, b.lambda, T) >= b.k) continue;
    if (on_unit_circle(b.lambda)) {
      out.infinite = true;
      out.value = std::numeric_limits<double>::infinity();
      return out;
    }
    const double r = 1.0 - std::abs(b.lambda);
    double disc_max = 0.0;
    for (Index j = 0; j < grid_points; ++j) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_points);
      disc_max = std::max(disc_max, std::abs(g(b.lambda + std::polar(r, theta))));
    }
    const double k = static_cast<double>(b.k);
    const double term = c * k * k * disc_max / std::pow(r, k - half_if_h2(q));
    out.value = std::max(out.value, term);
  }
  return out;
}

double k1(const JordanSpec& spec, Index d, Index T, double alpha, NormKind q) {
  if (!(alpha >= 1.0)) throw InvalidArgument("k1: alpha must be >= 1");
  const double c = norm_constant(q);
  const double width = static_cast<double>(T) * (1.0 + alpha);
  const double threshold = 1.0 - 1.0 / width;
  const double e = half_if_h2(q);
  double out = 0.0;
  for (const auto& b : spec.blocks) {
    const double mod = std::abs(b.lambda);
    const double k = static_cast<double>(b.k);
    double branch;
    if (on_unit_circle(b.lambda)) {
      branch = 0.0;
    } else if (mod >= threshold) {
      branch = std::pow(width, k - e) * std::pow(2.0, static_cast<double>(d) - k);
    } else {
      branch = std::pow(2.0, static_cast<double>(d)) / std::pow(1.0 - mod, k - e);
    }
    out = std::max(out, k * k * c * branch);
  }
  return out;
}

double m_tilde(int k, double N) {
  if (k < 1) throw InvalidArgument("m_tilde: k must be >= 1");
  if (k == 1) return std::sqrt(N);
  const double kd = static_cast<double>(k);
  if (kd <= N + 1.0) return std::pow(N, kd - 0.5) * std::pow(std::numbers::e / (kd - 1.0), kd - 1.0);
  return std::sqrt(N) * std::pow(2.0, N);
}

double m_block(int k, Complex lambda, double N) {
  const double tilde = m_tilde(k, N);
  if (on_unit_circle(lambda)) return tilde;
  const double kd = static_cast<double>(k);
  return std::min(kd / std::pow(1.0 - std::abs(lambda), kd - 0.5), tilde);
}

double k2(const JordanSpec& spec, double N) {
  if (!(N >= 1.0)) throw InvalidArgument("k2: N must be >= 1");
  double out = 0.0;
  for (const auto& b : spec.blocks) out = std::max(out, m_block(b.k, b.lambda, N));
  return out;
}

MConstants m_constants(const StateSpace& sys, const ComplexMatrix& S, double N,
                       std::optional<AdversarialDims> adversarial) {
  const Index n = sys.n();
  if (S.rows() != n || S.cols() != n) throw DimensionMismatch("m_constants: S must be n x n");
  if (!(N >= 1.0)) throw InvalidArgument("m_constants: N must be >= 1");
  Eigen::FullPivLU<ComplexMatrix> lu(S);
  const Eigen::JacobiSVD<ComplexMatrix> svd(S);
  const auto& s = svd.singularValues();
  if (!lu.isInvertible() || s(n - 1) <= 1e-14 * s(0)) {
    throw SingularSimilarity("m_constants: similarity matrix is singular");
  }
  const ComplexMatrix Sinv = lu.inverse();
  const ComplexMatrix B = sys.B().cast<Complex>();
  const ComplexMatrix Bw = sys.Bw().cast<Complex>();
  const ComplexMatrix C = sys.C().cast<Complex>();
  const ComplexMatrix x1 = sys.x1().cast<Complex>();

  const double sb = op_norm(ComplexMatrix(Sinv * B));
  const double sbw = sys.dw() > 0 ? op_norm(ComplexMatrix(Sinv * Bw)) : 0.0;
  const double d_norm = op_norm(sys.D());
  const double dz_norm = sys.dz() > 0 ? op_norm(sys.Dz()) : 0.0;

  double tb = 1.0;
  double td = 1.0;
  MConstants out;
  if (adversarial) {
    tb = static_cast<double>(adversarial->T * adversarial->d * sys.dw());
    td = static_cast<double>(adversarial->d * sys.dz());
    out.adversarial = true;
  }
  out.M0 = vector_norm(ComplexMatrix(Sinv * x1));
  out.MC = op_norm(ComplexMatrix(C * S));
  out.MB = sb + std::sqrt(tb) * sbw;
  out.MD = d_norm + std::sqrt(td) * dz_norm;
  out.Mbar = (out.M0 / std::sqrt(N) + out.MB) * out.MC + out.MD;
  return out;
}

Matrix subsampled_observability(const Matrix& A, const Matrix& C, Index d, Index T) {
  const Index m = C.rows();
  const Matrix AT = matrix_power(A, static_cast<long>(T));
  Matrix O(d * m, A.cols());
  Matrix row = C;
  for (Index j = 0; j < d; ++j) {
    O.middleRows(j * m, m) = row;
    row = row * AT;
  }
  return O;
}

StrongObservability strong_obs_filter(const Matrix& A_plus, const Matrix& C_plus, Index d, Index T,
                                      double tol) {
  if (A_plus.rows() != A_plus.cols()) throw DimensionMismatch("strong_obs_filter: A must be square");
  if (C_plus.cols() != A_plus.rows()) throw DimensionMismatch("strong_obs_filter: C has wrong width");
  if (d < 1 || T < 1) throw InvalidArgument("strong_obs_filter: d and T must be >= 1");
  const Index m = C_plus.rows();

  StrongObservability out;
  out.rank = numerical_rank(A_plus, 1e-12);
  const Matrix O = subsampled_observability(A_plus, C_plus, d, T);
  const Vector s = singular_values(O);
  out.sigma_min = (out.rank >= 1 && out.rank <= s.size()) ? s(out.rank - 1) : 0.0;
  if (!(out.sigma_min > tol)) {
    throw NotStronglyObservable("strong_obs_filter: sigma_min=" + std::to_string(out.sigma_min) +
                                " is not above tolerance");
  }
  const Matrix target = C_plus * matrix_power(A_plus, static_cast<long>(T * d));
  const Matrix X = target * truncated_pinv(O, out.rank);  // m x d m, block j pairs with C A^{T j}
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<size_t>(d));
  for (Index l = 1; l <= d; ++l) blocks.push_back(X.middleCols((d - l) * m, m));
  out.phi = Filter(std::move(blocks));
  return out;
}

double gramian_sum_opnorm(const StateSpace& sys, Index N) {
  if (N < 1) throw InvalidArgument("gramian_sum_opnorm: N must be >= 1");
  const Index m = sys.m();
  Matrix running = Matrix::Zero(m, m);
  Matrix total = Matrix::Zero(m, m);
  Matrix AkB = sys.B();
  for (Index t = 0; t <= N; ++t) {
    const Matrix g = sys.C() * AkB;
    running.noalias() += g * g.transpose();
    total += running;
    AkB = sys.A() * AkB;
  }
  return std::sqrt(op_norm(total));
}

}  // namespace sysid::analysis
