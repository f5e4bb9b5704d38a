#include "sysid/estimators.hpp"

#include "sysid/errors.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace sysid::est {

namespace {

Matrix filter_matrix_for(const RegressionData& data, const Filter& phi) {
  if (phi.m() != data.m) throw DimensionMismatch("filter block size does not match m");
  if (phi.length() > data.L) {
    throw DimensionMismatch("filter has " + std::to_string(phi.length()) +
                            " blocks but the features only hold " + std::to_string(data.L));
  }
  return phi.extended(data.L).flat();
}

}  // namespace

Matrix ridge(const Matrix& K, const Matrix& A, double mu) {
  if (!(mu > 0.0)) throw InvalidArgument("ridge: mu must be positive");
  if (K.rows() != A.rows()) throw DimensionMismatch("ridge: K and A must have equal rows");
  const Index n = K.rows();
  const Index d = K.cols();
  Matrix stacked(n + d, d);
  stacked.topRows(n) = K;
  stacked.bottomRows(d) = mu * Matrix::Identity(d, d);
  Matrix rhs = Matrix::Zero(n + d, A.cols());
  rhs.topRows(n) = A;
  Eigen::HouseholderQR<Matrix> qr(stacked);
  const Matrix X = qr.solve(rhs);  // d x cols(A)
  return X.transpose();
}

Matrix ridge_closed_form(const Matrix& K, const Matrix& A, double mu) {
  if (!(mu > 0.0)) throw InvalidArgument("ridge_closed_form: mu must be positive");
  if (K.rows() != A.rows()) throw DimensionMismatch("ridge_closed_form: row mismatch");
  Matrix gram = K.transpose() * K;
  gram.diagonal().array() += mu * mu;
  const Matrix X = gram.ldlt().solve(K.transpose() * A);
  return X.transpose();
}

MarkovMatrix regress_on_inputs(const RegressionData& data, const Matrix& target,
                               OlsOptions opts) {
  const Index rows = data.Ubar.rows();
  const Index cols = data.Ubar.cols();
  if (target.rows() != rows) throw DimensionMismatch("regress_on_inputs: row mismatch");
  if (rows < cols) {
    throw RankDeficient("regress_on_inputs: fewer rows (" + std::to_string(rows) +
                        ") than regressors (" + std::to_string(cols) + ")");
  }
  Eigen::HouseholderQR<Matrix> qr(data.Ubar);
  const Matrix R = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  Eigen::JacobiSVD<Matrix> svd(R);
  const double smin = svd.singularValues()(cols - 1);
  if (!(smin * smin > opts.rel_tol * static_cast<double>(rows))) {
    throw RankDeficient("regress_on_inputs: stacked inputs are ill-conditioned (sigma_min=" +
                        std::to_string(smin) + ")");
  }
  const Matrix X = qr.solve(target);  // Tp x m
  return make_markov(X.transpose(), data.p);
}

MarkovMatrix ols(const RegressionData& data, OlsOptions opts) {
  return regress_on_inputs(data, data.Y, opts);
}

Filter ridge_filter(const RegressionData& data, double mu) {
  return Filter::from_flat(ridge(data.K, data.Y, mu));
}

MarkovMatrix fixed_filter_estimate(const RegressionData& data, const Filter& phi,
                                   OlsOptions opts) {
  const Matrix F = filter_matrix_for(data, phi);
  const Matrix target = data.Y - data.K * F.transpose();
  return regress_on_inputs(data, target, opts);
}

PflsResult pfls(const RegressionData& data, double mu, OlsOptions opts) {
  Filter phi = ridge_filter(data, mu);
  MarkovMatrix G = fixed_filter_estimate(data, phi, opts);
  return {std::move(G), std::move(phi)};
}

Matrix residuals(const RegressionData& data, const MarkovMatrix& G,
                 const std::optional<Filter>& phi) {
  if (G.G.rows() != data.m || G.G.cols() != data.Ubar.cols()) {
    throw DimensionMismatch("residuals: G must be m x Tp");
  }
  Matrix out = data.Y - data.Ubar * G.G.transpose();
  if (phi) out -= data.K * filter_matrix_for(data, *phi).transpose();
  return out;
}

Conditioning check_conditioning(const Matrix& Ubar, double N) {
  Conditioning c;
  if (Ubar.cols() == 0) return c;
  const Matrix gram = Ubar.transpose() * Ubar;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  c.min_eig = es.eigenvalues().minCoeff();
  c.max_eig = es.eigenvalues().maxCoeff();
  c.ok = c.min_eig >= 0.5 * N && c.max_eig <= 2.0 * N;
  return c;
}

Conditioning check_conditioning(const RegressionData& data) {
  return check_conditioning(data.Ubar, static_cast<double>(data.N));
}

}  // namespace sysid::est
