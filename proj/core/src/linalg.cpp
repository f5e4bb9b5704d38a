#include "sysid/linalg.hpp"

#include "sysid/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace sysid {

namespace {

constexpr Index kSvdDirectLimit = 96;

template <typename M>
double op_norm_impl(const M& A) {
  if (A.size() == 0) return 0.0;
  const Index small = std::min(A.rows(), A.cols());
  const Index large = std::max(A.rows(), A.cols());
  if (large <= kSvdDirectLimit) {
    Eigen::JacobiSVD<M> svd(A);
    return svd.singularValues()(0);
  }
  // sigma_max^2 is the top eigenvalue of the small Gram matrix.
  M gram = (A.rows() == small) ? M(A * A.adjoint()) : M(A.adjoint() * A);
  Eigen::SelfAdjointEigenSolver<M> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

}  // namespace

double op_norm(const Matrix& M) { return op_norm_impl(M); }
double op_norm(const ComplexMatrix& M) { return op_norm_impl(M); }

Vector singular_values(const Matrix& M) {
  if (M.size() == 0) return Vector();
  Eigen::BDCSVD<Matrix> svd(M);
  return svd.singularValues();
}

Index numerical_rank(const Matrix& M, double rel_tol) {
  const Vector s = singular_values(M);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++r;
  }
  return r;
}

Matrix truncated_pinv(const Matrix& M, Index rank) {
  Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Index r = std::min<Index>(rank, svd.singularValues().size());
  Matrix out = Matrix::Zero(M.cols(), M.rows());
  for (Index i = 0; i < r; ++i) {
    const double s = svd.singularValues()(i);
    if (s == 0.0) break;
    out += svd.matrixV().col(i) * (svd.matrixU().col(i).transpose() / s);
  }
  return out;
}

Matrix matrix_power(const Matrix& A, long exponent) {
  if (A.rows() != A.cols()) throw DimensionMismatch("matrix_power: A must be square");
  if (exponent < 0) throw InvalidArgument("matrix_power: negative exponent");
  Matrix result = Matrix::Identity(A.rows(), A.cols());
  Matrix base = A;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

double loglog_slope(const Vector& x, const Vector& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgument("loglog_slope: need at least two paired points");
  }
  const Vector lx = x.array().log();
  const Vector ly = y.array().log();
  const double mx = lx.mean();
  const double my = ly.mean();
  const double sxy = ((lx.array() - mx) * (ly.array() - my)).sum();
  const double sxx = (lx.array() - mx).square().sum();
  return sxy / sxx;
}

double median(Vector values) {
  const Index n = values.size();
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.data(), values.data() + n);
  return (n % 2 == 1) ? values(n / 2) : 0.5 * (values(n / 2 - 1) + values(n / 2));
}

}  // namespace sysid
