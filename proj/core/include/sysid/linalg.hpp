#pragma once

#include <Eigen/Core>

#include <complex>

namespace sysid {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Largest singular value. Tall or wide matrices with a large dimension go
/// through the small Gram matrix; everything else through a dense SVD.
double op_norm(const Matrix& M);
double op_norm(const ComplexMatrix& M);

/// Singular values in decreasing order.
Vector singular_values(const Matrix& M);

/// Numerical rank: number of singular values above rel_tol * sigma_max.
Index numerical_rank(const Matrix& M, double rel_tol);

/// Rank-r truncated Moore-Penrose pseudoinverse.
Matrix truncated_pinv(const Matrix& M, Index rank);

/// Integer matrix power by repeated squaring.
Matrix matrix_power(const Matrix& A, long exponent);

/// Ordinary least-squares slope of log(y) against log(x).
double loglog_slope(const Vector& x, const Vector& y);

/// Median of a copy of the values. Empty input returns NaN.
double median(Vector values);

}  // namespace sysid
