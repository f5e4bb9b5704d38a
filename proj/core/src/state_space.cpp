#include "sysid/state_space.hpp"

#include "sysid/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <string>

namespace sysid {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DimensionMismatch("StateSpace: " + what);
}

Matrix channel_input(const StateSpace& sys, Channel channel) {
  switch (channel) {
    case Channel::Input: return sys.B();
    case Channel::ProcessNoise: return sys.Bw();
    case Channel::InitialState: return Matrix(sys.x1());
  }
  return sys.B();
}

Matrix channel_feedthrough(const StateSpace& sys, Channel channel, Index width) {
  if (channel == Channel::Input) return sys.D();
  return Matrix::Zero(sys.m(), width);
}

void require_strictly_stable(const Matrix& A, const StabilityOptions& opts) {
  const double rho = spectral_radius(A);
  if (!(rho < 1.0 - opts.rho_margin)) {
    throw SpectralRadiusNotStrictlyStable("spectral radius " + std::to_string(rho) +
                                          " is not below 1");
  }
}

}  // namespace

StateSpace::StateSpace(Matrix A, Matrix B, Matrix C, Matrix D, Matrix Bw, Matrix Dz, Vector x1)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)),
      Bw_(std::move(Bw)), Dz_(std::move(Dz)), x1_(std::move(x1)) {
  const Index n = A_.rows();
  require(n >= 1 && A_.cols() == n, "A must be square with n >= 1");
  require(B_.rows() == n && B_.cols() >= 1, "B must be n x p with p >= 1");
  require(C_.cols() == n && C_.rows() >= 1, "C must be m x n with m >= 1");
  require(D_.rows() == C_.rows() && D_.cols() == B_.cols(), "D must be m x p");
  if (Bw_.size() == 0) Bw_.resize(n, 0);
  if (Dz_.size() == 0) Dz_.resize(C_.rows(), 0);
  if (x1_.size() == 0) x1_ = Vector::Zero(n);
  require(Bw_.rows() == n, "Bw must have n rows");
  require(Dz_.rows() == C_.rows(), "Dz must have m rows");
  require(x1_.size() == n, "x1 must have length n");
}

StateSpace StateSpace::with_C(Matrix C) const {
  Matrix D = (C.rows() == m()) ? D_ : Matrix::Zero(C.rows(), p());
  Matrix Dz = (C.rows() == m()) ? Dz_ : Matrix::Zero(C.rows(), 0);
  return StateSpace(A_, B_, std::move(C), std::move(D), Bw_, std::move(Dz), x1_);
}

StateSpace StateSpace::with_D(Matrix D) const {
  return StateSpace(A_, B_, C_, std::move(D), Bw_, Dz_, x1_);
}

StateSpace StateSpace::with_x1(Vector x1) const {
  return StateSpace(A_, B_, C_, D_, Bw_, Dz_, std::move(x1));
}

MarkovMatrix markov_params(const StateSpace& sys, Index T, Channel channel) {
  if (T < 1) throw InvalidArgument("markov_params: T must be >= 1");
  const Matrix Bin = channel_input(sys, channel);
  const Index p = Bin.cols();
  MarkovMatrix out;
  out.T = T;
  out.p = p;
  out.m = sys.m();
  out.G.resize(sys.m(), T * p);
  if (p == 0) return out;
  out.G.leftCols(p) = channel_feedthrough(sys, channel, p);
  Matrix AkB = Bin;  // A^{j-1} B
  for (Index j = 1; j < T; ++j) {
    out.G.middleCols(j * p, p) = sys.C() * AkB;
    AkB = sys.A() * AkB;
  }
  return out;
}

MarkovMatrix make_markov(Matrix G, Index p) {
  if (p < 1 || G.cols() % p != 0 || G.cols() == 0) {
    throw DimensionMismatch("make_markov: columns must be a positive multiple of p");
  }
  MarkovMatrix out;
  out.T = G.cols() / p;
  out.p = p;
  out.m = G.rows();
  out.G = std::move(G);
  return out;
}

double spectral_radius(const Matrix& A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("spectral_radius: A must be square");
  if (A.size() == 0) return 0.0;
  Eigen::EigenSolver<Matrix> es(A, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double mk_opnorm(const StateSpace& sys, Index k, Channel channel) {
  if (k < 1) throw InvalidArgument("mk_opnorm: k must be >= 1");
  return op_norm(markov_params(sys, k, channel).G);
}

double h2op_norm(const StateSpace& sys, Channel channel, double tol, StabilityOptions opts) {
  require_strictly_stable(sys.A(), opts);
  const Matrix Bin = channel_input(sys, channel);
  const Matrix Din = channel_feedthrough(sys, channel, Bin.cols());
  // Doubling: after k steps P holds the first 2^k terms of sum_j A^j B B' A'^j.
  Matrix P = Bin * Bin.transpose();
  Matrix Ak = sys.A();
  Matrix W = Din * Din.transpose() + sys.C() * P * sys.C().transpose();
  for (int iter = 0; iter < 64; ++iter) {
    const Matrix dP = Ak * P * Ak.transpose();
    const Matrix dW = sys.C() * dP * sys.C().transpose();
    P += dP;
    W += dW;
    Ak = Ak * Ak;
    const double inc = dW.trace();
    if (inc <= tol * std::max(1.0, W.trace()) && op_norm(Ak) < 0.5) break;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(W, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double hinf_norm(const StateSpace& sys, Channel channel, Index grid_points,
                 StabilityOptions opts) {
  if (grid_points < 8) throw InvalidArgument("hinf_norm: grid_points must be >= 8");
  require_strictly_stable(sys.A(), opts);
  const Matrix Bin = channel_input(sys, channel);
  const ComplexMatrix Bc = Bin.cast<Complex>();
  const ComplexMatrix Cc = sys.C().cast<Complex>();
  const ComplexMatrix Dc = channel_feedthrough(sys, channel, Bin.cols()).cast<Complex>();
  const ComplexMatrix Ac = sys.A().cast<Complex>();
  const Index n = sys.n();
  double best = 0.0;
  for (Index j = 0; j < grid_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(grid_points);
    const Complex z = std::polar(1.0, theta);
    const ComplexMatrix M = z * ComplexMatrix::Identity(n, n) - Ac;
    const ComplexMatrix H = Cc * Eigen::PartialPivLU<ComplexMatrix>(M).solve(Bc) + Dc;
    best = std::max(best, op_norm(H));
  }
  return best;
}

Matrix c_phi(const StateSpace& sys, const Filter& phi, Index T) {
  if (T < 1) throw InvalidArgument("c_phi: T must be >= 1");
  if (phi.m() != sys.m()) throw DimensionMismatch("c_phi: filter blocks must be m x m");
  const Index L = phi.length();
  const Matrix AT = matrix_power(sys.A(), T);
  // CAT[j] = C A^{jT}, j = 0..L
  std::vector<Matrix> CAT;
  CAT.reserve(static_cast<size_t>(L + 1));
  CAT.push_back(sys.C());
  for (Index j = 1; j <= L; ++j) CAT.push_back(CAT.back() * AT);
  Matrix out = CAT[static_cast<size_t>(L)];
  for (Index l = 1; l <= L; ++l) out -= phi.block(l) * CAT[static_cast<size_t>(L - l)];
  return out;
}

StateSpace g_phi(const StateSpace& sys, const Filter& phi, Index T) {
  const Matrix Cp = c_phi(sys, phi, T);
  return StateSpace(sys.A(), sys.B(), Cp, Matrix::Zero(Cp.rows(), sys.p()));
}

StateSpace f_phi(const StateSpace& sys, const Filter& phi, Index T) {
  if (sys.dw() == 0) throw DimensionMismatch("f_phi: system has no process-noise channel");
  const Matrix Cp = c_phi(sys, phi, T);
  return StateSpace(sys.A(), sys.Bw(), Cp, Matrix::Zero(Cp.rows(), sys.dw()));
}

StateSpace h_phi(const StateSpace& sys, const Filter& phi, Index T) {
  const Matrix Cp = c_phi(sys, phi, T);
  return StateSpace(sys.A(), Matrix(sys.x1()), Cp, Matrix::Zero(Cp.rows(), 1));
}

}  // namespace sysid
