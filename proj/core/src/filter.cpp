#include "sysid/filter.hpp"

#include "sysid/errors.hpp"

#include <string>

namespace sysid {

Filter::Filter(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidArgument("Filter: need at least one block");
  m_ = blocks_.front().rows();
  for (const auto& b : blocks_) {
    if (b.rows() != m_ || b.cols() != m_) {
      throw DimensionMismatch("Filter: every block must be " + std::to_string(m_) + "x" +
                              std::to_string(m_));
    }
  }
}

Filter Filter::zero(Index m, Index L) {
  if (m < 1 || L < 1) throw InvalidArgument("Filter::zero: m and L must be positive");
  return Filter(std::vector<Matrix>(static_cast<size_t>(L), Matrix::Zero(m, m)));
}

Filter Filter::from_flat(const Matrix& phi) {
  const Index m = phi.rows();
  if (m < 1 || phi.cols() % m != 0 || phi.cols() == 0) {
    throw DimensionMismatch("Filter::from_flat: expected an m x (L m) matrix");
  }
  std::vector<Matrix> blocks;
  for (Index l = 0; l < phi.cols() / m; ++l) blocks.emplace_back(phi.middleCols(l * m, m));
  return Filter(std::move(blocks));
}

const Matrix& Filter::block(Index l) const {
  if (l < 1 || l > length()) throw InvalidArgument("Filter::block: index out of range");
  return blocks_[static_cast<size_t>(l - 1)];
}

Matrix Filter::flat() const {
  Matrix out(m_, m_ * length());
  for (Index l = 0; l < length(); ++l) out.middleCols(l * m_, m_) = blocks_[static_cast<size_t>(l)];
  return out;
}

double Filter::block_op_norm() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += sysid::op_norm(b);
  return s;
}

double Filter::op_norm() const { return sysid::op_norm(flat()); }

Filter Filter::extended(Index L) const {
  if (L < length()) throw InvalidArgument("Filter::extended: cannot shrink a filter");
  std::vector<Matrix> blocks = blocks_;
  while (static_cast<Index>(blocks.size()) < L) blocks.push_back(Matrix::Zero(m_, m_));
  return Filter(std::move(blocks));
}

}  // namespace sysid
