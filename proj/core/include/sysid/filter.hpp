#pragma once

#include "sysid/linalg.hpp"

#include <vector>

namespace sysid {

/// A length-L linear filter over subsampled outputs, phi = [Psi_1 | ... | Psi_L]
/// with each Psi_l an m x m block. Block l multiplies y_{t - l T}.
class Filter {
 public:
  Filter() = default;
  explicit Filter(std::vector<Matrix> blocks);

  static Filter zero(Index m, Index L);
  /// Splits an m x (L m) matrix into L square blocks.
  static Filter from_flat(const Matrix& phi);

  Index m() const { return m_; }
  Index length() const { return static_cast<Index>(blocks_.size()); }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  /// 1-indexed block accessor, matching Psi_1..Psi_L.
  const Matrix& block(Index l) const;

  /// The m x (L m) concatenation of the blocks.
  Matrix flat() const;

  /// Sum of the operator norms of the blocks.
  double block_op_norm() const;
  double op_norm() const;

  /// Zero-pads to a total length of L blocks.
  Filter extended(Index L) const;

 private:
  Index m_ = 0;
  std::vector<Matrix> blocks_;
};

}  // namespace sysid
