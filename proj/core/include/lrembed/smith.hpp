#pragma once

#include <vector>

#include "lrembed/arith.hpp"

namespace lrembed {

/// Smith normal form over Z/p^N: left * input * right == diagonal (mod p^N),
/// with left and right invertible and right_inverse * right == identity.
/// Diagonal entry t equals p^valuations[t]; columns without a pivot carry
/// valuation N. Valuations are non-decreasing, so the diagonal entries
/// divide one another in order.
struct SmithForm {
  Matrix left;
  Matrix right;
  Matrix right_inverse;
  Matrix diagonal;
  std::vector<int> valuations;
};

SmithForm smith_normal_form(const Matrix& input, Int p, int precision);

}  // namespace lrembed
