#include "lrembed/smith.hpp"

#include <algorithm>

#include "lrembed/error.hpp"

namespace lrembed {

SmithForm smith_normal_form(const Matrix& input, Int p, int precision) {
  const Int q = checked_pow(p, precision);
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();

  SmithForm f;
  f.diagonal = Matrix(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) f.diagonal(r, c) = floor_mod(input(r, c), q);
  f.left = Matrix::identity(m);
  f.right = Matrix::identity(n);
  f.right_inverse = Matrix::identity(n);
  f.valuations.assign(n, precision);

  Matrix& d = f.diagonal;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: entry of least valuation in the trailing block.
    int best = precision;
    std::size_t br = t, bc = t;
    for (std::size_t r = t; r < m && best > 0; ++r) {
      for (std::size_t c = t; c < n; ++c) {
        const int v = valuation(d(r, c), p, precision);
        if (v < best) {
          best = v;
          br = r;
          bc = c;
          if (v == 0) break;
        }
      }
    }
    if (best == precision) break;

    d.swap_rows(t, br);
    f.left.swap_rows(t, br);
    d.swap_cols(t, bc);
    f.right.swap_cols(t, bc);
    f.right_inverse.swap_rows(t, bc);

    const Int pv = checked_pow(p, best);
    const Int unit_inv = inverse_mod(d(t, t) / pv, q);
    for (std::size_t c = 0; c < n; ++c) d(t, c) = mul_mod(d(t, c), unit_inv, q);
    for (std::size_t c = 0; c < m; ++c) f.left(t, c) = mul_mod(f.left(t, c), unit_inv, q);

    for (std::size_t r = 0; r < m; ++r) {
      if (r == t || d(r, t) == 0) continue;
      const Int factor = d(r, t) / pv;
      for (std::size_t c = 0; c < n; ++c)
        d(r, c) = floor_mod(d(r, c) - mul_mod(factor, d(t, c), q), q);
      for (std::size_t c = 0; c < m; ++c)
        f.left(r, c) = floor_mod(f.left(r, c) - mul_mod(factor, f.left(t, c), q), q);
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (c == t || d(t, c) == 0) continue;
      const Int factor = d(t, c) / pv;
      // column c -= factor * column t; its inverse adds factor * row c to row t.
      for (std::size_t r = 0; r < m; ++r)
        d(r, c) = floor_mod(d(r, c) - mul_mod(factor, d(r, t), q), q);
      for (std::size_t r = 0; r < n; ++r)
        f.right(r, c) = floor_mod(f.right(r, c) - mul_mod(factor, f.right(r, t), q), q);
      for (std::size_t k = 0; k < n; ++k)
        f.right_inverse(t, k) =
            floor_mod(f.right_inverse(t, k) + mul_mod(factor, f.right_inverse(c, k), q), q);
    }
    f.valuations[t] = best;
  }
  return f;
}

}  // namespace lrembed
