#pragma once

// Exact residue arithmetic modulo prime powers and a small dense matrix type.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lrembed {

using Int = std::int64_t;

/// Largest modulus p^N accepted anywhere in the library. Products of two
/// residues are formed in 128 bits, so this only guards the residues.
inline constexpr Int kMaxModulus = Int{1} << 62;

/// base^exp; throws Error(out_of_range) when the result exceeds kMaxModulus.
Int checked_pow(Int base, int exp);

/// Representative of a in [0, m).
Int floor_mod(Int a, Int m);

Int mul_mod(Int a, Int b, Int m);

/// Inverse of a modulo m; a must be coprime to m.
Int inverse_mod(Int a, Int m);

/// p-adic valuation of x, read as a residue modulo p^cap. Zero has valuation cap.
int valuation(Int x, Int p, int cap);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// (a * b) with every entry reduced modulo `modulus`.
Matrix multiply_mod(const Matrix& a, const Matrix& b, Int modulus);

}  // namespace lrembed
