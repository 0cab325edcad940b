#include "lrembed/arith.hpp"

#include <utility>

#include "lrembed/error.hpp"

namespace lrembed {

Int checked_pow(Int base, int exp) {
  if (exp < 0) throw Error(Errc::out_of_range, "negative exponent");
  Int result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > kMaxModulus / base) {
      throw Error(Errc::out_of_range, "prime power exceeds the supported modulus 2^62");
    }
    result *= base;
  }
  return result;
}

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int mul_mod(Int a, Int b, Int m) {
  const __int128 prod = static_cast<__int128>(floor_mod(a, m)) * floor_mod(b, m);
  return static_cast<Int>(prod % m);
}

Int inverse_mod(Int a, Int m) {
  Int old_r = floor_mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw Error(Errc::internal, "inverse_mod: argument is not a unit");
  return floor_mod(old_s, m);
}

int valuation(Int x, Int p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (v < cap && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

Matrix multiply_mod(const Matrix& a, const Matrix& b, Int modulus) {
  if (a.cols() != b.rows()) throw Error(Errc::internal, "multiply_mod: shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = floor_mod(out(i, j) + mul_mod(aik, b(k, j), modulus), modulus);
      }
    }
  }
  return out;
}

}  // namespace lrembed
