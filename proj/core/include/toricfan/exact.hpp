#pragma once

// Exact integer/rational scalars and small dense matrices over them.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricfan {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Accepts "p", "+p", "-p" and "p/q" with q > 0 after sign handling. No
/// decimals, no whitespace. Throws Error(Parse).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integral(const Rational& value);
bool is_even(const Integer& value);
Integer lcm_of_denominators(const RatVector& values);

Rational dot(const RatVector& a, const RatVector& b);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);
RatVector to_rational(const IntVector& values);
bool is_zero(const RatVector& values);

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

/// Builds the square matrix whose columns are the given vectors.
RatMatrix from_columns(const std::vector<RatVector>& columns);
IntMatrix from_columns(const std::vector<IntVector>& columns);

RatMatrix to_rational(const IntMatrix& m);
std::optional<IntMatrix> to_integer(const RatMatrix& m);

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatVector multiply(const RatMatrix& a, const RatVector& x);

/// Gaussian elimination with exact pivots.
Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix& m);

/// Gauss-Jordan inverse; empty when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace toricfan
