#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scrollkit/scalar.hpp"

namespace scrollkit {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the active field.
class Matrix {
 public:
  Matrix(const Field& k, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& k, std::size_t n);
  static Matrix from_rows(const Field& k, const std::vector<Vector>& rows);
  static Matrix from_ints(const Field& k, const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(std::span<const Scalar> v) const;
  Matrix transpose() const;
  Matrix hstack(const Matrix& right) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::vector<std::vector<std::string>> serialize() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Vector entries_;
};

/// Reduced row echelon form with its pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

struct RankKernel {
  std::size_t rank = 0;
  /// cols - rank independent vectors with M v = 0.
  std::vector<Vector> kernel;
  std::vector<std::size_t> pivots;
};

/// Over Q the forward pass is fraction-free (Bareiss) on the row-scaled integer
/// matrix; over Z/p it is ordinary elimination. Pivots: first nonzero entry in
/// column order, so results are reproducible.
RowEchelon row_reduce(const Matrix& m);
RankKernel rank_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with A x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);
std::optional<Matrix> inverse(const Matrix& a);

bool is_zero_vector(std::span<const Scalar> v);
Vector linear_combination(const std::vector<Vector>& basis, std::span<const Scalar> coeffs);

}  // namespace scrollkit
