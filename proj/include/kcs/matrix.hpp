#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "kcs/rational.hpp"

namespace kcs {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Matrix identity(std::size_t n);
  /// Builds a rows x columns.size() matrix whose j-th column is columns[j].
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Vector apply(const Vector& x) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  /// Conjugate transpose.
  Matrix adjoint() const;

  bool is_real() const;
  bool is_symmetric() const;
  bool is_hermitian() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Reduced row echelon form: leftmost pivots, each normalized to 1.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

EchelonForm row_echelon(Matrix m);

std::size_t rank(const Matrix& m);

/// Kernel basis, canonical: the returned vectors are the rows of the reduced
/// row echelon form of any kernel basis, so each leading entry is 1 and the
/// output depends only on the kernel itself.
std::vector<Vector> nullspace(const Matrix& m);

/// Exact solve of m x = b. Free variables are set to zero and pivot variables
/// read off the reduced echelon form. Returns nullopt when b is not in the
/// column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t dimension() const { return positive + negative + zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by exact congruence elimination. With `hermitian` unset
/// the matrix must be real symmetric; with it set, conjugate-symmetric.
/// Throws std::invalid_argument otherwise.
Inertia inertia(const Matrix& m, bool hermitian = false);

}  // namespace kcs
