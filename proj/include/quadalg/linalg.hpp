#pragma once

#include <optional>
#include <vector>

#include "quadalg/scalar.hpp"

namespace quadalg {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_rows(const Ring& ring, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const Ring& ring, const std::vector<Vector>& cols, std::size_t rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form over a field. Pivots are taken at the first
/// nonzero entry, so results are deterministic.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, itself in reduced echelon form.
std::vector<Vector> kernel(const Matrix& m);

/// Reduced echelon basis of the span of the given vectors.
std::vector<Vector> span_basis(const Ring& ring, const std::vector<Vector>& vectors, std::size_t dim);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse over a field, or via the adjugate over other rings when the
/// determinant is a unit. Throws NonInvertible.
Matrix inverse(const Matrix& m);

/// Determinant over any commutative ring (division free off fields).
Scalar determinant(const Matrix& m);

void require_field(const Ring& ring, const char* what);

}  // namespace quadalg
