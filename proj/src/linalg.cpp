#include "quadalg/linalg.hpp"

#include <bit>

namespace quadalg {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const Ring& ring, const std::vector<Vector>& cols, std::size_t rows) {
  return from_rows(ring, cols, rows).transpose();
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  Matrix out(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o * (-ring_.one()); }

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  Vector out(rows_, ring_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void require_field(const Ring& ring, const char* what) {
  if (!ring.is_field()) {
    throw Error(ErrorKind::FieldRequired, std::string(what) + " needs a field, got " + ring.to_string());
  }
}

Echelon rref(const Matrix& m) {
  require_field(m.ring(), "row reduction");
  Echelon e{m, {}};
  Matrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    }
    Scalar inv = a(row, col).inv();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  Echelon e = rref(m);
  const Ring& R = m.ring();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), R.zero());
    v[f] = R.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return span_basis(R, basis, m.cols());
}

std::vector<Vector> span_basis(const Ring& ring, const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Echelon e = rref(Matrix::from_rows(ring, vectors, dim));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side length mismatch");
  Matrix aug(m.ring(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug);
  Vector x(m.cols(), m.ring().zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

namespace {

Scalar det_division_free(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n > 20) throw Error(ErrorKind::InvalidArgument, "division-free determinant limited to 20x20");
  const Ring& R = m.ring();
  std::vector<Scalar> f(std::size_t{1} << n, R.zero());
  f[0] = R.one();
  for (std::size_t mask = 0; mask < f.size(); ++mask) {
    if (f[mask].is_zero()) continue;
    std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row >= n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      if (m(row, c).is_zero()) continue;
      int above = std::popcount(mask >> (c + 1));
      Scalar term = f[mask] * m(row, c);
      f[mask | (std::size_t{1} << c)] += (above % 2) ? -term : term;
    }
  }
  return f.back();
}

}  // namespace

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const Ring& R = m.ring();
  if (m.rows() == 0) return R.one();
  if (!R.is_field()) return det_division_free(m);
  Matrix a = m;
  Scalar det = R.one();
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return R.zero();
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv = a(col, col).inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Scalar f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  const Ring& R = m.ring();
  const std::size_t n = m.rows();
  if (R.is_field()) {
    Matrix aug(R, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
      aug(r, n + r) = R.one();
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorKind::NonInvertible, "singular matrix");
    Matrix inv(R, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    }
    return inv;
  }
  Scalar det = determinant(m);
  if (!det.is_unit()) throw Error(ErrorKind::NonInvertible, "determinant " + det.to_string() + " is not a unit");
  Scalar dinv = det.inv();
  Matrix inv(R, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(R, n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Scalar cof = determinant(minor);
      inv(i, j) = ((i + j) % 2 ? -cof : cof) * dinv;
    }
  }
  return inv;
}

}  // namespace quadalg
