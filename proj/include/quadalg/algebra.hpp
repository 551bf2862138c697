#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadalg/linalg.hpp"
#include "quadalg/poly.hpp"

namespace quadalg {

/// Quadratic form on R^n stored without halving: diag[i] = q(e_i) and
/// polar(i, j) = q(e_i + e_j) - q(e_i) - q(e_j) (so polar(i, i) = 2 diag[i]).
struct QuadraticForm {
  Vector diag;
  Matrix polar;

  static QuadraticForm zero(const Ring& ring, std::size_t n);
  /// q(x) = B(x, x) for a symmetric bilinear Gram matrix B.
  static QuadraticForm from_bilinear(const Matrix& gram);

  std::size_t size() const { return diag.size(); }

  template <class T>
  T evaluate(const std::vector<T>& x) const;
  template <class T>
  T polar_value(const std::vector<T>& x, const std::vector<T>& y) const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.diag == b.diag && a.polar == b.polar;
  }
};

struct StructureEntry {
  std::size_t i, j, k;
  Scalar c;
};

/// Finite-rank unital algebra over R given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k. The unit is validated on construction;
/// involution, norm and trace are optional attachments.
class StructureAlgebra {
 public:
  StructureAlgebra(Ring ring, std::size_t rank, Vector unit, std::vector<Scalar> tensor);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const Vector& unit() const { return unit_; }
  const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * rank_ + j) * rank_ + k];
  }
  const std::vector<Scalar>& tensor() const { return tensor_; }
  const std::vector<StructureEntry>& entries() const { return entries_; }

  const std::optional<Matrix>& involution() const { return involution_; }
  const std::optional<QuadraticForm>& norm() const { return norm_; }
  const std::optional<Vector>& trace() const { return trace_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& provenance() const { return provenance_; }

  /// involution(i, j) is the i-th coordinate of sigma(e_j).
  StructureAlgebra with_involution(Matrix sigma) const;
  StructureAlgebra with_norm(QuadraticForm n) const;
  StructureAlgebra with_trace(Vector t) const;
  StructureAlgebra with_labels(std::vector<std::string> labels) const;
  StructureAlgebra with_provenance(std::string note) const;

  Vector basis(std::size_t i) const;
  Vector zero_vector() const { return Vector(rank_, ring_.zero()); }
  /// Index of a unit coordinate of 1_A (used to read off R*1 components).
  std::size_t unit_pivot() const { return unit_pivot_; }

  /// Same multiplication, unit and attachments.
  bool same_structure(const StructureAlgebra& o) const;

 private:
  Ring ring_;
  std::size_t rank_;
  Vector unit_;
  std::vector<Scalar> tensor_;
  std::vector<StructureEntry> entries_;
  std::size_t unit_pivot_ = 0;
  std::optional<Matrix> involution_;
  std::optional<QuadraticForm> norm_;
  std::optional<Vector> trace_;
  std::vector<std::string> labels_;
  std::string provenance_;
};

inline Scalar zero_like(const Scalar& s) { return s.ring().zero(); }
inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.context()); }

/// Bilinear extension of the structure tensor, for concrete (Scalar) or
/// symbolic (MultiPoly) coordinates.
template <class T>
std::vector<T> multiply(const StructureAlgebra& A, const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != A.rank() || y.size() != A.rank()) {
    throw Error(ErrorKind::AlgebraMismatch, "element length differs from algebra rank");
  }
  const std::size_t n = A.rank();
  T zero = zero_like(x.front());
  std::vector<T> z(n, zero);
  const auto& entries = A.entries();
  std::size_t e = 0;
  while (e < entries.size()) {
    const std::size_t i = entries[e].i;
    const std::size_t j = entries[e].j;
    std::size_t end = e;
    while (end < entries.size() && entries[end].i == i && entries[end].j == j) ++end;
    if (!x[i].is_zero() && !y[j].is_zero()) {
      T prod = x[i] * y[j];
      for (std::size_t t = e; t < end; ++t) z[entries[t].k] += prod * entries[t].c;
    }
    e = end;
  }
  return z;
}

template <class T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
std::vector<T> sub(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class T>
std::vector<T> scale(const std::vector<T>& a, const Scalar& s) {
  std::vector<T> r;
  r.reserve(a.size());
  for (const auto& v : a) r.push_back(v * s);
  return r;
}

template <class T>
std::vector<T> apply_matrix(const Matrix& m, const std::vector<T>& x) {
  std::vector<T> out(m.rows(), zero_like(x.front()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !x[c].is_zero()) out[r] += x[c] * m(r, c);
    }
  }
  return out;
}

template <class T>
T QuadraticForm::evaluate(const std::vector<T>& x) const {
  T acc = zero_like(x.front());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!diag[i].is_zero()) acc += x[i] * x[i] * diag[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (!polar(i, j).is_zero() && !x[j].is_zero()) acc += x[i] * x[j] * polar(i, j);
    }
  }
  return acc;
}

template <class T>
T QuadraticForm::polar_value(const std::vector<T>& x, const std::vector<T>& y) const {
  T acc = zero_like(x.front());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!polar(i, j).is_zero() && !y[j].is_zero()) acc += x[i] * y[j] * polar(i, j);
    }
  }
  return acc;
}

template <class T>
T apply_covector(const Vector& t, const std::vector<T>& x) {
  T acc = zero_like(x.front());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!t[i].is_zero() && !x[i].is_zero()) acc += x[i] * t[i];
  }
  return acc;
}

/// `count` generic vectors of length `dim` with disjoint variables
/// x0.., y0.., z0.., w0.. in one polynomial context.
struct GenericFamily {
  PolyContextPtr ctx;
  std::size_t dim = 0;
  std::vector<std::vector<MultiPoly>> elements;

  static GenericFamily make(const Ring& ring, std::size_t dim, std::size_t count);
  const std::vector<MultiPoly>& operator[](std::size_t i) const { return elements[i]; }
};

enum class Identity {
  Flexible,
  LeftAlternative,
  RightAlternative,
  Alternative,
  Associative,
  Commutative,
  Jordan,
  ThirdPowerAssociative,
};

std::string_view to_string(Identity id);
std::optional<Identity> identity_from_string(std::string_view name);

/// Outcome of a formal identity check with the defect kept for witnesses.
struct IdentityVerdict {
  bool holds = true;
  std::string failed_part;  // which component identity failed, if any
  GenericFamily family;
  std::vector<MultiPoly> defect;
};

IdentityVerdict identity_verdict(const StructureAlgebra& A, Identity id);
bool check_identity(const StructureAlgebra& A, Identity id);

/// Associator-based element-wise check of an identity on given concrete
/// elements; used by exhaustive oracles.
Vector associator(const StructureAlgebra& A, const Vector& x, const Vector& y, const Vector& z);

enum class InvolutionFailure { None, NotOrderTwo, NotAntiAutomorphism, NotScalar };

std::string_view to_string(InvolutionFailure f);

struct ScalarInvolutionResult {
  bool ok = false;
  InvolutionFailure failure = InvolutionFailure::None;
  std::optional<QuadraticForm> norm;
  std::optional<Vector> trace;
  /// The input algebra with sigma, norm and trace attached (when ok).
  std::optional<StructureAlgebra> algebra;
};

/// Decides whether sigma is a scalar involution. An order or
/// anti-automorphism failure is reported through `failure` with ok=false.
ScalarInvolutionResult check_scalar_involution(const StructureAlgebra& A, const Matrix& sigma);
/// Throwing variant: NotOrderTwo, NotAntiAutomorphism or NotScalarInvolution.
StructureAlgebra require_scalar_involution(const StructureAlgebra& A, const Matrix& sigma);

bool check_quadratic(const StructureAlgebra& A, const QuadraticForm& n);
IdentityVerdict quadratic_verdict(const StructureAlgebra& A, const QuadraticForm& n);

struct CompositionVerdict {
  bool multiplicative = false;
  bool nondegenerate = false;
};

CompositionVerdict check_composition(const StructureAlgebra& A, const QuadraticForm& n);
IdentityVerdict multiplicativity_verdict(const StructureAlgebra& A, const QuadraticForm& n);

/// Re-expresses A in the basis given by the columns of `basis` (old
/// coordinates). Involution, norm and trace are transported.
StructureAlgebra change_basis(const StructureAlgebra& A, const Matrix& basis);

/// Reads the R-coefficient of a vector proportional to 1_A; nullopt when
/// the vector is not in R*1.
std::optional<Scalar> scalar_part(const StructureAlgebra& A, const Vector& v);

struct Witness {
  std::vector<Vector> elements;
  std::size_t coordinate = 0;
  Scalar value;
};

/// Concrete elements at which a nonzero defect evaluates nonzero, found
/// deterministically from the lex-leading monomial of the first nonzero
/// defect coordinate. nullopt when the formal defect vanishes as a
/// function on the searched grid (possible only over tiny fields).
std::optional<Witness> extract_witness(const GenericFamily& family, const std::vector<MultiPoly>& defect);

}  // namespace quadalg
