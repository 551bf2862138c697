#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "quadalg/algebra.hpp"

namespace quadalg {

/// Lifts a constant coordinate vector into a polynomial context.
std::vector<MultiPoly> lift(const PolyContextPtr& ctx, const Vector& v);

/// An associative R-algebra D with a verified scalar involution, used as
/// the coefficient algebra of right modules and hermitian forms.
class CoefficientAlgebra {
 public:
  /// Validates associativity and that the attached involution is scalar.
  explicit CoefficientAlgebra(const StructureAlgebra& D);

  /// R itself with the identity involution.
  static CoefficientAlgebra base(const Ring& R);

  const StructureAlgebra& algebra() const { return D_; }
  const Ring& ring() const { return D_.ring(); }
  std::size_t rank() const { return D_.rank(); }
  bool commutative() const { return commutative_; }
  const Matrix& conj_matrix() const { return *D_.involution(); }

  Vector one() const { return D_.unit(); }
  Vector zero() const { return D_.zero_vector(); }
  Vector embed(const Scalar& r) const { return scale(D_.unit(), r); }

  template <class T>
  std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b) const {
    return multiply(D_, a, b);
  }
  template <class T>
  std::vector<T> conj(const std::vector<T>& a) const {
    return apply_matrix(*D_.involution(), a);
  }
  template <class T>
  T norm(const std::vector<T>& a) const {
    return D_.norm()->evaluate(a);
  }
  template <class T>
  T trace(const std::vector<T>& a) const {
    return apply_covector(*D_.trace(), a);
  }

  bool is_unit(const Vector& a) const { return norm(a).is_unit(); }
  /// conj(a) / n(a); throws NonInvertible.
  Vector inverse(const Vector& a) const;

  friend bool operator==(const CoefficientAlgebra& a, const CoefficientAlgebra& b) {
    return a.D_.same_structure(b.D_);
  }

 private:
  StructureAlgebra D_;
  bool commutative_ = false;
};

/// The free right D-module D^s. Elements are R-coordinate vectors of
/// length s*d; index i*d + j is the coefficient of f_i e_j.
class FreeRightModule {
 public:
  FreeRightModule(CoefficientAlgebra D, std::size_t s);

  const CoefficientAlgebra& coefficients() const { return D_; }
  const Ring& ring() const { return D_.ring(); }
  std::size_t d_rank() const { return s_; }
  std::size_t r_rank() const { return s_ * D_.rank(); }

  Vector zero() const { return Vector(r_rank(), ring().zero()); }
  Vector basis(std::size_t r_index) const;
  /// f_i = f_i 1_D as an R-vector.
  Vector generator(std::size_t i) const;

  template <class T>
  std::vector<T> component(const std::vector<T>& u, std::size_t i) const {
    const std::size_t d = D_.rank();
    return std::vector<T>(u.begin() + static_cast<std::ptrdiff_t>(i * d),
                          u.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
  }
  template <class T>
  std::vector<T> from_components(const std::vector<std::vector<T>>& parts) const {
    std::vector<T> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  }
  /// Right action u.a = sum_i f_i (u_i a).
  template <class T>
  std::vector<T> act(const std::vector<T>& u, const std::vector<T>& a) const {
    std::vector<std::vector<T>> parts;
    for (std::size_t i = 0; i < s_; ++i) parts.push_back(D_.mul(component(u, i), a));
    return from_components(parts);
  }

  friend bool operator==(const FreeRightModule& a, const FreeRightModule& b) {
    return a.s_ == b.s_ && a.D_ == b.D_;
  }

 private:
  CoefficientAlgebra D_;
  std::size_t s_;
};

/// h(sum f_i a_i, sum f_j b_j) = sum conj(a_i) H[i][j] b_j.
class SesquilinearForm {
 public:
  SesquilinearForm(FreeRightModule module, std::vector<std::vector<Vector>> gram);

  /// Gram matrix with entries embedded from R (D-entries r*1).
  static SesquilinearForm from_scalars(const FreeRightModule& module, const Matrix& gram);

  const FreeRightModule& module() const { return module_; }
  const CoefficientAlgebra& coefficients() const { return module_.coefficients(); }
  const std::vector<std::vector<Vector>>& gram() const { return gram_; }
  const Vector& entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }

  template <class T>
  std::vector<T> evaluate(const std::vector<T>& u, const std::vector<T>& v) const;

  /// The R-bilinear form (u, v) -> t_D(h(u, v)) on R-coordinates.
  Matrix trace_matrix() const;

 private:
  FreeRightModule module_;
  std::vector<std::vector<Vector>> gram_;
};

/// Alternating R-bilinear product on an R-module of rank m.
class CrossProduct {
 public:
  CrossProduct(Ring ring, std::size_t m, std::vector<Scalar> tensor);
  static CrossProduct zero(const Ring& ring, std::size_t m);
  /// Builds the tensor from the values on basis pairs i < j.
  static CrossProduct from_entries(const Ring& ring, std::size_t m, const std::vector<StructureEntry>& upper);

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return m_; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return tensor_[(i * m_ + j) * m_ + k]; }
  const std::vector<Scalar>& tensor() const { return tensor_; }
  bool is_zero() const { return entries_.empty(); }
  /// Nonzero (i, j, k, c) with i < j.
  std::vector<StructureEntry> upper_entries() const;

  /// u x v with the operands in this order.
  template <class T>
  std::vector<T> apply(const std::vector<T>& u, const std::vector<T>& v) const {
    std::vector<T> z(m_, zero_like(u.front()));
    for (const auto& e : entries_) {
      if (u[e.i].is_zero() || v[e.j].is_zero()) continue;
      z[e.k] += u[e.i] * v[e.j] * e.c;
    }
    return z;
  }

  CrossProduct reversed() const;  // (u, v) -> v x u
  CrossProduct scaled(const Scalar& c) const;

  friend bool operator==(const CrossProduct& a, const CrossProduct& b) {
    return a.m_ == b.m_ && a.tensor_ == b.tensor_;
  }

 private:
  Ring ring_;
  std::size_t m_;
  std::vector<Scalar> tensor_;
  std::vector<StructureEntry> entries_;
};

/// A unit alpha identifying the top exterior power with the coefficients.
struct DeterminantTrivialization {
  Vector alpha;  // element of the coefficient algebra (R or S)

  static DeterminantTrivialization over(const CoefficientAlgebra& D, const Vector& alpha);
  static DeterminantTrivialization scalar(const CoefficientAlgebra& D, const Scalar& a) {
    return over(D, D.embed(a));
  }
};

bool is_hermitian(const SesquilinearForm& h);

struct ScaledForm {
  SesquilinearForm form;
  Vector epsilon;
};

/// mu*h and eps = conj(mu) mu^{-1}; the result satisfies
/// conj((mu h)(u, v)) = eps (mu h)(v, u).
ScaledForm scale_form(const Vector& mu, const SesquilinearForm& h);

/// Invertibility of the R-matrix of t_D o h (cross-checked against the
/// Gram determinant over commutative D when the base is a field).
bool is_nondegenerate(const SesquilinearForm& h);

/// Determinant of an s x s matrix over a commutative coefficient algebra.
Vector d_determinant(const CoefficientAlgebra& D, const std::vector<std::vector<Vector>>& m);

/// The product with h(u x v, w) = alpha det[u | v | w] over an etale S, s = 3.
CrossProduct alpha_cross(const SesquilinearForm& h, const DeterminantTrivialization& alpha);

/// The product with B(u x v, w) = alpha det[u | v | w] where B is half the
/// polarization of N; R-rank 3 and 2 invertible.
CrossProduct wedge_cross(const QuadraticForm& N, const Scalar& alpha);

/// beta with alpha(u1 ^ u2 ^ u3) beta(v1 ^ v2 ^ v3) = det(<u_i, v_j>),
/// verified on the standard basis and three random triples.
Scalar induced_dual_trivialization(const Scalar& alpha, std::uint64_t seed = 1);

template <class T>
T bilinear(const Matrix& B, const std::vector<T>& x, const std::vector<T>& y) {
  T acc = zero_like(x.front());
  for (std::size_t i = 0; i < B.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < B.cols(); ++j) {
      if (!B(i, j).is_zero() && !y[j].is_zero()) acc += x[i] * y[j] * B(i, j);
    }
  }
  return acc;
}

/// Formal check of B(uxv, uxv) = B(u,u)B(v,v) - B(u,v)^2 and B(u, uxv) = 0.
bool check_cross_norm_conditions(const Matrix& B, const CrossProduct& cross);

// ---------------------------------------------------------------- templates

template <class T>
std::vector<T> SesquilinearForm::evaluate(const std::vector<T>& u, const std::vector<T>& v) const {
  const auto& D = coefficients();
  const std::size_t s = module_.d_rank();
  std::vector<T> acc(D.rank(), zero_like(u.front()));
  for (std::size_t i = 0; i < s; ++i) {
    auto ci = D.conj(module_.component(u, i));
    for (std::size_t j = 0; j < s; ++j) {
      const Vector& hij = gram_[i][j];
      bool zero = true;
      for (const auto& c : hij) zero = zero && c.is_zero();
      if (zero) continue;
      std::vector<T> hij_t;
      for (const auto& c : hij) {
        if constexpr (std::is_same_v<T, Scalar>) {
          hij_t.push_back(c);
        } else {
          hij_t.push_back(T::constant(u.front().context(), c));
        }
      }
      acc = add(acc, D.mul(D.mul(ci, hij_t), module_.component(v, j)));
    }
  }
  return acc;
}

}  // namespace quadalg
