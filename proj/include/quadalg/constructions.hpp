#pragma once

#include "quadalg/forms.hpp"

namespace quadalg {

/// R-bilinear map A x A -> A given by a rank-3 tensor.
class BilinearMap {
 public:
  BilinearMap(Ring ring, std::size_t n, std::vector<Scalar> tensor);
  static BilinearMap zero(const Ring& ring, std::size_t n);
  static BilinearMap multiplication(const StructureAlgebra& A);

  std::size_t size() const { return n_; }
  const std::vector<Scalar>& tensor() const { return tensor_; }
  Vector apply(const Vector& x, const Vector& y) const;

 private:
  Ring ring_;
  std::size_t n_;
  std::vector<Scalar> tensor_;
};

/// (alpha, u)(beta, v) = (alpha beta - h(v, u), v.alpha + u.conj(beta) + v x u)
/// with sigma(alpha, u) = (conj(alpha), -u). Norm n_D(alpha) + h(u, u) and
/// trace t_D(alpha) are attached when h is hermitian.
StructureAlgebra build_unified(const SesquilinearForm& h, const CrossProduct& cross);

/// D x D with (u, w)(u', w') = (uu' + mu conj(w') w, w' u + w conj(u')) and
/// norm n_D(u) - mu n_D(w).
StructureAlgebra cayley_dickson(const CoefficientAlgebra& D, const Scalar& mu);

/// The octonion algebra over an etale S from a rank-3 hermitian space and
/// a determinant trivialization. The unified cross product used is the
/// reverse of the alpha cross product.
StructureAlgebra thakur(const SesquilinearForm& h, const DeterminantTrivialization& alpha);

/// Quaternion algebra R + F from a ternary form N:
/// (a, u)(b, v) = (ab - B(u, v), av + bu + u x v) with B half the
/// polarization of N and x the wedge cross product.
StructureAlgebra quat(const QuadraticForm& N, const Scalar& alpha);

/// Spin factor (R, F, -B, 0) for a symmetric Gram matrix B.
StructureAlgebra jspin(const Matrix& B);

/// (R, F, B, x) with B = t_D o h / 2 on the underlying R-module of F.
StructureAlgebra hat(const SesquilinearForm& h, const CrossProduct& cross);

/// A + A with (a, b)(c, d) = (ac + dot1(d*, b), dot2(d, a) + dot2(b, c*) + dot3(b, d))
/// and involution (a, b)* = (a*, -b).
StructureAlgebra becker_double(const StructureAlgebra& A, const BilinearMap& dot1, const BilinearMap& dot2,
                               const BilinearMap& dot3);

struct BeckerProducts {
  BilinearMap dot1, dot2, dot3;
};

/// The products under which becker_double reproduces build_unified(h, cross)
/// for a rank-one module F = D: dot1(x, y) = -x H y, dot2 = mul,
/// dot3(x, y) = y x x.
BeckerProducts becker_products(const SesquilinearForm& h, const CrossProduct& cross);

/// Basis {1, w} with w^2 = b, conjugation w -> -w, norm a^2 - b c^2.
StructureAlgebra cay_rank2(const Ring& R, const Scalar& b);

/// R x R with idempotent basis, swap involution and norm x1 x2.
StructureAlgebra split_etale(const Ring& R);

/// Quaternions (-1, -1) as the double of the Gaussian numbers.
StructureAlgebra hamilton(const Ring& R);

/// Octonions as the double of the Hamilton quaternions.
StructureAlgebra octonion(const Ring& R);

/// Rank-one coefficient modules, forms and trivial cross products.
FreeRightModule free_module(const CoefficientAlgebra& D, std::size_t s);
SesquilinearForm identity_form(const FreeRightModule& F);

}  // namespace quadalg
