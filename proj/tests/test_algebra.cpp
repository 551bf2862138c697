#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadalg/algebra.hpp"

using namespace quadalg;

namespace {

// Hamilton quaternions over Q from the hand-written table i^2=j^2=k^2=-1,
// ij=k, jk=i, ki=j.
StructureAlgebra hamilton_table(const Ring& R) {
  std::vector<Scalar> t(64, R.zero());
  auto set = [&](int i, int j, int k, int c) { t[(i * 4 + j) * 4 + k] = R.from_int(c); };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    set(i, 0, i, 1);
  }
  set(1, 1, 0, -1), set(2, 2, 0, -1), set(3, 3, 0, -1);
  set(1, 2, 3, 1), set(2, 1, 3, -1);
  set(2, 3, 1, 1), set(3, 2, 1, -1);
  set(3, 1, 2, 1), set(1, 3, 2, -1);
  return StructureAlgebra(R, 4, {R.one(), R.zero(), R.zero(), R.zero()}, t);
}

Matrix conjugation(const Ring& R, std::size_t n) {
  Matrix m = Matrix::identity(R, n) * (-R.one());
  m(0, 0) = R.one();
  return m;
}

// All vectors of F_p^n.
std::vector<Vector> all_vectors(const Ring& F, std::size_t n) {
  std::vector<Vector> out;
  std::uint64_t p = *F.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vector v;
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < n; ++i, r /= p) v.push_back(F.element_at(r % p));
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("multiplication follows the structure table") {
  Ring Q = Ring::rationals();
  auto H = hamilton_table(Q);
  auto i = H.basis(1), j = H.basis(2), k = H.basis(3);
  CHECK(multiply(H, i, j) == k);
  CHECK(multiply(H, j, i) == scale(k, -Q.one()));
  CHECK(multiply(H, k, k) == scale(H.unit(), -Q.one()));
}

TEST_CASE("a bad unit is rejected") {
  Ring Q = Ring::rationals();
  auto H = hamilton_table(Q);
  CHECK_THROWS_AS(StructureAlgebra(Q, 4, H.basis(1), H.tensor()), Error);
}

TEST_CASE("identity checks on quaternions") {
  auto H = hamilton_table(Ring::rationals());
  CHECK(check_identity(H, Identity::Associative));
  CHECK(check_identity(H, Identity::Alternative));
  CHECK(check_identity(H, Identity::Flexible));
  auto comm = identity_verdict(H, Identity::Commutative);
  CHECK_FALSE(comm.holds);
  auto w = extract_witness(comm.family, comm.defect);
  REQUIRE(w.has_value());
  CHECK(multiply(H, w->elements[0], w->elements[1]) != multiply(H, w->elements[1], w->elements[0]));
}

TEST_CASE("formal identity checks agree with exhaustive evaluation over F_3") {
  Ring F = Ring::prime_field(3);
  auto H = hamilton_table(F);
  // Perturb one structure constant so the algebra stops being associative.
  auto t = H.tensor();
  t[(1 * 4 + 2) * 4 + 2] = F.one();
  StructureAlgebra B(F, 4, H.unit(), t);
  auto elems = all_vectors(F, 4);
  for (const auto* A : {&H, &B}) {
    bool assoc = true, flex = true;
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        if (multiply(*A, multiply(*A, x, y), x) != multiply(*A, x, multiply(*A, y, x))) flex = false;
        for (const auto& z : {A->basis(1), A->basis(2), A->basis(3)}) {
          for (std::size_t c = 0; c < 4; ++c) {
            if (associator(*A, x, y, z)[c] != F.zero()) assoc = false;
          }
        }
      }
    }
    CHECK(check_identity(*A, Identity::Associative) == assoc);
    CHECK(check_identity(*A, Identity::Flexible) == flex);
  }
}

TEST_CASE("conjugation is a scalar involution with the sum-of-squares norm") {
  Ring Q = Ring::rationals();
  auto H = hamilton_table(Q);
  auto r = check_scalar_involution(H, conjugation(Q, 4));
  REQUIRE(r.ok);
  for (std::size_t i = 0; i < 4; ++i) CHECK(r.norm->diag[i].is_one());
  CHECK(r.norm->polar == Matrix::identity(Q, 4) * Q.from_int(2));
  CHECK((*r.trace)[0] == Q.from_int(2));
  CHECK(check_quadratic(H, *r.norm));
  auto comp = check_composition(H, *r.norm);
  CHECK(comp.multiplicative);
  CHECK(comp.nondegenerate);
}

TEST_CASE("involution failures are classified") {
  Ring Q = Ring::rationals();
  auto H = hamilton_table(Q);
  CHECK(check_scalar_involution(H, Matrix::identity(Q, 4)).failure == InvolutionFailure::NotAntiAutomorphism);
  Matrix m = conjugation(Q, 4) * Q.from_int(2);
  CHECK(check_scalar_involution(H, m).failure == InvolutionFailure::NotOrderTwo);
  CHECK_THROWS_AS(require_scalar_involution(H, Matrix::identity(Q, 4)), Error);
  // Identity on a commutative algebra: anti-automorphism but x*x not scalar.
  Ring F = Ring::prime_field(5);
  std::vector<Scalar> t(27, F.zero());
  for (int i = 0; i < 3; ++i) t[(0 * 3 + i) * 3 + i] = t[(i * 3 + 0) * 3 + i] = F.one();
  StructureAlgebra C(F, 3, {F.one(), F.zero(), F.zero()}, t);
  CHECK(check_scalar_involution(C, Matrix::identity(F, 3)).failure == InvolutionFailure::NotScalar);
}

TEST_CASE("change of basis preserves products") {
  Ring Q = Ring::rationals();
  auto H = require_scalar_involution(hamilton_table(Q), conjugation(Q, 4));
  auto q = [&](std::int64_t v) { return Q.from_int(v); };
  Matrix P = Matrix::from_columns(Q, {{q(1), q(0), q(0), q(0)}, {q(1), q(1), q(0), q(0)},
                                      {q(0), q(1), q(1), q(0)}, {q(0), q(0), q(2), q(1)}}, 4);
  auto H2 = change_basis(H, P);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      CHECK(P.apply(multiply(H2, H2.basis(a), H2.basis(b))) == multiply(H, P.column(a), P.column(b)));
    }
  }
  CHECK(check_quadratic(H2, *H2.norm()));
  CHECK(H2.unit() == Vector{q(1), q(0), q(0), q(0)});
}
