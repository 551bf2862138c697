#include "quadalg/forms.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace quadalg {

std::vector<MultiPoly> lift(const PolyContextPtr& ctx, const Vector& v) {
  std::vector<MultiPoly> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(MultiPoly::constant(ctx, c));
  return out;
}

// ---------------------------------------------------------------- coefficients

CoefficientAlgebra::CoefficientAlgebra(const StructureAlgebra& D) : D_(D) {
  if (!D.involution()) throw Error(ErrorKind::InvalidArgument, "coefficient algebra needs an involution");
  if (!check_identity(D, Identity::Associative)) {
    throw Error(ErrorKind::InvalidArgument, "coefficient algebra must be associative");
  }
  D_ = require_scalar_involution(D, *D.involution()).with_labels(D.labels()).with_provenance(D.provenance());
  commutative_ = check_identity(D_, Identity::Commutative);
}

CoefficientAlgebra CoefficientAlgebra::base(const Ring& R) {
  StructureAlgebra A(R, 1, {R.one()}, {R.one()});
  return CoefficientAlgebra(A.with_involution(Matrix::identity(R, 1)).with_labels({"1"}));
}

Vector CoefficientAlgebra::inverse(const Vector& a) const {
  Scalar n = norm(a);
  if (!n.is_unit()) throw Error(ErrorKind::NonInvertible, "norm " + n.to_string() + " is not a unit");
  return scale(conj(a), n.inv());
}

// ---------------------------------------------------------------- modules

FreeRightModule::FreeRightModule(CoefficientAlgebra D, std::size_t s) : D_(std::move(D)), s_(s) {
  if (s_ == 0) throw Error(ErrorKind::InvalidArgument, "module rank must be positive");
}

Vector FreeRightModule::basis(std::size_t r_index) const {
  Vector e = zero();
  e.at(r_index) = ring().one();
  return e;
}

Vector FreeRightModule::generator(std::size_t i) const {
  std::vector<Vector> parts(s_, D_.zero());
  parts.at(i) = D_.one();
  return from_components(parts);
}

// ---------------------------------------------------------------- forms

SesquilinearForm::SesquilinearForm(FreeRightModule module, std::vector<std::vector<Vector>> gram)
    : module_(std::move(module)), gram_(std::move(gram)) {
  const std::size_t s = module_.d_rank();
  if (gram_.size() != s) throw Error(ErrorKind::InvalidArgument, "Gram matrix must be s x s");
  for (const auto& row : gram_) {
    if (row.size() != s) throw Error(ErrorKind::InvalidArgument, "Gram matrix must be s x s");
    for (const auto& e : row) {
      if (e.size() != coefficients().rank()) throw Error(ErrorKind::InvalidArgument, "Gram entry has wrong length");
      for (const auto& c : e) {
        if (c.ring() != module_.ring()) throw Error(ErrorKind::RingMismatch, "Gram entry outside base ring");
      }
    }
  }
}

SesquilinearForm SesquilinearForm::from_scalars(const FreeRightModule& module, const Matrix& gram) {
  std::vector<std::vector<Vector>> g(gram.rows());
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) g[i].push_back(module.coefficients().embed(gram(i, j)));
  }
  return SesquilinearForm(module, std::move(g));
}

Matrix SesquilinearForm::trace_matrix() const {
  const std::size_t m = module_.r_rank();
  Matrix M(module_.ring(), m, m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      M(p, q) = coefficients().trace(evaluate(module_.basis(p), module_.basis(q)));
    }
  }
  return M;
}

// ---------------------------------------------------------------- cross products

CrossProduct::CrossProduct(Ring ring, std::size_t m, std::vector<Scalar> tensor)
    : ring_(std::move(ring)), m_(m), tensor_(std::move(tensor)) {
  if (tensor_.size() != m_ * m_ * m_) throw Error(ErrorKind::InvalidArgument, "cross tensor has the wrong size");
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      for (std::size_t k = 0; k < m_; ++k) {
        const Scalar& c = at(i, j, k);
        if (c.ring() != ring_) throw Error(ErrorKind::RingMismatch, "cross tensor entry outside base ring");
        if (c != -at(j, i, k) || (i == j && !c.is_zero())) {
          throw Error(ErrorKind::InvalidArgument, "cross product tensor is not alternating");
        }
        if (!c.is_zero()) entries_.push_back({i, j, k, c});
      }
    }
  }
}

CrossProduct CrossProduct::zero(const Ring& ring, std::size_t m) {
  return CrossProduct(ring, m, std::vector<Scalar>(m * m * m, ring.zero()));
}

CrossProduct CrossProduct::from_entries(const Ring& ring, std::size_t m, const std::vector<StructureEntry>& upper) {
  std::vector<Scalar> t(m * m * m, ring.zero());
  for (const auto& e : upper) {
    if (e.i >= e.j || e.j >= m || e.k >= m) throw Error(ErrorKind::InvalidArgument, "cross entries need i < j < m");
    t[(e.i * m + e.j) * m + e.k] += e.c;
    t[(e.j * m + e.i) * m + e.k] -= e.c;
  }
  return CrossProduct(ring, m, std::move(t));
}

std::vector<StructureEntry> CrossProduct::upper_entries() const {
  std::vector<StructureEntry> out;
  for (const auto& e : entries_) {
    if (e.i < e.j) out.push_back(e);
  }
  return out;
}

CrossProduct CrossProduct::reversed() const { return scaled(-ring_.one()); }

CrossProduct CrossProduct::scaled(const Scalar& c) const {
  std::vector<Scalar> t = tensor_;
  for (auto& v : t) v *= c;
  return CrossProduct(ring_, m_, std::move(t));
}

DeterminantTrivialization DeterminantTrivialization::over(const CoefficientAlgebra& D, const Vector& alpha) {
  if (alpha.size() != D.rank()) throw Error(ErrorKind::InvalidArgument, "alpha has the wrong length");
  if (!D.is_unit(alpha)) throw Error(ErrorKind::NonInvertible, "determinant trivialization must be a unit");
  return DeterminantTrivialization{alpha};
}

// ---------------------------------------------------------------- form predicates

bool is_hermitian(const SesquilinearForm& h) {
  const auto& D = h.coefficients();
  const std::size_t s = h.module().d_rank();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (h.entry(i, j) != D.conj(h.entry(j, i))) return false;
    }
  }
  return true;
}

ScaledForm scale_form(const Vector& mu, const SesquilinearForm& h) {
  const auto& D = h.coefficients();
  if (!D.commutative()) throw Error(ErrorKind::InvalidArgument, "scaling needs commutative coefficients");
  if (!is_hermitian(h)) throw Error(ErrorKind::InvalidArgument, "scaling expects a hermitian form");
  Vector mu_inv = D.inverse(mu);
  const std::size_t s = h.module().d_rank();
  std::vector<std::vector<Vector>> g(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) g[i].push_back(D.mul(mu, h.entry(i, j)));
  }
  ScaledForm out{SesquilinearForm(h.module(), std::move(g)), D.mul(D.conj(mu), mu_inv)};
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (D.conj(out.form.entry(i, j)) != D.mul(out.epsilon, out.form.entry(j, i))) {
        throw Error(ErrorKind::InternalInconsistency, "scaled form is not epsilon-hermitian");
      }
    }
  }
  return out;
}

Vector d_determinant(const CoefficientAlgebra& D, const std::vector<std::vector<Vector>>& m) {
  if (!D.commutative()) throw Error(ErrorKind::InvalidArgument, "determinant needs commutative coefficients");
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Vector det = D.zero();
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    Vector term = D.one();
    for (std::size_t r = 0; r < n; ++r) term = D.mul(term, m[r][perm[r]]);
    det = inversions % 2 ? sub(det, term) : add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

namespace {

// Inverse of a square matrix over commutative D via the adjugate.
std::vector<std::vector<Vector>> d_inverse(const CoefficientAlgebra& D, const std::vector<std::vector<Vector>>& m) {
  const std::size_t n = m.size();
  Vector det_inv = D.inverse(d_determinant(D, m));
  std::vector<std::vector<Vector>> inv(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Vector>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Vector> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Vector cof = n == 1 ? D.one() : d_determinant(D, minor);
      if ((i + j) % 2) cof = scale(cof, -D.ring().one());
      inv[i][j] = D.mul(cof, det_inv);
    }
  }
  return inv;
}

// c with det[u | v | w] = sum_k c_k w_k, over any commutative multiplication.
template <class Mul, class Sub>
std::array<Vector, 3> classical_cross(const std::array<Vector, 3>& u, const std::array<Vector, 3>& v, Mul mul, Sub minus) {
  return {minus(mul(u[1], v[2]), mul(u[2], v[1])), minus(mul(u[2], v[0]), mul(u[0], v[2])),
          minus(mul(u[0], v[1]), mul(u[1], v[0]))};
}

}  // namespace

bool is_nondegenerate(const SesquilinearForm& h) {
  const Ring& R = h.module().ring();
  bool verdict = determinant(h.trace_matrix()).is_unit();
  const auto& D = h.coefficients();
  if (D.commutative() && R.is_field() && R.two_invertible() && is_hermitian(h)) {
    bool gram = D.is_unit(d_determinant(D, h.gram()));
    if (gram != verdict) {
      throw Error(ErrorKind::InternalInconsistency, "trace-form and Gram-determinant nondegeneracy disagree");
    }
  }
  return verdict;
}

CrossProduct alpha_cross(const SesquilinearForm& h, const DeterminantTrivialization& alpha) {
  const auto& D = h.coefficients();
  const auto& F = h.module();
  const Ring& R = F.ring();
  if (!D.commutative() || D.rank() != 2) throw Error(ErrorKind::InvalidArgument, "alpha cross needs an etale S");
  if (F.d_rank() != 3) throw Error(ErrorKind::InvalidArgument, "alpha cross needs a rank-3 module");
  if (!is_hermitian(h)) throw Error(ErrorKind::InvalidArgument, "alpha cross needs a hermitian form");
  if (!is_nondegenerate(h)) throw Error(ErrorKind::DegenerateForm, "alpha cross needs a nondegenerate form");
  auto Hinv = d_inverse(D, h.gram());
  Vector abar = D.conj(alpha.alpha);
  auto mul = [&](const Vector& a, const Vector& b) { return D.mul(a, b); };
  auto minus = [](const Vector& a, const Vector& b) { return sub(a, b); };
  auto coords = [&](const Vector& u) {
    return std::array<Vector, 3>{F.component(u, 0), F.component(u, 1), F.component(u, 2)};
  };

  const std::size_t m = F.r_rank();
  std::vector<Scalar> t(m * m * m, R.zero());
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      auto C = classical_cross(coords(F.basis(p)), coords(F.basis(q)), mul, minus);
      std::vector<Vector> z(3, D.zero());
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < 3; ++k) z[i] = add(z[i], D.mul(D.conj(Hinv[k][i]), D.conj(C[k])));
        z[i] = D.mul(abar, z[i]);
      }
      Vector zz = F.from_components(z);
      for (std::size_t r = 0; r < m; ++r) t[(p * m + q) * m + r] = zz[r];
    }
  }
  CrossProduct cross(R, m, std::move(t));

  // h(u x v, w) = alpha det, and (u a) x v = (u x v) conj(a), on basis probes.
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      Vector uv = cross.apply(F.basis(p), F.basis(q));
      auto C = classical_cross(coords(F.basis(p)), coords(F.basis(q)), mul, minus);
      for (std::size_t r = 0; r < m; ++r) {
        auto w = coords(F.basis(r));
        Vector det = add(add(D.mul(C[0], w[0]), D.mul(C[1], w[1])), D.mul(C[2], w[2]));
        if (h.evaluate(uv, F.basis(r)) != D.mul(alpha.alpha, det)) {
          throw Error(ErrorKind::InternalInconsistency, "alpha cross violates its defining relation");
        }
      }
      for (std::size_t a = 0; a < D.rank(); ++a) {
        Vector e = D.algebra().basis(a);
        if (cross.apply(F.act(F.basis(p), e), F.basis(q)) != F.act(uv, D.conj(e))) {
          throw Error(ErrorKind::InternalInconsistency, "alpha cross is not conjugate-sesquilinear");
        }
      }
    }
  }
  return cross;
}

CrossProduct wedge_cross(const QuadraticForm& N, const Scalar& alpha) {
  const Ring& R = alpha.ring();
  if (N.size() != 3) throw Error(ErrorKind::InvalidArgument, "wedge cross needs rank 3");
  if (!R.two_invertible()) throw Error(ErrorKind::TwoNotInvertible, "wedge cross needs 2 invertible");
  if (!alpha.is_unit()) throw Error(ErrorKind::NonInvertible, "determinant trivialization must be a unit");
  Matrix B = N.polar * R.from_int(2).inv();
  if (!determinant(B).is_unit()) throw Error(ErrorKind::DegenerateForm, "quadratic form is degenerate");
  Matrix Binv = inverse(B);
  auto mul = [](const Vector& a, const Vector& b) { return Vector{a[0] * b[0]}; };
  auto minus = [](const Vector& a, const Vector& b) { return Vector{a[0] - b[0]}; };
  auto coords = [&](std::size_t p) {
    std::array<Vector, 3> c{Vector{R.zero()}, Vector{R.zero()}, Vector{R.zero()}};
    c[p][0] = R.one();
    return c;
  };
  std::vector<Scalar> t(27, R.zero());
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t q = 0; q < 3; ++q) {
      auto C = classical_cross(coords(p), coords(q), mul, minus);
      Vector z = Binv.apply({C[0][0] * alpha, C[1][0] * alpha, C[2][0] * alpha});
      for (std::size_t k = 0; k < 3; ++k) t[(p * 3 + q) * 3 + k] = z[k];
    }
  }
  return CrossProduct(R, 3, std::move(t));
}

Scalar induced_dual_trivialization(const Scalar& alpha, std::uint64_t seed) {
  const Ring& R = alpha.ring();
  if (!alpha.is_unit()) throw Error(ErrorKind::NonInvertible, "alpha must be a unit");
  Scalar beta = alpha.inv();
  std::mt19937_64 rng(seed);
  auto random_matrix = [&]() {
    Matrix m(R, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = R.from_int(static_cast<std::int64_t>(rng() % 11) - 5);
    }
    return m;
  };
  std::vector<std::pair<Matrix, Matrix>> probes{{Matrix::identity(R, 3), Matrix::identity(R, 3)}};
  for (int i = 0; i < 3; ++i) probes.emplace_back(random_matrix(), random_matrix());
  for (const auto& [U, V] : probes) {
    // Columns of U are u_1..u_3, columns of V the dual vectors; <u_i, v_j> = (U^T V)_ij.
    if (alpha * determinant(U) * beta * determinant(V) != determinant(U.transpose() * V)) {
      throw Error(ErrorKind::InternalInconsistency, "dual trivialization fails the determinant identity");
    }
  }
  return beta;
}

bool check_cross_norm_conditions(const Matrix& B, const CrossProduct& cross) {
  const Ring& R = B.ring();
  if (!R.two_invertible()) throw Error(ErrorKind::TwoNotInvertible, "needs 2 invertible");
  if (!B.is_symmetric() || B.rows() != cross.size()) throw Error(ErrorKind::InvalidArgument, "B must be symmetric");
  auto f = GenericFamily::make(R, B.rows(), 2);
  const auto &u = f[0], &v = f[1];
  auto w = cross.apply(u, v);
  MultiPoly buv = bilinear(B, u, v);
  MultiPoly eq1 = bilinear(B, w, w) - (bilinear(B, u, u) * bilinear(B, v, v) - buv * buv);
  MultiPoly eq2 = bilinear(B, u, w);
  return eq1.is_zero() && eq2.is_zero();
}

}  // namespace quadalg
