#include "quadalg/constructions.hpp"

#include <functional>

namespace quadalg {

BilinearMap::BilinearMap(Ring ring, std::size_t n, std::vector<Scalar> tensor)
    : ring_(std::move(ring)), n_(n), tensor_(std::move(tensor)) {
  if (tensor_.size() != n_ * n_ * n_) throw Error(ErrorKind::InvalidArgument, "bilinear map tensor has the wrong size");
}

BilinearMap BilinearMap::zero(const Ring& ring, std::size_t n) {
  return BilinearMap(ring, n, std::vector<Scalar>(n * n * n, ring.zero()));
}

BilinearMap BilinearMap::multiplication(const StructureAlgebra& A) {
  return BilinearMap(A.ring(), A.rank(), A.tensor());
}

Vector BilinearMap::apply(const Vector& x, const Vector& y) const {
  Vector z(n_, ring_.zero());
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& c = tensor_[(i * n_ + j) * n_ + k];
        if (!c.is_zero()) z[k] += xy * c;
      }
    }
  }
  return z;
}

namespace {

std::vector<Scalar> tensor_from(std::size_t n, const std::function<Vector(std::size_t, std::size_t)>& product) {
  std::vector<Scalar> t;
  t.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector z = product(i, j);
      t.insert(t.end(), z.begin(), z.end());
    }
  }
  return t;
}

std::vector<std::string> unified_labels(const CoefficientAlgebra& D, std::size_t s) {
  std::vector<std::string> labels = D.algebra().labels();
  if (labels.size() != D.rank()) {
    labels.clear();
    for (std::size_t a = 0; a < D.rank(); ++a) labels.push_back("e" + std::to_string(a));
  }
  std::vector<std::string> out = labels;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t a = 0; a < D.rank(); ++a) {
      std::string f = "f" + std::to_string(i + 1);
      out.push_back(D.rank() == 1 ? f : f + "." + labels[a]);
    }
  }
  return out;
}

}  // namespace

StructureAlgebra build_unified(const SesquilinearForm& h, const CrossProduct& cross) {
  const auto& F = h.module();
  const auto& D = F.coefficients();
  const Ring& R = F.ring();
  const std::size_t d = D.rank();
  const std::size_t m = F.r_rank();
  const std::size_t n = d + m;
  if (cross.size() != m) throw Error(ErrorKind::AlgebraMismatch, "cross product and module ranks differ");
  if (cross.ring() != R) throw Error(ErrorKind::RingMismatch, "cross product over a different ring");

  auto split = [&](std::size_t idx) {
    Vector alpha = D.zero(), u = F.zero();
    if (idx < d) alpha[idx] = R.one();
    else u[idx - d] = R.one();
    return std::pair{alpha, u};
  };
  auto tensor = tensor_from(n, [&](std::size_t P, std::size_t Q) {
    auto [alpha, u] = split(P);
    auto [beta, v] = split(Q);
    Vector dpart = sub(D.mul(alpha, beta), h.evaluate(v, u));
    Vector fpart = add(add(F.act(v, alpha), F.act(u, D.conj(beta))), cross.apply(v, u));
    dpart.insert(dpart.end(), fpart.begin(), fpart.end());
    return dpart;
  });
  Vector unit = D.one();
  unit.resize(n, R.zero());
  StructureAlgebra A(R, n, unit, std::move(tensor));

  Matrix sigma(R, n, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) sigma(i, j) = D.conj_matrix()(i, j);
  }
  for (std::size_t p = 0; p < m; ++p) sigma(d + p, d + p) = -R.one();
  A = A.with_involution(sigma).with_labels(unified_labels(D, F.d_rank()));

  if (is_hermitian(h)) {
    QuadraticForm q = QuadraticForm::zero(R, n);
    const QuadraticForm& nD = *D.algebra().norm();
    for (std::size_t i = 0; i < d; ++i) {
      q.diag[i] = nD.diag[i];
      for (std::size_t j = 0; j < d; ++j) q.polar(i, j) = nD.polar(i, j);
    }
    Matrix tm = h.trace_matrix();
    for (std::size_t p = 0; p < m; ++p) {
      auto hpp = scalar_part(D.algebra(), h.evaluate(F.basis(p), F.basis(p)));
      if (!hpp) throw Error(ErrorKind::InternalInconsistency, "h(u, u) is not a scalar");
      q.diag[d + p] = *hpp;
      for (std::size_t r = 0; r < m; ++r) q.polar(d + p, d + r) = tm(p, r);
    }
    Vector t(n, R.zero());
    for (std::size_t i = 0; i < d; ++i) t[i] = (*D.algebra().trace())[i];
    A = A.with_norm(std::move(q)).with_trace(std::move(t));
  }
  return A.with_provenance("unified");
}

StructureAlgebra cayley_dickson(const CoefficientAlgebra& D, const Scalar& mu) {
  const Ring& R = D.ring();
  if (!mu.is_unit()) throw Error(ErrorKind::NonInvertible, "doubling parameter must be a unit");
  const std::size_t d = D.rank();
  const std::size_t n = 2 * d;
  auto halves = [&](std::size_t idx) {
    Vector u = D.zero(), w = D.zero();
    (idx < d ? u[idx] : w[idx - d]) = R.one();
    return std::pair{u, w};
  };
  auto tensor = tensor_from(n, [&](std::size_t P, std::size_t Q) {
    auto [u, w] = halves(P);
    auto [u2, w2] = halves(Q);
    Vector first = add(D.mul(u, u2), scale(D.mul(D.conj(w2), w), mu));
    Vector second = add(D.mul(w2, u), D.mul(w, D.conj(u2)));
    first.insert(first.end(), second.begin(), second.end());
    return first;
  });
  Vector unit = D.one();
  unit.resize(n, R.zero());
  StructureAlgebra A(R, n, unit, std::move(tensor));

  Matrix sigma(R, n, n);
  QuadraticForm q = QuadraticForm::zero(R, n);
  const QuadraticForm& nD = *D.algebra().norm();
  Vector t(n, R.zero());
  for (std::size_t i = 0; i < d; ++i) {
    sigma(d + i, d + i) = -R.one();
    t[i] = (*D.algebra().trace())[i];
    q.diag[i] = nD.diag[i];
    q.diag[d + i] = -mu * nD.diag[i];
    for (std::size_t j = 0; j < d; ++j) {
      sigma(i, j) = D.conj_matrix()(i, j);
      q.polar(i, j) = nD.polar(i, j);
      q.polar(d + i, d + j) = -mu * nD.polar(i, j);
    }
  }
  std::vector<std::string> labels = D.algebra().labels();
  if (labels.size() == d) {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("(" + labels[i] + ")'");
  } else {
    labels.clear();
  }
  return A.with_involution(sigma).with_norm(q).with_trace(t).with_labels(labels).with_provenance(
      "cayley_dickson mu=" + mu.to_string());
}

StructureAlgebra thakur(const SesquilinearForm& h, const DeterminantTrivialization& alpha) {
  CrossProduct cross = alpha_cross(h, alpha).reversed();
  return build_unified(h, cross).with_provenance("thakur: unified cross = reversed alpha cross");
}

StructureAlgebra quat(const QuadraticForm& N, const Scalar& alpha) {
  const Ring& R = alpha.ring();
  CrossProduct cross = wedge_cross(N, alpha).reversed();
  auto D = CoefficientAlgebra::base(R);
  auto F = FreeRightModule(D, 3);
  Matrix B = N.polar * R.from_int(2).inv();
  auto A = build_unified(SesquilinearForm::from_scalars(F, B), cross);
  return A.with_labels({"1", "e1", "e2", "e3"}).with_provenance("quat: unified cross = reversed wedge cross");
}

StructureAlgebra jspin(const Matrix& B) {
  const Ring& R = B.ring();
  if (!B.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "spin factor needs a symmetric form");
  auto F = FreeRightModule(CoefficientAlgebra::base(R), B.rows());
  return build_unified(SesquilinearForm::from_scalars(F, B * (-R.one())), CrossProduct::zero(R, B.rows()))
      .with_provenance("jspin");
}

StructureAlgebra hat(const SesquilinearForm& h, const CrossProduct& cross) {
  const Ring& R = h.module().ring();
  if (!R.two_invertible()) throw Error(ErrorKind::TwoNotInvertible, "hat needs 2 invertible");
  if (!is_hermitian(h)) throw Error(ErrorKind::InvalidArgument, "hat needs a hermitian form");
  Matrix B = h.trace_matrix() * R.from_int(2).inv();
  auto F = FreeRightModule(CoefficientAlgebra::base(R), h.module().r_rank());
  return build_unified(SesquilinearForm::from_scalars(F, B), cross).with_provenance("hat");
}

StructureAlgebra becker_double(const StructureAlgebra& A, const BilinearMap& dot1, const BilinearMap& dot2,
                               const BilinearMap& dot3) {
  const Ring& R = A.ring();
  const std::size_t n = A.rank();
  if (!A.involution() || !check_scalar_involution(A, *A.involution()).ok) {
    throw Error(ErrorKind::NotScalarInvolution, "becker doubling needs a scalar involution");
  }
  if (dot1.size() != n || dot2.size() != n || dot3.size() != n) {
    throw Error(ErrorKind::AlgebraMismatch, "products must act on the algebra");
  }
  const Matrix& star = *A.involution();
  auto halves = [&](std::size_t idx) {
    Vector a = A.zero_vector(), b = A.zero_vector();
    (idx < n ? a[idx] : b[idx - n]) = R.one();
    return std::pair{a, b};
  };
  auto tensor = tensor_from(2 * n, [&](std::size_t P, std::size_t Q) {
    auto [a, b] = halves(P);
    auto [c, d] = halves(Q);
    Vector first = add(multiply(A, a, c), dot1.apply(star.apply(d), b));
    Vector second = add(add(dot2.apply(d, a), dot2.apply(b, star.apply(c))), dot3.apply(b, d));
    first.insert(first.end(), second.begin(), second.end());
    return first;
  });
  Vector unit = A.unit();
  unit.resize(2 * n, R.zero());
  StructureAlgebra out(R, 2 * n, unit, std::move(tensor));
  Matrix sigma(R, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    sigma(n + i, n + i) = -R.one();
    for (std::size_t j = 0; j < n; ++j) sigma(i, j) = star(i, j);
  }
  auto r = check_scalar_involution(out, sigma);
  out = r.ok ? *r.algebra : out.with_involution(sigma);
  return out.with_provenance("becker");
}

BeckerProducts becker_products(const SesquilinearForm& h, const CrossProduct& cross) {
  const auto& D = h.coefficients();
  if (h.module().d_rank() != 1) throw Error(ErrorKind::InvalidArgument, "becker products need a rank-one module");
  const std::size_t n = D.rank();
  const Ring& R = D.ring();
  const Vector& H = h.entry(0, 0);
  auto basis = [&](std::size_t i) { return D.algebra().basis(i); };
  auto dot1 = tensor_from(n, [&](std::size_t i, std::size_t j) {
    return scale(D.mul(D.mul(basis(i), H), basis(j)), -R.one());
  });
  auto dot3 = tensor_from(n, [&](std::size_t i, std::size_t j) { return cross.apply(basis(j), basis(i)); });
  return BeckerProducts{BilinearMap(R, n, std::move(dot1)), BilinearMap::multiplication(D.algebra()),
                        BilinearMap(R, n, std::move(dot3))};
}

StructureAlgebra cay_rank2(const Ring& R, const Scalar& b) {
  auto F = FreeRightModule(CoefficientAlgebra::base(R), 1);
  Matrix g(R, 1, 1);
  g(0, 0) = -b;
  return build_unified(SesquilinearForm::from_scalars(F, g), CrossProduct::zero(R, 1))
      .with_labels({"1", "w"})
      .with_provenance("cay_rank2 b=" + b.to_string());
}

StructureAlgebra split_etale(const Ring& R) {
  std::vector<Scalar> t(8, R.zero());
  t[0] = R.one();  // e1 e1 = e1
  t[7] = R.one();  // e2 e2 = e2
  StructureAlgebra S(R, 2, {R.one(), R.one()}, std::move(t));
  Matrix swap(R, 2, 2);
  swap(0, 1) = swap(1, 0) = R.one();
  return require_scalar_involution(S, swap).with_labels({"e1", "e2"}).with_provenance("split etale");
}

StructureAlgebra hamilton(const Ring& R) {
  auto A = cayley_dickson(CoefficientAlgebra(cay_rank2(R, -R.one())), -R.one());
  return A.with_labels({"1", "i", "j", "k"}).with_provenance("hamilton");
}

StructureAlgebra octonion(const Ring& R) {
  auto A = cayley_dickson(CoefficientAlgebra(hamilton(R)), -R.one());
  return A.with_labels({"1", "i", "j", "k", "l", "il", "jl", "kl"}).with_provenance("octonion");
}

FreeRightModule free_module(const CoefficientAlgebra& D, std::size_t s) { return FreeRightModule(D, s); }

SesquilinearForm identity_form(const FreeRightModule& F) {
  return SesquilinearForm::from_scalars(F, Matrix::identity(F.ring(), F.d_rank()));
}

}  // namespace quadalg
