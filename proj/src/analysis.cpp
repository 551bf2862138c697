#include "quadalg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

namespace quadalg {

bool SubmoduleBasis::contains(const Vector& v) const {
  if (vectors.empty()) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
  }
  return coordinates_in(v.front().ring(), vectors, v).has_value();
}

std::optional<Vector> coordinates_in(const Ring& R, const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
    return zero ? std::optional<Vector>(Vector{}) : std::nullopt;
  }
  return solve(Matrix::from_columns(R, basis, v.size()), v);
}

namespace {

SubmoduleBasis make_basis(SubmoduleRole role, std::size_t n, std::vector<Vector> vectors) {
  return SubmoduleBasis{role, n, std::move(vectors)};
}

bool all_zero(const std::vector<MultiPoly>& v) {
  return std::all_of(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

}  // namespace

// ---------------------------------------------------------------- nucleus

SubmoduleBasis nucleus(const StructureAlgebra& A) {
  const Ring& R = A.ring();
  require_field(R, "nucleus");
  const std::size_t n = A.rank();
  // Column c holds every associator coordinate with e_c in one slot.
  std::vector<Vector> columns(n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector x = A.basis(c);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector ei = A.basis(i), ej = A.basis(j);
        for (const auto& a : {associator(A, x, ei, ej), associator(A, ei, x, ej), associator(A, ei, ej, x)}) {
          columns[c].insert(columns[c].end(), a.begin(), a.end());
        }
      }
    }
  }
  Matrix M = Matrix::from_columns(R, columns, columns.front().size());
  return make_basis(SubmoduleRole::Nucleus, n, kernel(M));
}

// ---------------------------------------------------------------- form criteria

CriterionVerdict flexible_conditions(const SesquilinearForm& h, const CrossProduct& cross) {
  const auto& F = h.module();
  const auto& D = F.coefficients();
  auto f = GenericFamily::make(F.ring(), F.r_rank(), 2);
  const auto &u = f[0], &v = f[1];
  auto w = cross.apply(u, v);
  CriterionVerdict out;
  out.first = D.trace(h.evaluate(w, u)).is_zero();
  out.second = all_zero(sub(cross.apply(w, u), cross.apply(u, cross.apply(v, u))));
  out.holds = out.first && out.second;
  return out;
}

bool flexible_criterion(const SesquilinearForm& h, const CrossProduct& cross) {
  return flexible_conditions(h, cross).holds;
}

CriterionVerdict alternative_conditions(const SesquilinearForm& h, const CrossProduct& cross) {
  const auto& F = h.module();
  auto f = GenericFamily::make(F.ring(), F.r_rank(), 2);
  const auto &u = f[0], &v = f[1];
  auto pair_holds = [&](const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
    auto ab = cross.apply(a, b);
    bool orth = all_zero(h.evaluate(a, ab));
    auto rhs = sub(F.act(a, h.evaluate(a, b)), F.act(b, h.evaluate(a, a)));
    return orth && all_zero(sub(cross.apply(a, ab), rhs));
  };
  CriterionVerdict out;
  out.first = pair_holds(u, v);
  // Exchanging u and v: h(u x v, v) = 0 and (u x v) x v = v.h(v, u) - u.h(v, v).
  auto uv = cross.apply(u, v);
  bool orth = all_zero(h.evaluate(uv, v));
  auto rhs = sub(F.act(v, h.evaluate(v, u)), F.act(u, h.evaluate(v, v)));
  out.second = orth && all_zero(sub(cross.apply(uv, v), rhs));
  if (out.first != out.second) {
    throw Error(ErrorKind::InternalInconsistency, "the two alternativity criteria disagree");
  }
  out.holds = out.first;
  return out;
}

bool alternative_criterion(const SesquilinearForm& h, const CrossProduct& cross) {
  return alternative_conditions(h, cross).holds;
}

bool check_trace_form_associative(const StructureAlgebra& A) {
  if (!A.trace()) throw Error(ErrorKind::InvalidArgument, "algebra has no trace attached");
  auto f = GenericFamily::make(A.ring(), A.rank(), 3);
  const auto &x = f[0], &y = f[1], &z = f[2];
  const Vector& t = *A.trace();
  MultiPoly d = apply_covector(t, multiply(A, multiply(A, x, y), z)) - apply_covector(t, multiply(A, x, multiply(A, y, z)));
  return d.is_zero();
}

// ---------------------------------------------------------------- radicals and splits

SubmoduleBasis radical(const StructureAlgebra& A, RadicalForm which) {
  const Ring& R = A.ring();
  require_field(R, "radical");
  const std::size_t n = A.rank();
  Matrix G(R, n, n);
  if (which == RadicalForm::NormPolar) {
    if (!A.norm()) throw Error(ErrorKind::InvalidArgument, "algebra has no norm attached");
    G = A.norm()->polar;
  } else {
    if (!A.trace()) throw Error(ErrorKind::InvalidArgument, "algebra has no trace attached");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) G(i, j) = apply_covector(*A.trace(), multiply(A, A.basis(i), A.basis(j)));
    }
  }
  return make_basis(SubmoduleRole::Radical, n, kernel(G));
}

SymSkew skew_sym_split(const StructureAlgebra& A) {
  const Ring& R = A.ring();
  require_field(R, "sym/skew split");
  if (!R.two_invertible()) throw Error(ErrorKind::TwoNotInvertible, "sym/skew split needs 2 invertible");
  if (!A.involution()) throw Error(ErrorKind::InvalidArgument, "algebra has no involution attached");
  const Matrix& s = *A.involution();
  Matrix I = Matrix::identity(R, A.rank());
  return SymSkew{make_basis(SubmoduleRole::Sym, A.rank(), kernel(s - I)),
                 make_basis(SubmoduleRole::Skew, A.rank(), kernel(s + I))};
}

SubmoduleBasis orthogonal_complement(const StructureAlgebra& A, const std::vector<Vector>& D_basis) {
  const Ring& R = A.ring();
  require_field(R, "orthogonal complement");
  if (!A.norm()) throw Error(ErrorKind::InvalidArgument, "algebra has no norm attached");
  const Matrix& P = A.norm()->polar;
  const std::size_t k = D_basis.size();
  Matrix G(R, k, k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) G(a, b) = bilinear(P, D_basis[a], D_basis[b]);
  }
  if (k > 0 && determinant(G).is_zero()) {
    throw Error(ErrorKind::DegenerateRestriction, "norm is degenerate on the given subspace");
  }
  std::vector<Vector> rows;
  for (const auto& d : D_basis) rows.push_back(P.transpose().apply(d));
  if (rows.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < A.rank(); ++i) all.push_back(A.basis(i));
    return make_basis(SubmoduleRole::Orthocomplement, A.rank(), all);
  }
  return make_basis(SubmoduleRole::Orthocomplement, A.rank(), kernel(Matrix::from_rows(R, rows, A.rank())));
}

// ---------------------------------------------------------------- subalgebra decomposition

namespace {

// Coordinates of v in the adapted basis [D | F]: (D part, F part).
struct Adapted {
  Matrix inverse;
  std::size_t d;

  std::pair<Vector, Vector> split(const Vector& v) const {
    Vector c = inverse.apply(v);
    return {Vector(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d)),
            Vector(c.begin() + static_cast<std::ptrdiff_t>(d), c.end())};
  }
};

Vector combine(const Ring& R, const std::vector<Vector>& basis, const Vector& coeffs, std::size_t n) {
  Vector out(n, R.zero());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!coeffs[i].is_zero()) out = add(out, scale(basis[i], coeffs[i]));
  }
  return out;
}

}  // namespace

SubalgebraSplit decompose_over_subalgebra(const StructureAlgebra& A, const std::vector<Vector>& D_basis) {
  const Ring& R = A.ring();
  require_field(R, "decomposition");
  if (!R.two_invertible()) throw Error(ErrorKind::TwoNotInvertible, "decomposition needs 2 invertible");
  if (!A.involution() || !A.norm()) throw Error(ErrorKind::InvalidArgument, "algebra needs involution and norm");
  const std::size_t n = A.rank();
  const std::size_t d = D_basis.size();
  if (d == 0 || rank(Matrix::from_rows(R, D_basis, n)) != d) {
    throw Error(ErrorKind::InvalidArgument, "subalgebra basis must be linearly independent");
  }

  // Closure under multiplication and the involution, and containment of 1.
  auto in_D = [&](const Vector& v) { return coordinates_in(R, D_basis, v).has_value(); };
  if (!in_D(A.unit())) throw Error(ErrorKind::NotASubalgebra, "span does not contain the unit");
  for (const auto& a : D_basis) {
    if (!in_D(A.involution()->apply(a))) throw Error(ErrorKind::NotASubalgebra, "span is not closed under involution");
    for (const auto& b : D_basis) {
      if (!in_D(multiply(A, a, b))) throw Error(ErrorKind::NotASubalgebra, "span is not closed under multiplication");
    }
  }
  SubmoduleBasis Fb = orthogonal_complement(A, D_basis);
  const std::vector<Vector>& Fv = Fb.vectors;
  const std::size_t m = Fv.size();

  std::vector<Vector> adapted_cols = D_basis;
  adapted_cols.insert(adapted_cols.end(), Fv.begin(), Fv.end());
  Matrix P = Matrix::from_columns(R, adapted_cols, n);
  Adapted ad{inverse(P), d};

  // D in its own basis.
  std::vector<Scalar> dt;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      auto [dp, fp] = ad.split(multiply(A, D_basis[a], D_basis[b]));
      dt.insert(dt.end(), dp.begin(), dp.end());
    }
  }
  Matrix dsigma(R, d, d);
  for (std::size_t b = 0; b < d; ++b) {
    auto [dp, fp] = ad.split(A.involution()->apply(D_basis[b]));
    for (std::size_t a = 0; a < d; ++a) dsigma(a, b) = dp[a];
  }
  StructureAlgebra Dalg(R, d, ad.split(A.unit()).first, std::move(dt));
  CoefficientAlgebra D(Dalg.with_involution(dsigma));

  std::vector<std::vector<Vector>> h(m, std::vector<Vector>(m));
  std::vector<Scalar> xt(m * m * m, R.zero());
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      auto [dp, fp] = ad.split(multiply(A, Fv[q], Fv[p]));  // vu with u = F_p, v = F_q
      h[p][q] = scale(dp, -R.one());
      for (std::size_t k = 0; k < m; ++k) xt[(p * m + q) * m + k] = fp[k];
    }
  }

  SubalgebraSplit out{D.algebra(), Fb, h, CrossProduct::zero(R, m), {}, {}, {}, {}, {}, {}, {}, {}, {}};
  out.cross_alternating = true;
  for (std::size_t p = 0; p < m && out.cross_alternating; ++p) {
    for (std::size_t q = 0; q < m && out.cross_alternating; ++q) {
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& c = xt[(p * m + q) * m + k];
        if (c != -xt[(q * m + p) * m + k] || (p == q && !c.is_zero())) out.cross_alternating = false;
      }
    }
  }
  if (!out.cross_alternating) return out;
  out.cross = CrossProduct(R, m, xt);

  out.polar_is_trace = true;
  out.hermitian = true;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (bilinear(A.norm()->polar, Fv[p], Fv[q]) != D.trace(h[p][q])) out.polar_is_trace = false;
      if (h[p][q] != D.conj(h[q][p])) out.hermitian = false;
    }
  }

  // Right action u.a := a u, in F-coordinates.
  auto act = [&](const Vector& ucoords, const Vector& acoords) {
    Vector u = combine(R, Fv, ucoords, n), a = combine(R, D_basis, acoords, n);
    return ad.split(multiply(A, a, u));
  };
  out.module_closed = true;
  for (std::size_t p = 0; p < m && out.module_closed; ++p) {
    for (std::size_t a = 0; a < d; ++a) {
      Vector up(m, R.zero());
      up[p] = R.one();
      auto [dq, fq] = act(up, Dalg.basis(a));
      if (std::any_of(dq.begin(), dq.end(), [](const Scalar& c) { return !c.is_zero(); })) {
        out.module_closed = false;
        break;
      }
    }
  }
  if (!out.module_closed || m % d != 0) return out;

  // Greedy free basis: add F basis vectors whose D-orbit raises the rank by d.
  std::vector<Vector> spanning;
  for (std::size_t p = 0; p < m && spanning.size() < m; ++p) {
    Vector up(m, R.zero());
    up[p] = R.one();
    std::vector<Vector> trial = spanning;
    for (std::size_t a = 0; a < d; ++a) trial.push_back(act(up, Dalg.basis(a)).second);
    if (rank(Matrix::from_rows(R, trial, m)) == trial.size()) {
      spanning = std::move(trial);
      out.generators.push_back(up);
    }
  }
  if (spanning.size() != m) return out;
  // spanning[i*d + a] = f_i . e_a is the R-basis of the free module.
  const std::size_t s = m / d;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        // (f_i e_a) e_b must equal f_i (e_a e_b).
        Vector lhs = act(spanning[i * d + a], Dalg.basis(b)).second;
        Vector ab = multiply(Dalg, Dalg.basis(a), Dalg.basis(b));
        Vector rhs = act(out.generators[i], ab).second;
        if (lhs != rhs) return out;
      }
    }
  }
  out.free = true;

  Matrix Q = Matrix::from_columns(R, spanning, m);  // module coords -> F coords
  Matrix Qinv = inverse(Q);
  FreeRightModule Fm(D, s);
  auto hval = [&](const Vector& x, const Vector& y) {  // F-coords
    Vector acc = D.zero();
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = 0; q < m; ++q) {
        if (!x[p].is_zero() && !y[q].is_zero()) acc = add(acc, scale(h[p][q], x[p] * y[q]));
      }
    }
    return acc;
  };
  std::vector<std::vector<Vector>> gram(s, std::vector<Vector>(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) gram[i][j] = hval(out.generators[i], out.generators[j]);
  }
  out.form = SesquilinearForm(Fm, gram);
  std::vector<Scalar> mt(m * m * m, R.zero());
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      Vector z = Qinv.apply(out.cross.apply(spanning[p], spanning[q]));
      for (std::size_t k = 0; k < m; ++k) mt[(p * m + q) * m + k] = z[k];
    }
  }
  out.module_cross = CrossProduct(R, m, mt);

  StructureAlgebra rebuilt = build_unified(*out.form, *out.module_cross);
  std::vector<Vector> cols = D_basis;
  for (const auto& sv : spanning) cols.push_back(combine(R, Fv, sv, n));
  StructureAlgebra adapted = change_basis(A, Matrix::from_columns(R, cols, n));
  out.rebuild_equal = adapted.tensor() == rebuilt.tensor() && adapted.unit() == rebuilt.unit();
  return out;
}

// ---------------------------------------------------------------- cross product extraction

CrossProductSplit extract_cross_product(const StructureAlgebra& C) {
  const Ring& R = C.ring();
  require_field(R, "cross product extraction");
  if (!R.two_invertible()) throw Error(ErrorKind::TwoNotInvertible, "extraction needs 2 invertible");
  if (!C.involution() || !C.norm()) throw Error(ErrorKind::NotComposition, "algebra needs involution and norm");
  auto comp = check_composition(C, *C.norm());
  if (!comp.multiplicative || !comp.nondegenerate) throw Error(ErrorKind::NotComposition, "norm is not a composition norm");
  const std::size_t n = C.rank();
  const Scalar half = R.from_int(2).inv();

  CrossProductSplit out{skew_sym_split(C).skew, 0, Matrix(R, 0, 0), CrossProduct::zero(R, 0)};
  const auto& Fv = out.F.vectors;
  const std::size_t s = Fv.size();
  out.s = s;
  if (s + 1 != n) throw Error(ErrorKind::InternalInconsistency, "skew space does not have corank one");

  std::vector<Vector> cols{C.unit()};
  cols.insert(cols.end(), Fv.begin(), Fv.end());
  Matrix Pinv = inverse(Matrix::from_columns(R, cols, n));
  auto fcoords = [&](const Vector& v) {
    Vector c = Pinv.apply(v);
    if (!c[0].is_zero()) throw Error(ErrorKind::InternalInconsistency, "half commutator left the skew space");
    return Vector(c.begin() + 1, c.end());
  };

  out.B = Matrix(R, s, s);
  std::vector<Scalar> xt(s * s * s, R.zero());
  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t q = 0; q < s; ++q) {
      out.B(p, q) = bilinear(C.norm()->polar, Fv[p], Fv[q]) * half;
      Vector comm = scale(sub(multiply(C, Fv[p], Fv[q]), multiply(C, Fv[q], Fv[p])), half);
      Vector z = fcoords(comm);
      for (std::size_t k = 0; k < s; ++k) xt[(p * s + q) * s + k] = z[k];
    }
  }
  if (s == 0) {
    out.conditions = true;
    out.rebuild_equal = true;
    return out;
  }
  out.cross = CrossProduct(R, s, xt);
  out.conditions = check_cross_norm_conditions(out.B, out.cross);

  auto F = FreeRightModule(CoefficientAlgebra::base(R), s);
  StructureAlgebra rebuilt = build_unified(SesquilinearForm::from_scalars(F, out.B), out.cross.reversed());
  StructureAlgebra adapted = change_basis(C, Matrix::from_columns(R, cols, n));
  out.rebuild_equal = adapted.tensor() == rebuilt.tensor() && adapted.unit() == rebuilt.unit();
  return out;
}

// ---------------------------------------------------------------- zero divisors

namespace {

bool verify_pair(const StructureAlgebra& A, const Vector& x, ZeroDivisorSearch& out) {
  Vector y = A.involution()->apply(x);
  bool xnz = std::any_of(x.begin(), x.end(), [](const Scalar& c) { return !c.is_zero(); });
  bool ynz = std::any_of(y.begin(), y.end(), [](const Scalar& c) { return !c.is_zero(); });
  Vector xy = multiply(A, x, y);
  if (xnz && ynz && std::all_of(xy.begin(), xy.end(), [](const Scalar& c) { return c.is_zero(); })) {
    out.pair = std::pair{x, y};
    return true;
  }
  return false;
}

// Orthogonal basis for the polarization (field, 2 invertible). Returns an
// isotropic vector instead when one appears along the way.
std::variant<std::vector<Vector>, Vector> diagonalize(const StructureAlgebra& A) {
  const QuadraticForm& q = *A.norm();
  std::vector<Vector> pending;
  for (std::size_t i = 0; i < A.rank(); ++i) pending.push_back(A.basis(i));
  std::vector<Vector> done;
  while (!pending.empty()) {
    auto it = std::find_if(pending.begin(), pending.end(), [&](const Vector& v) { return !q.evaluate(v).is_zero(); });
    if (it == pending.end()) {
      for (const auto& v : pending) {
        if (std::any_of(v.begin(), v.end(), [](const Scalar& c) { return !c.is_zero(); })) return v;
      }
      break;
    }
    Vector b = *it;
    pending.erase(it);
    Scalar bb = q.polar_value(b, b);
    for (auto& v : pending) {
      Scalar c = q.polar_value(v, b) / bb;
      if (!c.is_zero()) v = sub(v, scale(b, c));
    }
    done.push_back(b);
  }
  return done;
}

}  // namespace

ZeroDivisorSearch find_zero_divisors(const StructureAlgebra& A, std::uint64_t budget) {
  if (!A.norm() || !A.involution()) throw Error(ErrorKind::InvalidArgument, "algebra needs norm and involution");
  const Ring& R = A.ring();
  const std::size_t n = A.rank();
  const QuadraticForm& q = *A.norm();
  ZeroDivisorSearch out;

  if (auto card = R.cardinality()) {
    out.method = "exhaustive";
    // Total count card^n, saturating.
    std::uint64_t total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (total > UINT64_MAX / *card) overflow = true;
      else total *= *card;
    }
    for (std::uint64_t idx = 1; (overflow || idx < total) && out.evaluations < budget; ++idx) {
      Vector x;
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < n; ++i, r /= *card) x.push_back(R.element_at(r % *card));
      ++out.evaluations;
      if (q.evaluate(x).is_zero() && verify_pair(A, x, out)) return out;
    }
    out.exhausted = !overflow && out.evaluations + 1 >= total;
    out.proved_anisotropic = out.exhausted;
    return out;
  }

  std::vector<Vector> basis;
  if (R.is_field() && R.two_invertible()) {
    out.method = "diagonal";
    auto diag = diagonalize(A);
    if (auto* iso = std::get_if<Vector>(&diag)) {
      ++out.evaluations;
      if (verify_pair(A, *iso, out)) return out;
    } else {
      basis = std::get<std::vector<Vector>>(diag);
      std::vector<Scalar> vals;
      for (const auto& b : basis) vals.push_back(q.evaluate(b));
      if (R.kind() == RingKind::Rationals) {
        auto sign = [](const Scalar& s) { return sgn(s.rational()); };
        bool definite = std::all_of(vals.begin(), vals.end(), [&](const Scalar& v) { return sign(v) == sign(vals[0]); });
        if (definite) {
          out.proved_anisotropic = true;
          return out;
        }
      }
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
          ++out.evaluations;
          // a_i x^2 + a_j = 0 needs x^2 = -a_j / a_i.
          if (auto r = exact_sqrt(-vals[j] / vals[i])) {
            if (verify_pair(A, add(scale(basis[i], *r), basis[j]), out)) return out;
          }
        }
      }
    }
  }
  if (basis.empty()) {
    for (std::size_t i = 0; i < n; ++i) basis.push_back(A.basis(i));
  }
  // Small integer combinations of the (diagonal) basis within the budget.
  out.method += out.method.empty() ? "small-search" : "+small-search";
  std::int64_t radius = 1;
  while (std::pow(2.0 * static_cast<double>(radius + 1) + 1.0, static_cast<double>(n)) <= static_cast<double>(budget)) ++radius;
  const std::uint64_t width = static_cast<std::uint64_t>(2 * radius + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n && total <= budget; ++i) total *= width;
  for (std::uint64_t idx = 1; idx < total && out.evaluations < budget; ++idx) {
    Vector x(n, R.zero());
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < n; ++i, r /= width) {
      std::int64_t c = static_cast<std::int64_t>(r % width) - radius;
      if (c != 0) x = add(x, scale(basis[i], R.from_int(c)));
    }
    ++out.evaluations;
    if (q.evaluate(x).is_zero() && verify_pair(A, x, out)) return out;
  }
  return out;
}

Classification classify_composition(const StructureAlgebra& A) {
  require_field(A.ring(), "classification");
  std::optional<QuadraticForm> norm = A.norm();
  if (!norm && A.involution()) {
    auto r = check_scalar_involution(A, *A.involution());
    if (r.ok) norm = r.norm;
  }
  if (!norm) throw Error(ErrorKind::NotComposition, "no norm available");
  auto c = check_composition(A, *norm);
  if (!c.multiplicative) throw Error(ErrorKind::NotComposition, "norm is not multiplicative");
  if (!c.nondegenerate) throw Error(ErrorKind::NotComposition, "norm is degenerate");
  switch (A.rank()) {
    case 1: return {1, "base"};
    case 2: return {2, "etale"};
    case 4: return {4, "quaternion"};
    case 8: return {8, "octonion"};
    default:
      throw Error(ErrorKind::InternalInconsistency,
                  "composition algebra of rank " + std::to_string(A.rank()) + " is outside ranks 1, 2, 4, 8");
  }
}

}  // namespace quadalg
