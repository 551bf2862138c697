#include "quadalg/algebra.hpp"

#include <algorithm>
#include <array>

namespace quadalg {

// ---------------------------------------------------------------- forms

QuadraticForm QuadraticForm::zero(const Ring& ring, std::size_t n) {
  return QuadraticForm{Vector(n, ring.zero()), Matrix(ring, n, n)};
}

QuadraticForm QuadraticForm::from_bilinear(const Matrix& gram) {
  if (!gram.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "bilinear form is not symmetric");
  QuadraticForm q = zero(gram.ring(), gram.rows());
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    q.diag[i] = gram(i, i);
    for (std::size_t j = 0; j < gram.rows(); ++j) q.polar(i, j) = gram(i, j) + gram(j, i);
  }
  return q;
}

// ---------------------------------------------------------------- algebra

StructureAlgebra::StructureAlgebra(Ring ring, std::size_t rank, Vector unit, std::vector<Scalar> tensor)
    : ring_(std::move(ring)), rank_(rank), unit_(std::move(unit)), tensor_(std::move(tensor)) {
  if (rank_ == 0) throw Error(ErrorKind::InvalidArgument, "algebra rank must be positive");
  if (unit_.size() != rank_ || tensor_.size() != rank_ * rank_ * rank_) {
    throw Error(ErrorKind::InvalidArgument, "unit or structure tensor has the wrong size");
  }
  for (const auto& v : unit_) {
    if (v.ring() != ring_) throw Error(ErrorKind::RingMismatch, "unit coordinate outside base ring");
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      for (std::size_t k = 0; k < rank_; ++k) {
        const Scalar& c = tensor_[(i * rank_ + j) * rank_ + k];
        if (c.ring() != ring_) throw Error(ErrorKind::RingMismatch, "structure constant outside base ring");
        if (!c.is_zero()) entries_.push_back({i, j, k, c});
      }
    }
  }
  unit_pivot_ = rank_;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (unit_[i].is_unit()) {
      unit_pivot_ = i;
      break;
    }
  }
  if (unit_pivot_ == rank_) throw Error(ErrorKind::InvalidArgument, "unit vector has no invertible coordinate");
  for (std::size_t i = 0; i < rank_; ++i) {
    Vector e = basis(i);
    if (multiply(*this, unit_, e) != e || multiply(*this, e, unit_) != e) {
      throw Error(ErrorKind::InvalidArgument, "unit is not a two-sided identity on basis vector " + std::to_string(i));
    }
  }
}

StructureAlgebra StructureAlgebra::with_involution(Matrix sigma) const {
  if (sigma.rows() != rank_ || sigma.cols() != rank_) throw Error(ErrorKind::AlgebraMismatch, "involution shape");
  StructureAlgebra a = *this;
  a.involution_ = std::move(sigma);
  return a;
}

StructureAlgebra StructureAlgebra::with_norm(QuadraticForm n) const {
  if (n.size() != rank_) throw Error(ErrorKind::AlgebraMismatch, "norm size");
  StructureAlgebra a = *this;
  a.norm_ = std::move(n);
  return a;
}

StructureAlgebra StructureAlgebra::with_trace(Vector t) const {
  if (t.size() != rank_) throw Error(ErrorKind::AlgebraMismatch, "trace size");
  StructureAlgebra a = *this;
  a.trace_ = std::move(t);
  return a;
}

StructureAlgebra StructureAlgebra::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != rank_) throw Error(ErrorKind::AlgebraMismatch, "label count");
  StructureAlgebra a = *this;
  a.labels_ = std::move(labels);
  return a;
}

StructureAlgebra StructureAlgebra::with_provenance(std::string note) const {
  StructureAlgebra a = *this;
  a.provenance_ = std::move(note);
  return a;
}

Vector StructureAlgebra::basis(std::size_t i) const {
  Vector e = zero_vector();
  e.at(i) = ring_.one();
  return e;
}

bool StructureAlgebra::same_structure(const StructureAlgebra& o) const {
  return ring_ == o.ring_ && rank_ == o.rank_ && unit_ == o.unit_ && tensor_ == o.tensor_ &&
         involution_ == o.involution_ && norm_ == o.norm_ && trace_ == o.trace_;
}

// ---------------------------------------------------------------- generic elements

GenericFamily GenericFamily::make(const Ring& ring, std::size_t dim, std::size_t count) {
  static constexpr std::array<char, 6> kPrefixes{'x', 'y', 'z', 'w', 'u', 'v'};
  if (count > kPrefixes.size()) throw Error(ErrorKind::InvalidArgument, "too many generic elements");
  std::vector<std::string> names;
  for (std::size_t e = 0; e < count; ++e) {
    for (std::size_t i = 0; i < dim; ++i) names.push_back(std::string(1, kPrefixes[e]) + std::to_string(i));
  }
  GenericFamily f;
  f.ctx = PolyContext::make(ring, std::move(names));
  f.dim = dim;
  for (std::size_t e = 0; e < count; ++e) {
    std::vector<MultiPoly> coords;
    for (std::size_t i = 0; i < dim; ++i) coords.push_back(MultiPoly::variable(f.ctx, static_cast<std::uint16_t>(e * dim + i)));
    f.elements.push_back(std::move(coords));
  }
  return f;
}

// ---------------------------------------------------------------- identities

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::Flexible: return "flexible";
    case Identity::LeftAlternative: return "left_alternative";
    case Identity::RightAlternative: return "right_alternative";
    case Identity::Alternative: return "alternative";
    case Identity::Associative: return "associative";
    case Identity::Commutative: return "commutative";
    case Identity::Jordan: return "jordan";
    case Identity::ThirdPowerAssociative: return "third_power_assoc";
  }
  return "?";
}

std::optional<Identity> identity_from_string(std::string_view name) {
  for (Identity id : {Identity::Flexible, Identity::LeftAlternative, Identity::RightAlternative, Identity::Alternative,
                      Identity::Associative, Identity::Commutative, Identity::Jordan,
                      Identity::ThirdPowerAssociative}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

namespace {

bool all_zero(const std::vector<MultiPoly>& v) {
  return std::all_of(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

using Coords = std::vector<MultiPoly>;

IdentityVerdict verdict_from(GenericFamily family, std::string part, Coords defect) {
  IdentityVerdict v;
  v.holds = all_zero(defect);
  if (!v.holds) v.failed_part = std::move(part);
  v.family = std::move(family);
  v.defect = std::move(defect);
  return v;
}

}  // namespace

IdentityVerdict identity_verdict(const StructureAlgebra& A, Identity id) {
  const Ring& R = A.ring();
  const std::size_t n = A.rank();
  auto mul = [&](const Coords& a, const Coords& b) { return multiply(A, a, b); };
  switch (id) {
    case Identity::Flexible: {
      auto f = GenericFamily::make(R, n, 2);
      const auto &x = f[0], &y = f[1];
      auto xy = mul(x, y);
      auto d = sub(mul(xy, x), mul(x, mul(y, x)));
      return verdict_from(std::move(f), "(xy)x = x(yx)", std::move(d));
    }
    case Identity::LeftAlternative: {
      auto f = GenericFamily::make(R, n, 2);
      const auto &x = f[0], &y = f[1];
      auto d = sub(mul(mul(x, x), y), mul(x, mul(x, y)));
      return verdict_from(std::move(f), "(xx)y = x(xy)", std::move(d));
    }
    case Identity::RightAlternative: {
      auto f = GenericFamily::make(R, n, 2);
      const auto &x = f[0], &y = f[1];
      auto d = sub(mul(mul(y, x), x), mul(y, mul(x, x)));
      return verdict_from(std::move(f), "(yx)x = y(xx)", std::move(d));
    }
    case Identity::Alternative: {
      auto left = identity_verdict(A, Identity::LeftAlternative);
      if (!left.holds) return left;
      return identity_verdict(A, Identity::RightAlternative);
    }
    case Identity::Associative: {
      auto f = GenericFamily::make(R, n, 3);
      const auto &x = f[0], &y = f[1], &z = f[2];
      auto d = sub(mul(mul(x, y), z), mul(x, mul(y, z)));
      return verdict_from(std::move(f), "(xy)z = x(yz)", std::move(d));
    }
    case Identity::Commutative: {
      auto f = GenericFamily::make(R, n, 2);
      const auto &x = f[0], &y = f[1];
      auto d = sub(mul(x, y), mul(y, x));
      return verdict_from(std::move(f), "xy = yx", std::move(d));
    }
    case Identity::Jordan: {
      auto comm = identity_verdict(A, Identity::Commutative);
      if (!comm.holds) return comm;
      auto f = GenericFamily::make(R, n, 2);
      const auto &x = f[0], &y = f[1];
      auto x2 = mul(x, x);
      auto d = sub(mul(mul(x2, y), x), mul(x2, mul(y, x)));
      return verdict_from(std::move(f), "(x^2 y)x = x^2(yx)", std::move(d));
    }
    case Identity::ThirdPowerAssociative: {
      auto f = GenericFamily::make(R, n, 1);
      const auto& x = f[0];
      auto x2 = mul(x, x);
      auto d = sub(mul(x2, x), mul(x, x2));
      return verdict_from(std::move(f), "(xx)x = x(xx)", std::move(d));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown identity");
}

bool check_identity(const StructureAlgebra& A, Identity id) { return identity_verdict(A, id).holds; }

Vector associator(const StructureAlgebra& A, const Vector& x, const Vector& y, const Vector& z) {
  return sub(multiply(A, multiply(A, x, y), z), multiply(A, x, multiply(A, y, z)));
}

// ---------------------------------------------------------------- involutions

std::string_view to_string(InvolutionFailure f) {
  switch (f) {
    case InvolutionFailure::None: return "none";
    case InvolutionFailure::NotOrderTwo: return "NotOrderTwo";
    case InvolutionFailure::NotAntiAutomorphism: return "NotAntiAutomorphism";
    case InvolutionFailure::NotScalar: return "NotScalar";
  }
  return "?";
}

namespace {

// Symbolic version of scalar_part: the R-coefficient polynomial, or nullopt
// when some coordinate is not proportional to the unit.
std::optional<MultiPoly> symbolic_scalar_part(const StructureAlgebra& A, const Coords& z) {
  const std::size_t p = A.unit_pivot();
  const Vector& u = A.unit();
  for (std::size_t k = 0; k < A.rank(); ++k) {
    if (k == p) continue;
    if (!(z[k] * u[p] - z[p] * u[k]).is_zero()) return std::nullopt;
  }
  return z[p] * u[p].inv();
}

QuadraticForm quadratic_from_poly(const Ring& R, std::size_t n, const MultiPoly& q) {
  QuadraticForm form = QuadraticForm::zero(R, n);
  for (const auto& t : q.terms()) {
    auto vars = t.mono.vars();
    if (vars.size() != 2) throw Error(ErrorKind::InternalInconsistency, "norm polynomial is not a quadratic form");
    if (vars[0] == vars[1]) {
      form.diag[vars[0]] = t.coeff;
      form.polar(vars[0], vars[0]) = t.coeff + t.coeff;
    } else {
      form.polar(vars[0], vars[1]) = t.coeff;
      form.polar(vars[1], vars[0]) = t.coeff;
    }
  }
  return form;
}

Vector linear_from_poly(const Ring& R, std::size_t n, const MultiPoly& l) {
  Vector t(n, R.zero());
  for (const auto& term : l.terms()) {
    if (term.mono.degree() != 1) throw Error(ErrorKind::InternalInconsistency, "trace is not linear");
    t[term.mono.vars()[0]] = term.coeff;
  }
  return t;
}

}  // namespace

ScalarInvolutionResult check_scalar_involution(const StructureAlgebra& A, const Matrix& sigma) {
  const Ring& R = A.ring();
  const std::size_t n = A.rank();
  if (sigma.rows() != n || sigma.cols() != n) throw Error(ErrorKind::AlgebraMismatch, "involution shape");
  ScalarInvolutionResult res;
  if (sigma * sigma != Matrix::identity(R, n)) {
    res.failure = InvolutionFailure::NotOrderTwo;
    return res;
  }
  auto f = GenericFamily::make(R, n, 2);
  const auto &x = f[0], &y = f[1];
  auto sx = apply_matrix(sigma, x);
  auto lhs = apply_matrix(sigma, multiply(A, x, y));
  auto rhs = multiply(A, apply_matrix(sigma, y), sx);
  if (!all_zero(sub(lhs, rhs))) {
    res.failure = InvolutionFailure::NotAntiAutomorphism;
    return res;
  }
  auto normp = symbolic_scalar_part(A, multiply(A, sx, x));
  auto tracep = symbolic_scalar_part(A, add(sx, x));
  if (!normp || !tracep) {
    res.failure = InvolutionFailure::NotScalar;
    return res;
  }
  // The norm only involves the first generic element's variables, which
  // are numbered 0..n-1.
  res.ok = true;
  res.norm = quadratic_from_poly(R, n, *normp);
  res.trace = linear_from_poly(R, n, *tracep);
  res.algebra = A.with_involution(sigma).with_norm(*res.norm).with_trace(*res.trace);
  return res;
}

StructureAlgebra require_scalar_involution(const StructureAlgebra& A, const Matrix& sigma) {
  auto r = check_scalar_involution(A, sigma);
  switch (r.failure) {
    case InvolutionFailure::None: return *r.algebra;
    case InvolutionFailure::NotOrderTwo: throw Error(ErrorKind::NotOrderTwo, "sigma^2 != id");
    case InvolutionFailure::NotAntiAutomorphism:
      throw Error(ErrorKind::NotAntiAutomorphism, "sigma(xy) != sigma(y)sigma(x)");
    case InvolutionFailure::NotScalar: throw Error(ErrorKind::NotScalarInvolution, "sigma(x)x is not in R1");
  }
  throw Error(ErrorKind::InternalInconsistency, "unreachable");
}

// ---------------------------------------------------------------- quadratic / composition

IdentityVerdict quadratic_verdict(const StructureAlgebra& A, const QuadraticForm& n) {
  const Ring& R = A.ring();
  if (n.size() != A.rank()) throw Error(ErrorKind::AlgebraMismatch, "norm size");
  auto f = GenericFamily::make(R, A.rank(), 1);
  const auto& x = f[0];
  std::vector<MultiPoly> unit;
  for (const auto& u : A.unit()) unit.push_back(MultiPoly::constant(f.ctx, u));
  if (!n.evaluate(A.unit()).is_one()) {
    // Report n(1) - 1 as the defect so the caller still gets a witness.
    std::vector<MultiPoly> d(A.rank(), MultiPoly(f.ctx));
    d[A.unit_pivot()] = MultiPoly::constant(f.ctx, n.evaluate(A.unit()) - R.one());
    return verdict_from(std::move(f), "n(1) = 1", std::move(d));
  }
  MultiPoly t = n.polar_value(unit, x);
  MultiPoly nx = n.evaluate(x);
  std::vector<MultiPoly> d = multiply(A, x, x);
  for (std::size_t k = 0; k < A.rank(); ++k) {
    d[k] -= t * x[k];
    if (!A.unit()[k].is_zero()) d[k] += nx * A.unit()[k];
  }
  return verdict_from(std::move(f), "x^2 - n(1,x)x + n(x)1 = 0", std::move(d));
}

bool check_quadratic(const StructureAlgebra& A, const QuadraticForm& n) { return quadratic_verdict(A, n).holds; }

IdentityVerdict multiplicativity_verdict(const StructureAlgebra& A, const QuadraticForm& n) {
  auto f = GenericFamily::make(A.ring(), A.rank(), 2);
  const auto &x = f[0], &y = f[1];
  MultiPoly d = n.evaluate(multiply(A, x, y)) - n.evaluate(x) * n.evaluate(y);
  return verdict_from(std::move(f), "n(xy) = n(x)n(y)", {std::move(d)});
}

CompositionVerdict check_composition(const StructureAlgebra& A, const QuadraticForm& n) {
  CompositionVerdict v;
  v.multiplicative = multiplicativity_verdict(A, n).holds;
  v.nondegenerate = determinant(n.polar).is_unit();
  return v;
}

// ---------------------------------------------------------------- basis changes

StructureAlgebra change_basis(const StructureAlgebra& A, const Matrix& basis) {
  const std::size_t n = A.rank();
  const Ring& R = A.ring();
  if (basis.rows() != n || basis.cols() != n) throw Error(ErrorKind::AlgebraMismatch, "basis matrix shape");
  Matrix inv = inverse(basis);
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < n; ++a) cols.push_back(basis.column(a));
  std::vector<Scalar> tensor(n * n * n, R.zero());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vector prod = inv.apply(multiply(A, cols[a], cols[b]));
      for (std::size_t k = 0; k < n; ++k) tensor[(a * n + b) * n + k] = prod[k];
    }
  }
  StructureAlgebra out(R, n, inv.apply(A.unit()), std::move(tensor));
  if (A.involution()) out = out.with_involution(inv * *A.involution() * basis);
  if (A.norm()) {
    QuadraticForm q = QuadraticForm::zero(R, n);
    q.polar = basis.transpose() * A.norm()->polar * basis;
    for (std::size_t a = 0; a < n; ++a) q.diag[a] = A.norm()->evaluate(cols[a]);
    out = out.with_norm(std::move(q));
  }
  if (A.trace()) {
    Vector t(n, R.zero());
    for (std::size_t a = 0; a < n; ++a) t[a] = apply_covector(*A.trace(), cols[a]);
    out = out.with_trace(std::move(t));
  }
  return out.with_provenance(A.provenance());
}

std::optional<Scalar> scalar_part(const StructureAlgebra& A, const Vector& v) {
  const std::size_t p = A.unit_pivot();
  const Vector& u = A.unit();
  for (std::size_t k = 0; k < A.rank(); ++k) {
    if (k != p && v[k] * u[p] != v[p] * u[k]) return std::nullopt;
  }
  return v[p] * u[p].inv();
}

// ---------------------------------------------------------------- witnesses

std::optional<Witness> extract_witness(const GenericFamily& family, const std::vector<MultiPoly>& defect) {
  auto it = std::find_if(defect.begin(), defect.end(), [](const MultiPoly& p) { return !p.is_zero(); });
  if (it == defect.end()) return std::nullopt;
  const MultiPoly& f = *it;
  const Ring& R = f.ring();
  const std::size_t nvars = family.ctx->names.size();

  auto vars = f.terms().front().mono.vars();
  std::vector<std::uint16_t> support(vars.begin(), vars.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  // Candidate values per support variable: enough distinct values that a
  // nonzero polynomial of that degree cannot vanish on the whole grid.
  std::vector<std::vector<Scalar>> values;
  auto card = R.cardinality();
  for (auto var : support) {
    unsigned deg = f.degree_in(var);
    std::vector<Scalar> vals;
    std::uint64_t count = deg + 1;
    if (card && *card <= count + 1) {
      for (std::uint64_t i = 1; i < *card; ++i) vals.push_back(R.element_at(i));
      vals.push_back(R.zero());
    } else {
      for (std::uint64_t v = 1; v <= count; ++v) vals.push_back(R.from_int(static_cast<std::int64_t>(v)));
    }
    values.push_back(std::move(vals));
  }

  std::vector<std::size_t> pos(support.size(), 0);
  constexpr std::size_t kMaxTries = 200000;
  for (std::size_t tries = 0; tries < kMaxTries; ++tries) {
    Vector point(nvars, R.zero());
    for (std::size_t s = 0; s < support.size(); ++s) point[support[s]] = values[s][pos[s]];
    Scalar val = f.evaluate(point);
    if (!val.is_zero()) {
      Witness w;
      w.coordinate = static_cast<std::size_t>(it - defect.begin());
      w.value = val;
      for (std::size_t e = 0; e < family.elements.size(); ++e) {
        w.elements.emplace_back(point.begin() + static_cast<std::ptrdiff_t>(e * family.dim),
                                point.begin() + static_cast<std::ptrdiff_t>((e + 1) * family.dim));
      }
      return w;
    }
    std::size_t s = 0;
    while (s < pos.size() && ++pos[s] == values[s].size()) pos[s++] = 0;
    if (s == pos.size()) break;
  }
  return std::nullopt;
}

}  // namespace quadalg
