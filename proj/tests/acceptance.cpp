// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "quadalg/fuzz.hpp"
#include "quadalg/io.hpp"

using namespace quadalg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

QuadraticForm diagonal_form(const Ring& R, const std::vector<int>& d) {
  Matrix polar(R, d.size(), d.size());
  Vector diag;
  for (std::size_t i = 0; i < d.size(); ++i) {
    diag.push_back(R.from_int(d[i]));
    polar(i, i) = R.from_int(2 * d[i]);
  }
  return QuadraticForm{diag, polar};
}

// Norm of D written by hand: R, R[w]/(w^2 - b) and the split pair ring.
struct CoeffSpec {
  StructureAlgebra D;
  QuadraticForm norm;
};

CoeffSpec base_spec(const Ring& R) { return {CoefficientAlgebra::base(R).algebra(), diagonal_form(R, {1})}; }
CoeffSpec rank2_spec(const Ring& R, int b) { return {cay_rank2(R, R.from_int(b)), diagonal_form(R, {1, -b})}; }
CoeffSpec split_spec(const Ring& R) {
  Matrix polar(R, 2, 2);
  polar(0, 1) = polar(1, 0) = R.one();
  return {split_etale(R), QuadraticForm{{R.zero(), R.zero()}, polar}};
}

// Expected norm n_D(a) + h(u, u) of D + D^s, assembled entry-wise.
QuadraticForm expected_norm(const CoeffSpec& spec, const std::vector<std::vector<Vector>>& H) {
  const StructureAlgebra& D = spec.D;
  const Ring& R = D.ring();
  const std::size_t d = D.rank(), s = H.size(), n = d + s * d;
  oracle::Coeff c{D};
  // Scalar part of an element of D (coefficient of 1).
  auto scalar = [&](const Vector& v) { return *scalar_part(D, v); };
  auto h = [&](std::size_t p, std::size_t q) {
    Vector a = D.basis(p % d), b = D.basis(q % d);
    return c.mul(c.mul(c.conj(a), H[p / d][q / d]), b);
  };
  QuadraticForm out{Vector(n, R.zero()), Matrix(R, n, n)};
  for (std::size_t i = 0; i < d; ++i) {
    out.diag[i] = spec.norm.diag[i];
    for (std::size_t j = 0; j < d; ++j) out.polar(i, j) = spec.norm.polar(i, j);
  }
  for (std::size_t p = 0; p < s * d; ++p) {
    out.diag[d + p] = scalar(h(p, p));
    for (std::size_t q = 0; q < s * d; ++q) out.polar(d + p, d + q) = scalar(add(h(p, q), h(q, p)));
  }
  return out;
}

std::vector<std::vector<Vector>> scalar_gram(const StructureAlgebra& D, const std::vector<std::vector<int>>& g) {
  std::vector<std::vector<Vector>> out;
  for (const auto& row : g) {
    std::vector<Vector> r;
    for (int v : row) r.push_back(scale(D.unit(), D.ring().from_int(v)));
    out.push_back(r);
  }
  return out;
}

std::vector<std::vector<Vector>> identity_gram(const StructureAlgebra& D, std::size_t s) {
  std::vector<std::vector<int>> g(s, std::vector<int>(s, 0));
  for (std::size_t i = 0; i < s; ++i) g[i][i] = 1;
  return scalar_gram(D, g);
}

bool norm_equals(const StructureAlgebra& A, const QuadraticForm& q) {
  return A.norm() && A.norm()->diag == q.diag && A.norm()->polar == q.polar;
}

// --------------------------------------------------------------- criteria

Outcome unified_axioms() {
  Outcome o;
  Ring Q = Ring::rationals();
  Ring F5 = Ring::prime_field(5);
  auto half = Q.from_rational(mpq_class(1, 2));
  // Colour algebra: D = R, h = t_S(identity)/2 on the R-module S^3.
  std::vector<std::vector<int>> colour(6, std::vector<int>(6, 0));
  for (std::size_t i = 0; i < 6; i += 2) colour[i][i + 1] = colour[i + 1][i] = 1;
  auto colour_gram = scalar_gram(base_spec(Q).D, colour);
  for (auto& row : colour_gram) {
    for (auto& e : row) e = scale(e, half);
  }
  struct Case {
    std::string name;
    CoeffSpec spec;
    std::vector<std::vector<Vector>> H;
  };
  std::vector<Case> cases = {
      {"hamilton", rank2_spec(Q, -1), identity_gram(rank2_spec(Q, -1).D, 1)},
      {"split-quaternion", base_spec(Q), scalar_gram(base_spec(Q).D, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})},
      {"gaussian-etale", base_spec(Q), scalar_gram(base_spec(Q).D, {{1}})},
      {"split-etale", base_spec(Q), scalar_gram(base_spec(Q).D, {{-1}})},
      {"split-octonion", split_spec(Q), identity_gram(split_spec(Q).D, 3)},
      {"octonion-qi", rank2_spec(Q, -1), identity_gram(rank2_spec(Q, -1).D, 3)},
      {"split-octonion-f5", split_spec(F5), identity_gram(split_spec(F5).D, 3)},
      {"jspin-3", base_spec(Q), scalar_gram(base_spec(Q).D, {{-1, 0, 0}, {0, -2, 0}, {0, 0, -3}})},
      {"colour-7", base_spec(Q), colour_gram},
  };
  for (const auto& c : cases) {
    StructureAlgebra A = io::load_algebra(c.name).algebra;
    expect(o, check_scalar_involution(A, *A.involution()).ok, c.name + " involution not scalar");
    expect(o, norm_equals(A, expected_norm(c.spec, c.H)), c.name + " norm differs from n_D + h");
  }
  return o;
}

Outcome quat_construction() {
  Outcome o;
  Ring Q = Ring::rationals();
  QuadraticForm N = diagonal_form(Q, {1, 1, 1});
  StructureAlgebra A = quat(N, Q.one());
  expect(o, check_identity(A, Identity::Associative), "not associative");
  auto c = check_composition(A, *A.norm());
  expect(o, c.multiplicative && c.nondegenerate, "not composition");
  expect(o, norm_equals(A, diagonal_form(Q, {1, 1, 1, 1})), "norm is not a^2 + N(u)");
  auto display = oracle::tensor_of(Q, 4, [&](const Vector& x, const Vector& y) {
    return oracle::quat_product(N.diag, Q.one(), x, y);
  });
  expect(o, A.tensor() == display, "differs from the displayed product");
  expect(o, A.tensor() == oracle::hamilton_table(Q).tensor(), "differs from the Hamilton table");
  FreeRightModule F(CoefficientAlgebra::base(Q), 3);
  StructureAlgebra U = build_unified(SesquilinearForm::from_scalars(F, Matrix::identity(Q, 3)),
                                     wedge_cross(N, Q.one()).reversed());
  expect(o, U.tensor() == A.tensor(), "differs from (R, F, B, x)");
  return o;
}

Outcome thakur_construction() {
  Outcome o;
  Ring Q = Ring::rationals();
  CoeffSpec spec = split_spec(Q);
  CoefficientAlgebra S(spec.D);
  StructureAlgebra A = thakur(identity_form(FreeRightModule(S, 3)), DeterminantTrivialization::scalar(S, Q.one()));
  expect(o, A.rank() == 8, "rank is not 8");
  expect(o, check_identity(A, Identity::Alternative), "not alternative");
  expect(o, !check_identity(A, Identity::Associative), "associative");
  auto c = check_composition(A, *A.norm());
  expect(o, c.multiplicative && c.nondegenerate, "not composition");
  expect(o, norm_equals(A, expected_norm(spec, identity_gram(spec.D, 3))), "norm differs from n_S + h");
  auto z = find_zero_divisors(A);
  expect(o, z.pair && multiply(A, z.pair->first, z.pair->second) == A.zero_vector(), "no zero divisors found");
  return o;
}

Outcome criteria_fuzz() {
  Outcome o;
  auto rep = fuzz::run(fuzz::Profile::FormCriteria, 1, 50);
  std::ostringstream d;
  d << rep.agreements() << "/" << rep.outcomes.size() << " agreements";
  expect(o, rep.outcomes.size() == 50 && rep.passed(), d.str());
  if (o.ok) o.detail = d.str();
  return o;
}

Outcome composition_roundtrip() {
  Outcome o;
  for (const char* name : {"gaussian-etale", "hamilton", "split-quaternion", "split-octonion", "octonion-qi", "octonion"}) {
    StructureAlgebra C = io::load_algebra(name).algebra;
    auto t = extract_cross_product(C);
    expect(o, t.s + 1 == C.rank() && (t.s == 1 || t.s == 3 || t.s == 7), std::string(name) + " wrong s");
    expect(o, t.conditions, std::string(name) + " conditions fail");
    expect(o, t.rebuild_equal, std::string(name) + " rebuild differs");
  }
  return o;
}

Outcome cayley_dickson_coincidence() {
  Outcome o;
  Ring Q = Ring::rationals();
  for (const auto& D : {cay_rank2(Q, Q.from_int(-1)), hamilton(Q)}) {
    for (int mu : {1, -1, 3}) {
      CoefficientAlgebra C(D);
      FreeRightModule F(C, 1);
      SesquilinearForm h(F, {{C.embed(Q.from_int(mu))}});
      StructureAlgebra U = build_unified(h, CrossProduct::zero(Q, D.rank()));
      StructureAlgebra CD = cayley_dickson(C, Q.from_int(-mu));
      auto formula = oracle::tensor_of(Q, 2 * D.rank(), [&](const Vector& x, const Vector& y) {
        return oracle::cd_product(oracle::Coeff{D}, Q.from_int(-mu), x, y);
      });
      std::string tag = "rank " + std::to_string(D.rank()) + " mu " + std::to_string(mu);
      expect(o, U.tensor() == CD.tensor(), tag + " unified differs");
      expect(o, CD.tensor() == formula, tag + " doubling differs from its formula");
    }
  }
  return o;
}

Outcome nucleus_scenario() {
  Outcome o;
  Ring F7 = Ring::prime_field(7);
  CoefficientAlgebra S(cay_rank2(F7, F7.from_int(3)));
  SesquilinearForm h = identity_form(FreeRightModule(S, 3));
  SesquilinearForm g = scale_form(Vector{F7.zero(), F7.one()}, h).form;
  CrossProduct x = alpha_cross(h, DeterminantTrivialization::scalar(S, F7.one())).reversed();
  StructureAlgebra A = build_unified(g, x);
  std::size_t dim = nucleus(A).dimension();
  std::size_t oracle_dim = oracle::nucleus_dimension_mod(A, 7);
  expect(o, dim == oracle_dim, "nucleus solver disagrees with the modular oracle");
  expect(o, dim == 2, "nucleus dimension " + std::to_string(dim) + ", expected 2");
  Ring Q = Ring::rationals();
  expect(o, nucleus(octonion(Q)).dimension() == 1, "octonion nucleus is not Q.1");
  expect(o, nucleus(hamilton(Q)).dimension() == 4, "Hamilton nucleus is not 4-dimensional");
  return o;
}

Outcome subalgebra_roundtrip() {
  Outcome o;
  Ring Q = Ring::rationals();
  StructureAlgebra A = octonion(Q);
  auto r = decompose_over_subalgebra(A, {A.basis(0), A.basis(1), A.basis(2), A.basis(3)});
  expect(o, r.hermitian, "h not hermitian");
  expect(o, r.polar_is_trace, "polar differs from trace of h");
  expect(o, r.rebuild_equal.value_or(false), "rebuild differs");
  // n_A(u, v) = t_D(h(u, v)) with t_D(a) = 2 a_0 on quaternion coordinates.
  const auto& F = r.F.vectors;
  for (std::size_t p = 0; p < F.size(); ++p) {
    for (std::size_t q = 0; q < F.size(); ++q) {
      Scalar t = r.h[p][q][0] * Q.from_int(2);
      if (A.norm()->polar_value(F[p], F[q]) != t) expect(o, false, "n_A(u,v) != t_D(h(u,v))");
    }
  }
  return o;
}

Outcome becker_coincidence() {
  Outcome o;
  Ring F7 = Ring::prime_field(7);
  CoefficientAlgebra S(split_etale(F7));
  FreeRightModule F(S, 1);
  for (const auto& x : {CrossProduct::zero(F7, 2), CrossProduct::from_entries(F7, 2, {{0, 1, 1, F7.from_int(4)}})}) {
    for (int c : {1, 3}) {
      SesquilinearForm h(F, {{S.embed(F7.from_int(c))}});
      auto p = becker_products(h, x);
      StructureAlgebra B = becker_double(S.algebra(), p.dot1, p.dot2, p.dot3);
      expect(o, B.tensor() == build_unified(h, x).tensor(), "Becker double differs from the unified algebra");
    }
  }
  return o;
}

Outcome performance() {
  Outcome o;
  auto timed_suite = [&](const StructureAlgebra& A, double limit, const std::string& tag) {
    auto start = std::chrono::steady_clock::now();
    bool flex = check_identity(A, Identity::Flexible);
    bool alt = check_identity(A, Identity::Alternative);
    auto c = check_composition(A, *A.norm());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(o, flex && alt && c.multiplicative && c.nondegenerate, tag + " suite verdicts wrong");
    expect(o, secs < limit, tag + " took " + std::to_string(secs) + "s");
    std::ostringstream d;
    d << tag << " " << std::fixed << std::setprecision(3) << secs << "s";
    o.detail += (o.detail.empty() ? "" : ", ") + d.str();
  };
  timed_suite(octonion(Ring::rationals()), 10.0, "Q");
  timed_suite(octonion(Ring::prime_field(7)), 3.0, "F_7");
  return o;
}

Outcome spin_factors() {
  Outcome o;
  Ring Q = Ring::rationals();
  for (std::size_t r : {3u, 4u, 5u}) {
    Matrix B(Q, r, r);
    for (std::size_t i = 0; i < r; ++i) B(i, i) = Q.from_int(static_cast<std::int64_t>(i + 1));
    StructureAlgebra J = jspin(B);
    std::string tag = "rank " + std::to_string(r);
    expect(o, check_identity(J, Identity::Commutative), tag + " not commutative");
    expect(o, check_identity(J, Identity::Flexible), tag + " not flexible");
    expect(o, check_identity(J, Identity::Jordan), tag + " not Jordan");
    auto c = check_composition(J, *J.norm());
    expect(o, !(c.multiplicative && c.nondegenerate), tag + " is composition");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "unified builder axioms on the catalog", 10, unified_axioms},
      {2, "quaternion algebra from a ternary form", 2, quat_construction},
      {3, "octonions from a hermitian space", 5, thakur_construction},
      {4, "flexible/alternative criteria fuzz, 50 instances over F_7", 120, criteria_fuzz},
      {5, "composition algebra split and rebuild", 10, composition_roundtrip},
      {6, "Cayley-Dickson coincidence", 2, cayley_dickson_coincidence},
      {7, "nucleus of the scaled hermitian scenario", 5, nucleus_scenario},
      {8, "decomposition over a quaternion subalgebra", 5, subalgebra_roundtrip},
      {9, "Becker doubling coincidence", 2, becker_coincidence},
      {10, "symbolic suite performance on rank 8", 13, performance},
      {11, "spin factors", 5, spin_factors},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit) expect(o, false, "time limit exceeded");
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << std::setw(2) << c.id << " " << c.name << " (" << std::fixed
              << std::setprecision(3) << secs << "s)" << (o.detail.empty() ? "" : ": " + o.detail) << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
