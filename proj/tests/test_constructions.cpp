#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

using namespace quadalg;

namespace {

oracle::Coeff coeff(const StructureAlgebra& D) { return oracle::Coeff{D}; }

Vector pair(const Ring& R, int a, int b) { return {R.from_int(a), R.from_int(b)}; }

// Random hermitian Gram matrix over the split pair algebra.
std::vector<std::vector<Vector>> random_split_gram(std::mt19937_64& rng, const Ring& R, std::size_t s) {
  std::vector<std::vector<Vector>> g(s, std::vector<Vector>(s));
  auto r = [&] { return static_cast<int>(rng() % 7); };
  for (std::size_t i = 0; i < s; ++i) {
    int d = 1 + r() % 6;
    g[i][i] = pair(R, d, d);
    for (std::size_t j = i + 1; j < s; ++j) {
      int a = r(), b = r();
      g[i][j] = pair(R, a, b);
      g[j][i] = pair(R, b, a);
    }
  }
  return g;
}

CrossProduct random_cross(std::mt19937_64& rng, const Ring& R, std::size_t m) {
  std::vector<StructureEntry> e;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (rng() % 3 == 0) e.push_back({i, j, k, R.from_int(static_cast<std::int64_t>(rng() % 7))});
      }
    }
  }
  return CrossProduct::from_entries(R, m, e);
}

}  // namespace

TEST_CASE("unified product matches the element-wise formula") {
  Ring F7 = Ring::prime_field(7);
  StructureAlgebra S = split_etale(F7);
  std::mt19937_64 rng(21);
  for (std::size_t s = 1; s <= 3; ++s) {
    auto G = random_split_gram(rng, F7, s);
    FreeRightModule F(CoefficientAlgebra(S), s);
    SesquilinearForm h(F, G);
    CrossProduct x = random_cross(rng, F7, F.r_rank());
    StructureAlgebra A = build_unified(h, x);
    auto expect = oracle::tensor_of(F7, A.rank(), [&](const Vector& a, const Vector& b) {
      return oracle::unified_product(coeff(S), G, x, a, b);
    });
    CHECK(A.tensor() == expect);
  }

  Ring Q = Ring::rationals();
  StructureAlgebra H = hamilton(Q);
  std::vector<std::vector<Vector>> G = {{pair(Q, 2, 0), {Q.one(), Q.one(), Q.from_int(2), Q.zero()}},
                                        {{Q.one(), Q.from_int(-1), Q.from_int(-2), Q.zero()}, {Q.from_int(-1), Q.zero(), Q.zero(), Q.zero()}}};
  G[0][0] = {Q.from_int(2), Q.zero(), Q.zero(), Q.zero()};
  FreeRightModule F(CoefficientAlgebra(H), 2);
  SesquilinearForm h(F, G);
  REQUIRE(is_hermitian(h));
  CrossProduct x = random_cross(rng, Q, 8);
  StructureAlgebra A = build_unified(h, x);
  CHECK(A.tensor() == oracle::tensor_of(Q, 12, [&](const Vector& a, const Vector& b) {
          return oracle::unified_product(coeff(H), G, x, a, b);
        }));
  // n_A((a, u)) = n_D(a) + h(u, u) on random elements.
  CoefficientAlgebra D(H);
  for (int trial = 0; trial < 10; ++trial) {
    Vector z = oracle::random_vector(rng, Q, 12);
    Vector a(z.begin(), z.begin() + 4), u(z.begin() + 4, z.end());
    Vector huu = h.evaluate(u, u);
    CHECK(A.norm()->evaluate(z) == D.norm(a) + *scalar_part(H, huu));
  }
  CHECK(check_scalar_involution(A, *A.involution()).ok);
}

TEST_CASE("minimal unified algebra is Cay(R, -b)") {
  Ring Q = Ring::rationals();
  FreeRightModule F(CoefficientAlgebra::base(Q), 1);
  Matrix g(Q, 1, 1);
  g(0, 0) = Q.from_int(5);
  StructureAlgebra A = build_unified(SesquilinearForm::from_scalars(F, g), CrossProduct::zero(Q, 1));
  // 1*1 = 1, 1*w = w*1 = w, w*w = -b.
  std::vector<Scalar> t = {Q.one(), Q.zero(), Q.zero(), Q.one(), Q.zero(), Q.one(), Q.from_int(-5), Q.zero()};
  CHECK(A.tensor() == t);
  CHECK(check_identity(A, Identity::Commutative));
  CHECK(check_identity(A, Identity::Associative));
}

TEST_CASE("non-hermitian input gives a non-scalar involution") {
  Ring Q = Ring::rationals();
  CoefficientAlgebra D(cay_rank2(Q, Q.from_int(-1)));
  FreeRightModule F(D, 1);
  SesquilinearForm h(F, {{{Q.one(), Q.one()}}});
  REQUIRE_FALSE(is_hermitian(h));
  StructureAlgebra A = build_unified(h, CrossProduct::zero(Q, 2));
  CHECK_FALSE(A.norm().has_value());
  CHECK_FALSE(check_scalar_involution(A, *A.involution()).ok);
}

TEST_CASE("Cayley-Dickson doubling matches its formula") {
  Ring Q = Ring::rationals();
  for (const auto& D : {cay_rank2(Q, Q.from_int(-1)), hamilton(Q)}) {
    for (int mu : {-1, 2}) {
      StructureAlgebra C = cayley_dickson(CoefficientAlgebra(D), Q.from_int(mu));
      CHECK(C.tensor() == oracle::tensor_of(Q, C.rank(), [&](const Vector& a, const Vector& b) {
              return oracle::cd_product(coeff(D), Q.from_int(mu), a, b);
            }));
      CHECK(check_scalar_involution(C, *C.involution()).ok);
    }
  }
}

TEST_CASE("classical algebras") {
  Ring Q = Ring::rationals();
  StructureAlgebra H = hamilton(Q);
  CHECK(H.tensor() == oracle::hamilton_table(Q).tensor());
  CHECK(check_identity(H, Identity::Associative));

  StructureAlgebra O = octonion(Q);
  CHECK(check_identity(O, Identity::Alternative));
  auto assoc = identity_verdict(O, Identity::Associative);
  CHECK_FALSE(assoc.holds);
  // [i, j, l] is a nonzero associator.
  CHECK(associator(O, O.basis(1), O.basis(2), O.basis(4)) != O.zero_vector());
  auto comp = check_composition(O, *O.norm());
  CHECK(comp.multiplicative);
  CHECK(comp.nondegenerate);

  // F_49 = F_7[x]/(x^2 - 3): every nonzero norm is invertible.
  Ring F7 = Ring::prime_field(7);
  StructureAlgebra E = cay_rank2(F7, F7.from_int(3));
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(E.norm()->evaluate(Vector{F7.from_int(a), F7.from_int(b)}).is_unit());
    }
  }
}

TEST_CASE("quaternion algebra from a ternary form") {
  Ring Q = Ring::rationals();
  auto diag_form = [&](std::vector<int> d) {
    Vector v;
    Matrix polar(Q, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      v.push_back(Q.from_int(d[i]));
      polar(i, i) = Q.from_int(2 * d[i]);
    }
    return QuadraticForm{v, polar};
  };

  StructureAlgebra H = quat(diag_form({1, 1, 1}), Q.one());
  CHECK(H.tensor() == oracle::hamilton_table(Q).tensor());
  CHECK(check_identity(H, Identity::Associative));

  for (auto [d, alpha] : std::vector<std::pair<std::vector<int>, int>>{{{1, 1, -1}, 1}, {{2, 3, -5}, 7}, {{1, -1, -1}, 1}}) {
    auto N = diag_form(d);
    StructureAlgebra A = quat(N, Q.from_int(alpha));
    CHECK(A.tensor() == oracle::tensor_of(Q, 4, [&](const Vector& x, const Vector& y) {
            return oracle::quat_product(N.diag, Q.from_int(alpha), x, y);
          }));
    CHECK(check_scalar_involution(A, *A.involution()).ok);
  }

  StructureAlgebra split = quat(diag_form({1, -1, -1}), Q.one());
  CHECK(check_identity(split, Identity::Associative));
  auto c = check_composition(split, *split.norm());
  CHECK(c.multiplicative);
  CHECK(c.nondegenerate);

  Ring F7 = Ring::prime_field(7);
  QuadraticForm N7{{F7.one(), F7.one(), F7.one()}, Matrix::identity(F7, 3) * F7.from_int(2)};
  CHECK(check_identity(quat(N7, F7.one()), Identity::Associative));
}

TEST_CASE("octonions from a hermitian space over an etale algebra") {
  Ring Q = Ring::rationals();
  for (const auto& S : {split_etale(Q), cay_rank2(Q, Q.from_int(-1))}) {
    CoefficientAlgebra D(S);
    FreeRightModule F(D, 3);
    SesquilinearForm h = identity_form(F);
    StructureAlgebra O = thakur(h, DeterminantTrivialization::scalar(D, Q.one()));
    CHECK(O.rank() == 8);
    CHECK(check_identity(O, Identity::Alternative));
    CHECK_FALSE(check_identity(O, Identity::Associative));
    auto c = check_composition(O, *O.norm());
    CHECK(c.multiplicative);
    CHECK(c.nondegenerate);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 5; ++trial) {
      Vector z = oracle::random_vector(rng, Q, 8);
      Vector a(z.begin(), z.begin() + 2), u(z.begin() + 2, z.end());
      CHECK(O.norm()->evaluate(z) == D.norm(a) + *scalar_part(S, h.evaluate(u, u)));
    }
  }
}

TEST_CASE("spin factors") {
  Ring Q = Ring::rationals();
  for (std::size_t r : {3u, 4u}) {
    Matrix B(Q, r, r);
    for (std::size_t i = 0; i < r; ++i) B(i, i) = Q.from_int(static_cast<std::int64_t>(i + 1));
    StructureAlgebra J = jspin(B);
    // (a, u)(b, v) = (ab + B(u, v), av + bu).
    CHECK(J.tensor() == oracle::tensor_of(Q, r + 1, [&](const Vector& x, const Vector& y) {
            Vector out{x[0] * y[0]};
            for (std::size_t i = 0; i < r; ++i) out[0] += B(i, i) * x[i + 1] * y[i + 1];
            for (std::size_t i = 0; i < r; ++i) out.push_back(x[0] * y[i + 1] + y[0] * x[i + 1]);
            return out;
          }));
    CHECK(check_identity(J, Identity::Commutative));
    CHECK(check_identity(J, Identity::Flexible));
    CHECK(check_identity(J, Identity::Jordan));
    CHECK_FALSE(check_composition(J, *J.norm()).multiplicative);
    CHECK_THROWS_AS(classify_composition(J), Error);
  }
}

TEST_CASE("hat algebra of split octonion data is the colour algebra") {
  Ring Q = Ring::rationals();
  CoefficientAlgebra S(split_etale(Q));
  SesquilinearForm h = identity_form(FreeRightModule(S, 3));
  CrossProduct display = alpha_cross(h, DeterminantTrivialization::scalar(S, Q.one()));
  StructureAlgebra C = hat(h, display.reversed());
  CHECK(C.rank() == 7);
  CHECK(check_identity(C, Identity::Flexible));
  CHECK_FALSE(check_identity(C, Identity::Alternative));

  // ((u x v) x v) x v = -n(v) u x v with n(v) = B(v, v). The identity is odd
  // in x, so both operand orders satisfy it with the same sign.
  Matrix B = h.trace_matrix() * Q.from_rational(mpq_class(1, 2));
  std::mt19937_64 rng(4);
  for (const auto& x : {display, display.reversed()}) {
    for (int trial = 0; trial < 10; ++trial) {
      Vector u = oracle::random_vector(rng, Q, 6), v = oracle::random_vector(rng, Q, 6);
      Vector uv = x.apply(u, v);
      CHECK(x.apply(x.apply(uv, v), v) == scale(uv, -bilinear(B, v, v)));
    }
  }
}

TEST_CASE("hat algebra is flexible exactly when the unified algebra is") {
  Ring F7 = Ring::prime_field(7);
  CoefficientAlgebra S(split_etale(F7));
  std::mt19937_64 rng(17);
  int flexible = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t s = 1 + rng() % 3;
    FreeRightModule F(S, s);
    SesquilinearForm h(F, random_split_gram(rng, F7, s));
    CrossProduct x = CrossProduct::zero(F7, F.r_rank());
    switch (rng() % 3) {
      case 0: x = random_cross(rng, F7, F.r_rank()); break;
      case 1:
        if (s == 3 && is_nondegenerate(h)) x = alpha_cross(h, DeterminantTrivialization::scalar(S, F7.one())).reversed();
        break;
      default: break;
    }
    bool a = check_identity(build_unified(h, x), Identity::Flexible);
    bool b = check_identity(hat(h, x), Identity::Flexible);
    CHECK(a == b);
    flexible += a ? 1 : 0;
  }
  CHECK(flexible > 0);
  CHECK(flexible < 20);
}

TEST_CASE("Becker doubling") {
  Ring Q = Ring::rationals();
  StructureAlgebra Qi = cay_rank2(Q, Q.from_int(-1));
  const std::size_t n = 2;
  // dot1(d, b) = d b, dot2 = mul, dot3 = 0.
  BilinearMap mul = BilinearMap::multiplication(Qi);
  StructureAlgebra A = becker_double(Qi, mul, mul, BilinearMap::zero(Q, n));
  CHECK(A.tensor() == cayley_dickson(CoefficientAlgebra(Qi), Q.one()).tensor());

  StructureAlgebra Rq = CoefficientAlgebra::base(Q).algebra();
  // dot2 must be the multiplication for (1, 0) to be the unit.
  StructureAlgebra dual =
      becker_double(Rq, BilinearMap::zero(Q, 1), BilinearMap::multiplication(Rq), BilinearMap::zero(Q, 1));
  CHECK(multiply(dual, dual.basis(1), dual.basis(1)) == dual.zero_vector());

  // Split quaternion data over F_7: D split etale, F = D, h = <3>, x nonzero.
  Ring F7 = Ring::prime_field(7);
  CoefficientAlgebra S(split_etale(F7));
  FreeRightModule F(S, 1);
  for (const auto& x : {CrossProduct::zero(F7, 2), CrossProduct::from_entries(F7, 2, {{0, 1, 0, F7.from_int(2)}})}) {
    SesquilinearForm h(F, {{pair(F7, 3, 3)}});
    auto p = becker_products(h, x);
    CHECK(becker_double(S.algebra(), p.dot1, p.dot2, p.dot3).tensor() == build_unified(h, x).tensor());
  }

  StructureAlgebra bad = Qi.with_involution(Matrix::identity(Q, 2));
  CHECK_THROWS_AS(becker_double(bad, mul, mul, mul), Error);
}

TEST_CASE("rank-two algebras") {
  Ring Q = Ring::rationals();
  StructureAlgebra E = split_etale(Q);
  CHECK(multiply(E, E.basis(0), E.basis(1)) == E.zero_vector());
  CHECK(check_scalar_involution(E, *E.involution()).ok);
  StructureAlgebra G = cay_rank2(Q, Q.from_int(-1));
  CHECK(multiply(G, G.basis(1), G.basis(1)) == Vector{Q.from_int(-1), Q.zero()});
}
