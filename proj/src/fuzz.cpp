#include "quadalg/fuzz.hpp"

#include <random>
#include <sstream>

namespace quadalg::fuzz {

namespace {

using Rng = std::mt19937_64;

Scalar random_scalar(Rng& rng, const Ring& R, std::int64_t p) { return R.from_int(static_cast<std::int64_t>(rng() % p)); }

Scalar random_nonzero(Rng& rng, const Ring& R, std::int64_t p) {
  return R.from_int(1 + static_cast<std::int64_t>(rng() % (p - 1)));
}

CrossProduct random_cross(Rng& rng, const Ring& R, std::size_t m, bool sparse) {
  std::vector<StructureEntry> entries;
  if (sparse) {
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t i = rng() % m, j = rng() % m, k = rng() % m;
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      entries.push_back({i, j, k, random_nonzero(rng, R, 7)});
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) entries.push_back({i, j, k, random_scalar(rng, R, 7)});
      }
    }
  }
  return CrossProduct::from_entries(R, m, entries);
}

json gram_json(const SesquilinearForm& h) { return io::to_json(h); }

json unified_doc(const std::string& coefficients, const SesquilinearForm& h, const CrossProduct& x) {
  return json{{"construction", "unified"},  {"ring", h.module().ring().to_string()},
              {"coefficients", coefficients}, {"s", h.module().d_rank()},
              {"gram", gram_json(h)},         {"cross", io::to_json(x)}};
}

// Random nondegenerate hermitian form over the split etale algebra of F_7.
SesquilinearForm random_split_hermitian(Rng& rng, const FreeRightModule& F) {
  const Ring& R = F.ring();
  const std::size_t s = F.d_rank();
  for (;;) {
    std::vector<std::vector<Vector>> g(s, std::vector<Vector>(s));
    for (std::size_t i = 0; i < s; ++i) {
      Scalar r = random_scalar(rng, R, 7);
      g[i][i] = {r, r};
      for (std::size_t j = i + 1; j < s; ++j) {
        Scalar a = random_scalar(rng, R, 7), b = random_scalar(rng, R, 7);
        g[i][j] = {a, b};
        g[j][i] = {b, a};
      }
    }
    SesquilinearForm h(F, std::move(g));
    if (is_nondegenerate(h)) return h;
  }
}

InstanceOutcome criteria_instance(Rng& rng, std::size_t index) {
  const Ring R = Ring::prime_field(7);
  CoefficientAlgebra S(split_etale(R));
  const std::size_t s = 1 + rng() % 3;
  FreeRightModule F(S, s);
  SesquilinearForm h = random_split_hermitian(rng, F);
  const std::size_t m = F.r_rank();

  static const char* kinds[] = {"zero", "dense", "sparse", "alpha_det", "alpha_random"};
  const std::size_t kind = rng() % (s == 3 ? 5 : 3);
  CrossProduct x = CrossProduct::zero(R, m);
  if (kind == 1 || kind == 2) {
    x = random_cross(rng, R, m, kind == 2);
  } else if (kind == 3) {
    Vector det = d_determinant(S, h.gram());
    Vector alpha{det[0].inv(), R.one()};
    x = alpha_cross(h, DeterminantTrivialization::over(S, alpha)).reversed();
  } else if (kind == 4) {
    Vector alpha{random_nonzero(rng, R, 7), random_nonzero(rng, R, 7)};
    x = alpha_cross(h, DeterminantTrivialization::over(S, alpha)).reversed();
  }

  InstanceOutcome o;
  o.index = index;
  o.kind = kinds[kind];
  o.instance = unified_doc("split", h, x);
  StructureAlgebra A = build_unified(h, x);
  bool crit_flex = flexible_criterion(h, x);
  bool full_flex = check_identity(A, Identity::Flexible);
  json v{{"flexible_criterion", crit_flex}, {"flexible", full_flex}};
  bool agrees = crit_flex == full_flex;
  try {
    bool crit_alt = alternative_criterion(h, x);
    bool full_alt = check_identity(A, Identity::Alternative);
    v["alternative_criterion"] = crit_alt;
    v["alternative"] = full_alt;
    agrees = agrees && crit_alt == full_alt;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InternalInconsistency) throw;
    v["alternative_criterion"] = e.what();
    agrees = false;
  }
  o.verdicts = v;
  o.agrees = agrees;
  return o;
}

InstanceOutcome trace_form_instance(Rng& rng, std::size_t index) {
  const Ring R = Ring::prime_field(7);
  CoefficientAlgebra D = CoefficientAlgebra::base(R);
  const std::size_t s = 1 + rng() % 4;
  FreeRightModule F(D, s);
  Matrix B(R, s, s);
  for (;;) {
    for (std::size_t i = 0; i < s; ++i) {
      B(i, i) = random_scalar(rng, R, 7);
      for (std::size_t j = i + 1; j < s; ++j) B(i, j) = B(j, i) = random_scalar(rng, R, 7);
    }
    if (!determinant(B).is_zero()) break;
  }
  SesquilinearForm h = SesquilinearForm::from_scalars(F, B);

  static const char* kinds[] = {"zero", "dense", "sparse", "trilinear"};
  const std::size_t kind = rng() % (s >= 3 ? 4 : 3);
  CrossProduct x = CrossProduct::zero(R, s);
  if (kind == 1 || kind == 2) {
    x = random_cross(rng, R, s, kind == 2);
  } else if (kind == 3) {
    // B(u x v, w) = T(u, v, w) for a random alternating trilinear T.
    std::vector<Scalar> T(s * s * s, R.zero());
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        for (std::size_t k = j + 1; k < s; ++k) {
          Scalar c = random_scalar(rng, R, 7);
          const std::size_t p[6][3] = {{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}};
          for (std::size_t t = 0; t < 6; ++t) T[(p[t][0] * s + p[t][1]) * s + p[t][2]] = t < 3 ? c : -c;
        }
      }
    }
    Matrix Binv = inverse(B);
    std::vector<StructureEntry> entries;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        for (std::size_t k = 0; k < s; ++k) {
          Scalar acc = R.zero();
          for (std::size_t w = 0; w < s; ++w) acc += Binv(k, w) * T[(i * s + j) * s + w];
          entries.push_back({i, j, k, acc});
        }
      }
    }
    x = CrossProduct::from_entries(R, s, entries);
  }

  InstanceOutcome o;
  o.index = index;
  o.kind = kinds[kind];
  o.instance = unified_doc("base", h, x);
  StructureAlgebra A = build_unified(h, x);
  bool assoc = check_trace_form_associative(A);
  bool flex = check_identity(A, Identity::Flexible);
  o.verdicts = json{{"trace_form_associative", assoc}, {"flexible", flex}};
  o.agrees = assoc == flex;
  return o;
}

std::int64_t small_nonzero(Rng& rng) {
  std::int64_t v = static_cast<std::int64_t>(rng() % 9) - 4;
  return v >= 0 ? v + 1 : v;
}

InstanceOutcome composition_instance(Rng& rng, std::size_t index) {
  const Ring R = Ring::rationals();
  const std::size_t doublings = 1 + rng() % 3;
  std::ostringstream kind;
  StructureAlgebra C = cay_rank2(R, R.from_int(small_nonzero(rng)));
  kind << "rank" << (std::size_t{1} << doublings);
  for (std::size_t d = 1; d < doublings; ++d) C = cayley_dickson(CoefficientAlgebra(C), R.from_int(small_nonzero(rng)));

  InstanceOutcome o;
  o.index = index;
  o.kind = kind.str();
  o.instance = io::to_json(C);
  CrossProductSplit t = extract_cross_product(C);
  o.verdicts = json{{"s", t.s}, {"conditions", t.conditions}, {"rebuild_equal", t.rebuild_equal}};
  o.agrees = t.conditions && t.rebuild_equal && t.s + 1 == C.rank();
  return o;
}

}  // namespace

std::optional<Profile> profile_from_string(const std::string& name) {
  if (name == "lemma2") return Profile::FormCriteria;
  if (name == "remark2") return Profile::TraceForm;
  if (name == "theorem1") return Profile::CompositionSplit;
  return std::nullopt;
}

std::string to_string(Profile p) {
  switch (p) {
    case Profile::FormCriteria: return "lemma2";
    case Profile::TraceForm: return "remark2";
    case Profile::CompositionSplit: return "theorem1";
  }
  return "";
}

FuzzReport run(Profile profile, std::uint64_t seed, std::size_t count) {
  FuzzReport report;
  report.profile = profile;
  report.seed = seed;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    switch (profile) {
      case Profile::FormCriteria: report.outcomes.push_back(criteria_instance(rng, i)); break;
      case Profile::TraceForm: report.outcomes.push_back(trace_form_instance(rng, i)); break;
      case Profile::CompositionSplit: report.outcomes.push_back(composition_instance(rng, i)); break;
    }
  }
  return report;
}

std::size_t FuzzReport::agreements() const {
  std::size_t n = 0;
  for (const auto& o : outcomes) n += o.agrees ? 1 : 0;
  return n;
}

json FuzzReport::replay() const {
  json out = json::array();
  for (const auto& o : outcomes) {
    if (!o.agrees) out.push_back(json{{"index", o.index}, {"kind", o.kind}, {"verdicts", o.verdicts}, {"algebra", o.instance}});
  }
  return out;
}

json FuzzReport::to_json() const {
  json inst = json::array();
  for (const auto& o : outcomes) {
    inst.push_back(json{{"index", o.index}, {"kind", o.kind}, {"verdicts", o.verdicts}, {"agrees", o.agrees}});
  }
  return json{{"profile", fuzz::to_string(profile)}, {"seed", seed},        {"count", outcomes.size()},
              {"agreements", agreements()},          {"passed", passed()}, {"instances", inst}};
}

std::string FuzzReport::to_text() const {
  std::ostringstream out;
  out << "profile: " << fuzz::to_string(profile) << "\nseed: " << seed << "\ncount: " << outcomes.size() << "\n\n";
  for (const auto& o : outcomes) {
    out << "#" << o.index << " " << o.kind << " " << o.verdicts.dump() << " " << (o.agrees ? "agree" : "VIOLATION")
        << "\n";
  }
  out << "\nagreements: " << agreements() << "/" << outcomes.size() << "\n";
  out << "result: " << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace quadalg::fuzz
