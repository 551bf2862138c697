#include "quadalg/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace quadalg::report {

namespace {

json witness_json(const std::optional<Witness>& w, const std::vector<std::string>& names) {
  if (!w) return json{{"note", "formal defect vanishes on the searched grid"}};
  json elements = json::object();
  for (std::size_t i = 0; i < w->elements.size(); ++i) elements[names[i]] = io::to_json(w->elements[i]);
  return json{{"elements", elements}, {"coordinate", w->coordinate}, {"defect", w->value.to_string()}};
}

const std::vector<std::string> kVarNames = {"x", "y", "z", "w", "u", "v"};

struct Outcome {
  json value;
  std::string note;
  std::optional<json> witness;
};

Outcome identity_outcome(const StructureAlgebra& A, Identity id) {
  IdentityVerdict v = identity_verdict(A, id);
  Outcome o{v.holds, "", std::nullopt};
  if (!v.holds) {
    o.note = v.failed_part;
    o.witness = witness_json(extract_witness(v.family, v.defect), kVarNames);
  }
  return o;
}

Outcome run_one(const StructureAlgebra& A, const std::string& name, const CheckOptions& opt) {
  if (auto id = identity_from_string(name)) return identity_outcome(A, *id);
  if (name == "scalar_involution") {
    if (!A.involution()) return {false, "no involution attached", std::nullopt};
    auto r = check_scalar_involution(A, *A.involution());
    return {r.ok, r.ok ? "" : std::string(to_string(r.failure)), std::nullopt};
  }
  if (name == "quadratic") {
    if (!A.norm()) return {false, "no norm attached", std::nullopt};
    IdentityVerdict v = quadratic_verdict(A, *A.norm());
    Outcome o{v.holds, "", std::nullopt};
    if (!v.holds) o.witness = witness_json(extract_witness(v.family, v.defect), kVarNames);
    return o;
  }
  if (name == "composition") {
    if (!A.norm()) return {false, "no norm attached", std::nullopt};
    auto c = check_composition(A, *A.norm());
    Outcome o{c.multiplicative && c.nondegenerate, "", std::nullopt};
    if (!c.multiplicative) {
      o.note = "norm not multiplicative";
      IdentityVerdict v = multiplicativity_verdict(A, *A.norm());
      o.witness = witness_json(extract_witness(v.family, v.defect), kVarNames);
    } else if (!c.nondegenerate) {
      o.note = "norm degenerate";
    }
    return o;
  }
  if (name == "classify") {
    try {
      return {classify_composition(A).label, "", std::nullopt};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotComposition) throw;
      return {"none", e.what(), std::nullopt};
    }
  }
  if (name == "nucleus") return {nucleus(A).dimension(), "dimension over the base ring", std::nullopt};
  if (name == "trace_form_associative") return {check_trace_form_associative(A), "", std::nullopt};
  if (name == "norm_radical") return {radical(A, RadicalForm::NormPolar).dimension(), "dimension", std::nullopt};
  if (name == "zero_divisors") {
    auto z = find_zero_divisors(A, opt.budget);
    std::ostringstream note;
    note << "method " << z.method << ", " << z.evaluations << " evaluations";
    if (z.proved_anisotropic) note << ", norm anisotropic";
    else if (!z.pair && !z.exhausted) note << ", budget exhausted without a result";
    Outcome o{z.pair.has_value(), note.str(), std::nullopt};
    if (z.pair) o.witness = json{{"elements", {{"x", io::to_json(z.pair->first)}, {"y", io::to_json(z.pair->second)}}}};
    return o;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown check '" + name + "'");
}

std::string value_text(const json& v) {
  if (v.is_null()) return "error";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::vector<std::string> default_checks() {
  return {"scalar_involution", "quadratic", "flexible", "alternative", "associative", "composition", "classify"};
}

std::vector<std::string> known_checks() {
  std::vector<std::string> out = {"scalar_involution", "quadratic",     "composition",          "classify",
                                  "nucleus",           "zero_divisors", "trace_form_associative", "norm_radical"};
  for (auto id : {Identity::Flexible, Identity::LeftAlternative, Identity::RightAlternative, Identity::Alternative,
                  Identity::Associative, Identity::Commutative, Identity::Jordan, Identity::ThirdPowerAssociative}) {
    out.emplace_back(to_string(id));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_known_check(const std::string& name) {
  auto k = known_checks();
  return std::find(k.begin(), k.end(), name) != k.end();
}

std::string conventions_for(const std::string& construction) {
  static const std::map<std::string, std::string> notes = {
      {"raw", "structure constants as given"},
      {"unified", "(a,u)(b,v) = (ab - h(v,u), v.a + u.conj(b) + v x u); cross as given"},
      {"hat", "base ring R, B = t_D(h)/2, cross as given; F-part uses v x u"},
      {"thakur", "unified cross = reversed alpha cross, so the F-part equals u x_alpha v"},
      {"quat", "unified cross = reversed wedge cross with B(u x v, w) = alpha det, B = polar(N)/2"},
      {"jspin", "(R, F, -B, 0)"},
      {"cayley_dickson", "(u,w)(u',w') = (uu' + mu conj(w')w, w'u + w conj(u'))"},
      {"becker", "(a,b)(c,d) = (ac + dot1(conj(d), b), dot2(d, a) + dot2(b, conj(c)) + dot3(b, d))"},
      {"cay_rank2", "basis 1, w with w^2 = b"},
  };
  auto it = notes.find(construction);
  return it == notes.end() ? "" : it->second;
}

json parse_expectations(const std::string& text) {
  json out = json::object();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expectation '" + item + "' needs name=value");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    json parsed = json::parse(val, nullptr, false);
    out[key] = parsed.is_discarded() ? json(val) : parsed;
  }
  return out;
}

CheckReport run_checks(const io::AlgebraDocument& doc, const std::vector<std::string>& checks, const json& expect,
                       const CheckOptions& options) {
  std::set<std::string> names(checks.begin(), checks.end());
  for (const auto& [key, _] : expect.items()) names.insert(key);
  for (const auto& n : names) {
    if (!is_known_check(n)) throw Error(ErrorKind::InvalidArgument, "unknown check '" + n + "'");
  }

  const StructureAlgebra& A = doc.algebra;
  auto timed = [&](const std::string& name) {
    CheckResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = run_one(A, name, options);
      r.value = std::move(o.value);
      r.note = std::move(o.note);
      r.witness = std::move(o.witness);
    } catch (const Error& e) {
      r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  std::vector<CheckResult> results;
  if (options.parallel) {
    std::vector<std::future<CheckResult>> jobs;
    for (const auto& n : names) jobs.push_back(std::async(std::launch::async, timed, n));
    for (auto& j : jobs) results.push_back(j.get());
  } else {
    for (const auto& n : names) results.push_back(timed(n));
  }
  for (auto& r : results) {
    if (expect.contains(r.name)) {
      r.expected = expect.at(r.name);
      r.matches = !r.error && r.value == *r.expected;
    }
  }
  return CheckReport{doc.name, doc.construction, A.rank(), A.ring().to_string(), conventions_for(doc.construction),
                     std::move(results)};
}

std::size_t CheckReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.matches; }));
}

json CheckReport::to_json(bool with_timings) const {
  json checks = json::array();
  for (const auto& r : results) {
    json c{{"name", r.name}, {"value", r.value}};
    if (r.expected) c["expected"] = *r.expected;
    c["matches"] = r.matches;
    if (!r.note.empty()) c["note"] = r.note;
    if (r.witness) c["witness"] = *r.witness;
    if (r.error) c["error"] = *r.error;
    if (with_timings) c["seconds"] = r.seconds;
    checks.push_back(c);
  }
  return json{{"algebra", name},
              {"construction", construction},
              {"ring", ring},
              {"rank", rank},
              {"conventions", conventions},
              {"identity_semantics", "formal: every coefficient of the defect polynomial is zero"},
              {"checks", checks},
              {"mismatches", mismatches()}};
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << "algebra: " << (name.empty() ? "(unnamed)" : name) << "\n";
  out << "ring: " << ring << "\nrank: " << rank << "\nconstruction: " << construction << "\n";
  if (!conventions.empty()) out << "conventions: " << conventions << "\n";
  out << "identities: checked formally (all defect coefficients zero)\n\n";
  out << std::left << std::setw(24) << "check" << std::setw(12) << "value" << std::setw(12) << "expected"
      << std::setw(8) << "status" << "time\n";
  for (const auto& r : results) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r.seconds << "s";
    out << std::setw(24) << r.name << std::setw(12) << value_text(r.value) << std::setw(12)
        << (r.expected ? value_text(*r.expected) : "-") << std::setw(8) << (r.matches ? "ok" : "MISMATCH") << t.str()
        << "\n";
  }
  for (const auto& r : results) {
    if (r.error) out << "\nerror " << r.name << ": " << *r.error << "\n";
    if (!r.note.empty()) out << "\nnote " << r.name << ": " << r.note << "\n";
    if (r.witness) out << "witness " << r.name << ": " << r.witness->dump() << "\n";
  }
  out << "\nmismatches: " << mismatches() << "\n";
  return out.str();
}

// ---------------------------------------------------------------- decompose

std::vector<Vector> parse_basis_spec(const StructureAlgebra& A, const std::string& spec) {
  const Ring& R = A.ring();
  std::vector<Vector> out;
  auto trimmed = spec.substr(spec.find_first_not_of(" \t") == std::string::npos ? 0 : spec.find_first_not_of(" \t"));
  if (!trimmed.empty() && trimmed.front() == '[') {
    json j = io::parse_text(trimmed, "basis");
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "basis must be a list of vectors");
    for (const auto& v : j) out.push_back(io::vector_from(R, v, A.rank()));
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "basis index '" + item + "' is not a number");
    }
    if (idx >= A.rank()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    Vector e(A.rank(), R.zero());
    e[idx] = R.one();
    out.push_back(std::move(e));
  }
  return out;
}

DecomposeReport run_decompose(const StructureAlgebra& A, const std::vector<Vector>& D_basis) {
  return DecomposeReport{decompose_over_subalgebra(A, D_basis)};
}

json DecomposeReport::to_json() const {
  const auto& r = result;
  json h = json::array();
  for (const auto& row : r.h) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(io::to_json(e));
    h.push_back(jr);
  }
  json F = json::array();
  for (const auto& v : r.F.vectors) F.push_back(io::to_json(v));
  json out{{"D", io::to_json(r.D)},
           {"F_basis", F},
           {"h", h},
           {"cross", io::to_json(r.cross)},
           {"cross_alternating", r.cross_alternating},
           {"polar_is_trace", r.polar_is_trace},
           {"hermitian", r.hermitian},
           {"module_closed", r.module_closed},
           {"free", r.free}};
  if (!r.generators.empty()) {
    json g = json::array();
    for (const auto& v : r.generators) g.push_back(io::to_json(v));
    out["generators"] = g;
  }
  if (r.form) out["module_gram"] = io::to_json(*r.form);
  if (r.module_cross) out["module_cross"] = io::to_json(*r.module_cross);
  if (r.rebuild_equal) out["rebuild_equal"] = *r.rebuild_equal;
  return out;
}

std::string DecomposeReport::to_text() const {
  const auto& r = result;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "subalgebra rank: " << r.D.rank() << "\n";
  out << "complement rank: " << r.F.dimension() << "\n";
  out << "cross alternating: " << yn(r.cross_alternating) << "\n";
  out << "polar equals trace of h: " << yn(r.polar_is_trace) << "\n";
  out << "h hermitian: " << yn(r.hermitian) << "\n";
  out << "complement closed under D: " << yn(r.module_closed) << "\n";
  out << "complement free: " << yn(r.free) << "\n";
  if (r.rebuild_equal) out << "rebuild equal: " << yn(*r.rebuild_equal) << "\n";
  if (r.form) out << "h: " << io::to_json(*r.form).dump() << "\n";
  if (r.module_cross) out << "cross: " << io::to_json(*r.module_cross).dump() << "\n";
  return out.str();
}

}  // namespace quadalg::report
