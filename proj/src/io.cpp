#include "quadalg/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace quadalg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_from(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) bad(std::string("field '") + key + "' must be a count");
  return v.get<std::size_t>();
}

}  // namespace

// ---------------------------------------------------------------- writers

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const QuadraticForm& q) { return json{{"diag", to_json(q.diag)}, {"polar", to_json(q.polar)}}; }

json to_json(const CrossProduct& c) {
  json out = json::array();
  for (const auto& e : c.upper_entries()) out.push_back(json::array({e.i, e.j, e.k, e.c.to_string()}));
  return out;
}

json to_json(const SesquilinearForm& h) {
  json out = json::array();
  for (const auto& row : h.gram()) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    out.push_back(r);
  }
  return out;
}

json to_json(const StructureAlgebra& A) {
  const std::size_t n = A.rank();
  json mul = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json cell = json::array();
      for (std::size_t k = 0; k < n; ++k) cell.push_back(to_json(A.structure(i, j, k)));
      row.push_back(cell);
    }
    mul.push_back(row);
  }
  json out{{"construction", "raw"}, {"ring", A.ring().to_string()}, {"rank", n}, {"unit", to_json(A.unit())},
           {"mul", mul}};
  if (A.involution()) out["involution"] = to_json(*A.involution());
  if (A.norm()) out["norm"] = to_json(*A.norm());
  if (A.trace()) out["trace"] = to_json(*A.trace());
  if (!A.labels().empty()) out["labels"] = A.labels();
  if (!A.provenance().empty()) out["provenance"] = A.provenance();
  return out;
}

// ---------------------------------------------------------------- readers

Scalar scalar_from(const Ring& R, const json& j) {
  if (j.is_string()) return R.parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return R.from_int(j.get<std::int64_t>());
  bad("expected a scalar string, got " + j.dump());
}

Vector vector_from(const Ring& R, const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    bad("expected a vector of length " + std::to_string(expected) + ", got " + j.dump());
  }
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from(R, e));
  return v;
}

Matrix matrix_from(const Ring& R, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("expected a matrix with " + std::to_string(rows) + " rows");
  std::vector<Vector> rs;
  for (const auto& r : j) rs.push_back(vector_from(R, r, cols));
  return Matrix::from_rows(R, rs, cols);
}

QuadraticForm quadratic_from(const Ring& R, const json& j, std::size_t n) {
  if (j.contains("diagonal")) {
    Vector d = vector_from(R, j.at("diagonal"), n);
    Matrix B(R, n, n);
    for (std::size_t i = 0; i < n; ++i) B(i, i) = d[i];
    return QuadraticForm::from_bilinear(B);
  }
  QuadraticForm q{vector_from(R, field(j, "diag"), n), matrix_from(R, field(j, "polar"), n, n)};
  if (!q.polar.is_symmetric()) bad("norm polarization must be symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    if (q.polar(i, i) != q.diag[i] + q.diag[i]) bad("norm polarization diagonal must be twice the diagonal values");
  }
  return q;
}

CrossProduct cross_from(const Ring& R, std::size_t m, const json& j) {
  if (!j.is_array()) bad("cross product must be a list of [i, j, k, value] entries");
  std::vector<StructureEntry> entries;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) bad("cross entry must be [i, j, k, value], got " + e.dump());
    entries.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(), scalar_from(R, e[3])});
  }
  return CrossProduct::from_entries(R, m, entries);
}

StructureAlgebra algebra_from(const json& j) {
  Ring R = Ring::parse(field(j, "ring").get<std::string>());
  const std::size_t n = count_from(j, "rank");
  if (n == 0) bad("rank must be positive");
  Vector unit = vector_from(R, field(j, "unit"), n);
  const json& mul = field(j, "mul");
  if (!mul.is_array() || mul.size() != n) bad("mul must be an n x n x n array");
  std::vector<Scalar> t;
  for (const auto& row : mul) {
    if (!row.is_array() || row.size() != n) bad("mul must be an n x n x n array");
    for (const auto& cell : row) {
      Vector c = vector_from(R, cell, n);
      t.insert(t.end(), c.begin(), c.end());
    }
  }
  StructureAlgebra A(R, n, unit, std::move(t));
  if (j.contains("involution")) A = A.with_involution(matrix_from(R, j.at("involution"), n, n));
  if (j.contains("norm")) A = A.with_norm(quadratic_from(R, j.at("norm"), n));
  if (j.contains("trace")) A = A.with_trace(vector_from(R, j.at("trace"), n));
  if (j.contains("labels")) A = A.with_labels(j.at("labels").get<std::vector<std::string>>());
  if (j.contains("provenance")) A = A.with_provenance(j.at("provenance").get<std::string>());
  return A;
}

CoefficientAlgebra coefficients_from(const Ring& R, const json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "base") return CoefficientAlgebra::base(R);
    if (name == "split") return CoefficientAlgebra(split_etale(R));
    if (name == "hamilton") return CoefficientAlgebra(hamilton(R));
    bad("unknown coefficient algebra '" + name + "'");
  }
  if (j.is_object() && j.contains("cay_rank2")) return CoefficientAlgebra(cay_rank2(R, scalar_from(R, j.at("cay_rank2"))));
  if (j.is_object() && j.contains("raw")) {
    StructureAlgebra D = algebra_from(j.at("raw"));
    if (D.ring() != R) throw Error(ErrorKind::RingMismatch, "coefficient algebra over a different ring");
    return CoefficientAlgebra(D);
  }
  bad("unrecognized coefficient algebra " + j.dump());
}

namespace {

Vector d_element(const CoefficientAlgebra& D, const json& j) {
  if (j.is_array()) return vector_from(D.ring(), j, D.rank());
  return D.embed(scalar_from(D.ring(), j));
}

SesquilinearForm gram_from(const FreeRightModule& F, const json& doc) {
  if (!doc.contains("gram")) return identity_form(F);
  const json& g = doc.at("gram");
  const std::size_t s = F.d_rank();
  if (!g.is_array() || g.size() != s) bad("gram must be an s x s array");
  std::vector<std::vector<Vector>> rows;
  for (const auto& r : g) {
    if (!r.is_array() || r.size() != s) bad("gram must be an s x s array");
    std::vector<Vector> row;
    for (const auto& e : r) row.push_back(d_element(F.coefficients(), e));
    rows.push_back(std::move(row));
  }
  return SesquilinearForm(F, std::move(rows));
}

std::size_t module_rank(const json& doc) {
  if (doc.contains("s")) return count_from(doc, "s");
  if (doc.contains("gram") && doc.at("gram").is_array()) return doc.at("gram").size();
  bad("module rank 's' missing");
}

CrossProduct unified_cross(const SesquilinearForm& h, const json& doc) {
  const Ring& R = h.module().ring();
  const std::size_t m = h.module().r_rank();
  if (!doc.contains("cross")) return CrossProduct::zero(R, m);
  const json& c = doc.at("cross");
  if (c.is_object() && c.contains("alpha_cross")) {
    auto alpha = DeterminantTrivialization::over(h.coefficients(), d_element(h.coefficients(), c.at("alpha_cross")));
    return alpha_cross(h, alpha).reversed();
  }
  return cross_from(R, m, c);
}

BilinearMap product_from(const StructureAlgebra& A, const json& j) {
  if (j.is_string() && j.get<std::string>() == "mul") return BilinearMap::multiplication(A);
  if (j.is_string() && j.get<std::string>() == "zero") return BilinearMap::zero(A.ring(), A.rank());
  if (!j.is_array()) bad("product must be \"mul\", \"zero\" or a list of [i, j, k, value]");
  const std::size_t n = A.rank();
  std::vector<Scalar> t(n * n * n, A.ring().zero());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) bad("product entry must be [i, j, k, value]");
    std::size_t i = e[0].get<std::size_t>(), jj = e[1].get<std::size_t>(), k = e[2].get<std::size_t>();
    if (i >= n || jj >= n || k >= n) bad("product entry index out of range");
    t[(i * n + jj) * n + k] += scalar_from(A.ring(), e[3]);
  }
  return BilinearMap(A.ring(), n, std::move(t));
}

}  // namespace

AlgebraDocument build_document(const json& doc, const std::string& name) {
  try {
    if (!doc.is_object()) bad("algebra file must be a JSON object");
    std::string construction = doc.value("construction", std::string("raw"));
    std::string nm = doc.value("name", name);
    json expect = doc.value("expect", json::object());
    auto finish = [&](StructureAlgebra A) { return AlgebraDocument{nm, construction, std::move(A), expect}; };
    if (construction == "raw") return finish(algebra_from(doc));

    Ring R = Ring::parse(field(doc, "ring").get<std::string>());
    auto coeffs = [&](const char* fallback) { return coefficients_from(R, doc.value("coefficients", json(fallback))); };
    if (construction == "unified" || construction == "hat") {
      FreeRightModule F(coeffs("base"), module_rank(doc));
      SesquilinearForm h = gram_from(F, doc);
      CrossProduct x = unified_cross(h, doc);
      return finish(construction == "unified" ? build_unified(h, x) : hat(h, x));
    }
    if (construction == "cayley_dickson") {
      return finish(cayley_dickson(coeffs("base"), scalar_from(R, field(doc, "mu"))));
    }
    if (construction == "thakur") {
      auto S = coeffs("split");
      FreeRightModule F(S, 3);
      auto alpha = DeterminantTrivialization::over(S, d_element(S, doc.value("alpha", json("1"))));
      return finish(thakur(gram_from(F, doc), alpha));
    }
    if (construction == "quat") {
      QuadraticForm N = quadratic_from(R, field(doc, "norm"), 3);
      return finish(quat(N, scalar_from(R, doc.value("alpha", json("1")))));
    }
    if (construction == "jspin") {
      const json& f = field(doc, "form");
      if (f.is_object() && f.contains("diagonal")) {
        Vector d = vector_from(R, f.at("diagonal"), f.at("diagonal").size());
        Matrix B(R, d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) B(i, i) = d[i];
        return finish(jspin(B));
      }
      return finish(jspin(matrix_from(R, f, f.size(), f.size())));
    }
    if (construction == "becker") {
      StructureAlgebra A = coeffs("base").algebra();
      return finish(becker_double(A, product_from(A, field(doc, "dot1")), product_from(A, field(doc, "dot2")),
                                  product_from(A, field(doc, "dot3"))));
    }
    if (construction == "cay_rank2") return finish(cay_rank2(R, scalar_from(R, field(doc, "b"))));
    bad("unknown construction '" + construction + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

AlgebraDocument load_algebra(const std::string& path_or_name) {
  if (auto entry = catalog_entry(path_or_name); entry && !std::filesystem::exists(path_or_name)) {
    return build_document(*entry, path_or_name);
  }
  return build_document(parse_text(read_file(path_or_name), path_or_name), path_or_name);
}

// ---------------------------------------------------------------- catalog

namespace {

json identity_gram(std::size_t s) {
  json g = json::array();
  for (std::size_t i = 0; i < s; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s; ++j) row.push_back(i == j ? "1" : "0");
    g.push_back(row);
  }
  return g;
}

std::vector<std::pair<std::string, json>> catalog() {
  return {
      {"hamilton",
       {{"construction", "unified"}, {"ring", "Q"}, {"coefficients", {{"cay_rank2", "-1"}}}, {"s", 1},
        {"gram", identity_gram(1)}, {"expect", {{"associative", true}, {"classify", "quaternion"}}}}},
      {"split-quaternion",
       {{"construction", "quat"}, {"ring", "Q"}, {"norm", {{"diagonal", {"1", "-1", "-1"}}}}, {"alpha", "1"},
        {"expect", {{"associative", true}, {"composition", true}, {"zero_divisors", true}}}}},
      {"gaussian-etale",
       {{"construction", "cay_rank2"}, {"ring", "Q"}, {"b", "-1"}, {"expect", {{"classify", "etale"}}}}},
      {"split-etale",
       {{"construction", "cay_rank2"}, {"ring", "Q"}, {"b", "1"}, {"expect", {{"zero_divisors", true}}}}},
      {"split-octonion",
       {{"construction", "thakur"}, {"ring", "Q"}, {"coefficients", "split"}, {"gram", identity_gram(3)},
        {"alpha", "1"},
        {"expect", {{"alternative", true}, {"associative", false}, {"classify", "octonion"}, {"zero_divisors", true}}}}},
      {"octonion-qi",
       {{"construction", "thakur"}, {"ring", "Q"}, {"coefficients", {{"cay_rank2", "-1"}}},
        {"gram", identity_gram(3)}, {"alpha", "1"},
        {"expect", {{"alternative", true}, {"associative", false}, {"classify", "octonion"}}}}},
      {"split-octonion-f5",
       {{"construction", "thakur"}, {"ring", "F_5"}, {"coefficients", "split"}, {"gram", identity_gram(3)},
        {"alpha", "1"}, {"expect", {{"alternative", true}, {"classify", "octonion"}, {"zero_divisors", true}}}}},
      {"jspin-3",
       {{"construction", "jspin"}, {"ring", "Q"}, {"form", {{"diagonal", {"1", "2", "3"}}}},
        {"expect", {{"commutative", true}, {"jordan", true}, {"composition", false}}}}},
      {"colour-7",
       {{"construction", "hat"}, {"ring", "Q"}, {"coefficients", "split"}, {"s", 3}, {"gram", identity_gram(3)},
        {"cross", {{"alpha_cross", "1"}}}, {"expect", {{"flexible", true}, {"alternative", false}}}}},
      {"octonion",
       {{"construction", "cayley_dickson"}, {"ring", "Q"}, {"coefficients", "hamilton"}, {"mu", "-1"},
        {"expect", {{"alternative", true}, {"associative", false}, {"classify", "octonion"}}}}},
  };
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, doc] : catalog()) out.push_back(name);
  return out;
}

std::optional<json> catalog_entry(const std::string& name) {
  for (auto& [n, doc] : catalog()) {
    if (n == name) {
      json d = doc;
      d["name"] = n;
      return d;
    }
  }
  return std::nullopt;
}

}  // namespace quadalg::io
