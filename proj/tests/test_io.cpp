#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "quadalg/fuzz.hpp"
#include "quadalg/report.hpp"

using namespace quadalg;
using io::json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInconsistency;
}

bool same_algebra(const StructureAlgebra& a, const StructureAlgebra& b) {
  auto opt_eq = [](const auto& x, const auto& y) { return x.has_value() == y.has_value() && (!x || *x == *y); };
  bool norms = a.norm().has_value() == b.norm().has_value() &&
               (!a.norm() || (a.norm()->diag == b.norm()->diag && a.norm()->polar == b.norm()->polar));
  return a.ring() == b.ring() && a.rank() == b.rank() && a.unit() == b.unit() && a.tensor() == b.tensor() &&
         opt_eq(a.involution(), b.involution()) && opt_eq(a.trace(), b.trace()) && norms && a.labels() == b.labels();
}

}  // namespace

TEST_CASE("serialization round trips for every catalog algebra") {
  for (const auto& name : io::catalog_names()) {
    CAPTURE(name);
    auto doc = io::load_algebra(name);
    json j = io::to_json(doc.algebra);
    StructureAlgebra back = io::algebra_from(io::parse_text(j.dump(), name));
    CHECK(same_algebra(doc.algebra, back));
    CHECK(io::to_json(back).dump() == j.dump());
    CHECK(doc.algebra.involution().has_value());
    CHECK(doc.algebra.norm().has_value());
  }
}

TEST_CASE("catalog fixtures") {
  Ring Q = Ring::rationals();
  auto h = io::load_algebra("hamilton");
  CHECK(h.algebra.rank() == 4);
  CHECK(h.algebra.tensor() == oracle::hamilton_table(Q).tensor());
  auto f5 = io::load_algebra("split-octonion-f5");
  CHECK(f5.algebra.rank() == 8);
  CHECK(f5.algebra.ring() == Ring::prime_field(5));
  CHECK_FALSE(io::catalog_entry("no-such-algebra").has_value());
}

TEST_CASE("every construction kind builds from a document") {
  auto build = [](const char* text) { return io::build_document(io::parse_text(text, "test")).algebra; };
  CHECK(build(R"({"construction":"cay_rank2","ring":"Q","b":"-1"})").rank() == 2);
  CHECK(build(R"({"construction":"cayley_dickson","ring":"Q","coefficients":{"cay_rank2":"-1"},"mu":"-1"})").rank() == 4);
  CHECK(build(R"({"construction":"unified","ring":"F_7","coefficients":"split","s":2,
                  "gram":[["1",["2","3"]],[["3","2"],"5"]],"cross":[[0,1,2,"3"]]})")
            .rank() == 6);
  CHECK(build(R"({"construction":"thakur","ring":"Q"})").rank() == 8);
  CHECK(build(R"({"construction":"quat","ring":"Q","norm":{"diagonal":["1","1","1"]}})").rank() == 4);
  CHECK(build(R"({"construction":"jspin","ring":"Q","form":[["1","0"],["0","2"]]})").rank() == 3);
  CHECK(build(R"({"construction":"hat","ring":"Q","coefficients":"split","s":3,"cross":{"alpha_cross":"1"}})").rank() == 7);
  CHECK(build(R"({"construction":"becker","ring":"Q","coefficients":{"cay_rank2":"-1"},
                  "dot1":"mul","dot2":"mul","dot3":"zero"})")
            .rank() == 4);
  auto raw = io::to_json(hamilton(Ring::rationals()));
  CHECK(io::build_document(raw).algebra.rank() == 4);

  auto u = build(R"({"construction":"unified","ring":"F_7","coefficients":"split","s":2,
                     "gram":[["1",["2","3"]],[["3","2"],"5"]],"cross":[[0,1,2,"3"]]})");
  CHECK(check_scalar_involution(u, *u.involution()).ok);
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { io::build_document(io::parse_text(R"({"construction":"cay_rank2","ring":"Q","b":"1/0"})", "t")); }) ==
        ErrorKind::ParseError);
  try {
    io::parse_text("{\n  \"ring\": \"Q\",\n  \"b\": 1,,\n}", "file.json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("file.json:3:") != std::string::npos);
  }
  CHECK(kind_of([] { io::build_document(io::parse_text(R"({"construction":"cay_rank2","ring":"Q"})", "t")); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] { io::build_document(io::parse_text(R"({"construction":"magic","ring":"Q"})", "t")); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] { io::build_document(io::parse_text(R"({"construction":"cay_rank2","ring":"F_4","b":"1"})", "t")); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { io::load_algebra("/nonexistent/path.json"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("check reports") {
  auto ham = io::load_algebra("hamilton");
  auto rep = report::run_checks(ham, report::default_checks(), ham.expect);
  CHECK(rep.mismatches() == 0);
  std::vector<std::string> names;
  for (const auto& r : rep.results) {
    names.push_back(r.name);
    if (r.name == "classify") CHECK(r.value == "quaternion");
    else CHECK(r.value == true);
  }
  CHECK(std::is_sorted(names.begin(), names.end()));

  auto js = io::load_algebra("jspin-3");
  auto bad = report::run_checks(js, {"composition"}, report::parse_expectations("composition=true"));
  CHECK(bad.mismatches() == 1);
  REQUIRE(bad.results.size() == 1);
  CHECK(bad.results[0].witness.has_value());

  CHECK(kind_of([&] { report::run_checks(ham, {"bogus"}, json::object()); }) == ErrorKind::InvalidArgument);

  auto oct = io::load_algebra("octonion");
  report::CheckOptions serial;
  serial.parallel = false;
  auto a = report::run_checks(oct, {"associative", "alternative", "nucleus"}, json::object());
  auto b = report::run_checks(oct, {"associative", "alternative", "nucleus"}, json::object(), serial);
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK(a.results[1].witness.has_value());  // associative fails with a witness
  CHECK(a.results[2].value == 1);
}

TEST_CASE("expectation parsing") {
  json e = report::parse_expectations("composition=true,classify=quaternion,nucleus=1");
  CHECK(e["composition"] == true);
  CHECK(e["classify"] == "quaternion");
  CHECK(e["nucleus"] == 1);
  CHECK(kind_of([] { report::parse_expectations("composition"); }) == ErrorKind::ParseError);
}

TEST_CASE("basis specifications") {
  StructureAlgebra O = octonion(Ring::rationals());
  CHECK(report::parse_basis_spec(O, "0,1,2,3").size() == 4);
  auto v = report::parse_basis_spec(O, R"([["1","0","0","0","0","0","0","0"]])");
  REQUIRE(v.size() == 1);
  CHECK(v[0] == O.unit());
  CHECK(kind_of([&] { report::parse_basis_spec(O, "0,x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { report::parse_basis_spec(O, "9"); }) == ErrorKind::InvalidArgument);
  auto rep = report::run_decompose(O, report::parse_basis_spec(O, "0,1,2,3"));
  CHECK(rep.to_text().find("rebuild equal: yes") != std::string::npos);
  CHECK(rep.to_json()["rebuild_equal"] == true);
}

TEST_CASE("fuzz harness is deterministic") {
  for (auto p : {fuzz::Profile::FormCriteria, fuzz::Profile::TraceForm, fuzz::Profile::CompositionSplit}) {
    auto a = fuzz::run(p, 7, 6), b = fuzz::run(p, 7, 6);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.passed());
  }
  auto empty = fuzz::run(fuzz::Profile::FormCriteria, 1, 0);
  CHECK(empty.passed());
  CHECK(empty.outcomes.empty());
  CHECK(fuzz::profile_from_string("lemma2") == fuzz::Profile::FormCriteria);
  CHECK_FALSE(fuzz::profile_from_string("other").has_value());
}

TEST_CASE("fuzz instances replay as algebra documents") {
  auto rep = fuzz::run(fuzz::Profile::FormCriteria, 3, 5);
  for (const auto& o : rep.outcomes) {
    auto doc = io::build_document(o.instance);
    CHECK(check_identity(doc.algebra, Identity::Flexible) == o.verdicts["flexible"].get<bool>());
  }
}
