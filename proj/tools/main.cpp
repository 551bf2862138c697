#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quadalg/fuzz.hpp"
#include "quadalg/report.hpp"

using namespace quadalg;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kFailure = 2;

io::AlgebraDocument load(const std::string& input, const std::string& ring) {
  json doc;
  if (auto entry = io::catalog_entry(input); entry && !std::filesystem::exists(input)) {
    doc = *entry;
  } else {
    doc = io::parse_text(io::read_file(input), input);
  }
  if (!ring.empty()) {
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "algebra file must be a JSON object");
    doc["ring"] = ring;
  }
  return io::build_document(doc, input);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_file(out, text);
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic algebras with scalar involution"};
  app.require_subcommand(1);

  std::string input, out, ring, checks, expect, basis, profile = "lemma2";
  bool machine = false;
  std::uint64_t budget = kDefaultSearchBudget, seed = 1;
  std::size_t count = 50;

  auto* list = app.add_subcommand("list", "Print the compiled-in catalog names");

  auto* build = app.add_subcommand("build", "Build an algebra and write it in raw form");
  build->add_option("input", input, "Algebra file or catalog name")->required();
  build->add_option("--out", out, "Output path (stdout by default)");
  build->add_option("--ring", ring, "Override the ring of the algebra file");

  auto* check = app.add_subcommand("check", "Run verification checks");
  check->add_option("input", input, "Algebra file or catalog name")->required();
  check->add_option("--checks", checks, "Comma-separated check names");
  check->add_option("--expect", expect, "Expectations as name=value,...");
  check->add_option("--budget", budget, "Zero-divisor search cap");
  check->add_option("--ring", ring, "Override the ring of the algebra file");
  check->add_option("--out", out, "Report path (stdout by default)");
  check->add_flag("--machine", machine, "Machine-readable JSON report");

  auto* decompose = app.add_subcommand("decompose", "Split an algebra over a composition subalgebra");
  decompose->add_option("input", input, "Algebra file or catalog name")->required();
  decompose->add_option("--basis", basis, "Subalgebra basis: indices \"0,1\" or a JSON list of vectors")->required();
  decompose->add_option("--ring", ring, "Override the ring of the algebra file");
  decompose->add_option("--out", out, "Write the recovered data as JSON to this path");
  decompose->add_flag("--machine", machine, "Machine-readable JSON report");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized equivalence harness");
  fuzz_cmd->add_option("--seed", seed, "Random seed");
  fuzz_cmd->add_option("--count", count, "Number of instances");
  fuzz_cmd->add_option("--profile", profile, "lemma2, remark2 or theorem1");
  fuzz_cmd->add_option("--out", out, "Replay file written on violation");
  fuzz_cmd->add_flag("--machine", machine, "Machine-readable JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (list->parsed()) {
      for (const auto& n : io::catalog_names()) std::cout << n << "\n";
      return kOk;
    }
    if (build->parsed()) {
      auto doc = load(input, ring);
      emit(io::to_json(doc.algebra).dump(2) + "\n", out);
      return kOk;
    }
    if (check->parsed()) {
      auto doc = load(input, ring);
      json expectations = doc.expect;
      json overrides = report::parse_expectations(expect);
      for (const auto& [k, v] : overrides.items()) expectations[k] = v;
      auto names = checks.empty() ? report::default_checks() : split_list(checks);
      report::CheckOptions opt;
      opt.budget = budget;
      auto rep = report::run_checks(doc, names, expectations, opt);
      emit(machine ? rep.to_json().dump(2) + "\n" : rep.to_text(), out);
      return rep.mismatches() == 0 ? kOk : kMismatch;
    }
    if (decompose->parsed()) {
      auto doc = load(input, ring);
      auto rep = report::run_decompose(doc.algebra, report::parse_basis_spec(doc.algebra, basis));
      if (!out.empty()) io::write_file(out, rep.to_json().dump(2) + "\n");
      std::cout << (machine ? rep.to_json().dump(2) + "\n" : rep.to_text());
      return kOk;
    }
    if (fuzz_cmd->parsed()) {
      auto p = fuzz::profile_from_string(profile);
      if (!p) throw Error(ErrorKind::InvalidArgument, "unknown profile '" + profile + "'");
      auto rep = fuzz::run(*p, seed, count);
      std::cout << (machine ? rep.to_json().dump(2) + "\n" : rep.to_text());
      if (!rep.passed()) {
        std::string path = out.empty() ? "fuzz-replay.json" : out;
        io::write_file(path, rep.replay().dump(2) + "\n");
        std::cerr << "violations written to " << path << "\n";
        return kMismatch;
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
