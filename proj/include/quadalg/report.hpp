#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadalg/io.hpp"

namespace quadalg::report {

using io::json;

/// Default check list of `check`.
std::vector<std::string> default_checks();
/// Every check name understood by run_checks.
std::vector<std::string> known_checks();
bool is_known_check(const std::string& name);

struct CheckResult {
  std::string name;
  json value;                  // bool, label or count; null on error
  std::optional<json> expected;
  bool matches = true;         // value == expected when an expectation exists
  std::string note;
  std::optional<json> witness;
  std::optional<std::string> error;
  double seconds = 0;
};

struct CheckOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  bool parallel = true;
};

struct CheckReport {
  std::string name;
  std::string construction;
  std::size_t rank = 0;
  std::string ring;
  std::string conventions;
  std::vector<CheckResult> results;  // sorted by check name

  std::size_t mismatches() const;
  json to_json(bool with_timings = true) const;
  std::string to_text() const;
};

/// Sign and operand-order choices used by a named construction.
std::string conventions_for(const std::string& construction);

/// Runs the union of `checks` and the keys of `expect`; throws
/// InvalidArgument for an unknown check name.
CheckReport run_checks(const io::AlgebraDocument& doc, const std::vector<std::string>& checks, const json& expect,
                       const CheckOptions& options = {});

/// Parses "name=value,name=value"; values are JSON literals or bare labels.
json parse_expectations(const std::string& text);

struct DecomposeReport {
  SubalgebraSplit result;
  json to_json() const;
  std::string to_text() const;
};

DecomposeReport run_decompose(const StructureAlgebra& A, const std::vector<Vector>& D_basis);

/// Subalgebra basis from "0,1,2,3" (coordinate indices) or a JSON list of
/// coordinate vectors.
std::vector<Vector> parse_basis_spec(const StructureAlgebra& A, const std::string& spec);

}  // namespace quadalg::report
