#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quadalg/analysis.hpp"

namespace quadalg::io {

using json = nlohmann::ordered_json;

json to_json(const Scalar& s);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const QuadraticForm& q);
json to_json(const CrossProduct& c);
json to_json(const SesquilinearForm& h);
/// Canonical raw serialization: ring, rank, unit, mul, involution, norm,
/// trace, labels, provenance.
json to_json(const StructureAlgebra& A);

Scalar scalar_from(const Ring& R, const json& j);
Vector vector_from(const Ring& R, const json& j, std::size_t expected);
Matrix matrix_from(const Ring& R, const json& j, std::size_t rows, std::size_t cols);
QuadraticForm quadratic_from(const Ring& R, const json& j, std::size_t n);
CrossProduct cross_from(const Ring& R, std::size_t m, const json& j);
StructureAlgebra algebra_from(const json& j);

/// Coefficient algebra spec: "base", "split", "hamilton",
/// {"cay_rank2": b} or {"raw": <algebra>}.
CoefficientAlgebra coefficients_from(const Ring& R, const json& j);

/// One algebra file: the built algebra, its expected-properties block and
/// the conventions used to assemble it.
struct AlgebraDocument {
  std::string name;
  std::string construction;
  StructureAlgebra algebra;
  json expect = json::object();
};

AlgebraDocument build_document(const json& doc, const std::string& name = "");

/// Parses JSON text, reporting syntax errors as ParseError with line and
/// column.
json parse_text(const std::string& text, const std::string& source);

/// Compiled-in algebra files addressable by name.
std::vector<std::string> catalog_names();
std::optional<json> catalog_entry(const std::string& name);

/// Reads a file path or a compiled-in catalog name.
AlgebraDocument load_algebra(const std::string& path_or_name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace quadalg::io
