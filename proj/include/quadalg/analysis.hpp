#pragma once

#include <optional>
#include <string>
#include <utility>

#include "quadalg/constructions.hpp"

namespace quadalg {

enum class SubmoduleRole { Nucleus, Radical, Skew, Sym, Orthocomplement };

/// Reduced echelon basis of a subspace of an algebra.
struct SubmoduleBasis {
  SubmoduleRole role;
  std::size_t ambient_rank = 0;
  std::vector<Vector> vectors;

  std::size_t dimension() const { return vectors.size(); }
  bool contains(const Vector& v) const;
};

/// {x : [x, A, A] = [A, x, A] = [A, A, x] = 0}; needs a field.
SubmoduleBasis nucleus(const StructureAlgebra& A);

struct CriterionVerdict {
  bool holds = false;
  bool first = false;   // first displayed condition
  bool second = false;  // second displayed condition
};

/// t_D(h(u x v, u)) = 0 and (u x v) x u = u x (v x u), formally.
CriterionVerdict flexible_conditions(const SesquilinearForm& h, const CrossProduct& cross);
bool flexible_criterion(const SesquilinearForm& h, const CrossProduct& cross);

/// h(u, u x v) = 0 and u x (u x v) = u.h(u, v) - v.h(u, u), formally. The
/// same pair with u and v exchanged is evaluated too and must agree.
CriterionVerdict alternative_conditions(const SesquilinearForm& h, const CrossProduct& cross);
bool alternative_criterion(const SesquilinearForm& h, const CrossProduct& cross);

/// t((xy)z) = t(x(yz)) formally, using the attached trace.
bool check_trace_form_associative(const StructureAlgebra& A);

enum class RadicalForm { NormPolar, TraceForm };
SubmoduleBasis radical(const StructureAlgebra& A, RadicalForm which);

struct SymSkew {
  SubmoduleBasis sym, skew;
};
SymSkew skew_sym_split(const StructureAlgebra& A);

/// {x : n(x, d) = 0 for d in D_basis}; throws DegenerateRestriction.
SubmoduleBasis orthogonal_complement(const StructureAlgebra& A, const std::vector<Vector>& D_basis);

struct SubalgebraSplit {
  StructureAlgebra D;                   // the subalgebra in its own basis
  SubmoduleBasis F;                     // orthogonal complement
  std::vector<std::vector<Vector>> h;   // h(F_p, F_q) as D-coordinates
  CrossProduct cross;                   // on F-coordinates
  bool cross_alternating = false;
  bool polar_is_trace = false;          // n_A(u, v) = t_D(h(u, v))
  bool hermitian = false;
  bool module_closed = false;           // D F contained in F
  bool free = false;
  std::vector<Vector> generators;       // free D-basis of F when found
  std::optional<SesquilinearForm> form; // h on the free module
  std::optional<CrossProduct> module_cross;
  std::optional<bool> rebuild_equal;
};

/// h(u, v) = -proj_D(vu), u x v = proj_F(vu) on F = D-perp.
SubalgebraSplit decompose_over_subalgebra(const StructureAlgebra& A, const std::vector<Vector>& D_basis);

struct CrossProductSplit {
  SubmoduleBasis F;
  std::size_t s = 0;
  Matrix B;            // B(u, v) = n(u, v) / 2 on F-coordinates
  CrossProduct cross;  // u x v = (uv - vu) / 2 on F-coordinates
  bool conditions = false;
  bool rebuild_equal = false;
};

CrossProductSplit extract_cross_product(const StructureAlgebra& C);

struct ZeroDivisorSearch {
  std::optional<std::pair<Vector, Vector>> pair;
  bool exhausted = false;
  bool proved_anisotropic = false;
  std::string method;
  std::uint64_t evaluations = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

ZeroDivisorSearch find_zero_divisors(const StructureAlgebra& A, std::uint64_t budget = kDefaultSearchBudget);

struct Classification {
  std::size_t rank = 0;
  std::string label;
};

/// Throws NotComposition unless the attached norm is multiplicative and
/// nondegenerate.
Classification classify_composition(const StructureAlgebra& A);

/// Coordinates of v in the span of `basis` (nullopt when outside).
std::optional<Vector> coordinates_in(const Ring& R, const std::vector<Vector>& basis, const Vector& v);

}  // namespace quadalg
