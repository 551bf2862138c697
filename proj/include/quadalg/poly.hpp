#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "quadalg/scalar.hpp"

namespace quadalg {

inline constexpr std::size_t kMaxMonomialDegree = 16;

/// A monomial stored as the sorted multiset of its variable indices.
/// Ordering: a < b iff a is lexicographically *larger* as an exponent
/// vector, so sorting ascending lists terms from the lex-leading one down.
class Monomial {
 public:
  Monomial() { idx_.fill(kPad); }

  static Monomial variable(std::uint16_t var);

  unsigned degree() const { return deg_; }
  unsigned exponent(std::uint16_t var) const;
  std::span<const std::uint16_t> vars() const { return {idx_.data(), deg_}; }

  Monomial operator*(const Monomial& o) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static constexpr std::uint16_t kPad = 0xFFFF;
  std::array<std::uint16_t, kMaxMonomialDegree> idx_{};
  std::uint8_t deg_ = 0;
};

/// Coefficient ring plus ordered variable names shared by a family of
/// polynomials.
struct PolyContext {
  Ring ring;
  std::vector<std::string> names;

  static std::shared_ptr<const PolyContext> make(Ring ring, std::vector<std::string> names);
};

using PolyContextPtr = std::shared_ptr<const PolyContext>;

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial with canonical term order and no zero
/// coefficients, so the zero test is an emptiness test.
class MultiPoly {
 public:
  explicit MultiPoly(PolyContextPtr ctx) : ctx_(std::move(ctx)) {}

  static MultiPoly constant(PolyContextPtr ctx, const Scalar& c);
  static MultiPoly variable(PolyContextPtr ctx, std::uint16_t var);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static MultiPoly from_terms(PolyContextPtr ctx, std::vector<Term> terms);

  const PolyContextPtr& context() const { return ctx_; }
  const Ring& ring() const { return ctx_->ring; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree_in(std::uint16_t var) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& c) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

  Scalar evaluate(std::span<const Scalar> point) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void require_compatible(const MultiPoly& o) const;

  PolyContextPtr ctx_;
  std::vector<Term> terms_;
};

inline bool poly_is_zero(const MultiPoly& f) { return f.is_zero(); }

}  // namespace quadalg
