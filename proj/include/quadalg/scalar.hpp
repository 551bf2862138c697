#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quadalg/errors.hpp"

namespace quadalg {

enum class RingKind {
  Rationals,
  Integers,
  PrimeField,
  QuadraticExtension,  // base[x]/(x^2 - c)
  SplitPair,           // base x base with the swap involution
};

class Scalar;

namespace detail {
struct RingData;
}

/// Handle to an immutable description of an exactly represented commutative
/// ring. Copies share the description; equality is structural.
class Ring {
 public:
  Ring();  // the rationals

  static Ring rationals();
  static Ring integers();
  static Ring prime_field(std::int64_t p);
  static Ring quadratic(const Ring& base, const Scalar& c);
  static Ring split(const Ring& base);

  /// Parses "Q", "Z", "F_p", "ext(<base>, <c>)" and "split(<base>)".
  static Ring parse(std::string_view text);

  RingKind kind() const;
  std::int64_t modulus() const;
  const Ring& base() const;
  const Scalar& ext_constant() const;

  bool is_field() const;
  bool two_invertible() const;
  /// Number of elements for finite rings, nullopt otherwise or on overflow.
  std::optional<std::uint64_t> cardinality() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& q) const;
  Scalar make_pair(const Scalar& a, const Scalar& b) const;
  /// Parses a scalar in canonical or relaxed textual form.
  Scalar parse_scalar(std::string_view text) const;
  /// index-th element of a finite ring in a fixed enumeration order (0 first).
  Scalar element_at(std::uint64_t index) const;

  std::string to_string() const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::RingData> d_;
  friend class Scalar;
};

/// An element of a Ring. Arithmetic is exact and results are canonical
/// (reduced fractions, least non-negative residues).
class Scalar {
 public:
  Scalar();  // rational zero

  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws NonInvertible.
  Scalar inv() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

  /// Component access: rational value (Rationals, Integers), residue
  /// (PrimeField), or the two coordinates (QuadraticExtension, SplitPair).
  const mpq_class& rational() const;
  std::int64_t residue() const;
  const Scalar& first() const;
  const Scalar& second() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  using PairPtr = std::shared_ptr<const std::array<Scalar, 2>>;
  using Payload = std::variant<mpq_class, std::int64_t, PairPtr>;

  Scalar(Ring r, Payload v) : ring_(std::move(r)), v_(std::move(v)) {}
  void require_same_ring(const Scalar& o) const;

  Ring ring_;
  Payload v_;

  friend class Ring;
};

/// Exact square root when one exists in the ring. Supported for Q, Z, F_p,
/// split pairs, and quadratic extensions of fields with 2 invertible.
std::optional<Scalar> exact_sqrt(const Scalar& a);
bool is_square(const Scalar& a);

Scalar pow(const Scalar& a, std::uint64_t e);

}  // namespace quadalg
