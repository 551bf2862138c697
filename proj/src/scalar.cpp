#include "quadalg/scalar.hpp"

#include <cctype>
#include <charconv>

namespace quadalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotAntiAutomorphism: return "NotAntiAutomorphism";
    case ErrorKind::NotOrderTwo: return "NotOrderTwo";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::TwoNotInvertible: return "TwoNotInvertible";
    case ErrorKind::FieldRequired: return "FieldRequired";
    case ErrorKind::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotComposition: return "NotComposition";
    case ErrorKind::NotScalarInvolution: return "NotScalarInvolution";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

namespace detail {

struct RingData {
  RingKind kind = RingKind::Rationals;
  std::int64_t p = 0;
  std::optional<Ring> base;
  std::optional<Scalar> c;
};

}  // namespace detail

namespace {

using detail::RingData;

const std::shared_ptr<const RingData>& rationals_data() {
  static const std::shared_ptr<const RingData> d = std::make_shared<const RingData>();
  return d;
}

const std::shared_ptr<const RingData>& integers_data() {
  static const std::shared_ptr<const RingData> d = [] {
    RingData r;
    r.kind = RingKind::Integers;
    return std::make_shared<const RingData>(std::move(r));
  }();
  return d;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t mod_pow(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = mod_pow(a, static_cast<std::uint64_t>(d), n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t normalize_residue(const mpz_class& v, std::int64_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
  throw Error(ErrorKind::ParseError, std::string(what) + " '" + std::string(text) + "'");
}

mpz_class parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) parse_fail("expected an integer, got", text);
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) parse_fail("expected an integer, got", text);
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return mpz_class(s, 10);
}

mpq_class parse_fraction(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) parse_fail("zero denominator in", text);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Splits "a, b" at the top-level comma.
std::pair<std::string_view, std::string_view> split_top_comma(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  parse_fail("expected a comma-separated pair in", s);
}

}  // namespace

// ---------------------------------------------------------------- Ring

Ring::Ring() : d_(rationals_data()) {}

Ring Ring::rationals() { return Ring(rationals_data()); }
Ring Ring::integers() { return Ring(integers_data()); }

Ring Ring::prime_field(std::int64_t p) {
  if (p > (std::int64_t{1} << 62) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "prime field modulus " + std::to_string(p) + " is not a supported prime");
  }
  RingData r;
  r.kind = RingKind::PrimeField;
  r.p = p;
  return Ring(std::make_shared<const RingData>(std::move(r)));
}

Ring Ring::quadratic(const Ring& base, const Scalar& c) {
  if (c.ring() != base) throw Error(ErrorKind::RingMismatch, "extension constant not in base ring");
  RingData r;
  r.kind = RingKind::QuadraticExtension;
  r.base = base;
  r.c = c;
  return Ring(std::make_shared<const RingData>(std::move(r)));
}

Ring Ring::split(const Ring& base) {
  RingData r;
  r.kind = RingKind::SplitPair;
  r.base = base;
  return Ring(std::make_shared<const RingData>(std::move(r)));
}

Ring Ring::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Z" || text == "ZZ") return integers();
  if (text.starts_with("F_") || text.starts_with("GF(")) {
    std::string_view num = text.starts_with("F_") ? text.substr(2) : text.substr(3, text.size() - 4);
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc() || ptr != num.data() + num.size()) parse_fail("bad prime field", text);
    return prime_field(p);
  }
  auto inner = [&](std::string_view prefix) {
    if (!text.starts_with(prefix) || text.back() != ')') parse_fail("bad ring descriptor", text);
    return text.substr(prefix.size(), text.size() - prefix.size() - 1);
  };
  if (text.starts_with("split(")) return split(parse(inner("split(")));
  if (text.starts_with("ext(")) {
    auto [b, c] = split_top_comma(inner("ext("));
    Ring base = parse(b);
    return quadratic(base, base.parse_scalar(c));
  }
  parse_fail("unknown ring descriptor", text);
}

RingKind Ring::kind() const { return d_->kind; }
std::int64_t Ring::modulus() const { return d_->p; }

const Ring& Ring::base() const {
  if (!d_->base) throw Error(ErrorKind::InvalidArgument, "ring " + to_string() + " has no base ring");
  return *d_->base;
}

const Scalar& Ring::ext_constant() const {
  if (!d_->c) throw Error(ErrorKind::InvalidArgument, "ring " + to_string() + " is not a quadratic extension");
  return *d_->c;
}

bool Ring::is_field() const {
  switch (kind()) {
    case RingKind::Rationals:
    case RingKind::PrimeField: return true;
    case RingKind::Integers:
    case RingKind::SplitPair: return false;
    case RingKind::QuadraticExtension: return base().is_field() && !is_square(ext_constant());
  }
  return false;
}

bool Ring::two_invertible() const { return from_int(2).is_unit(); }

std::optional<std::uint64_t> Ring::cardinality() const {
  switch (kind()) {
    case RingKind::PrimeField: return static_cast<std::uint64_t>(modulus());
    case RingKind::QuadraticExtension:
    case RingKind::SplitPair: {
      auto q = base().cardinality();
      if (!q || *q > (std::uint64_t{1} << 31)) return std::nullopt;
      return *q * *q;
    }
    default: return std::nullopt;
  }
}

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(std::int64_t v) const { return from_rational(mpq_class(mpz_class(static_cast<long>(v)))); }

Scalar Ring::from_rational(const mpq_class& q) const {
  switch (kind()) {
    case RingKind::Rationals: return Scalar(*this, q);
    case RingKind::Integers:
      if (q.get_den() != 1) throw Error(ErrorKind::NonInvertible, "denominator in the integers");
      return Scalar(*this, q);
    case RingKind::PrimeField: {
      std::int64_t num = normalize_residue(q.get_num(), modulus());
      std::int64_t den = normalize_residue(q.get_den(), modulus());
      if (den == 0) throw Error(ErrorKind::NonInvertible, "denominator divisible by the characteristic");
      return Scalar(*this, mod_mul(num, mod_pow(den, static_cast<std::uint64_t>(modulus() - 2), modulus()), modulus()));
    }
    case RingKind::QuadraticExtension: return make_pair(base().from_rational(q), base().zero());
    case RingKind::SplitPair: {
      Scalar b = base().from_rational(q);
      return make_pair(b, b);
    }
  }
  return Scalar();
}

Scalar Ring::make_pair(const Scalar& a, const Scalar& b) const {
  if (kind() != RingKind::QuadraticExtension && kind() != RingKind::SplitPair) {
    throw Error(ErrorKind::InvalidArgument, "ring " + to_string() + " has no pair elements");
  }
  if (a.ring() != base() || b.ring() != base()) throw Error(ErrorKind::RingMismatch, "pair coordinates not in base ring");
  return Scalar(*this, std::make_shared<const std::array<Scalar, 2>>(std::array<Scalar, 2>{a, b}));
}

Scalar Ring::parse_scalar(std::string_view text) const {
  text = trim(text);
  if (text.empty()) parse_fail("empty scalar", text);
  switch (kind()) {
    case RingKind::Rationals:
    case RingKind::Integers: {
      mpq_class q = parse_fraction(text);
      if (kind() == RingKind::Integers && q.get_den() != 1) parse_fail("non-integer scalar", text);
      return Scalar(*this, q);
    }
    case RingKind::PrimeField: {
      auto pos = text.find("mod");
      if (pos != std::string_view::npos) {
        mpz_class p = parse_integer(text.substr(pos + 3));
        if (p != modulus()) parse_fail("modulus mismatch in", text);
        text = text.substr(0, pos);
      }
      mpq_class q = parse_fraction(text);
      if (q.get_den() % modulus() == 0) parse_fail("zero denominator mod p in", text);
      return from_rational(q);
    }
    case RingKind::QuadraticExtension:
    case RingKind::SplitPair: {
      if (text.front() != '(') return from_rational(parse_fraction(text));
      if (text.back() != ')') parse_fail("unbalanced pair", text);
      auto [a, b] = split_top_comma(text.substr(1, text.size() - 2));
      return make_pair(base().parse_scalar(a), base().parse_scalar(b));
    }
  }
  parse_fail("cannot parse", text);
}

Scalar Ring::element_at(std::uint64_t index) const {
  switch (kind()) {
    case RingKind::PrimeField: return Scalar(*this, static_cast<std::int64_t>(index % static_cast<std::uint64_t>(modulus())));
    case RingKind::QuadraticExtension:
    case RingKind::SplitPair: {
      auto q = base().cardinality();
      if (!q) break;
      return make_pair(base().element_at(index % *q), base().element_at((index / *q) % *q));
    }
    default: break;
  }
  throw Error(ErrorKind::InvalidArgument, "ring " + to_string() + " is not finite");
}

std::string Ring::to_string() const {
  switch (kind()) {
    case RingKind::Rationals: return "Q";
    case RingKind::Integers: return "Z";
    case RingKind::PrimeField: return "F_" + std::to_string(modulus());
    case RingKind::QuadraticExtension: return "ext(" + base().to_string() + ", " + ext_constant().to_string() + ")";
    case RingKind::SplitPair: return "split(" + base().to_string() + ")";
  }
  return "?";
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.d_ == b.d_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RingKind::Rationals:
    case RingKind::Integers: return true;
    case RingKind::PrimeField: return a.modulus() == b.modulus();
    case RingKind::SplitPair: return a.base() == b.base();
    case RingKind::QuadraticExtension: return a.base() == b.base() && a.ext_constant() == b.ext_constant();
  }
  return false;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : v_(mpq_class(0)) {}

void Scalar::require_same_ring(const Scalar& o) const {
  if (ring_ != o.ring_) {
    throw Error(ErrorKind::RingMismatch, ring_.to_string() + " vs " + o.ring_.to_string());
  }
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 0;
    case 1: return std::get<1>(v_) == 0;
    default: return first().is_zero() && second().is_zero();
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 1;
    case 1: return std::get<1>(v_) == 1 % ring_.modulus();
    default:
      if (ring_.kind() == RingKind::SplitPair) return first().is_one() && second().is_one();
      return first().is_one() && second().is_zero();
  }
}

bool Scalar::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::Rationals: return !is_zero();
    case RingKind::Integers: return abs(std::get<0>(v_)) == 1;
    case RingKind::PrimeField: return std::get<1>(v_) != 0;
    case RingKind::SplitPair: return first().is_unit() && second().is_unit();
    case RingKind::QuadraticExtension: {
      const Scalar& c = ring_.ext_constant();
      return (first() * first() - c * second() * second()).is_unit();
    }
  }
  return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_ring(o);
  switch (v_.index()) {
    case 0: return Scalar(ring_, mpq_class(std::get<0>(v_) + std::get<0>(o.v_)));
    case 1: {
      std::int64_t s = std::get<1>(v_) + std::get<1>(o.v_);
      if (s >= ring_.modulus()) s -= ring_.modulus();
      return Scalar(ring_, s);
    }
    default: return ring_.make_pair(first() + o.first(), second() + o.second());
  }
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return Scalar(ring_, mpq_class(-std::get<0>(v_)));
    case 1: {
      std::int64_t r = std::get<1>(v_);
      return Scalar(ring_, r == 0 ? 0 : ring_.modulus() - r);
    }
    default: return ring_.make_pair(-first(), -second());
  }
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_ring(o);
  switch (v_.index()) {
    case 0: return Scalar(ring_, mpq_class(std::get<0>(v_) - std::get<0>(o.v_)));
    case 1: {
      std::int64_t s = std::get<1>(v_) - std::get<1>(o.v_);
      if (s < 0) s += ring_.modulus();
      return Scalar(ring_, s);
    }
    default: return ring_.make_pair(first() - o.first(), second() - o.second());
  }
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_ring(o);
  switch (v_.index()) {
    case 0: return Scalar(ring_, mpq_class(std::get<0>(v_) * std::get<0>(o.v_)));
    case 1: return Scalar(ring_, mod_mul(std::get<1>(v_), std::get<1>(o.v_), ring_.modulus()));
    default:
      if (ring_.kind() == RingKind::SplitPair) return ring_.make_pair(first() * o.first(), second() * o.second());
      {
        const Scalar& c = ring_.ext_constant();
        const Scalar& a = first();
        const Scalar& b = second();
        const Scalar& a2 = o.first();
        const Scalar& b2 = o.second();
        return ring_.make_pair(a * a2 + c * b * b2, a * b2 + b * a2);
      }
  }
}

Scalar Scalar::inv() const {
  if (!is_unit()) throw Error(ErrorKind::NonInvertible, to_string() + " in " + ring_.to_string());
  switch (ring_.kind()) {
    case RingKind::Rationals:
    case RingKind::Integers: return Scalar(ring_, mpq_class(1 / std::get<0>(v_)));
    case RingKind::PrimeField:
      return Scalar(ring_, mod_pow(std::get<1>(v_), static_cast<std::uint64_t>(ring_.modulus() - 2), ring_.modulus()));
    case RingKind::SplitPair: return ring_.make_pair(first().inv(), second().inv());
    case RingKind::QuadraticExtension: {
      const Scalar& c = ring_.ext_constant();
      Scalar n_inv = (first() * first() - c * second() * second()).inv();
      return ring_.make_pair(first() * n_inv, -(second() * n_inv));
    }
  }
  return *this;
}

const mpq_class& Scalar::rational() const {
  if (v_.index() != 0) throw Error(ErrorKind::InvalidArgument, "scalar is not rational");
  return std::get<0>(v_);
}

std::int64_t Scalar::residue() const {
  if (v_.index() != 1) throw Error(ErrorKind::InvalidArgument, "scalar is not a residue");
  return std::get<1>(v_);
}

const Scalar& Scalar::first() const {
  if (v_.index() != 2) throw Error(ErrorKind::InvalidArgument, "scalar is not a pair");
  return (*std::get<2>(v_))[0];
}

const Scalar& Scalar::second() const {
  if (v_.index() != 2) throw Error(ErrorKind::InvalidArgument, "scalar is not a pair");
  return (*std::get<2>(v_))[1];
}

std::string Scalar::to_string() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_).get_str();
    case 1: return std::to_string(std::get<1>(v_));
    default: return "(" + first().to_string() + ", " + second().to_string() + ")";
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.ring_ != b.ring_) return false;
  switch (a.v_.index()) {
    case 0: return std::get<0>(a.v_) == std::get<0>(b.v_);
    case 1: return std::get<1>(a.v_) == std::get<1>(b.v_);
    default: return a.first() == b.first() && a.second() == b.second();
  }
}

Scalar pow(const Scalar& a, std::uint64_t e) {
  Scalar r = a.ring().one();
  Scalar b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

namespace {

std::optional<mpz_class> sqrt_z(const mpz_class& v) {
  if (v < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// Tonelli-Shanks.
std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p) {
  if (a == 0 || p == 2) return a;
  if (mod_pow(a, static_cast<std::uint64_t>((p - 1) / 2), p) != 1) return std::nullopt;
  std::int64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::int64_t z = 2;
  while (mod_pow(z, static_cast<std::uint64_t>((p - 1) / 2), p) != p - 1) ++z;
  std::int64_t m = s;
  std::int64_t c = mod_pow(z, static_cast<std::uint64_t>(q), p);
  std::int64_t t = mod_pow(a, static_cast<std::uint64_t>(q), p);
  std::int64_t r = mod_pow(a, static_cast<std::uint64_t>((q + 1) / 2), p);
  while (t != 1) {
    std::int64_t i = 0;
    std::int64_t t2 = t;
    while (t2 != 1) {
      t2 = mod_mul(t2, t2, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mod_mul(b, b, p);
    m = i;
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    r = mod_mul(r, b, p);
  }
  return std::min(r, p - r);
}

}  // namespace

std::optional<Scalar> exact_sqrt(const Scalar& a) {
  const Ring& R = a.ring();
  switch (R.kind()) {
    case RingKind::Rationals:
    case RingKind::Integers: {
      auto n = sqrt_z(a.rational().get_num());
      auto d = sqrt_z(a.rational().get_den());
      if (!n || !d) return std::nullopt;
      return R.from_rational(mpq_class(*n, *d));
    }
    case RingKind::PrimeField: {
      auto r = sqrt_mod(a.residue(), R.modulus());
      if (!r) return std::nullopt;
      return R.from_int(*r);
    }
    case RingKind::SplitPair: {
      auto x = exact_sqrt(a.first());
      auto y = exact_sqrt(a.second());
      if (!x || !y) return std::nullopt;
      return R.make_pair(*x, *y);
    }
    case RingKind::QuadraticExtension: {
      const Ring& B = R.base();
      if (!B.is_field() || !B.two_invertible()) {
        throw Error(ErrorKind::InvalidArgument, "square roots in " + R.to_string() + " are unsupported");
      }
      const Scalar& c = R.ext_constant();
      const Scalar& x0 = a.first();
      const Scalar& y0 = a.second();
      auto check = [&](const Scalar& x, const Scalar& y) -> std::optional<Scalar> {
        Scalar cand = R.make_pair(x, y);
        if (cand * cand == a) return cand;
        return std::nullopt;
      };
      // (x + y w)^2 = x0 + y0 w  =>  x^2 - c y^2 = +-sqrt(norm), x^2 + c y^2 = x0.
      auto s = exact_sqrt(x0 * x0 - c * y0 * y0);
      if (!s) return std::nullopt;
      Scalar half = B.from_int(2).inv();
      for (const Scalar& sign : {*s, -*s}) {
        Scalar t = (x0 + sign) * half;
        auto x = exact_sqrt(t);
        if (!x) continue;
        if (!x->is_zero()) {
          if (auto r = check(*x, y0 * (B.from_int(2) * *x).inv())) return r;
        } else if (!c.is_zero()) {
          if (auto y = exact_sqrt(x0 / c)) {
            if (auto r = check(B.zero(), *y)) return r;
          }
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool is_square(const Scalar& a) { return exact_sqrt(a).has_value(); }

}  // namespace quadalg
