#include "quadalg/poly.hpp"

#include <algorithm>

namespace quadalg {

Monomial Monomial::variable(std::uint16_t var) {
  Monomial m;
  m.idx_[0] = var;
  m.deg_ = 1;
  return m;
}

unsigned Monomial::exponent(std::uint16_t var) const {
  auto v = vars();
  return static_cast<unsigned>(std::count(v.begin(), v.end(), var));
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (deg_ + o.deg_ > kMaxMonomialDegree) {
    throw Error(ErrorKind::InvalidArgument, "monomial degree exceeds " + std::to_string(kMaxMonomialDegree));
  }
  Monomial r;
  std::merge(idx_.begin(), idx_.begin() + deg_, o.idx_.begin(), o.idx_.begin() + o.deg_, r.idx_.begin());
  r.deg_ = static_cast<std::uint8_t>(deg_ + o.deg_);
  return r;
}

PolyContextPtr PolyContext::make(Ring ring, std::vector<std::string> names) {
  if (names.size() >= 0xFFFF) throw Error(ErrorKind::InvalidArgument, "too many polynomial variables");
  return std::make_shared<const PolyContext>(PolyContext{std::move(ring), std::move(names)});
}

MultiPoly MultiPoly::constant(PolyContextPtr ctx, const Scalar& c) {
  MultiPoly p(std::move(ctx));
  if (c.ring() != p.ring()) throw Error(ErrorKind::RingMismatch, "constant outside coefficient ring");
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

MultiPoly MultiPoly::variable(PolyContextPtr ctx, std::uint16_t var) {
  if (var >= ctx->names.size()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  MultiPoly p(std::move(ctx));
  p.terms_.push_back({Monomial::variable(var), p.ring().one()});
  return p;
}

MultiPoly MultiPoly::from_terms(PolyContextPtr ctx, std::vector<Term> terms) {
  MultiPoly p(std::move(ctx));
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (auto& t : terms) {
    if (t.coeff.ring() != p.ring()) throw Error(ErrorKind::RingMismatch, "coefficient outside ring");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void MultiPoly::require_compatible(const MultiPoly& o) const {
  if (ctx_ == o.ctx_) return;
  if (ctx_->ring != o.ctx_->ring || ctx_->names != o.ctx_->names) {
    throw Error(ErrorKind::RingMismatch, "polynomials over different rings or variable sets");
  }
}

unsigned MultiPoly::degree_in(std::uint16_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_compatible(o);
  if (terms_.empty()) return o;
  if (o.terms_.empty()) return *this;
  MultiPoly r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->mono < b->mono) {
      r.terms_.push_back(*a++);
    } else if (b->mono < a->mono) {
      r.terms_.push_back(*b++);
    } else {
      Scalar c = a->coeff + b->coeff;
      if (!c.is_zero()) r.terms_.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  if (c.ring() != ring()) throw Error(ErrorKind::RingMismatch, "scaling by a foreign scalar");
  MultiPoly r(ctx_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar v = t.coeff * c;
    if (!v.is_zero()) r.terms_.push_back({t.mono, std::move(v)});
  }
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_compatible(o);
  MultiPoly r(ctx_);
  if (terms_.empty() || o.terms_.empty()) return r;
  if (o.terms_.size() == 1) {
    // A monomial order is multiplicative, so the order survives.
    const Term& m = o.terms_.front();
    for (const auto& t : terms_) {
      Scalar v = t.coeff * m.coeff;
      if (!v.is_zero()) r.terms_.push_back({t.mono * m.mono, std::move(v)});
    }
    return r;
  }
  if (terms_.size() == 1) return o * *this;
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prods.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(ctx_, std::move(prods));
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ctx_->names.size()) throw Error(ErrorKind::InvalidArgument, "evaluation point has wrong length");
  Scalar acc = ring().zero();
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (auto var : t.mono.vars()) v *= point[var];
    acc += v;
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out += " + ";
    first = false;
    bool unit_coeff = t.coeff.is_one() && t.mono.degree() > 0;
    if (!unit_coeff) out += t.coeff.to_string();
    auto vars = t.mono.vars();
    for (std::size_t i = 0; i < vars.size();) {
      std::size_t j = i;
      while (j < vars.size() && vars[j] == vars[i]) ++j;
      if (!unit_coeff || i > 0) out += "*";
      out += ctx_->names[vars[i]];
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.ctx_ != b.ctx_ && (a.ring() != b.ring() || a.ctx_->names != b.ctx_->names)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

}  // namespace quadalg
