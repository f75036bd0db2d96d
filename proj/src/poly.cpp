#include "cgb/poly.hpp"

#include <algorithm>
#include <map>

namespace cgb {

namespace {

struct DescLex {
  bool operator()(const Exponents& a, const Exponents& b) const { return lex_less(b, a); }
};

void check_ring(const RingPtr& ring) {
  if (!ring) fail("invalid_argument", "polynomial without a ring");
}

}  // namespace

Poly Poly::zero(RingPtr ring) {
  check_ring(ring);
  Poly p;
  p.ring_ = std::move(ring);
  return p;
}

Poly Poly::monomial(RingPtr ring, Exponents e, mpq_class c) {
  check_ring(ring);
  if (static_cast<int>(e.size()) != ring->nvars())
    fail("dimension_mismatch", "monomial exponent length differs from ring size");
  Poly p;
  p.ring_ = std::move(ring);
  if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  check_ring(ring);
  std::map<Exponents, mpq_class, DescLex> acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.exp.size()) != ring->nvars())
      fail("dimension_mismatch", "term exponent length differs from ring size");
    acc[std::move(t.exp)] += t.coef;
  }
  Poly p;
  p.ring_ = std::move(ring);
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.push_back({e, c});
  return p;
}

long Poly::degree() const {
  long d = -1;
  for (const Term& t : terms_) d = std::max(d, total_degree(t.exp));
  return d;
}

const Term& Poly::leading_term(const CompiledOrder& ord) const {
  if (terms_.empty()) fail("invalid_argument", "leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.compare(terms_[i].exp, best->exp) == Cmp::Greater) best = &terms_[i];
  return *best;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Term& t : out.terms_) t.coef = -t.coef;
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(*this, o);
  Poly out;
  out.ring_ = ring_;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].exp == o.terms_[j].exp) {
      mpq_class c = terms_[i].coef + o.terms_[j].coef;
      if (c != 0) out.terms_.push_back({terms_[i].exp, std::move(c)});
      ++i, ++j;
    } else if (lex_less(o.terms_[j].exp, terms_[i].exp)) {
      out.terms_.push_back(terms_[i++]);
    } else {
      out.terms_.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(*this, o);
  std::map<Exponents, mpq_class, DescLex> acc;
  for (const Term& s : terms_)
    for (const Term& t : o.terms_) acc[exp_add(s.exp, t.exp)] += s.coef * t.coef;
  Poly out;
  out.ring_ = ring_;
  for (auto& [e, c] : acc)
    if (c != 0) out.terms_.push_back({e, c});
  return out;
}

Poly Poly::scaled(const mpq_class& c, const Exponents& shift) const {
  if (c == 0) return Poly::zero(ring_);
  Poly out;
  out.ring_ = ring_;
  out.terms_.reserve(terms_.size());
  // Translation by a fixed shift preserves the internal lexicographic order.
  for (const Term& t : terms_) out.terms_.push_back({exp_add(t.exp, shift), t.coef * c});
  return out;
}

Poly Poly::monic(const CompiledOrder& ord) const {
  if (terms_.empty()) return *this;
  const mpq_class& lc = leading_term(ord).coef;
  if (lc == 1) return *this;
  return scaled(mpq_class(1) / lc, Exponents(nvars(), 0));
}

bool Poly::operator==(const Poly& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty() && !ring_ == !o.ring_;
  return *ring_ == *o.ring_ && terms_ == o.terms_;
}

void require_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring() || !b.ring() || !(a.ring() == b.ring() || *a.ring() == *b.ring()))
    fail("ring_mismatch", "operands live in different rings");
}

}  // namespace cgb
