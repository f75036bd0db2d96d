#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "cgb/order.hpp"
#include "cgb/ring.hpp"

namespace cgb {

struct Term {
  Exponents exp;
  mpq_class coef;

  bool operator==(const Term& o) const { return exp == o.exp && coef == o.coef; }
};

// Polynomial with exact rational coefficients, immutable after construction.
// Terms are kept sorted descending under the fixed internal order (raw
// lexicographic on the exponent tuple), never under the active term order of
// a computation, so printing is deterministic and construction-order free.
class Poly {
 public:
  Poly() = default;

  static Poly zero(RingPtr ring);
  static Poly monomial(RingPtr ring, Exponents e, mpq_class c = 1);
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  int nvars() const { return ring_ ? ring_->nvars() : 0; }
  long degree() const;  // max total degree; -1 for the zero polynomial

  const Term& leading_term(const CompiledOrder& ord) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const mpq_class& c, const Exponents& shift) const;  // c * x^shift * this
  Poly monic(const CompiledOrder& ord) const;

  bool operator==(const Poly& o) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Poly& a, const Poly& b);

}  // namespace cgb
