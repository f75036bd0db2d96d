#pragma once

#include <span>

#include "cgb/monomial_ideal.hpp"
#include "cgb/poly.hpp"

namespace cgb {

struct IdealPresentation {
  RingPtr ring;
  std::vector<Poly> generators;
};

struct GroebnerBasis {
  RingPtr ring;
  TermOrderSpec order;
  std::vector<Poly> elements;                // monic, ascending by initial term
  std::vector<Exponents> initial_exponents;  // aligned with elements
  bool reduced = false;
};

Poly normal_form(const Poly& f, std::span<const Poly> basis, const CompiledOrder& ord);
Poly s_polynomial(const Poly& f, const Poly& g, const CompiledOrder& ord);

// Reduced Groebner basis of the ideal generated by `gens`: monic elements,
// no term of any element divisible by another element's initial term, sorted
// ascending by initial term. The reduced basis is unique, so permuting the
// input changes nothing.
std::vector<Poly> buchberger_core(std::vector<Poly> gens, const CompiledOrder& ord);
GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrderSpec& order);

// Honest certification (no pair skipping): every S-polynomial reduces to 0.
bool passes_buchberger_criterion(std::span<const Poly> basis, const CompiledOrder& ord);

MonomialIdeal initial_ideal(const IdealPresentation& ideal, const TermOrderSpec& order);

// Sum of the terms of maximal w-weight.
Poly initial_form(const Poly& f, const WeightVec& w);

// Generators {in_w(g) : g in the reduced basis under the w-refined order};
// `monomial` reports whether every generator is a single term.
struct WeightInitial {
  std::vector<Poly> generators;
  bool monomial = false;
};
WeightInitial initial_ideal_weight(const IdealPresentation& ideal, const WeightVec& w,
                                   const TermOrderSpec& tiebreak);

// A nonnegative integer weight vector w with w.(initial exponent - other
// exponent) > 0 for every element of the reduced basis, so the weight alone
// picks out every initial term.
WeightVec weight_from_order(const GroebnerBasis& gb);

// Whether the w-initial forms of f_set generate the full w-initial ideal of
// `ideal`. Throws not_in_ideal if some member of f_set is outside the ideal.
bool is_pseudo_groebner(std::span<const Poly> f_set, const IdealPresentation& ideal,
                        const WeightVec& w, const TermOrderSpec& tiebreak);

// Reduced bases are unique, so ideal equality is basis equality.
bool same_ideal(const IdealPresentation& a, const IdealPresentation& b,
                const TermOrderSpec& order);

}  // namespace cgb
