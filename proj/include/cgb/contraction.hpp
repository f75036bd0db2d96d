#pragma once

#include <optional>

#include "cgb/monomial_ideal.hpp"
#include "cgb/toric.hpp"

namespace cgb {

// Contraction of a graded ideal along a monomial homomorphism
// phi : R -> S, phi(x_j) = y^(column j), with columns in N^s.
//   grading      multigrading on S (column i = degree of y_i)
//   h_generators degrees spanning the graded subring phi(R) = K[A_H]
//   ideal        the ideal of S to contract
//   weight       weight vector on S whose initial ideal is monomial
//   order        term order on R
struct ContractionProblem {
  MonomialMap map;
  Grading grading;
  std::vector<std::vector<long long>> h_generators;
  IdealPresentation ideal;
  WeightVec weight;
  TermOrderSpec order;
};

struct ContractionReport {
  GroebnerBasis groebner;   // reduced basis of the contraction in R
  MonomialIdeal initial;    // its initial ideal
  long delta = 0;           // max degree of a minimal initial generator
  bool squarefree = false;  // all minimal initial generators squarefree
  long delta_ideal = 0;     // same stats for the weight-initial ideal of the input
  bool squarefree_ideal = false;
  long delta_kernel = 0;    // and for the initial ideal of the map kernel
  bool squarefree_kernel = false;
  WeightVec pulled_back_weight;
  bool structured = false;  // true when produced by the lifting route
};

// weight . (column j) for every source variable.
WeightVec pullback_weight(const MonomialMap& map, const WeightVec& weight);

// phi^{-1}(I) as a reduced Groebner basis under source_order, by elimination.
GroebnerBasis contraction_elimination(const MonomialMap& map, const IdealPresentation& ideal,
                                      const TermOrderSpec& source_order);

// Lexicographically least c in N^r with map.c = u; not_in_semigroup if none.
Exponents preimage_monomial(const MonomialMap& map, const Exponents& u);

// Normal form, modulo the kernel basis, of a termwise preimage of q.
// Every monomial of q must lie in the image semigroup.
Poly lift_through(const Poly& q, const MonomialMap& map, const GroebnerBasis& kernel_basis);

// Minimal monomial generators of the contraction of a monomial ideal:
// the divisibility-minimal standard monomials (mod the kernel initial ideal)
// whose image lies in `ideal`. Their degree is bounded by delta(ideal).
MonomialIdeal monomial_contraction_basis(const MonomialMap& map, const MonomialIdeal& ideal,
                                         const TermOrderSpec& source_order);
MonomialIdeal monomial_contraction_basis_with(const MonomialMap& map, const MonomialIdeal& ideal,
                                              const GroebnerBasis& kernel_basis);

bool equigenerated(const MonomialIdeal& ideal);

// Exponents of the minimal module generators of the degree-shift module
// {a in N^s : v + grading.a in the semigroup generated by h_generators},
// sorted by total degree then descending lexicographically. With an explicit
// degree_bound the search refuses (bound_too_small) if a certified generator
// exceeds it.
std::vector<Exponents> gamma(const ContractionProblem& problem, const std::vector<long long>& v,
                             std::optional<int> degree_bound = std::nullopt);

// Lift a pseudo-basis of `ideal` (family whose weight-initial forms generate
// the weight-initial ideal) to one of the contraction: kernel basis plus the
// lifted shifts of each family member. With verify=true the result is checked
// against the elimination oracle.
std::vector<Poly> lift_family(const std::vector<Poly>& family, const ContractionProblem& problem,
                              bool verify = false);

// Structured contraction: checks the hypotheses (hypotheses_violated
// otherwise), computes the initial ideal of the contraction as
// kernel initial + monomial contraction of the weight-initial ideal,
// and completes the lifted family to a reduced basis that must agree.
ContractionReport contract_initial(const ContractionProblem& problem);

// Elimination-only contraction under order refined by the pulled-back weight.
// No structural hypotheses; initial-ideal statistics of the inputs are
// reported only when available.
ContractionReport contract_oracle(const ContractionProblem& problem);

}  // namespace cgb
