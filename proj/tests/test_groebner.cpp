#include <random>

#include "doctest.h"
#include "test_util.hpp"

#include "cgb/groebner.hpp"

using namespace cgb;
using cgbtest::ex;
using cgbtest::parse_all;

TEST_CASE("normal form basics") {
  RingPtr r = make_ring("x", 2);
  CompiledOrder lex = CompiledOrder::compile(TermOrderSpec::lex(2), 2);
  Poly f = parse_poly(r, "x1^2 + x2");
  std::vector<Poly> basis{f};
  CHECK(normal_form(f, basis, lex).is_zero());
  CHECK(normal_form(parse_poly(r, "x1^3 + x1*x2"), basis, lex).is_zero());
  Poly rem = normal_form(parse_poly(r, "x1^2"), basis, lex);
  CHECK(rem == parse_poly(r, "-x2"));
}

TEST_CASE("reduced basis of a cyclic system under lex") {
  RingPtr r = make_ring("x", 3);
  IdealPresentation ideal{
      r, parse_all(r, {"x1 + x2 + x3", "x1*x2 + x1*x3 + x2*x3", "x1*x2*x3 - 1"})};
  GroebnerBasis gb = buchberger(ideal, TermOrderSpec::lex(3));
  std::vector<Poly> want =
      parse_all(r, {"x3^3 - 1", "x2^2 + x2*x3 + x3^2", "x1 + x2 + x3"});
  REQUIRE(gb.elements.size() == 3);
  for (const Poly& w : want)
    CHECK(std::find(gb.elements.begin(), gb.elements.end(), w) != gb.elements.end());
  CHECK(gb.reduced);
}

TEST_CASE("reduced basis properties on random ideals") {
  std::mt19937 rng(201);
  RingPtr r = make_ring("x", 3);
  for (int k = 0; k < 30; ++k) {
    std::vector<Poly> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < count; ++t) gens.push_back(cgbtest::random_poly(rng, r, 2, 3));
    TermOrderSpec spec = cgbtest::random_order(rng, 3);
    CompiledOrder ord = CompiledOrder::compile(spec, 3);
    GroebnerBasis gb = buchberger({r, gens}, spec);

    for (const Poly& g : gb.elements) CHECK(g.leading_term(ord).coef == 1);
    for (size_t i = 0; i < gb.elements.size(); ++i)
      for (const Term& t : gb.elements[i].terms())
        for (size_t j = 0; j < gb.elements.size(); ++j)
          if (i != j) CHECK_FALSE(divides(gb.initial_exponents[j], t.exp));
    CHECK(passes_buchberger_criterion(gb.elements, ord));

    // Permutation invariance and idempotence of the reduced basis.
    std::vector<Poly> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(buchberger({r, shuffled}, spec).elements == gb.elements);
    CHECK(buchberger({r, gb.elements}, spec).elements == gb.elements);

    // Every generator reduces to zero against the basis.
    for (const Poly& g : gens) CHECK(normal_form(g, gb.elements, ord).is_zero());
  }
}

TEST_CASE("initial forms under a weight") {
  RingPtr r = make_ring("x", 2);
  Poly f = parse_poly(r, "x1^2 + x1*x2 + x2^3");
  CHECK(initial_form(f, {1, 1}) == parse_poly(r, "x2^3"));
  CHECK(initial_form(f, {2, 1}) == parse_poly(r, "x1^2"));
  CHECK(initial_form(f, {1, 0}) == parse_poly(r, "x1^2"));
  CHECK(initial_form(f, {0, 0}) == f);
}

TEST_CASE("weight recovered from an order represents its initial ideal") {
  std::mt19937 rng(202);
  RingPtr r = make_ring("x", 3);
  for (int k = 0; k < 30; ++k) {
    std::vector<Poly> gens;
    for (int t = 0; t < 2; ++t) gens.push_back(cgbtest::random_poly(rng, r, 2, 3));
    TermOrderSpec spec = cgbtest::random_order(rng, 3);
    GroebnerBasis gb = buchberger({r, gens}, spec);
    if (gb.elements.empty()) continue;
    WeightVec w = weight_from_order(gb);
    for (size_t i = 0; i < gb.elements.size(); ++i) {
      long long lead = weight_dot(w, gb.initial_exponents[i]);
      for (const Term& t : gb.elements[i].terms())
        if (t.exp != gb.initial_exponents[i]) CHECK(weight_dot(w, t.exp) < lead);
    }
    WeightInitial wi = initial_ideal_weight({r, gens}, w, spec);
    CHECK(wi.monomial);
  }
}

TEST_CASE("pseudo basis detection") {
  RingPtr r = make_ring("x", 3);
  // x2*x3 and x1*x3 - x2^2 under weight (2,2,2): initial forms generate the
  // full weight-initial ideal even though the pair is not a Groebner basis.
  IdealPresentation ideal{
      r, parse_all(r, {"x2*x3", "x1*x3 - x2^2", "x2^3"})};
  TermOrderSpec spec = TermOrderSpec::lex(3);
  spec.priority = {2, 1, 0};
  std::vector<Poly> family = parse_all(r, {"x2*x3", "x1*x3 - x2^2"});
  CHECK(is_pseudo_groebner(family, ideal, {2, 2, 2}, spec));
  CompiledOrder ord = CompiledOrder::compile(spec.refined_by({2, 2, 2}), 3);
  CHECK_FALSE(passes_buchberger_criterion(family, ord));

  std::vector<Poly> outside = parse_all(r, {"x1"});
  CHECK_THROWS_AS((void)is_pseudo_groebner(outside, ideal, {2, 2, 2}, spec), Error);
}

TEST_CASE("same ideal under different generators") {
  RingPtr r = make_ring("x", 2);
  IdealPresentation a{r, parse_all(r, {"x1^2 - x2", "x1*x2 - x1"})};
  GroebnerBasis gb = buchberger(a, TermOrderSpec::degrevlex(2));
  IdealPresentation b{r, gb.elements};
  CHECK(same_ideal(a, b, TermOrderSpec::lex(2)));
  IdealPresentation c{r, parse_all(r, {"x1"})};
  CHECK_FALSE(same_ideal(a, c, TermOrderSpec::lex(2)));
}

TEST_CASE("zero and trivial inputs") {
  RingPtr r = make_ring("x", 2);
  GroebnerBasis gb = buchberger({r, {}}, TermOrderSpec::lex(2));
  CHECK(gb.elements.empty());
  gb = buchberger({r, {Poly::zero(r)}}, TermOrderSpec::lex(2));
  CHECK(gb.elements.empty());
  gb = buchberger({r, parse_all(r, {"2", "x1"})}, TermOrderSpec::lex(2));
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == parse_poly(r, "1"));
}
