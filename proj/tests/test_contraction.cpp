#include <random>

#include "doctest.h"
#include "test_util.hpp"

#include "cgb/jsonio.hpp"

using namespace cgb;
using cgbtest::ex;
using cgbtest::mat;

namespace {

RingPtr target_ring(const MonomialMap& map) { return make_ring(map.target_names); }

Poly apply_map_poly(const MonomialMap& map, const Poly& p, const RingPtr& target) {
  Poly out = Poly::zero(target);
  for (const Term& t : p.terms()) {
    auto img = apply_map(map, t.exp);
    Exponents e(img.begin(), img.end());
    out = out + Poly::monomial(target, e, t.coef);
  }
  return out;
}

std::string examples_dir() { return std::string(CONTRAGB_DATA_DIR) + "/examples"; }

}  // namespace

TEST_CASE("pullback weight is columnwise") {
  MonomialMap map = make_map(mat({{1, 1}, {0, 1}}), make_ring("x", 2));
  CHECK(pullback_weight(map, {2, 1}) == WeightVec{2, 3});
}

TEST_CASE("contraction of the zero ideal is the kernel") {
  std::mt19937 rng(401);
  for (int k = 0; k < 20; ++k) {
    MonomialMap map =
        make_map(cgbtest::random_map_matrix(rng, 2, 3, 2), make_ring("x", 3));
    TermOrderSpec spec = cgbtest::random_order(rng, 3, false);
    GroebnerBasis a = contraction_elimination(map, {target_ring(map), {}}, spec);
    GroebnerBasis b = toric_ideal(map, spec);
    CHECK(a.elements == b.elements);
  }
}

TEST_CASE("preimage monomial is the least solution") {
  MonomialMap map = make_map(mat({{2, 1, 0}, {0, 1, 2}}), make_ring("x", 3));
  CHECK(preimage_monomial(map, ex({2, 2})) == ex({0, 2, 0}));
  CHECK(preimage_monomial(map, ex({1, 3})) == ex({0, 1, 1}));
  CHECK_THROWS_WITH_AS(preimage_monomial(map, ex({1, 0})),
                       doctest::Contains("not_in_semigroup"), Error);
}

TEST_CASE("lift through the map reproduces the image") {
  std::mt19937 rng(402);
  RingPtr target = make_ring("y", 2);
  MonomialMap map = make_map(mat({{2, 1, 0}, {0, 1, 2}}), make_ring("x", 3),
                             target->names);
  GroebnerBasis kernel = toric_ideal(map, TermOrderSpec::degrevlex(3));
  CompiledOrder ord = CompiledOrder::compile(kernel.order, 3);
  for (int k = 0; k < 40; ++k) {
    // Images of random source polynomials are guaranteed liftable.
    Poly p = cgbtest::random_poly(rng, map.source, 2, 3);
    Poly q = apply_map_poly(map, p, target);
    Poly lifted = lift_through(q, map, kernel);
    CHECK(apply_map_poly(map, lifted, target) == q);
    CHECK(normal_form(lifted, kernel.elements, ord) == lifted);
  }
}

TEST_CASE("monomial contraction agrees with the elimination oracle") {
  std::mt19937 rng(403);
  for (int k = 0; k < 20; ++k) {
    MonomialMap map =
        make_map(cgbtest::random_map_matrix(rng, 2, 3, 2), make_ring("x", 3));
    TermOrderSpec spec = cgbtest::random_order(rng, 3, false);
    MonomialIdeal j = cgbtest::random_monomial_ideal(rng, 2, 3, 2);
    MonomialIdeal m = monomial_contraction_basis(map, j, spec);
    for (const Exponents& g : m.generators()) {
      auto img = apply_map(map, g);
      CHECK(j.contains(Exponents(img.begin(), img.end())));
    }
    GroebnerBasis kernel = toric_ideal(map, spec);
    std::vector<Poly> gens = kernel.elements;
    for (const Exponents& g : m.generators()) gens.push_back(Poly::monomial(map.source, g));
    RingPtr target = target_ring(map);
    std::vector<Poly> jgens;
    for (const Exponents& g : j.generators()) jgens.push_back(Poly::monomial(target, g));
    GroebnerBasis combined = buchberger({map.source, gens}, spec);
    GroebnerBasis oracle = contraction_elimination(map, {target, jgens}, spec);
    CHECK(combined.elements == oracle.elements);
  }
}

TEST_CASE("equigenerated detection") {
  CHECK(equigenerated(MonomialIdeal::from_generators({ex({1, 1}), ex({2, 0})})));
  CHECK_FALSE(equigenerated(MonomialIdeal::from_generators({ex({1, 0}), ex({0, 2})})));
  CHECK(equigenerated(MonomialIdeal{}));
}

TEST_CASE("degree shift module generators") {
  ContractionProblem p =
      problem_from_json(load_json_file(examples_dir() + "/lifting_demo.json"));
  CHECK(gamma(p, {4}) == std::vector<Exponents>{ex({0, 0})});
  CHECK(gamma(p, {3}) == std::vector<Exponents>{ex({1, 0}), ex({0, 1})});
  CHECK_THROWS_WITH_AS(gamma(p, {3}, 0), doctest::Contains("bound_too_small"), Error);
}

TEST_CASE("lifted family for a monomial ideal upstairs") {
  ContractionProblem p =
      problem_from_json(load_json_file(examples_dir() + "/lifting_demo.json"));
  RingPtr target = target_ring(p.map);
  std::vector<Poly> family{parse_poly(target, "y1*y2^3")};
  std::vector<Poly> lifted = lift_family(family, p, true);
  REQUIRE(lifted.size() == 2);
  CHECK(lifted[0] == parse_poly(p.map.source, "x1*x3 - x2^2"));
  CHECK(lifted[1] == parse_poly(p.map.source, "x2*x3"));

  // The lifted family is pseudo-Groebner but not Groebner: the third reduced
  // basis element x2^3 appears only after completion.
  WeightVec wp = pullback_weight(p.map, p.weight);
  GroebnerBasis oracle = contract_oracle(p).groebner;
  CHECK(is_pseudo_groebner(lifted, {p.map.source, oracle.elements}, wp, p.order));
  CompiledOrder refined = CompiledOrder::compile(p.order.refined_by(wp), 3);
  CHECK_FALSE(passes_buchberger_criterion(lifted, refined));
  REQUIRE(oracle.elements.size() == 3);
}

TEST_CASE("structured contraction on the lifting example") {
  ContractionProblem p =
      problem_from_json(load_json_file(examples_dir() + "/lifting_demo.json"));
  ContractionReport r = contract_initial(p);
  CHECK(r.structured);
  CHECK(r.pulled_back_weight == WeightVec{2, 2, 2});
  std::vector<Poly> want{parse_poly(p.map.source, "x1*x3 - x2^2"),
                         parse_poly(p.map.source, "x2*x3"),
                         parse_poly(p.map.source, "x2^3")};
  CompiledOrder refined = CompiledOrder::compile(p.order.refined_by(r.pulled_back_weight), 3);
  std::sort(want.begin(), want.end(), [&](const Poly& a, const Poly& b) {
    return refined.less(a.leading_term(refined).exp, b.leading_term(refined).exp);
  });
  CHECK(r.groebner.elements == want);
  CHECK(r.delta == 3);
  CHECK_FALSE(r.squarefree);
  CHECK(r.delta_ideal == 4);
  CHECK(r.delta_kernel == 2);
  CHECK(r.squarefree_kernel);
  ContractionReport o = contract_oracle(p);
  CHECK(o.groebner.elements == r.groebner.elements);
  CHECK(o.initial == r.initial);
}

TEST_CASE("pull-back gap example refuses the structured route") {
  ContractionProblem p =
      problem_from_json(load_json_file(examples_dir() + "/pullback_gap.json"));
  CHECK_THROWS_WITH_AS(contract_initial(p), doctest::Contains("hypotheses_violated"), Error);

  ContractionReport o = contract_oracle(p);
  REQUIRE(o.groebner.elements.size() == 1);
  CHECK(o.groebner.elements[0] == parse_poly(p.map.source, "x1^2 + x2"));
  CHECK(o.initial == MonomialIdeal::from_generators({ex({2, 0})}));

  // The monomial contraction of the weight initial ideal is strictly larger
  // than the initial ideal of the contraction: the pull-back genuinely fails.
  MonomialIdeal up = monomial_contraction_basis(
      p.map, MonomialIdeal::from_generators({ex({1, 0})}), TermOrderSpec::lex(2));
  CHECK(up == MonomialIdeal::from_generators({ex({1, 0}), ex({0, 1})}));
}

TEST_CASE("structured and oracle contraction agree on random instances") {
  std::mt19937 rng(404);
  int done = 0;
  while (done < 12) {
    cgbtest::StructuredDraw draw = cgbtest::random_structured(rng, true, false);
    ContractionReport s;
    try {
      s = contract_initial(draw.problem);
    } catch (const Error& e) {
      REQUIRE(e.name() == "hypotheses_violated");
      continue;
    }
    ContractionReport o = contract_oracle(draw.problem);
    CHECK(s.groebner.elements == o.groebner.elements);
    CHECK(s.initial == o.initial);
    CHECK(s.delta <= std::max(s.delta_ideal, s.delta_kernel));
    ++done;
  }
}
