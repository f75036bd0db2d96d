#include <random>

#include "doctest.h"
#include "test_util.hpp"

#include "cgb/grading.hpp"
#include "cgb/monomial_ideal.hpp"
#include "cgb/parse.hpp"

using namespace cgb;
using cgbtest::ex;
using cgbtest::mat;

TEST_CASE("ring names and exponent helpers") {
  RingPtr r = make_ring("x", 3);
  CHECK(r->nvars() == 3);
  CHECK(r->names[1] == "x2");
  CHECK(r->index_of("x3") == 2);
  CHECK(r->index_of("y") == -1);

  CHECK(total_degree(ex({1, 2, 0})) == 3);
  CHECK(divides(ex({1, 0, 2}), ex({1, 1, 2})));
  CHECK_FALSE(divides(ex({2, 0, 0}), ex({1, 1, 2})));
  CHECK(exp_add(ex({1, 2, 0}), ex({0, 1, 1})) == ex({1, 3, 1}));
  CHECK(exp_sub(ex({1, 3, 1}), ex({0, 1, 1})) == ex({1, 2, 0}));
  CHECK(exp_lcm(ex({1, 0, 2}), ex({0, 3, 1})) == ex({1, 3, 2}));
  CHECK(exp_coprime(ex({1, 0, 2}), ex({0, 3, 0})));
  CHECK_FALSE(exp_coprime(ex({1, 0, 2}), ex({0, 3, 1})));
  CHECK(is_squarefree(ex({1, 0, 1})));
  CHECK_FALSE(is_squarefree(ex({1, 2, 0})));
}

TEST_CASE("lex and degrevlex knowns") {
  CompiledOrder lex = CompiledOrder::compile(TermOrderSpec::lex(2), 2);
  CHECK(lex.compare(ex({1, 0}), ex({0, 5})) == Cmp::Greater);
  CHECK(lex.compare(ex({1, 1}), ex({1, 2})) == Cmp::Less);

  CompiledOrder drl = CompiledOrder::compile(TermOrderSpec::degrevlex(3), 3);
  CHECK(drl.compare(ex({0, 0, 2}), ex({1, 0, 0})) == Cmp::Greater);  // degree first
  CHECK(drl.compare(ex({2, 0, 0}), ex({1, 1, 0})) == Cmp::Greater);
  CHECK(drl.compare(ex({1, 1, 0}), ex({0, 2, 0})) == Cmp::Greater);
  CHECK(drl.compare(ex({1, 0, 1}), ex({0, 2, 0})) == Cmp::Less);  // smaller in x3 wins
}

TEST_CASE("weight refinement dominates the base order") {
  TermOrderSpec spec = TermOrderSpec::lex(2).refined_by({1, 3});
  CompiledOrder ord = CompiledOrder::compile(spec, 2);
  CHECK(ord.compare(ex({0, 1}), ex({2, 0})) == Cmp::Greater);
  CHECK(ord.compare(ex({3, 0}), ex({0, 1})) == Cmp::Greater);  // equal weight, lex breaks
}

TEST_CASE("order spec validation") {
  TermOrderSpec bad = TermOrderSpec::lex(3);
  bad.priority = {0, 0, 2};
  CHECK_THROWS_AS(CompiledOrder::compile(bad, 3), Error);
  TermOrderSpec neg = TermOrderSpec::lex(2).refined_by({1, -1});
  CHECK_THROWS_AS(CompiledOrder::compile(neg, 2), Error);
}

TEST_CASE("elimination order separates the blocks") {
  // Variables 0,1 eliminated; any monomial touching them beats any kept one.
  CompiledOrder ord = CompiledOrder::elimination(4, {0, 1}, TermOrderSpec::lex(2), {2, 3});
  CHECK(ord.compare(ex({1, 0, 0, 0}), ex({0, 0, 9, 9})) == Cmp::Greater);
  CHECK(ord.compare(ex({0, 0, 1, 0}), ex({0, 0, 0, 3})) == Cmp::Greater);
}

TEST_CASE("polynomial arithmetic identities on random inputs") {
  std::mt19937 rng(101);
  RingPtr r = make_ring("x", 3);
  for (int k = 0; k < 50; ++k) {
    Poly f = cgbtest::random_poly(rng, r, 3, 4);
    Poly g = cgbtest::random_poly(rng, r, 3, 4);
    Poly h = cgbtest::random_poly(rng, r, 2, 3);
    CHECK((f + g) - g == f);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == Poly::zero(r));
  }
}

TEST_CASE("monic and leading term") {
  RingPtr r = make_ring("x", 2);
  CompiledOrder lex = CompiledOrder::compile(TermOrderSpec::lex(2), 2);
  Poly f = parse_poly(r, "3*x1^2 - 6*x2");
  CHECK(f.leading_term(lex).exp == ex({2, 0}));
  Poly m = f.monic(lex);
  CHECK(m == parse_poly(r, "x1^2 - 2*x2"));
}

TEST_CASE("parse and print round-trip") {
  std::mt19937 rng(102);
  RingPtr r = make_ring("x", 3);
  for (int k = 0; k < 100; ++k) {
    Poly f = cgbtest::random_poly(rng, r, 4, 5);
    CHECK(parse_poly(r, to_string(f)) == f);
  }
  CHECK(parse_poly(r, "0") == Poly::zero(r));
  CHECK(parse_poly(r, to_string(Poly::zero(r))) == Poly::zero(r));
  Poly q = parse_poly(r, "x1^2*x3 - 2/3*x2");
  CHECK(q.terms().size() == 2);
  CHECK(parse_poly(r, to_string(q)) == q);
  CHECK_THROWS_AS(parse_poly(r, "x9 + 1"), Error);
}

TEST_CASE("matrix products and exact linear algebra") {
  IntMat a = mat({{1, 2}, {0, 1}});
  IntMat b = mat({{1, 0, 1}, {2, 1, 0}});
  IntMat ab = mat_mul(a, b);
  CHECK(ab == mat({{5, 2, 1}, {2, 1, 0}}));
  CHECK(mat_apply(b, {1, 1, 1}) == std::vector<long long>{2, 3});

  CHECK(rank_exact(to_rational_rows(mat({{1, 2}, {2, 4}}))) == 1);
  CHECK(rank_exact(to_rational_rows(mat({{1, 2}, {0, 1}}))) == 2);

  auto sol = solve_exact(to_rational_rows(mat({{2, 0}, {0, 4}})),
                         {mpq_class(1), mpq_class(2)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == mpq_class(1, 2));
  CHECK((*sol)[1] == mpq_class(1, 2));
  CHECK_FALSE(solve_exact(to_rational_rows(mat({{1, 1}, {1, 1}})),
                          {mpq_class(0), mpq_class(1)})
                  .has_value());
}

TEST_CASE("solve_exact on random consistent systems") {
  std::mt19937 rng(103);
  for (int k = 0; k < 60; ++k) {
    int n = 2 + static_cast<int>(rng() % 3);
    IntMat m = cgbtest::random_map_matrix(rng, n, n, 3);
    std::vector<long long> x(static_cast<size_t>(n));
    for (auto& v : x) v = static_cast<long long>(rng() % 5);
    auto rhs_ll = mat_apply(m, x);
    std::vector<mpq_class> rhs;
    for (long long v : rhs_ll) rhs.push_back(to_rational(v));
    auto sol = solve_exact(to_rational_rows(m), rhs);
    REQUIRE(sol.has_value());
    for (int i = 0; i < n; ++i) {
      mpq_class acc = 0;
      for (int j = 0; j < n; ++j) acc += to_rational(m.at(i, j)) * (*sol)[static_cast<size_t>(j)];
      CHECK(acc == rhs[static_cast<size_t>(i)]);
    }
  }
}

TEST_CASE("monomial ideal minimal generators") {
  MonomialIdeal i = MonomialIdeal::from_generators({ex({2, 0}), ex({2, 1}), ex({0, 3})});
  CHECK(i.generators().size() == 2);  // x1^2*x2 is redundant
  CHECK(i.contains(ex({2, 5})));
  CHECK(i.contains(ex({1, 3})));
  CHECK_FALSE(i.contains(ex({1, 2})));
  CHECK(i.delta() == 3);
  CHECK_FALSE(i.squarefree());
  CHECK(MonomialIdeal::from_generators({ex({1, 0}), ex({0, 1})}).squarefree());
  CHECK(MonomialIdeal().is_zero());
  CHECK_FALSE(MonomialIdeal().contains(ex({0, 0})));
}

TEST_CASE("minimal antichain against brute membership") {
  std::mt19937 rng(104);
  for (int k = 0; k < 40; ++k) {
    std::vector<Exponents> gens;
    for (int t = 0; t < 6; ++t) gens.push_back(cgbtest::random_exps(rng, 3, 3));
    auto minimal = minimal_antichain(gens);
    for (size_t a = 0; a < minimal.size(); ++a)
      for (size_t b = 0; b < minimal.size(); ++b)
        if (a != b) CHECK_FALSE(divides(minimal[a], minimal[b]));
    MonomialIdeal ideal = MonomialIdeal::from_generators(gens);
    for (const Exponents& g : gens) CHECK(ideal.contains(g));
  }
}

TEST_CASE("grading and homogeneity") {
  Grading g{mat({{1, 1, 2}})};
  CHECK(multidegree(g, ex({1, 1, 0})) == std::vector<long long>{2});
  RingPtr r = make_ring("y", 3);
  CHECK(homogeneous_degree(g, parse_poly(r, "y1*y2 - y3")) == std::vector<long long>{2});
  CHECK_FALSE(homogeneous_degree(g, parse_poly(r, "y1 + y3")).has_value());
  CHECK_FALSE(homogeneous_degree(g, Poly::zero(r)).has_value());
}
