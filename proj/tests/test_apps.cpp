#include "doctest.h"
#include "test_util.hpp"

#include "cgb/apps.hpp"
#include "cgb/jsonio.hpp"

using namespace cgb;
using cgbtest::ex;
using cgbtest::mat;

TEST_CASE("degree d exponents are complete and descending") {
  auto e22 = degree_d_exponents(2, 2);
  CHECK(e22 == std::vector<Exponents>{ex({2, 0}), ex({1, 1}), ex({0, 2})});
  auto e32 = degree_d_exponents(3, 2);
  CHECK(e32.size() == 6);
  for (const Exponents& e : e32) CHECK(total_degree(e) == 2);
  for (size_t i = 1; i < e32.size(); ++i) CHECK(lex_less(e32[i], e32[i - 1]));
  CHECK(e32.front() == ex({2, 0, 0}));
  CHECK(e32.back() == ex({0, 0, 2}));
}

TEST_CASE("quadratic veronese of the plane") {
  VeroneseResult v = veronese(2, 2);
  CHECK(v.map.matrix == mat({{2, 1, 0}, {0, 1, 2}}));
  REQUIRE(v.kernel.elements.size() == 1);
  MonomialIdeal init = MonomialIdeal::from_generators(v.kernel.initial_exponents);
  CHECK(init.squarefree());
  CHECK(init.delta() == 2);
}

TEST_CASE("veronese witnesses across small shapes") {
  for (int s = 2; s <= 3; ++s)
    for (int d = 2; d <= 3; ++d) {
      VeroneseResult v = veronese(s, d);
      MonomialIdeal init = MonomialIdeal::from_generators(v.kernel.initial_exponents);
      CHECK(init.squarefree());
      CHECK(init.delta() <= 2);
      for (const Poly& g : v.kernel.elements) {
        REQUIRE(g.terms().size() == 2);
        CHECK(apply_map(v.map, g.terms()[0].exp) == apply_map(v.map, g.terms()[1].exp));
      }
    }
}

TEST_CASE("block ring naming") {
  RingPtr r = block_ring({2, 3}, "y");
  CHECK(r->names ==
        std::vector<std::string>{"y1_1", "y1_2", "y2_1", "y2_2", "y2_3"});
  CHECK_THROWS_AS(block_ring({2, 0}, "y"), Error);
}

TEST_CASE("fiber product of two small graded ideals") {
  FiberProductInstance inst;
  inst.s_sizes = {2};
  inst.t_sizes = {2};
  RingPtr ry = block_ring(inst.s_sizes, "y");
  inst.gens_1 = {parse_poly(ry, "y1_1*y1_2")};
  inst.gens_2 = {};
  inst.w1 = {1, 0};
  inst.w2 = {0, 0};
  FiberProductResult r = fiber_product(inst);
  CHECK(r.kernel_verified);
  REQUIRE(r.kernel.elements.size() == 1);
  RingPtr rx = r.problem.map.source;
  CHECK(rx->names == std::vector<std::string>{"x1_1_1", "x1_1_2", "x1_2_1", "x1_2_2"});
  CHECK(r.kernel.elements[0] ==
        parse_poly(rx, "x1_1_2*x1_2_1 - x1_1_1*x1_2_2"));

  ContractionReport rep = contract_initial(r.problem);
  CHECK(rep.structured);
  CHECK(rep.delta <= std::max<long>(2, rep.delta_ideal));
  ContractionReport oracle = contract_oracle(r.problem);
  CHECK(rep.groebner.elements == oracle.groebner.elements);
}

TEST_CASE("fiber product without crossing minors") {
  FiberProductInstance inst;
  inst.s_sizes = {2, 1};
  inst.t_sizes = {1, 2};
  RingPtr ry = block_ring(inst.s_sizes, "y");
  RingPtr rz = block_ring(inst.t_sizes, "z");
  inst.gens_1 = {parse_poly(ry, "y1_1*y2_1 - y1_2*y2_1")};
  inst.gens_2 = {parse_poly(rz, "z2_1*z2_2")};
  inst.w1 = {2, 0, 1};
  inst.w2 = {0, 1, 0};
  FiberProductResult r = fiber_product(inst);
  CHECK(r.kernel.elements.empty());
  CHECK(r.kernel_verified);
  CHECK(r.problem.h_generators ==
        std::vector<std::vector<long long>>{{1, 0, 1, 0}, {0, 1, 0, 1}});
  ContractionReport rep = contract_initial(r.problem);
  ContractionReport oracle = contract_oracle(r.problem);
  CHECK(rep.groebner.elements == oracle.groebner.elements);
}

TEST_CASE("fiber product input validation") {
  FiberProductInstance inst;
  inst.s_sizes = {2};
  inst.t_sizes = {2};
  inst.w1 = {1};  // wrong length
  inst.w2 = {0, 0};
  CHECK_THROWS_WITH_AS(fiber_product(inst), doctest::Contains("dimension_mismatch"), Error);
  inst.w1 = {1, 0};
  RingPtr ry = block_ring(inst.s_sizes, "y");
  inst.gens_1 = {parse_poly(ry, "y1_1 + y1_2^2")};  // inhomogeneous
  CHECK_THROWS_AS(fiber_product(inst), Error);
}

TEST_CASE("nested configuration with singleton blocks") {
  NestedInstance inst;
  inst.a_config = mat({{1, 1}});
  inst.v_matrix = mat({{1}});
  inst.targets = {{3}};
  inst.blocks = {mat({{3}})};
  NestedResult r = nested_config(inst);
  CHECK(r.a_tilde.matrix == mat({{1, 1}}));
  CHECK(r.b_matrix == mat({{3}}));
  CHECK(r.product.map.matrix == mat({{3, 3}}));
  CHECK(r.product.duplicate_classes == std::vector<std::vector<int>>{{0, 1}});
  CHECK(r.grading.deg == mat({{1}}));
}

TEST_CASE("nested configuration expands pattern fibers") {
  NestedInstance inst;
  inst.a_config = mat({{1, 1}});
  inst.v_matrix = mat({{1, 1}});
  inst.targets = {{2}};
  inst.blocks = {mat({{1, 1}, {1, 1}})};
  NestedResult r = nested_config(inst);
  CHECK(r.a_tilde.matrix == mat({{1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK(r.product.map.matrix == mat({{1, 1, 1, 1}, {1, 1, 1, 1}}));
  CHECK(r.product.duplicate_classes == std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("nested configuration validation") {
  NestedInstance inst;
  inst.a_config = mat({{1, 1}});
  inst.v_matrix = mat({{1}});
  inst.targets = {{1}};
  inst.blocks = {mat({{2}})};
  CHECK_THROWS_WITH(nested_config(inst), doctest::Contains("misses its fiber target"));

  inst.blocks = {mat({{1}})};
  inst.a_config = mat({{1, 2}});
  CHECK_THROWS_WITH(nested_config(inst), doctest::Contains("unit functional"));

  NestedInstance dep;
  dep.a_config = mat({{1, 0}, {0, 1}});
  dep.v_matrix = mat({{1}});
  dep.targets = {{1}, {2}};
  dep.blocks = {mat({{1}}), mat({{2}})};
  CHECK_THROWS_WITH(nested_config(dep), doctest::Contains("linearly dependent"));
}

TEST_CASE("nested configuration matches the checked-in market instance") {
  NestedInstance inst = nested_instance_from_json(
      load_json_file(std::string(CONTRAGB_DATA_DIR) + "/flagship/nested_instance.json"));
  CHECK(inst.lambda() == std::vector<int>{2, 2, 3});
  NestedResult r = nested_config(inst);
  CHECK(r.a_tilde.matrix.rows == 7);
  CHECK(r.a_tilde.matrix.cols == 16);
  CHECK(r.product.map.matrix.rows == 4);
  CHECK(r.product.map.matrix.cols == 16);
  CHECK(r.grading.deg ==
        mat({{1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1}}));
  CHECK(r.product.duplicate_classes ==
        std::vector<std::vector<int>>{{1, 2}, {5, 7}, {6, 8}, {11, 13}, {12, 14}});
}

TEST_CASE("worked example report verifies every display") {
  FlagshipReport rep = flagship_example();
  REQUIRE(rep.checks.size() == 6);
  CHECK(rep.checks[0].name == "matrices");
  CHECK(rep.checks[5].name == "structured pull-back");
  CHECK(rep.sold_tally ==
        std::vector<long long>{429, 282, 361, 189, 368, 210, 161});
  CHECK(rep.ingredient_tally == std::vector<long long>{2447, 1003, 3267, 2286});
  CHECK(rep.duplicate_classes ==
        std::vector<std::vector<int>>{{1, 2}, {5, 7}, {6, 8}, {11, 13}, {12, 14}});
  CHECK(rep.pb_basis.elements.size() == 6);
  CHECK(rep.product_kernel.elements.size() == 33);
  CHECK(rep.witness.candidate_index == 0);
  CHECK(rep.contraction.structured);
  CHECK(rep.contraction.delta == 2);
  CHECK(rep.contraction.squarefree);

  Json j = flagship_report_to_json(rep);
  CHECK(j.at("checks").size() == 6);
  CHECK(j.at("duplicate_columns")[0] == Json::array({2, 3}));
}

TEST_CASE("json round trips") {
  IntMat m = mat({{1, 2}, {3, -4}});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  std::vector<long long> v{5, -6, 7};
  CHECK(vector_from_json(vector_to_json(v)) == v);

  RingPtr r = make_ring("x", 3);
  TermOrderSpec spec = TermOrderSpec::lex(3).refined_by({1, 2, 3});
  std::swap(spec.priority[0], spec.priority[2]);
  CHECK(order_from_json(order_to_json(spec, *r), *r) == spec);

  MonomialMap map = make_map(mat({{2, 1, 0}, {0, 1, 2}}), r, {"y1", "y2"});
  MonomialMap back = map_from_json(map_to_json(map));
  CHECK(back.matrix == map.matrix);
  CHECK(back.source->names == r->names);
  CHECK(back.target_names == map.target_names);

  ContractionProblem p = problem_from_json(
      load_json_file(std::string(CONTRAGB_DATA_DIR) + "/examples/lifting_demo.json"));
  ContractionProblem q = problem_from_json(problem_to_json(p));
  CHECK(q.map.matrix == p.map.matrix);
  CHECK(q.grading == p.grading);
  CHECK(q.h_generators == p.h_generators);
  CHECK(q.ideal.generators == p.ideal.generators);
  CHECK(q.weight == p.weight);
  CHECK(q.order == p.order);
}

TEST_CASE("checksummed fixtures refuse edits") {
  std::string dir = std::string(CONTRAGB_DATA_DIR) + "/flagship";
  CHECK_THROWS_WITH_AS(load_checked_text(dir, "absent.txt"),
                       doctest::Contains("fixture_checksum"), Error);
  CHECK_THROWS_WITH_AS(read_text_file(dir + "/absent.txt"), doctest::Contains("io_error"),
                       Error);
  Json manifest = load_json_file(dir + "/manifest.json");
  std::string text = read_text_file(dir + "/pb_basis.txt");
  CHECK(checksum_hex(text) == manifest.at("pb_basis.txt").get<std::string>());
}
