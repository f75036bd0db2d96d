#pragma once

#include <optional>
#include <string>

#include "cgb/contraction.hpp"

namespace cgb {

// All exponent vectors in N^s of total degree d, descending lexicographic.
std::vector<Exponents> degree_d_exponents(int s, int d);

// Lexicographic witness search: candidate variable priorities (declaration
// order, its reverse, block-crossing arrangements, fixed-seed shuffles) are
// tried until the kernel of the map has a squarefree initial ideal generated
// in degree at most max_degree. The first hit by candidate index wins, so the
// result is deterministic.
struct LexWitness {
  TermOrderSpec order;
  GroebnerBasis kernel;
  int candidate_index = 0;
};
std::optional<LexWitness> search_lex_witness(const MonomialMap& map, int max_degree, int budget);

// Degree-d power products of s variables, with a verified lexicographic
// order whose kernel initial ideal is squarefree quadratic.
struct VeroneseResult {
  MonomialMap map;
  TermOrderSpec order;
  GroebnerBasis kernel;
};
VeroneseResult veronese(int s, int d);  // no_order_found if the search fails

// Ring K[stem{i}_{j} | i in [d], j in [sizes_i]] with block i contiguous.
RingPtr block_ring(const std::vector<int>& sizes, const std::string& stem);

// Two multigraded ideals over disjoint block rings, glued along the blocks:
// generators of gens_1 live in block_ring(s_sizes, "y"), generators of
// gens_2 in block_ring(t_sizes, "z"), and both must be homogeneous for the
// blockwise grading deg(v{i}_{j}) = e_i.
struct FiberProductInstance {
  std::vector<int> s_sizes;
  std::vector<int> t_sizes;
  std::vector<Poly> gens_1;
  std::vector<Poly> gens_2;
  WeightVec w1;
  WeightVec w2;
};

// Contraction presentation of gens_1 + gens_2 along x{i}_{j}_{k} ->
// y{i}_{j} * z{i}_{k}, with the crossing lexicographic order (larger block
// wins, then larger j, then smaller k) and the closed-form kernel basis of
// crossing minors x{i}_{j1}_{k2} x{i}_{j2}_{k1} - x{i}_{j1}_{k1} x{i}_{j2}_{k2}.
// The closed form is cross-checked against the elimination kernel at desk
// scale (kernel_verified reports whether that ran).
struct FiberProductResult {
  ContractionProblem problem;
  GroebnerBasis kernel;
  bool kernel_verified = false;
};
FiberProductResult fiber_product(const FiberProductInstance& inst);

// Degree patterns A over d blocks, block columns B_i in Z^mu constrained to
// the affine fibers V.b = target_i with linearly independent targets.
struct NestedInstance {
  IntMat a_config;                               // d x m degree patterns
  IntMat v_matrix;                               // nu x mu property matrix
  std::vector<std::vector<long long>> targets;   // one per block, in Z^nu
  std::vector<IntMat> blocks;                    // B_i: mu x lambda_i

  int block_count() const { return static_cast<int>(blocks.size()); }
  std::vector<int> lambda() const;
};

// a_tilde: x variables -> exponents on the block variables y, columns the
// fibers of the A degree patterns in pattern order, descending lexicographic
// within each fiber. product: the composite map with matrix B * a_tilde
// (duplicate columns preserved, classes reported).
struct NestedResult {
  MonomialMap a_tilde;
  ProductConfig product;
  IntMat b_matrix;   // blocks concatenated
  Grading grading;   // deg y{i}_{j} = e_i
};
NestedResult nested_config(const NestedInstance& inst);

// Worked-example report: recomputes the checked-in market instance from its
// fixture files and verifies every displayed value (tallies, bases, the
// structured pull-back) against them. Any disagreement raises
// fixture_mismatch naming the differing element.
struct FlagshipCheck {
  std::string name;
  std::string detail;
};
struct FlagshipReport {
  std::string data_dir;
  std::vector<FlagshipCheck> checks;
  std::vector<long long> sold_tally;
  std::vector<long long> ingredient_tally;
  std::vector<std::vector<int>> duplicate_classes;
  GroebnerBasis pb_basis;        // kernel of the product matrix, lex
  GroebnerBasis product_kernel;  // kernel of the composite matrix
  LexWitness witness;            // for the fiber-union kernel
  ContractionReport contraction;
};
FlagshipReport flagship_example();
FlagshipReport flagship_example(const std::string& data_dir);

}  // namespace cgb
