#pragma once

#include <optional>

#include "cgb/grading.hpp"
#include "cgb/groebner.hpp"
#include "cgb/matrix.hpp"

namespace cgb {

// Monomial homomorphism phi(x_j) = z^(column j): column j of `matrix` is the
// target exponent of source variable j. Entries may be negative (Laurent
// target monomials).
struct MonomialMap {
  IntMat matrix;  // target_dim x source_dim
  RingPtr source;
  std::vector<std::string> target_names;

  int source_dim() const { return matrix.cols; }
  int target_dim() const { return matrix.rows; }
};

MonomialMap make_map(IntMat matrix, RingPtr source, std::vector<std::string> target_names = {});
std::vector<long long> apply_map(const MonomialMap& map, const Exponents& e);

// Kernel of the monomial homomorphism, as the reduced Groebner basis under
// `source_order`. Computed by block elimination on the graph ideal; negative
// target exponents are cleared through a single inverter variable.
GroebnerBasis toric_ideal(const MonomialMap& map, const TermOrderSpec& source_order);

// A rational functional strictly positive on every column, if one is found.
// Existence bounds every fiber.
std::optional<std::vector<mpq_class>> positive_functional(const IntMat& m);

// All a in N^s with V.a = target, sorted descending lexicographically.
// Refuses (unbounded_fiber) without a positivity certificate.
std::vector<Exponents> fiber(const Grading& grading, const std::vector<long long>& target);

struct SemigroupSpec {
  Grading grading;
  std::vector<std::vector<long long>> h_generators;
};

// Union of the generator fibers: a generating set of {a : V.a in H}.
// Supported when the distinct columns of the grading are linearly
// independent; the zero vector (the semigroup identity) is dropped.
std::vector<Exponents> semigroup_generators(const SemigroupSpec& spec);

// A rational functional with lambda.column = 1 for every column, if any.
std::optional<std::vector<mpq_class>> is_configuration(const MonomialMap& map);

struct ProductConfig {
  MonomialMap map;  // outer * inner
  std::vector<std::vector<int>> duplicate_classes;  // index groups of equal columns
};

ProductConfig matrix_product_config(const IntMat& outer, const MonomialMap& inner);

std::vector<std::vector<int>> duplicate_columns(const IntMat& m);

}  // namespace cgb
