#pragma once

#include <optional>

#include "cgb/matrix.hpp"
#include "cgb/poly.hpp"

namespace cgb {

// Z^d-grading of a ring: column i of `deg` is the multidegree of variable i.
struct Grading {
  IntMat deg;

  int dim() const { return deg.rows; }
  int nvars() const { return deg.cols; }
  bool operator==(const Grading&) const = default;
};

std::vector<long long> multidegree(const Grading& g, const Exponents& e);

// The common multidegree of all terms, or nullopt when the polynomial is zero
// or its terms have different multidegrees.
std::optional<std::vector<long long>> homogeneous_degree(const Grading& g, const Poly& p);

}  // namespace cgb
