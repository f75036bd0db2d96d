#include "cgb/grading.hpp"

namespace cgb {

std::vector<long long> multidegree(const Grading& g, const Exponents& e) {
  if (static_cast<int>(e.size()) != g.deg.cols)
    fail("dimension_mismatch", "exponent length differs from grading arity");
  std::vector<long long> out(g.deg.rows, 0);
  for (int j = 0; j < g.deg.cols; ++j) {
    if (e[j] == 0) continue;
    for (int i = 0; i < g.deg.rows; ++i) out[i] += g.deg.at(i, j) * e[j];
  }
  return out;
}

std::optional<std::vector<long long>> homogeneous_degree(const Grading& g, const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  std::optional<std::vector<long long>> deg;
  for (const Term& t : p.terms()) {
    auto d = multidegree(g, t.exp);
    if (!deg)
      deg = std::move(d);
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

}  // namespace cgb
