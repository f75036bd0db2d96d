#include "cgb/monomial_ideal.hpp"

#include <algorithm>

namespace cgb {

std::vector<Exponents> minimal_antichain(std::vector<Exponents> gens) {
  // Ascending degree first so every kept element is checked only against
  // already-kept smaller generators.
  std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return lex_less(b, a);
  });
  std::vector<Exponents> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), [](const Exponents& a, const Exponents& b) {
    return lex_less(b, a);
  });
  return kept;
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<Exponents> gens) {
  MonomialIdeal ideal;
  ideal.gens_ = minimal_antichain(std::move(gens));
  return ideal;
}

bool MonomialIdeal::contains(const Exponents& m) const {
  for (const auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

long MonomialIdeal::delta() const {
  long d = 0;
  for (const auto& g : gens_) d = std::max(d, total_degree(g));
  return d;
}

bool MonomialIdeal::squarefree() const {
  for (const auto& g : gens_)
    if (!is_squarefree(g)) return false;
  return true;
}

}  // namespace cgb
