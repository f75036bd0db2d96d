#pragma once

#include <vector>

#include "cgb/ring.hpp"

namespace cgb {

// Monomial ideal stored by its unique minimal generating antichain, sorted
// descending under the internal lexicographic order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal

  static MonomialIdeal from_generators(std::vector<Exponents> gens);

  const std::vector<Exponents>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Exponents& m) const;
  long delta() const;  // max total degree among minimal generators; 0 if none
  bool squarefree() const;
  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<Exponents> gens_;
};

// Keeps only the divisibility-minimal elements, deduplicated and sorted.
std::vector<Exponents> minimal_antichain(std::vector<Exponents> gens);

}  // namespace cgb
