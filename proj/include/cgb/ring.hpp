#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cgb/errors.hpp"

namespace cgb {

// A polynomial ring over Q, identified by its ordered variable names.
struct RingSpec {
  std::vector<std::string> names;

  int nvars() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;  // -1 if absent
  bool operator==(const RingSpec&) const = default;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> names);
RingPtr make_ring(const std::string& stem, int n);  // stem1 .. stemN

using Exponents = std::vector<int>;

long total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);  // a | b componentwise
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b);  // requires b | a
Exponents exp_lcm(const Exponents& a, const Exponents& b);
bool exp_coprime(const Exponents& a, const Exponents& b);
bool is_squarefree(const Exponents& e);

// Fixed internal storage order: plain lexicographic on the raw tuple. Keeps
// printing and set-like comparisons deterministic regardless of the term
// order a computation runs under.
bool lex_less(const Exponents& a, const Exponents& b);

}  // namespace cgb
