#include "cgb/ring.hpp"

#include <algorithm>
#include <set>

namespace cgb {

int RingSpec::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail("invalid_argument", "empty variable name");
    if (!seen.insert(n).second) fail("invalid_argument", "duplicate variable name " + n);
  }
  return std::make_shared<const RingSpec>(RingSpec{std::move(names)});
}

RingPtr make_ring(const std::string& stem, int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return make_ring(std::move(names));
}

long total_degree(const Exponents& e) {
  long d = 0;
  for (int v : e) d += v;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) fail("dimension_mismatch", "exponent lengths differ");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) fail("dimension_mismatch", "exponent lengths differ");
  Exponents out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) fail("dimension_mismatch", "exponent lengths differ");
  Exponents out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
    if (out[i] < 0) fail("invalid_argument", "exponent subtraction went negative");
  }
  return out;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) fail("dimension_mismatch", "exponent lengths differ");
  Exponents out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool exp_coprime(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

bool is_squarefree(const Exponents& e) {
  for (int v : e)
    if (v > 1) return false;
  return true;
}

bool lex_less(const Exponents& a, const Exponents& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace cgb
