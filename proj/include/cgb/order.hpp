#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cgb/ring.hpp"

namespace cgb {

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

enum class OrderKind { Lex, DegRevLex };

using WeightVec = std::vector<long long>;

long long weight_dot(const WeightVec& w, const Exponents& e);

// Declarative term order: a base comparison over an explicit variable
// priority (largest variable first), optionally refined by weight rows that
// are compared before the base, first row outermost.
struct TermOrderSpec {
  OrderKind kind = OrderKind::DegRevLex;
  std::vector<int> priority;       // permutation of 0..n-1, largest first
  std::vector<WeightVec> weights;  // usually empty or a single row

  static TermOrderSpec lex(int nvars);
  static TermOrderSpec degrevlex(int nvars);
  TermOrderSpec refined_by(WeightVec w) const;  // prepend one weight row
  void validate(int nvars) const;
  bool operator==(const TermOrderSpec&) const = default;
};

// Executable form: a stage list evaluated left to right until strict.
class CompiledOrder {
 public:
  static CompiledOrder compile(const TermOrderSpec& spec, int nvars);
  // Elimination order: the variables at elim_pos dominate (graded reverse
  // lexicographic among themselves); ties fall through to `kept` read on the
  // positions in kept_pos (kept.priority indexes into kept_pos).
  static CompiledOrder elimination(int nvars, const std::vector<int>& elim_pos,
                                   const TermOrderSpec& kept,
                                   const std::vector<int>& kept_pos);

  Cmp compare(const Exponents& a, const Exponents& b) const;
  bool less(const Exponents& a, const Exponents& b) const {
    return compare(a, b) == Cmp::Less;
  }
  int nvars() const { return nvars_; }

 private:
  struct WeightStage {
    WeightVec w;
  };
  struct LexStage {
    std::vector<int> pos;  // highest priority first
  };
  struct DegRevLexStage {
    std::vector<int> pos;
  };
  using Stage = std::variant<WeightStage, LexStage, DegRevLexStage>;

  std::vector<Stage> stages_;
  int nvars_ = 0;
};

}  // namespace cgb
