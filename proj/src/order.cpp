#include "cgb/order.hpp"

#include <algorithm>
#include <numeric>

namespace cgb {

long long weight_dot(const WeightVec& w, const Exponents& e) {
  if (w.size() != e.size()) fail("dimension_mismatch", "weight/exponent lengths differ");
  long long s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * e[i];
  return s;
}

TermOrderSpec TermOrderSpec::lex(int nvars) {
  TermOrderSpec spec;
  spec.kind = OrderKind::Lex;
  spec.priority.resize(nvars);
  std::iota(spec.priority.begin(), spec.priority.end(), 0);
  return spec;
}

TermOrderSpec TermOrderSpec::degrevlex(int nvars) {
  TermOrderSpec spec = lex(nvars);
  spec.kind = OrderKind::DegRevLex;
  return spec;
}

TermOrderSpec TermOrderSpec::refined_by(WeightVec w) const {
  TermOrderSpec spec = *this;
  spec.weights.insert(spec.weights.begin(), std::move(w));
  return spec;
}

void TermOrderSpec::validate(int nvars) const {
  if (static_cast<int>(priority.size()) != nvars)
    fail("dimension_mismatch", "order priority length differs from ring size");
  std::vector<bool> seen(nvars, false);
  for (int p : priority) {
    if (p < 0 || p >= nvars || seen[p])
      fail("invalid_argument", "order priority is not a permutation");
    seen[p] = true;
  }
  for (const auto& w : weights) {
    if (static_cast<int>(w.size()) != nvars)
      fail("dimension_mismatch", "refinement weight length differs from ring size");
    for (long long v : w)
      if (v < 0) fail("invalid_argument", "refinement weight has a negative entry");
  }
}

CompiledOrder CompiledOrder::compile(const TermOrderSpec& spec, int nvars) {
  spec.validate(nvars);
  CompiledOrder ord;
  ord.nvars_ = nvars;
  for (const auto& w : spec.weights) ord.stages_.push_back(WeightStage{w});
  if (spec.kind == OrderKind::Lex)
    ord.stages_.push_back(LexStage{spec.priority});
  else
    ord.stages_.push_back(DegRevLexStage{spec.priority});
  return ord;
}

CompiledOrder CompiledOrder::elimination(int nvars, const std::vector<int>& elim_pos,
                                         const TermOrderSpec& kept,
                                         const std::vector<int>& kept_pos) {
  kept.validate(static_cast<int>(kept_pos.size()));
  CompiledOrder ord;
  ord.nvars_ = nvars;
  ord.stages_.push_back(DegRevLexStage{elim_pos});
  for (const auto& w : kept.weights) {
    WeightVec full(nvars, 0);
    for (size_t i = 0; i < kept_pos.size(); ++i) full[kept_pos[i]] = w[i];
    ord.stages_.push_back(WeightStage{std::move(full)});
  }
  std::vector<int> mapped(kept.priority.size());
  for (size_t i = 0; i < kept.priority.size(); ++i) mapped[i] = kept_pos[kept.priority[i]];
  if (kept.kind == OrderKind::Lex)
    ord.stages_.push_back(LexStage{std::move(mapped)});
  else
    ord.stages_.push_back(DegRevLexStage{std::move(mapped)});
  return ord;
}

namespace {

Cmp cmp_ll(long long a, long long b) {
  if (a < b) return Cmp::Less;
  if (a > b) return Cmp::Greater;
  return Cmp::Equal;
}

}  // namespace

Cmp CompiledOrder::compare(const Exponents& a, const Exponents& b) const {
  if (static_cast<int>(a.size()) != nvars_ || static_cast<int>(b.size()) != nvars_)
    fail("dimension_mismatch", "exponent length differs from order arity");
  for (const Stage& stage : stages_) {
    if (const auto* ws = std::get_if<WeightStage>(&stage)) {
      long long da = 0, db = 0;
      for (size_t i = 0; i < ws->w.size(); ++i) {
        da += ws->w[i] * a[i];
        db += ws->w[i] * b[i];
      }
      if (Cmp c = cmp_ll(da, db); c != Cmp::Equal) return c;
    } else if (const auto* ls = std::get_if<LexStage>(&stage)) {
      for (int p : ls->pos)
        if (a[p] != b[p]) return cmp_ll(a[p], b[p]);
    } else {
      const auto& pos = std::get<DegRevLexStage>(stage).pos;
      long long da = 0, db = 0;
      for (int p : pos) {
        da += a[p];
        db += b[p];
      }
      if (Cmp c = cmp_ll(da, db); c != Cmp::Equal) return c;
      // Same degree: the last differing position (scanning from the
      // lowest-priority variable) with the smaller entry wins.
      for (auto it = pos.rbegin(); it != pos.rend(); ++it)
        if (a[*it] != b[*it]) return cmp_ll(b[*it], a[*it]);
    }
  }
  return Cmp::Equal;
}

}  // namespace cgb
