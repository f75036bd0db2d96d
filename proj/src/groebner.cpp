#include "cgb/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

namespace cgb {

namespace {

// Folded support bitmask; folding merges bits, so subset tests on masks can
// only under-reject and every hit is confirmed by a full divisibility test.
uint64_t support_mask(const Exponents& e) {
  uint64_t m = 0;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m |= uint64_t{1} << (i & 63);
  return m;
}

struct BasisEntry {
  Poly poly;  // monic
  Exponents lead;
  uint64_t mask = 0;
  long long deg = 0;
};

BasisEntry make_entry(Poly p, const CompiledOrder& ord) {
  Poly m = p.monic(ord);
  Exponents lead = m.leading_term(ord).exp;
  uint64_t mask = support_mask(lead);
  long long deg = total_degree(lead);
  return {std::move(m), std::move(lead), mask, deg};
}

bool entry_divides(const BasisEntry& g, const Exponents& e, uint64_t e_mask, long long e_deg) {
  return (g.mask & ~e_mask) == 0 && g.deg <= e_deg && divides(g.lead, e);
}

// Reduce f against the basis; `top_only` stops at the first irreducible
// leading term, which is all the expansion loop needs, and `skip` excludes
// one entry so inter-reduction can run in place.
Poly normal_form_entries(const Poly& f, const std::vector<BasisEntry>& basis,
                         const CompiledOrder& ord, bool top_only = false, int skip = -1) {
  Poly h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term lt = h.leading_term(ord);
    const uint64_t lt_mask = support_mask(lt.exp);
    const long long lt_deg = total_degree(lt.exp);
    const BasisEntry* reducer = nullptr;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (static_cast<int>(k) == skip) continue;
      if (entry_divides(basis[k], lt.exp, lt_mask, lt_deg)) {
        reducer = &basis[k];
        break;
      }
    }
    if (reducer) {
      h = h - reducer->poly.scaled(lt.coef, exp_sub(lt.exp, reducer->lead));
    } else if (top_only) {
      if (remainder.empty()) return h;
      for (const Term& t : h.terms()) remainder.push_back(t);
      return Poly::from_terms(f.ring(), std::move(remainder));
    } else {
      remainder.push_back(lt);
      h = h - Poly::monomial(h.ring(), lt.exp, lt.coef);
    }
  }
  if (remainder.empty()) return Poly::zero(f.ring());
  return Poly::from_terms(f.ring(), std::move(remainder));
}

struct Pair {
  int i, j;
  Exponents lcm;
  uint64_t mask;
  long long deg;
  bool coprime;
};

// Gebauer-Moeller update: prune the pending pair set against the new basis
// element t, then add the surviving new pairs. Deterministic given the
// (index-ascending) processing order.
void gm_update(std::vector<Pair>& pairs, const std::vector<BasisEntry>& basis, int t) {
  const Exponents& lead_t = basis[t].lead;
  const uint64_t mask_t = basis[t].mask;
  const long long deg_t = basis[t].deg;
  std::vector<Pair> fresh;
  fresh.reserve(t);
  for (int i = 0; i < t; ++i) {
    Exponents l = exp_lcm(basis[i].lead, lead_t);
    uint64_t m = support_mask(l);
    long long d = total_degree(l);
    fresh.push_back({i, t, std::move(l), m, d, exp_coprime(basis[i].lead, lead_t)});
  }

  std::vector<Pair> kept_new;
  for (size_t k = 0; k < fresh.size(); ++k) {
    Pair& p = fresh[k];
    bool drop = false;
    if (!p.coprime) {
      for (size_t m = k + 1; m < fresh.size() && !drop; ++m)
        if ((fresh[m].mask & ~p.mask) == 0 && fresh[m].deg <= p.deg && divides(fresh[m].lcm, p.lcm))
          drop = true;
      for (const Pair& q : kept_new)
        if ((q.mask & ~p.mask) == 0 && q.deg <= p.deg && divides(q.lcm, p.lcm)) {
          drop = true;
          break;
        }
    }
    if (!drop) kept_new.push_back(std::move(p));
  }
  std::erase_if(kept_new, [](const Pair& p) { return p.coprime; });

  std::erase_if(pairs, [&](const Pair& p) {
    return (mask_t & ~p.mask) == 0 && deg_t <= p.deg && divides(lead_t, p.lcm) &&
           exp_lcm(basis[p.i].lead, lead_t) != p.lcm &&
           exp_lcm(basis[p.j].lead, lead_t) != p.lcm;
  });
  pairs.insert(pairs.end(), kept_new.begin(), kept_new.end());
}

// Selection: smallest lcm total degree, then smallest lcm in the order, then
// the smaller index pair. Degree-first keeps the scan cheap; the reduced
// basis is selection-independent.
size_t pick_pair(const std::vector<Pair>& pairs, const CompiledOrder& ord) {
  size_t best = 0;
  for (size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k].deg > pairs[best].deg) continue;
    if (pairs[k].deg == pairs[best].deg) {
      Cmp c = ord.compare(pairs[k].lcm, pairs[best].lcm);
      if (c == Cmp::Greater) continue;
      if (c == Cmp::Equal &&
          std::pair(pairs[k].i, pairs[k].j) >= std::pair(pairs[best].i, pairs[best].j))
        continue;
    }
    best = k;
  }
  return best;
}

Poly s_poly_entries(const BasisEntry& f, const BasisEntry& g, const Exponents& lcm,
                    const CompiledOrder& ord) {
  (void)ord;
  return f.poly.scaled(1, exp_sub(lcm, f.lead)) - g.poly.scaled(1, exp_sub(lcm, g.lead));
}

}  // namespace

Poly normal_form(const Poly& f, std::span<const Poly> basis, const CompiledOrder& ord) {
  std::vector<BasisEntry> entries;
  entries.reserve(basis.size());
  for (const Poly& g : basis) {
    if (g.is_zero()) continue;
    require_same_ring(f, g);
    entries.push_back(make_entry(g, ord));
  }
  // Entries are monic, so reducing by them divides coefficients through.
  return normal_form_entries(f, entries, ord);
}

Poly s_polynomial(const Poly& f, const Poly& g, const CompiledOrder& ord) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) fail("invalid_argument", "s-polynomial with zero");
  const Term& lf = f.leading_term(ord);
  const Term& lg = g.leading_term(ord);
  Exponents lcm = exp_lcm(lf.exp, lg.exp);
  return f.scaled(mpq_class(1) / lf.coef, exp_sub(lcm, lf.exp)) -
         g.scaled(mpq_class(1) / lg.coef, exp_sub(lcm, lg.exp));
}

std::vector<Poly> buchberger_core(std::vector<Poly> gens, const CompiledOrder& ord) {
  const bool trace = std::getenv("CGB_TRACE") != nullptr;
  std::vector<BasisEntry> basis;
  std::vector<Pair> pairs;
  for (Poly& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(make_entry(std::move(g), ord));
    gm_update(pairs, basis, static_cast<int>(basis.size()) - 1);
  }

  long long pops = 0;
  while (!pairs.empty()) {
    size_t k = pick_pair(pairs, ord);
    Pair p = std::move(pairs[k]);
    pairs.erase(pairs.begin() + k);
    ++pops;
    Poly s = s_poly_entries(basis[p.i], basis[p.j], p.lcm, ord);
    Poly r = normal_form_entries(s, basis, ord, /*top_only=*/true);
    if (r.is_zero()) continue;
    basis.push_back(make_entry(std::move(r), ord));
    gm_update(pairs, basis, static_cast<int>(basis.size()) - 1);
    if (trace && basis.size() % 200 == 0)
      std::fprintf(stderr, "[gb] basis=%zu pairs=%zu pops=%lld deg=%lld\n", basis.size(),
                   pairs.size(), pops, p.deg);
  }

  // Minimalize: ascending initial terms; divisibility implies order, so any
  // divisor of an initial term was already kept.
  std::vector<int> idx(basis.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return ord.less(basis[a].lead, basis[b].lead); });
  std::vector<BasisEntry> kept;
  for (int i : idx) {
    bool redundant = false;
    for (const BasisEntry& k2 : kept)
      if (entry_divides(k2, basis[i].lead, basis[i].mask, basis[i].deg)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(basis[i]));
  }

  // Inter-reduce tails to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      Poly r = normal_form_entries(kept[i].poly, kept, ord, /*top_only=*/false,
                                   /*skip=*/static_cast<int>(i));
      if (r.is_zero()) fail("internal_error", "minimal basis element reduced to zero");
      r = r.monic(ord);
      if (!(r == kept[i].poly)) {
        kept[i] = make_entry(std::move(r), ord);
        changed = true;
      }
    }
  }

  std::sort(kept.begin(), kept.end(),
            [&](const BasisEntry& a, const BasisEntry& b) { return ord.less(a.lead, b.lead); });
  std::vector<Poly> out;
  out.reserve(kept.size());
  for (BasisEntry& e : kept) out.push_back(std::move(e.poly));
  return out;
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const TermOrderSpec& order) {
  if (!ideal.ring) fail("invalid_argument", "ideal without a ring");
  CompiledOrder ord = CompiledOrder::compile(order, ideal.ring->nvars());
  for (const Poly& g : ideal.generators)
    if (g.ring() && !(*g.ring() == *ideal.ring))
      fail("ring_mismatch", "generator outside the ideal's ring");
  GroebnerBasis gb;
  gb.ring = ideal.ring;
  gb.order = order;
  gb.elements = buchberger_core(ideal.generators, ord);
  gb.initial_exponents.reserve(gb.elements.size());
  for (const Poly& g : gb.elements) gb.initial_exponents.push_back(g.leading_term(ord).exp);
  gb.reduced = true;
  return gb;
}

bool passes_buchberger_criterion(std::span<const Poly> basis, const CompiledOrder& ord) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Poly s = s_polynomial(basis[i], basis[j], ord);
      if (!normal_form(s, basis, ord).is_zero()) return false;
    }
  return true;
}

MonomialIdeal initial_ideal(const IdealPresentation& ideal, const TermOrderSpec& order) {
  GroebnerBasis gb = buchberger(ideal, order);
  return MonomialIdeal::from_generators(gb.initial_exponents);
}

Poly initial_form(const Poly& f, const WeightVec& w) {
  if (f.is_zero()) return f;
  long long best = 0;
  bool have = false;
  for (const Term& t : f.terms()) {
    long long d = weight_dot(w, t.exp);
    if (!have || d > best) {
      best = d;
      have = true;
    }
  }
  std::vector<Term> top;
  for (const Term& t : f.terms())
    if (weight_dot(w, t.exp) == best) top.push_back(t);
  return Poly::from_terms(f.ring(), std::move(top));
}

WeightInitial initial_ideal_weight(const IdealPresentation& ideal, const WeightVec& w,
                                   const TermOrderSpec& tiebreak) {
  GroebnerBasis gb = buchberger(ideal, tiebreak.refined_by(w));
  WeightInitial out;
  out.monomial = true;
  for (const Poly& g : gb.elements) {
    Poly f = initial_form(g, w);
    if (!f.is_monomial()) out.monomial = false;
    out.generators.push_back(std::move(f));
  }
  return out;
}

WeightVec weight_from_order(const GroebnerBasis& gb) {
  int n = gb.ring->nvars();
  std::vector<std::vector<long long>> diffs;
  for (size_t k = 0; k < gb.elements.size(); ++k) {
    const Exponents& lead = gb.initial_exponents[k];
    for (const Term& t : gb.elements[k].terms()) {
      if (t.exp == lead) continue;
      std::vector<long long> d(n);
      for (int i = 0; i < n; ++i) d[i] = static_cast<long long>(lead[i]) - t.exp[i];
      diffs.push_back(std::move(d));
    }
  }
  // Unit-step perceptron over the strict system {w.d > 0} + {w_j > 0}: a
  // strictly positive integer solution exists for a reduced basis, so this
  // terminates; the coordinate rows keep the result nonnegative.
  WeightVec w(n, 1);
  const long kMaxRounds = 2000000;
  for (long round = 0; round < kMaxRounds; ++round) {
    bool violated = false;
    for (int j = 0; j < n && !violated; ++j)
      if (w[j] <= 0) {
        ++w[j];
        violated = true;
      }
    for (const auto& d : diffs) {
      if (violated) break;
      long long dot = 0;
      for (int i = 0; i < n; ++i) dot += w[i] * d[i];
      if (dot <= 0) {
        for (int i = 0; i < n; ++i) w[i] += d[i];
        violated = true;
      }
    }
    if (!violated) return w;
  }
  fail("internal_error", "weight search did not converge");
}

bool is_pseudo_groebner(std::span<const Poly> f_set, const IdealPresentation& ideal,
                        const WeightVec& w, const TermOrderSpec& tiebreak) {
  TermOrderSpec refined = tiebreak.refined_by(w);
  CompiledOrder ord = CompiledOrder::compile(refined, ideal.ring->nvars());
  GroebnerBasis gb = buchberger(ideal, refined);
  std::vector<Poly> weight_initials;
  for (const Poly& f : f_set) {
    if (f.is_zero()) fail("invalid_argument", "zero polynomial in a candidate family");
    if (!normal_form(f, gb.elements, ord).is_zero())
      fail("not_in_ideal", "candidate family member " + std::to_string(weight_initials.size()) +
                               " is outside the ideal");
    weight_initials.push_back(initial_form(f, w));
  }
  std::vector<Poly> j_basis = buchberger_core(weight_initials, ord);
  for (const Poly& g : gb.elements)
    if (!normal_form(initial_form(g, w), j_basis, ord).is_zero()) return false;
  return true;
}

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b,
                const TermOrderSpec& order) {
  GroebnerBasis ga = buchberger(a, order);
  GroebnerBasis gb = buchberger(b, order);
  return ga.elements == gb.elements;
}

}  // namespace cgb
