#include "cgb/contraction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "cgb/errors.hpp"

namespace cgb {

namespace {

Exponents narrow(const std::vector<long long>& v) {
  Exponents out;
  out.reserve(v.size());
  for (long long x : v) {
    if (x < 0 || x > std::numeric_limits<int>::max()) fail("internal_error", "exponent out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

std::vector<long long> widen(const Exponents& e) { return {e.begin(), e.end()}; }

bool all_zero(const std::vector<long long>& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// Degree then descending lexicographic: the canonical listing order for
// exponent sets produced by searches.
bool deg_desclex_less(const Exponents& a, const Exponents& b) {
  long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return lex_less(b, a);
}

void validate_problem(const ContractionProblem& p) {
  if (!p.ideal.ring) fail("invalid_argument", "contraction problem needs a target ring");
  const int s = p.ideal.ring->nvars();
  if (p.map.target_dim() != s)
    fail("invalid_argument", "map target dimension does not match the target ring");
  if (!p.map.matrix.nonnegative()) fail("invalid_argument", "map columns must be nonnegative");
  if (p.grading.nvars() != s)
    fail("invalid_argument", "grading has one column per target variable");
  if (static_cast<int>(p.weight.size()) != s)
    fail("invalid_argument", "weight has one entry per target variable");
  for (long long w : p.weight)
    if (w < 0) fail("invalid_argument", "weight entries must be nonnegative");
  p.order.validate(p.map.source_dim());
  for (const auto& h : p.h_generators)
    if (static_cast<int>(h.size()) != p.grading.dim())
      fail("invalid_argument", "degree generator size does not match the grading dimension");
}

std::optional<Exponents> try_preimage(const MonomialMap& map, const Exponents& u) {
  const int r = map.source_dim();
  std::vector<long long> residual = widen(u);
  Exponents c(static_cast<size_t>(r), 0);
  auto rec = [&](auto&& self, int j) -> bool {
    if (j == r) return all_zero(residual);
    auto col = map.matrix.col(j);
    long long cap = std::numeric_limits<long long>::max();
    for (int i = 0; i < map.target_dim(); ++i)
      if (col[static_cast<size_t>(i)] > 0)
        cap = std::min(cap, residual[static_cast<size_t>(i)] / col[static_cast<size_t>(i)]);
    if (cap == std::numeric_limits<long long>::max()) cap = 0;  // zero column
    // Ascending choice, leftmost first: the first solution is lex-least.
    for (long long k = 0; k <= cap; ++k) {
      c[static_cast<size_t>(j)] = static_cast<int>(k);
      for (int i = 0; i < map.target_dim(); ++i) residual[static_cast<size_t>(i)] -= k * col[static_cast<size_t>(i)];
      bool ok = self(self, j + 1);
      for (int i = 0; i < map.target_dim(); ++i) residual[static_cast<size_t>(i)] += k * col[static_cast<size_t>(i)];
      if (ok) return true;
      c[static_cast<size_t>(j)] = 0;
    }
    return false;
  };
  if (rec(rec, 0)) return c;
  return std::nullopt;
}

GroebnerBasis strip_to_source(std::vector<Poly> basis, int elim, RingPtr source,
                              const TermOrderSpec& source_order) {
  CompiledOrder src_ord = CompiledOrder::compile(source_order, source->nvars());
  GroebnerBasis out;
  out.ring = source;
  out.order = source_order;
  out.reduced = true;
  for (const Poly& g : basis) {
    bool pure = true;
    for (const Term& t : g.terms())
      for (int i = 0; i < elim && pure; ++i)
        if (t.exp[static_cast<size_t>(i)] != 0) pure = false;
    if (!pure) continue;
    std::vector<Term> stripped;
    for (const Term& t : g.terms())
      stripped.push_back({Exponents(t.exp.begin() + elim, t.exp.end()), t.coef});
    out.elements.push_back(Poly::from_terms(source, stripped));
  }
  std::sort(out.elements.begin(), out.elements.end(), [&](const Poly& a, const Poly& b) {
    return src_ord.compare(a.leading_term(src_ord).exp, b.leading_term(src_ord).exp) == Cmp::Less;
  });
  for (const Poly& g : out.elements) out.initial_exponents.push_back(g.leading_term(src_ord).exp);
  return out;
}

// Shared state for the structured route: the kernel basis and a bounded
// membership test for the degree semigroup H.
struct Ctx {
  const ContractionProblem& p;
  std::vector<std::vector<long long>> h;  // nonzero degree generators
  std::vector<mpq_class> lam;             // functional positive on every h
  std::vector<mpq_class> h_value;         // lam . h_k, each > 0
  GroebnerBasis kernel;
  MonomialIdeal kernel_initial;
  mutable std::map<std::vector<long long>, bool> memo;

  explicit Ctx(const ContractionProblem& prob) : p(prob) {
    validate_problem(p);
    for (const auto& g : p.h_generators)
      if (!all_zero(g)) h.push_back(g);
    if (h.empty()) fail("hypotheses_violated", "no nonzero degree generator");
    IntMat hm(p.grading.dim(), static_cast<int>(h.size()));
    for (size_t k = 0; k < h.size(); ++k)
      for (int i = 0; i < hm.rows; ++i) hm.at(i, static_cast<int>(k)) = h[k][static_cast<size_t>(i)];
    auto cert = positive_functional(hm);
    if (!cert) fail("unbounded_fiber", "no positivity certificate for the degree generators");
    lam = std::move(*cert);
    for (size_t k = 0; k < h.size(); ++k) {
      mpq_class v = 0;
      for (size_t i = 0; i < lam.size(); ++i) v += lam[i] * to_rational(h[k][i]);
      h_value.push_back(std::move(v));
    }
    kernel = toric_ideal(p.map, p.order);
    kernel_initial = MonomialIdeal::from_generators(kernel.initial_exponents);
  }

  bool member_search(size_t idx, std::vector<long long>& res, const mpq_class& val) const {
    if (all_zero(res)) return true;
    if (idx == h.size() || val < 0) return false;
    mpq_class cap_q = val / h_value[idx];
    mpz_class cap_z;
    mpz_fdiv_q(cap_z.get_mpz_t(), cap_q.get_num().get_mpz_t(), cap_q.get_den().get_mpz_t());
    long long cap = cap_z.get_si();
    for (long long k = cap; k >= 0; --k) {
      for (size_t i = 0; i < res.size(); ++i) res[i] -= k * h[idx][i];
      bool ok = member_search(idx + 1, res, val - to_rational(k) * h_value[idx]);
      for (size_t i = 0; i < res.size(); ++i) res[i] += k * h[idx][i];
      if (ok) return true;
    }
    return false;
  }

  // t in H = N h_1 + ... + N h_m. Terminates because lam is positive on
  // every generator, which caps each coefficient.
  bool in_H(const std::vector<long long>& t) const {
    if (all_zero(t)) return true;
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    mpq_class val = 0;
    for (size_t i = 0; i < t.size(); ++i) val += lam[i] * to_rational(t[i]);
    bool ok = false;
    if (val > 0) {
      std::vector<long long> res = t;
      ok = member_search(0, res, val);
    }
    memo.emplace(t, ok);
    return ok;
  }

  // The structured hypotheses: grading with independent distinct columns,
  // realizable degree generators, and map columns that generate exactly the
  // monomials of the graded subring.
  void require_structured() const {
    std::vector<std::vector<long long>> cols;
    for (int j = 0; j < p.grading.deg.cols; ++j) {
      auto c = p.grading.deg.col(j);
      if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
    }
    if (rank_exact(to_rational_rows(p.grading.deg)) != static_cast<int>(cols.size()))
      fail("hypotheses_violated", "distinct grading columns are linearly dependent");
    for (const auto& hk : h)
      if (fiber(p.grading, hk).empty())
        fail("hypotheses_violated", "degree generator has an empty fiber");
    for (int j = 0; j < p.map.source_dim(); ++j)
      if (!in_H(mat_apply(p.grading.deg, p.map.matrix.col(j))))
        fail("hypotheses_violated", "map column degree is outside the degree semigroup");
    for (const Exponents& g : semigroup_generators({p.grading, h}))
      if (!try_preimage(p.map, g))
        fail("hypotheses_violated", "map columns do not generate the graded subring");
  }
};

std::vector<Exponents> gamma_impl(const Ctx& ctx, const std::vector<long long>& v,
                                  std::optional<int> degree_bound) {
  const Grading& V = ctx.p.grading;
  if (static_cast<int>(v.size()) != V.dim())
    fail("invalid_argument", "degree size does not match the grading dimension");

  auto fib = fiber(V, v);
  if (fib.empty()) fail("not_in_semigroup", "no monomial has the requested degree");
  const Exponents a0 = fib.front();

  // Certified generating set: minimal standard monomials whose image is
  // divisible by a degree-v probe monomial, shifted back by the probe.
  MonomialIdeal probe = MonomialIdeal::from_generators({a0});
  MonomialIdeal m_basis = monomial_contraction_basis_with(ctx.p.map, probe, ctx.kernel);
  std::vector<Exponents> cand;
  for (const Exponents& u : m_basis.generators()) {
    auto img = apply_map(ctx.p.map, u);
    for (size_t i = 0; i < img.size(); ++i) {
      img[i] -= a0[i];
      if (img[i] < 0) fail("internal_error", "probe division left a negative exponent");
    }
    cand.push_back(narrow(img));
  }
  std::sort(cand.begin(), cand.end(), deg_desclex_less);
  std::vector<Exponents> kept;
  for (const Exponents& c : cand) {
    bool redundant = false;
    for (const Exponents& k : kept) {
      if (k == c ||
          (divides(k, c) && ctx.in_H(mat_apply(V.deg, widen(exp_sub(c, k)))))) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(c);
  }

  long maxdeg = 0;
  for (const Exponents& k : kept) maxdeg = std::max(maxdeg, total_degree(k));
  long eff = 0;
  if (degree_bound) {
    if (maxdeg > *degree_bound)
      fail("bound_too_small", "a certified generator exceeds the requested degree bound");
    eff = *degree_bound;
  } else {
    long hb = 0;
    for (const auto& hk : ctx.h) {
      std::vector<long long> t(v.size());
      for (size_t i = 0; i < v.size(); ++i) t[i] = hk[i] - v[i];
      for (const Exponents& a : fiber(V, t)) hb = std::max(hb, total_degree(a));
    }
    eff = std::max(2 * hb, maxdeg);
  }

  // Independent bounded search over members of the shifted semigroup, with
  // minimality tested by stepping down one map column at a time.
  std::vector<Exponents> columns;
  for (int j = 0; j < ctx.p.map.source_dim(); ++j) {
    Exponents g = narrow(ctx.p.map.matrix.col(j));
    if (total_degree(g) == 0) continue;
    if (std::find(columns.begin(), columns.end(), g) == columns.end()) columns.push_back(g);
  }
  auto member = [&](const Exponents& a) {
    auto t = mat_apply(V.deg, widen(a));
    for (size_t i = 0; i < t.size(); ++i) t[i] += v[i];
    return ctx.in_H(t);
  };
  std::vector<Exponents> direct;
  const int s = V.nvars();
  Exponents a(static_cast<size_t>(s), 0);
  auto leaf = [&]() {
    if (!member(a)) return;
    for (const Exponents& g : columns)
      if (divides(g, a) && member(exp_sub(a, g))) return;
    direct.push_back(a);
  };
  auto rec = [&](auto&& self, int pos, long rem) -> void {
    if (pos == s - 1) {
      a[static_cast<size_t>(pos)] = static_cast<int>(rem);
      leaf();
      a[static_cast<size_t>(pos)] = 0;
      return;
    }
    for (long k = rem; k >= 0; --k) {
      a[static_cast<size_t>(pos)] = static_cast<int>(k);
      self(self, pos + 1, rem - k);
    }
    a[static_cast<size_t>(pos)] = 0;
  };
  for (long deg = 0; deg <= eff; ++deg) rec(rec, 0, deg);

  if (direct != kept) fail("internal_error", "module generator cross-check failed");
  return kept;
}

std::vector<Poly> lift_family_impl(const Ctx& ctx, std::span<const Poly> family, bool precheck,
                                   bool verify) {
  const ContractionProblem& p = ctx.p;
  const int s = p.ideal.ring->nvars();
  if (precheck) {
    for (const Poly& f : family)
      if (f.is_zero()) fail("invalid_argument", "zero member in the family");
    if (!is_pseudo_groebner(family, p.ideal, p.weight, TermOrderSpec::degrevlex(s)))
      fail("hypotheses_violated", "family initial forms do not generate the weight initial ideal");
  }

  std::vector<Poly> out = ctx.kernel.elements;
  for (const Poly& f : family) {
    auto vd = homogeneous_degree(p.grading, f);
    if (!vd) fail("hypotheses_violated", "family member is not homogeneous in the grading");
    for (const Exponents& c : gamma_impl(ctx, *vd, std::nullopt)) {
      Poly lifted = lift_through(Poly::monomial(p.ideal.ring, c) * f, p.map, ctx.kernel);
      if (lifted.is_zero()) fail("internal_error", "lift of a nonzero shift vanished");
      if (std::find(out.begin(), out.end(), lifted) == out.end()) out.push_back(std::move(lifted));
    }
  }

  if (verify) {
    GroebnerBasis oracle = contraction_elimination(p.map, p.ideal, p.order);
    WeightVec wp = pullback_weight(p.map, p.weight);
    bool ok = false;
    try {
      ok = is_pseudo_groebner(out, IdealPresentation{p.map.source, oracle.elements}, wp, p.order);
    } catch (const Error& e) {
      if (std::string(e.name()) == "not_in_ideal")
        fail("internal_error", "lifted family left the contraction ideal");
      throw;
    }
    if (!ok) fail("internal_error", "lifted family fails the elimination pseudo-basis check");
  }
  return out;
}

}  // namespace

WeightVec pullback_weight(const MonomialMap& map, const WeightVec& weight) {
  if (static_cast<int>(weight.size()) != map.target_dim())
    fail("invalid_argument", "weight size does not match the map target");
  WeightVec out;
  for (int j = 0; j < map.source_dim(); ++j) {
    long long v = 0;
    for (int i = 0; i < map.target_dim(); ++i) v += weight[static_cast<size_t>(i)] * map.matrix.at(i, j);
    out.push_back(v);
  }
  return out;
}

GroebnerBasis contraction_elimination(const MonomialMap& map, const IdealPresentation& ideal,
                                      const TermOrderSpec& source_order) {
  if (!ideal.ring || ideal.ring->nvars() != map.target_dim())
    fail("invalid_argument", "ideal ring does not match the map target");
  if (!map.matrix.nonnegative())
    fail("invalid_argument", "elimination needs nonnegative map columns");
  const int s = map.target_dim();
  const int r = map.source_dim();
  source_order.validate(r);
  const int total = s + r;

  std::vector<std::string> names;
  for (int i = 1; i <= s; ++i) names.push_back("@t" + std::to_string(i));
  for (int j = 1; j <= r; ++j) names.push_back("@s" + std::to_string(j));
  RingPtr big = make_ring(std::move(names));

  std::vector<Poly> gens;
  for (const Poly& g : ideal.generators) {
    if (g.is_zero()) continue;
    std::vector<Term> padded;
    for (const Term& t : g.terms()) {
      Exponents e = t.exp;
      e.resize(static_cast<size_t>(total), 0);
      padded.push_back({std::move(e), t.coef});
    }
    gens.push_back(Poly::from_terms(big, std::move(padded)));
  }
  for (int j = 0; j < r; ++j) {
    Exponents lhs(static_cast<size_t>(total), 0), rhs(static_cast<size_t>(total), 0);
    lhs[static_cast<size_t>(s + j)] = 1;
    for (int i = 0; i < s; ++i) rhs[static_cast<size_t>(i)] = static_cast<int>(map.matrix.at(i, j));
    gens.push_back(Poly::monomial(big, lhs) - Poly::monomial(big, rhs));
  }

  std::vector<int> elim_pos(static_cast<size_t>(s)), kept_pos(static_cast<size_t>(r));
  std::iota(elim_pos.begin(), elim_pos.end(), 0);
  std::iota(kept_pos.begin(), kept_pos.end(), s);
  CompiledOrder ord = CompiledOrder::elimination(total, elim_pos, source_order, kept_pos);
  return strip_to_source(buchberger_core(std::move(gens), ord), s, map.source, source_order);
}

Exponents preimage_monomial(const MonomialMap& map, const Exponents& u) {
  if (static_cast<int>(u.size()) != map.target_dim())
    fail("invalid_argument", "monomial size does not match the map target");
  if (!map.matrix.nonnegative())
    fail("invalid_argument", "preimage search needs nonnegative map columns");
  auto c = try_preimage(map, u);
  if (!c) fail("not_in_semigroup", "monomial is outside the image of the map");
  return *c;
}

Poly lift_through(const Poly& q, const MonomialMap& map, const GroebnerBasis& kernel_basis) {
  if (q.is_zero()) return Poly::zero(map.source);
  if (q.nvars() != map.target_dim())
    fail("invalid_argument", "polynomial ring does not match the map target");
  CompiledOrder ord = CompiledOrder::compile(kernel_basis.order, map.source_dim());
  std::vector<Term> terms;
  for (const Term& t : q.terms()) terms.push_back({preimage_monomial(map, t.exp), t.coef});
  Poly pre = Poly::from_terms(map.source, std::move(terms));
  return normal_form(pre, kernel_basis.elements, ord);
}

MonomialIdeal monomial_contraction_basis_with(const MonomialMap& map, const MonomialIdeal& ideal,
                                              const GroebnerBasis& kernel_basis) {
  if (!map.matrix.nonnegative())
    fail("invalid_argument", "contraction needs nonnegative map columns");
  MonomialIdeal std_ideal = MonomialIdeal::from_generators(kernel_basis.initial_exponents);
  const long bound = ideal.delta();
  const int r = map.source_dim();
  std::vector<Exponents> found;
  Exponents u(static_cast<size_t>(r), 0);
  auto leaf = [&]() {
    if (std_ideal.contains(u)) return;
    for (const Exponents& f : found)
      if (divides(f, u)) return;
    if (ideal.contains(narrow(apply_map(map, u)))) found.push_back(u);
  };
  auto rec = [&](auto&& self, int pos, long rem) -> void {
    if (pos == r - 1) {
      u[static_cast<size_t>(pos)] = static_cast<int>(rem);
      leaf();
      u[static_cast<size_t>(pos)] = 0;
      return;
    }
    for (long k = rem; k >= 0; --k) {
      u[static_cast<size_t>(pos)] = static_cast<int>(k);
      self(self, pos + 1, rem - k);
    }
    u[static_cast<size_t>(pos)] = 0;
  };
  // Minimal generators of the contraction stay within the degree bound of
  // the contracted ideal, so the walk below sees all of them.
  for (long deg = 0; deg <= bound; ++deg) rec(rec, 0, deg);
  return MonomialIdeal::from_generators(std::move(found));
}

MonomialIdeal monomial_contraction_basis(const MonomialMap& map, const MonomialIdeal& ideal,
                                         const TermOrderSpec& source_order) {
  return monomial_contraction_basis_with(map, ideal, toric_ideal(map, source_order));
}

bool equigenerated(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  for (size_t i = 1; i < g.size(); ++i)
    if (total_degree(g[i]) != total_degree(g[0])) return false;
  return true;
}

std::vector<Exponents> gamma(const ContractionProblem& problem, const std::vector<long long>& v,
                             std::optional<int> degree_bound) {
  Ctx ctx(problem);
  ctx.require_structured();
  return gamma_impl(ctx, v, degree_bound);
}

std::vector<Poly> lift_family(const std::vector<Poly>& family, const ContractionProblem& problem,
                              bool verify) {
  Ctx ctx(problem);
  ctx.require_structured();
  return lift_family_impl(ctx, family, true, verify);
}

ContractionReport contract_initial(const ContractionProblem& problem) {
  Ctx ctx(problem);
  ctx.require_structured();
  const RingPtr& target = problem.ideal.ring;
  const int s = target->nvars();

  std::vector<Poly> gens;
  for (const Poly& g : problem.ideal.generators)
    if (!g.is_zero()) gens.push_back(g);
  for (const Poly& g : gens)
    if (!homogeneous_degree(problem.grading, g))
      fail("hypotheses_violated", "ideal generator is not homogeneous in the grading");

  TermOrderSpec order_w = TermOrderSpec::degrevlex(s).refined_by(problem.weight);
  GroebnerBasis gi = buchberger(IdealPresentation{target, gens}, order_w);
  std::vector<Exponents> wgens;
  for (const Poly& g : gi.elements) {
    Poly form = initial_form(g, problem.weight);
    if (!form.is_monomial())
      fail("hypotheses_violated", "weight initial ideal is not a monomial ideal");
    wgens.push_back(form.terms().front().exp);
  }
  MonomialIdeal weight_initial = MonomialIdeal::from_generators(std::move(wgens));
  MonomialIdeal contracted = monomial_contraction_basis_with(problem.map, weight_initial, ctx.kernel);
  std::vector<Exponents> sgens = ctx.kernel_initial.generators();
  sgens.insert(sgens.end(), contracted.generators().begin(), contracted.generators().end());
  MonomialIdeal structured = MonomialIdeal::from_generators(std::move(sgens));

  std::vector<Poly> lifted = lift_family_impl(ctx, gi.elements, false, false);
  WeightVec wp = pullback_weight(problem.map, problem.weight);
  GroebnerBasis full =
      buchberger(IdealPresentation{problem.map.source, std::move(lifted)}, problem.order.refined_by(wp));
  if (!(MonomialIdeal::from_generators(full.initial_exponents) == structured))
    fail("internal_error", "structured initial ideal disagrees with the completed basis");
  if (structured.delta() > std::max(weight_initial.delta(), ctx.kernel_initial.delta()))
    fail("internal_error", "initial degree bound violated");
  if (weight_initial.squarefree() && ctx.kernel_initial.squarefree() && !structured.squarefree())
    fail("internal_error", "squarefree transfer violated");

  ContractionReport r;
  r.groebner = std::move(full);
  r.initial = std::move(structured);
  r.delta = r.initial.delta();
  r.squarefree = r.initial.squarefree();
  r.delta_ideal = weight_initial.delta();
  r.squarefree_ideal = weight_initial.squarefree();
  r.delta_kernel = ctx.kernel_initial.delta();
  r.squarefree_kernel = ctx.kernel_initial.squarefree();
  r.pulled_back_weight = std::move(wp);
  r.structured = true;
  return r;
}

ContractionReport contract_oracle(const ContractionProblem& problem) {
  validate_problem(problem);
  const RingPtr& target = problem.ideal.ring;
  const int s = target->nvars();

  std::vector<Poly> gens;
  for (const Poly& g : problem.ideal.generators)
    if (!g.is_zero()) gens.push_back(g);

  WeightVec wp = pullback_weight(problem.map, problem.weight);
  GroebnerBasis gb = contraction_elimination(problem.map, IdealPresentation{target, gens},
                                             problem.order.refined_by(wp));

  TermOrderSpec order_w = TermOrderSpec::degrevlex(s).refined_by(problem.weight);
  GroebnerBasis gi = buchberger(IdealPresentation{target, gens}, order_w);
  long delta_ideal = 0;
  bool monomial = true, squarefree_ideal = true;
  for (const Poly& g : gi.elements) {
    Poly form = initial_form(g, problem.weight);
    delta_ideal = std::max(delta_ideal, form.degree());
    if (!form.is_monomial()) monomial = false;
    for (const Term& t : form.terms())
      if (!is_squarefree(t.exp)) squarefree_ideal = false;
  }
  if (!monomial) squarefree_ideal = false;

  GroebnerBasis ker = toric_ideal(problem.map, problem.order);
  MonomialIdeal kernel_initial = MonomialIdeal::from_generators(ker.initial_exponents);

  ContractionReport r;
  r.groebner = std::move(gb);
  r.initial = MonomialIdeal::from_generators(r.groebner.initial_exponents);
  r.delta = r.initial.delta();
  r.squarefree = r.initial.squarefree();
  r.delta_ideal = delta_ideal;
  r.squarefree_ideal = squarefree_ideal;
  r.delta_kernel = kernel_initial.delta();
  r.squarefree_kernel = kernel_initial.squarefree();
  r.pulled_back_weight = std::move(wp);
  r.structured = false;
  return r;
}

}  // namespace cgb
