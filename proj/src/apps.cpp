#include "cgb/apps.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cgb/jsonio.hpp"
#include "cgb/parse.hpp"

namespace cgb {

namespace {

Poly reencode(const Poly& g, const RingPtr& to, int offset) {
  std::vector<Term> ts;
  for (const Term& t : g.terms()) {
    Exponents e(static_cast<size_t>(to->nvars()), 0);
    for (size_t i = 0; i < t.exp.size(); ++i) e[offset + i] = t.exp[i];
    ts.push_back({std::move(e), t.coef});
  }
  return Poly::from_terms(to, std::move(ts));
}

std::vector<Poly> parse_lines(const RingPtr& ring, const std::string& text) {
  std::vector<Poly> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    out.push_back(parse_poly(ring, line));
  }
  return out;
}

std::string join_ll(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

bool col_lex_greater(const IntMat& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r)
    if (m.at(r, i) != m.at(r, j)) return m.at(r, i) > m.at(r, j);
  return false;
}

}  // namespace

std::vector<Exponents> degree_d_exponents(int s, int d) {
  if (s < 1 || d < 1) fail("invalid_argument", "need at least one variable and a positive degree");
  std::vector<Exponents> out;
  Exponents cur(static_cast<size_t>(s), 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == s - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur[pos] = k;
      self(self, pos + 1, rem - k);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, d);
  return out;
}

std::optional<LexWitness> search_lex_witness(const MonomialMap& map, int max_degree, int budget) {
  if (max_degree < 0 || budget < 1) fail("invalid_argument", "witness search needs a degree cap and a positive budget");
  const int n = map.source_dim();
  std::vector<std::vector<int>> cands;
  std::set<std::vector<int>> seen;
  auto push = [&](std::vector<int> p) {
    if (static_cast<int>(cands.size()) < budget && seen.insert(p).second)
      cands.push_back(std::move(p));
  };
  std::vector<int> decl(static_cast<size_t>(n));
  std::iota(decl.begin(), decl.end(), 0);
  push(decl);
  std::vector<int> rev = decl;
  std::reverse(rev.begin(), rev.end());
  push(rev);
  std::vector<int> byc = decl;
  std::stable_sort(byc.begin(), byc.end(),
                   [&](int i, int j) { return col_lex_greater(map.matrix, i, j); });
  push(byc);
  std::reverse(byc.begin(), byc.end());
  push(byc);
  std::mt19937 rng(0x5eed);
  for (int tries = 0; tries < 8 * budget && static_cast<int>(cands.size()) < budget; ++tries) {
    std::vector<int> p = decl;
    std::shuffle(p.begin(), p.end(), rng);
    push(std::move(p));
  }
  for (size_t idx = 0; idx < cands.size(); ++idx) {
    TermOrderSpec spec;
    spec.kind = OrderKind::Lex;
    spec.priority = cands[idx];
    GroebnerBasis gb = toric_ideal(map, spec);
    MonomialIdeal initial = MonomialIdeal::from_generators(gb.initial_exponents);
    if (initial.delta() <= max_degree && initial.squarefree())
      return LexWitness{std::move(spec), std::move(gb), static_cast<int>(idx)};
  }
  return std::nullopt;
}

VeroneseResult veronese(int s, int d) {
  std::vector<Exponents> cols = degree_d_exponents(s, d);
  const int n = static_cast<int>(cols.size());
  IntMat m(s, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < s; ++i) m.at(i, j) = cols[j][i];
  MonomialMap map = make_map(std::move(m), make_ring("x", n), make_ring("y", s)->names);
  std::optional<LexWitness> wit = search_lex_witness(map, 2, 64);
  if (!wit)
    fail("no_order_found",
         "no lexicographic order with a squarefree quadratic kernel initial ideal in budget");
  return {std::move(map), std::move(wit->order), std::move(wit->kernel)};
}

RingPtr block_ring(const std::vector<int>& sizes, const std::string& stem) {
  std::vector<std::string> names;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) fail("invalid_argument", "block sizes must be positive");
    for (int j = 1; j <= sizes[i]; ++j)
      names.push_back(stem + std::to_string(i + 1) + "_" + std::to_string(j));
  }
  return make_ring(std::move(names));
}

FiberProductResult fiber_product(const FiberProductInstance& inst) {
  const int d = static_cast<int>(inst.s_sizes.size());
  if (d < 1 || inst.t_sizes.size() != static_cast<size_t>(d))
    fail("invalid_argument", "block size lists must be nonempty and equally long");
  const RingPtr ry = block_ring(inst.s_sizes, "y");
  const RingPtr rz = block_ring(inst.t_sizes, "z");
  const int sy = ry->nvars();
  const int sz = rz->nvars();
  if (static_cast<int>(inst.w1.size()) != sy || static_cast<int>(inst.w2.size()) != sz)
    fail("dimension_mismatch", "weight lengths differ from the block variable counts");
  for (long long v : inst.w1)
    if (v < 0) fail("invalid_argument", "weights must be nonnegative");
  for (long long v : inst.w2)
    if (v < 0) fail("invalid_argument", "weights must be nonnegative");

  std::vector<int> yoff(static_cast<size_t>(d)), zoff(static_cast<size_t>(d));
  for (int i = 1; i < d; ++i) {
    yoff[i] = yoff[i - 1] + inst.s_sizes[i - 1];
    zoff[i] = zoff[i - 1] + inst.t_sizes[i - 1];
  }

  std::vector<std::string> target_names = ry->names;
  target_names.insert(target_names.end(), rz->names.begin(), rz->names.end());
  const RingPtr rs = make_ring(target_names);

  IntMat deg(2 * d, sy + sz);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < inst.s_sizes[i]; ++j) deg.at(i, yoff[i] + j) = 1;
    for (int k = 0; k < inst.t_sizes[i]; ++k) deg.at(d + i, sy + zoff[i] + k) = 1;
  }
  Grading grading{deg};

  Grading gy{IntMat(d, sy)}, gz{IntMat(d, sz)};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < inst.s_sizes[i]; ++j) gy.deg.at(i, yoff[i] + j) = 1;
    for (int k = 0; k < inst.t_sizes[i]; ++k) gz.deg.at(i, zoff[i] + k) = 1;
  }
  for (const Poly& g : inst.gens_1) {
    if (!g.ring() || g.ring()->names != ry->names)
      fail("ring_mismatch", "first ideal generators live outside the y block ring");
    if (!g.is_zero() && !homogeneous_degree(gy, g))
      fail("invalid_argument", "first ideal generator is not homogeneous across blocks");
  }
  for (const Poly& g : inst.gens_2) {
    if (!g.ring() || g.ring()->names != rz->names)
      fail("ring_mismatch", "second ideal generators live outside the z block ring");
    if (!g.is_zero() && !homogeneous_degree(gz, g))
      fail("invalid_argument", "second ideal generator is not homogeneous across blocks");
  }

  std::vector<std::string> xnames;
  std::vector<int> xoff(static_cast<size_t>(d));
  int r = 0;
  for (int i = 0; i < d; ++i) {
    xoff[i] = r;
    r += inst.s_sizes[i] * inst.t_sizes[i];
    for (int j = 1; j <= inst.s_sizes[i]; ++j)
      for (int k = 1; k <= inst.t_sizes[i]; ++k)
        xnames.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j) + "_" +
                         std::to_string(k));
  }
  const RingPtr rx = make_ring(std::move(xnames));
  auto xidx = [&](int i, int j, int k) { return xoff[i] + j * inst.t_sizes[i] + k; };

  IntMat mm(sy + sz, r);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < inst.s_sizes[i]; ++j)
      for (int k = 0; k < inst.t_sizes[i]; ++k) {
        mm.at(yoff[i] + j, xidx(i, j, k)) = 1;
        mm.at(sy + zoff[i] + k, xidx(i, j, k)) = 1;
      }
  MonomialMap map = make_map(std::move(mm), rx, target_names);

  // Crossing order: a larger block beats a smaller one, a larger first index
  // beats a smaller one, and a smaller second index beats a larger one.
  std::vector<std::array<int, 3>> vars;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < inst.s_sizes[i]; ++j)
      for (int k = 0; k < inst.t_sizes[i]; ++k) vars.push_back({i, j, k});
  std::sort(vars.begin(), vars.end(), [](const auto& a, const auto& b) {
    if (a[0] != b[0]) return a[0] > b[0];
    if (a[1] != b[1]) return a[1] > b[1];
    return a[2] < b[2];
  });
  TermOrderSpec order;
  order.kind = OrderKind::Lex;
  for (const auto& v : vars) order.priority.push_back(xidx(v[0], v[1], v[2]));

  const CompiledOrder co = CompiledOrder::compile(order, r);
  std::vector<Poly> kern;
  for (int i = 0; i < d; ++i)
    for (int j1 = 0; j1 < inst.s_sizes[i]; ++j1)
      for (int j2 = j1 + 1; j2 < inst.s_sizes[i]; ++j2)
        for (int k1 = 0; k1 < inst.t_sizes[i]; ++k1)
          for (int k2 = k1 + 1; k2 < inst.t_sizes[i]; ++k2) {
            Exponents lead(static_cast<size_t>(r), 0), trail(static_cast<size_t>(r), 0);
            lead[xidx(i, j1, k2)] += 1;
            lead[xidx(i, j2, k1)] += 1;
            trail[xidx(i, j1, k1)] += 1;
            trail[xidx(i, j2, k2)] += 1;
            kern.push_back(Poly::monomial(rx, lead) - Poly::monomial(rx, trail));
          }
  std::sort(kern.begin(), kern.end(), [&](const Poly& a, const Poly& b) {
    return co.less(a.leading_term(co).exp, b.leading_term(co).exp);
  });
  GroebnerBasis kernel;
  kernel.ring = rx;
  kernel.order = order;
  kernel.elements = std::move(kern);
  for (const Poly& g : kernel.elements)
    kernel.initial_exponents.push_back(g.leading_term(co).exp);
  kernel.reduced = true;

  bool verified = false;
  if (r <= 18) {
    GroebnerBasis elim = toric_ideal(map, order);
    if (elim.elements != kernel.elements)
      fail("internal_error", "closed-form kernel disagrees with the elimination kernel");
    verified = true;
  }

  std::vector<Poly> gens;
  for (const Poly& g : inst.gens_1) gens.push_back(reencode(g, rs, 0));
  for (const Poly& g : inst.gens_2) gens.push_back(reencode(g, rs, sy));

  WeightVec w = inst.w1;
  w.insert(w.end(), inst.w2.begin(), inst.w2.end());

  std::vector<std::vector<long long>> h;
  for (int i = 0; i < d; ++i) {
    std::vector<long long> hi(static_cast<size_t>(2 * d), 0);
    hi[i] = 1;
    hi[d + i] = 1;
    h.push_back(std::move(hi));
  }

  ContractionProblem problem{std::move(map), std::move(grading), std::move(h),
                             IdealPresentation{rs, std::move(gens)}, std::move(w), order};
  return {std::move(problem), std::move(kernel), verified};
}

std::vector<int> NestedInstance::lambda() const {
  std::vector<int> l;
  for (const IntMat& b : blocks) l.push_back(b.cols);
  return l;
}

NestedResult nested_config(const NestedInstance& inst) {
  const int d = inst.block_count();
  if (d < 1) fail("invalid_argument", "need at least one block");
  if (inst.a_config.rows != d)
    fail("dimension_mismatch", "degree patterns and blocks disagree on the block count");
  if (inst.a_config.cols < 1) fail("invalid_argument", "need at least one degree pattern");
  if (!inst.a_config.nonnegative())
    fail("invalid_argument", "degree patterns must be nonnegative");
  const int nu = inst.v_matrix.rows;
  const int mu = inst.v_matrix.cols;
  if (static_cast<int>(inst.targets.size()) != d)
    fail("dimension_mismatch", "need one fiber target per block");
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(inst.targets[i].size()) != nu)
      fail("dimension_mismatch", "fiber target length differs from the property count");
    const IntMat& b = inst.blocks[i];
    if (b.rows != mu)
      fail("dimension_mismatch", "block rows differ from the property matrix columns");
    if (b.cols < 1) fail("invalid_argument", "empty block");
    for (int j = 0; j < b.cols; ++j)
      if (mat_apply(inst.v_matrix, b.col(j)) != inst.targets[i])
        fail("invalid_argument", "block column misses its fiber target");
  }
  {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& t : inst.targets) {
      std::vector<mpq_class> row;
      for (long long v : t) row.push_back(to_rational(v));
      rows.push_back(std::move(row));
    }
    if (rank_exact(std::move(rows)) != d)
      fail("invalid_argument", "fiber targets are linearly dependent");
  }
  if (!is_configuration(MonomialMap{inst.a_config, make_ring("p", inst.a_config.cols), {}}))
    fail("invalid_argument", "degree patterns do not admit a unit functional");

  const std::vector<int> lambda = inst.lambda();
  const int nv = std::accumulate(lambda.begin(), lambda.end(), 0);
  IntMat deg(d, nv);
  for (int i = 0, off = 0; i < d; off += lambda[i], ++i)
    for (int j = 0; j < lambda[i]; ++j) deg.at(i, off + j) = 1;
  Grading grading{std::move(deg)};

  std::vector<Exponents> cols;
  for (int c = 0; c < inst.a_config.cols; ++c) {
    std::vector<Exponents> fib = fiber(grading, inst.a_config.col(c));
    cols.insert(cols.end(), fib.begin(), fib.end());
  }
  const int n = static_cast<int>(cols.size());
  IntMat at(nv, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < nv; ++i) at.at(i, j) = cols[j][i];
  MonomialMap a_map = make_map(std::move(at), make_ring("x", n), make_ring("y", nv)->names);

  IntMat b(mu, nv);
  for (int i = 0, off = 0; i < d; off += lambda[i], ++i)
    for (int j = 0; j < lambda[i]; ++j)
      for (int rrow = 0; rrow < mu; ++rrow) b.at(rrow, off + j) = inst.blocks[i].at(rrow, j);

  ProductConfig product = matrix_product_config(b, a_map);
  return {std::move(a_map), std::move(product), std::move(b), std::move(grading)};
}

FlagshipReport flagship_example() {
  return flagship_example(std::string(CONTRAGB_DATA_DIR) + "/flagship");
}

FlagshipReport flagship_example(const std::string& data_dir) {
  FlagshipReport rep;
  rep.data_dir = data_dir;
  auto note = [&](std::string name, std::string detail) {
    rep.checks.push_back({std::move(name), std::move(detail)});
  };

  const NestedInstance inst =
      nested_instance_from_json(load_checked_json(data_dir, "nested_instance.json"));
  const IntMat b_fix = matrix_from_json(load_checked_json(data_dir, "b_matrix.json"));
  const IntMat at_fix = matrix_from_json(load_checked_json(data_dir, "a_tilde.json"));
  const IntMat prod_fix = matrix_from_json(load_checked_json(data_dir, "product.json"));
  const std::vector<long long> c0 = vector_from_json(load_checked_json(data_dir, "c0.json"));
  const Json tallies = load_checked_json(data_dir, "tallies.json");
  const std::vector<long long> sold_fix = vector_from_json(tallies.at("sold"));
  const std::vector<long long> ingredient_fix = vector_from_json(tallies.at("ingredients"));

  const NestedResult nested = nested_config(inst);
  if (nested.b_matrix != b_fix)
    fail("fixture_mismatch", "concatenated block matrix differs from the checked-in one");
  if (nested.a_tilde.matrix != at_fix)
    fail("fixture_mismatch", "fiber-union matrix differs from the checked-in one");
  if (nested.product.map.matrix != prod_fix)
    fail("fixture_mismatch", "composite matrix differs from the checked-in one");
  rep.duplicate_classes = nested.product.duplicate_classes;
  note("matrices", "fiber union and composite match the checked-in displays");

  rep.sold_tally = mat_apply(nested.a_tilde.matrix, c0);
  if (rep.sold_tally != sold_fix)
    fail("fixture_mismatch", "sold tally differs: got " + join_ll(rep.sold_tally));
  rep.ingredient_tally = mat_apply(nested.product.map.matrix, c0);
  if (rep.ingredient_tally != ingredient_fix)
    fail("fixture_mismatch", "ingredient tally differs: got " + join_ll(rep.ingredient_tally));
  note("tallies", "sold " + join_ll(rep.sold_tally) + ", ingredients " +
                      join_ll(rep.ingredient_tally));

  const RingPtr ry = make_ring(nested.a_tilde.target_names);
  const MonomialMap bmap = make_map(b_fix, ry);
  rep.pb_basis = toric_ideal(bmap, TermOrderSpec::lex(ry->nvars()));
  const std::vector<Poly> pb_fix = parse_lines(ry, load_checked_text(data_dir, "pb_basis.txt"));
  for (const Poly& p : pb_fix)
    if (std::find(rep.pb_basis.elements.begin(), rep.pb_basis.elements.end(), p) ==
        rep.pb_basis.elements.end())
      fail("fixture_mismatch", "product-matrix basis misses " + to_string(p));
  if (rep.pb_basis.elements.size() != pb_fix.size())
    fail("fixture_mismatch", "product-matrix basis has " +
                                 std::to_string(rep.pb_basis.elements.size()) + " elements, not " +
                                 std::to_string(pb_fix.size()));
  note("block-matrix kernel", std::to_string(pb_fix.size()) + " binomials match");

  const RingPtr rx = nested.product.map.source;
  const TermOrderSpec drl = TermOrderSpec::degrevlex(rx->nvars());
  rep.product_kernel = toric_ideal(nested.product.map, drl);
  const std::vector<Poly> gens33 = parse_lines(rx, load_checked_text(data_dir, "binomials33.txt"));
  const GroebnerBasis fix_gb = buchberger(IdealPresentation{rx, gens33}, drl);
  const size_t common = std::min(fix_gb.elements.size(), rep.product_kernel.elements.size());
  for (size_t i = 0; i < common; ++i)
    if (fix_gb.elements[i] != rep.product_kernel.elements[i])
      fail("fixture_mismatch", "composite kernel differs at " +
                                   to_string(rep.product_kernel.elements[i]) + " vs " +
                                   to_string(fix_gb.elements[i]));
  if (fix_gb.elements.size() != rep.product_kernel.elements.size())
    fail("fixture_mismatch", "composite kernel and the checked-in generators span different ideals");
  note("composite kernel", "equals the ideal of the " + std::to_string(gens33.size()) +
                               " checked-in binomials");

  std::optional<LexWitness> wit = search_lex_witness(nested.a_tilde, 2, 400);
  if (!wit)
    fail("no_order_found",
         "no lexicographic order with a squarefree quadratic fiber-union kernel in budget");
  rep.witness = std::move(*wit);
  note("witness order", "candidate " + std::to_string(rep.witness.candidate_index) +
                            " gives a squarefree quadratic kernel initial ideal");

  ContractionProblem prob;
  prob.map = nested.a_tilde;
  prob.grading = nested.grading;
  for (int c = 0; c < inst.a_config.cols; ++c) prob.h_generators.push_back(inst.a_config.col(c));
  prob.ideal = IdealPresentation{ry, rep.pb_basis.elements};
  prob.weight = weight_from_order(rep.pb_basis);
  prob.order = rep.witness.order;
  rep.contraction = contract_initial(prob);
  if (!rep.contraction.squarefree || rep.contraction.delta != 2)
    fail("fixture_mismatch", "pull-back initial ideal is not squarefree quadratic");
  note("structured pull-back", "squarefree quadratic initial ideal, delta 2");

  return rep;
}

}  // namespace cgb
