#include "cgb/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cgb/errors.hpp"

namespace cgb {

MonomialMap make_map(IntMat matrix, RingPtr source, std::vector<std::string> target_names) {
  if (!source) fail("invalid_argument", "monomial map needs a source ring");
  if (matrix.cols != source->nvars())
    fail("invalid_argument", "matrix has one column per source variable");
  if (matrix.rows <= 0) fail("invalid_argument", "monomial map needs a positive target dimension");
  if (target_names.empty()) {
    for (int i = 1; i <= matrix.rows; ++i) target_names.push_back("z" + std::to_string(i));
  } else if (static_cast<int>(target_names.size()) != matrix.rows) {
    fail("invalid_argument", "one target name per matrix row");
  }
  return MonomialMap{std::move(matrix), std::move(source), std::move(target_names)};
}

std::vector<long long> apply_map(const MonomialMap& map, const Exponents& e) {
  if (static_cast<int>(e.size()) != map.source_dim())
    fail("invalid_argument", "exponent size does not match the map source");
  return mat_apply(map.matrix, std::vector<long long>(e.begin(), e.end()));
}

GroebnerBasis toric_ideal(const MonomialMap& map, const TermOrderSpec& source_order) {
  const int s = map.source_dim();
  const int mu = map.target_dim();
  source_order.validate(s);

  const bool laurent = !map.matrix.nonnegative();
  const int elim = mu + (laurent ? 1 : 0);
  const int total = elim + s;

  std::vector<std::string> names;
  for (int i = 1; i <= mu; ++i) names.push_back("@z" + std::to_string(i));
  if (laurent) names.push_back("@t");
  for (const auto& n : map.source->names) names.push_back("@" + n);
  RingPtr big = make_ring(std::move(names));

  std::vector<Poly> gens;
  for (int j = 0; j < s; ++j) {
    Exponents lhs(total, 0), rhs(total, 0);
    lhs[elim + j] = 1;
    for (int i = 0; i < mu; ++i) {
      long long c = map.matrix.at(i, j);
      if (c >= 0)
        rhs[i] = static_cast<int>(c);
      else
        lhs[i] = static_cast<int>(-c);
    }
    gens.push_back(Poly::monomial(big, lhs, 1) - Poly::monomial(big, rhs, 1));
  }
  if (laurent) {
    Exponents all(total, 0);
    for (int i = 0; i <= mu; ++i) all[i] = 1;
    gens.push_back(Poly::monomial(big, all, 1) - Poly::monomial(big, Exponents(total, 0), 1));
  }

  std::vector<int> elim_pos(elim), kept_pos(s);
  std::iota(elim_pos.begin(), elim_pos.end(), 0);
  std::iota(kept_pos.begin(), kept_pos.end(), elim);
  CompiledOrder ord = CompiledOrder::elimination(total, elim_pos, source_order, kept_pos);

  std::vector<Poly> basis = buchberger_core(gens, ord);

  CompiledOrder src_ord = CompiledOrder::compile(source_order, s);
  GroebnerBasis out;
  out.ring = map.source;
  out.order = source_order;
  out.reduced = true;
  for (const Poly& g : basis) {
    bool pure = true;
    for (const Term& t : g.terms())
      for (int i = 0; i < elim && pure; ++i)
        if (t.exp[i] != 0) pure = false;
    if (!pure) continue;
    std::vector<Term> stripped;
    for (const Term& t : g.terms())
      stripped.push_back({Exponents(t.exp.begin() + elim, t.exp.end()), t.coef});
    out.elements.push_back(Poly::from_terms(map.source, stripped));
  }
  std::sort(out.elements.begin(), out.elements.end(), [&](const Poly& a, const Poly& b) {
    return src_ord.compare(a.leading_term(src_ord).exp, b.leading_term(src_ord).exp) == Cmp::Less;
  });
  for (const Poly& g : out.elements) out.initial_exponents.push_back(g.leading_term(src_ord).exp);
  return out;
}

namespace {

std::vector<std::vector<long long>> distinct_columns(const IntMat& m) {
  std::vector<std::vector<long long>> cols;
  for (int j = 0; j < m.cols; ++j) {
    auto c = m.col(j);
    if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
  }
  return cols;
}

// Solve lambda . c = 1 for every column c in `cols`.
std::optional<std::vector<mpq_class>> functional_with_value_one(
    const std::vector<std::vector<long long>>& cols) {
  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  for (const auto& c : cols) {
    std::vector<mpq_class> row;
    for (long long v : c) row.push_back(to_rational(v));
    rows.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  return solve_exact(rows, rhs);
}

bool strictly_positive_on_columns(const IntMat& m, const std::vector<mpq_class>& lam) {
  for (int j = 0; j < m.cols; ++j) {
    mpq_class v = 0;
    for (int i = 0; i < m.rows; ++i) v += lam[static_cast<size_t>(i)] * to_rational(m.at(i, j));
    if (v <= 0) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<mpq_class>> positive_functional(const IntMat& m) {
  auto cols = distinct_columns(m);
  if (rank_exact(to_rational_rows(m)) == static_cast<int>(cols.size())) {
    if (auto lam = functional_with_value_one(cols)) {
      if (strictly_positive_on_columns(m, *lam)) return lam;
    }
  }
  std::vector<mpq_class> ones(static_cast<size_t>(m.rows), 1);
  if (strictly_positive_on_columns(m, ones)) return ones;

  // Perceptron over the constraints lambda . c >= 1, integer steps.
  std::vector<long long> lam(static_cast<size_t>(m.rows), 1);
  const long long max_rounds = 200000;
  for (long long round = 0; round < max_rounds; ++round) {
    bool ok = true;
    for (int j = 0; j < m.cols; ++j) {
      long long v = 0;
      for (int i = 0; i < m.rows; ++i) v += lam[static_cast<size_t>(i)] * m.at(i, j);
      if (v < 1) {
        for (int i = 0; i < m.rows; ++i) lam[static_cast<size_t>(i)] += m.at(i, j);
        ok = false;
      }
    }
    if (ok) {
      std::vector<mpq_class> out;
      for (long long v : lam) out.push_back(to_rational(v));
      if (strictly_positive_on_columns(m, out)) return out;
      break;
    }
  }
  return std::nullopt;
}

std::vector<Exponents> fiber(const Grading& grading, const std::vector<long long>& target) {
  const IntMat& m = grading.deg;
  if (static_cast<int>(target.size()) != m.rows)
    fail("invalid_argument", "fiber target size does not match the grading dimension");
  auto lam = positive_functional(m);
  if (!lam) fail("unbounded_fiber", "no positivity certificate for the grading columns");

  const int s = m.cols;
  std::vector<mpq_class> col_value(static_cast<size_t>(s), 0);
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < m.rows; ++i) col_value[static_cast<size_t>(j)] += (*lam)[static_cast<size_t>(i)] * to_rational(m.at(i, j));

  std::vector<Exponents> out;
  Exponents a(static_cast<size_t>(s), 0);
  std::vector<long long> residual = target;
  mpq_class residual_value = 0;
  for (int i = 0; i < m.rows; ++i) residual_value += (*lam)[static_cast<size_t>(i)] * to_rational(target[static_cast<size_t>(i)]);

  // Descending choice at each position yields descending lexicographic output.
  auto rec = [&](auto&& self, int j) -> void {
    if (residual_value < 0) return;
    if (j == s) {
      if (std::all_of(residual.begin(), residual.end(), [](long long v) { return v == 0; }))
        out.push_back(a);
      return;
    }
    mpq_class cap_q = residual_value / col_value[static_cast<size_t>(j)];
    mpz_class cap_z = cap_q.get_num() / cap_q.get_den();
    long long cap = cap_z.get_si();
    if (cap < 0) cap = 0;
    for (long long k = cap; k >= 0; --k) {
      a[static_cast<size_t>(j)] = static_cast<int>(k);
      for (int i = 0; i < m.rows; ++i) residual[static_cast<size_t>(i)] -= k * m.at(i, j);
      residual_value -= to_rational(k) * col_value[static_cast<size_t>(j)];
      self(self, j + 1);
      for (int i = 0; i < m.rows; ++i) residual[static_cast<size_t>(i)] += k * m.at(i, j);
      residual_value += to_rational(k) * col_value[static_cast<size_t>(j)];
      a[static_cast<size_t>(j)] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Exponents> semigroup_generators(const SemigroupSpec& spec) {
  const IntMat& m = spec.grading.deg;
  auto cols = distinct_columns(m);
  if (rank_exact(to_rational_rows(m)) != static_cast<int>(cols.size()))
    fail("unsupported_semigroup", "distinct grading columns are linearly dependent");
  std::vector<Exponents> out;
  for (const auto& h : spec.h_generators) {
    auto fib = fiber(spec.grading, h);
    if (fib.empty()) fail("not_in_semigroup", "degree generator has an empty fiber");
    for (auto& a : fib) {
      if (total_degree(a) == 0) continue;
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
    }
  }
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) { return lex_less(b, a); });
  return out;
}

std::optional<std::vector<mpq_class>> is_configuration(const MonomialMap& map) {
  return functional_with_value_one(distinct_columns(map.matrix));
}

std::vector<std::vector<int>> duplicate_columns(const IntMat& m) {
  std::map<std::vector<long long>, std::vector<int>> groups;
  std::vector<std::vector<long long>> order;
  for (int j = 0; j < m.cols; ++j) {
    auto c = m.col(j);
    if (groups.find(c) == groups.end()) order.push_back(c);
    groups[c].push_back(j);
  }
  std::vector<std::vector<int>> out;
  for (const auto& c : order)
    if (groups[c].size() > 1) out.push_back(groups[c]);
  return out;
}

ProductConfig matrix_product_config(const IntMat& outer, const MonomialMap& inner) {
  if (outer.cols != inner.target_dim())
    fail("invalid_argument", "outer matrix columns must match the inner target dimension");
  IntMat prod = mat_mul(outer, inner.matrix);
  auto classes = duplicate_columns(prod);
  MonomialMap map = make_map(std::move(prod), inner.source);
  return ProductConfig{std::move(map), std::move(classes)};
}

}  // namespace cgb
