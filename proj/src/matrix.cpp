#include "cgb/matrix.hpp"

namespace cgb {

std::vector<long long> IntMat::col(int c) const {
  std::vector<long long> out(rows);
  for (int r = 0; r < rows; ++r) out[r] = at(r, c);
  return out;
}

bool IntMat::nonnegative() const {
  for (long long v : a)
    if (v < 0) return false;
  return true;
}

IntMat mat_mul(const IntMat& lhs, const IntMat& rhs) {
  if (lhs.cols != rhs.rows) fail("dimension_mismatch", "matrix product shape");
  IntMat out(lhs.rows, rhs.cols);
  for (int i = 0; i < lhs.rows; ++i)
    for (int k = 0; k < lhs.cols; ++k) {
      long long l = lhs.at(i, k);
      if (l == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += l * rhs.at(k, j);
    }
  return out;
}

std::vector<long long> mat_apply(const IntMat& m, const std::vector<long long>& v) {
  if (static_cast<int>(v.size()) != m.cols) fail("dimension_mismatch", "matrix-vector shape");
  std::vector<long long> out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

std::vector<std::vector<mpq_class>> to_rational_rows(const IntMat& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows, std::vector<mpq_class>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) rows[i][j] = mpq_class(static_cast<long>(m.at(i, j)));
  return rows;
}

namespace {

// Row echelon over Q; returns pivot columns. Mutates `m` (and `rhs` when given).
std::vector<int> echelon(std::vector<std::vector<mpq_class>>& m, std::vector<mpq_class>* rhs) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t nrows = m.size(), ncols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t p = row;
    while (p < nrows && m[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[row]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
    for (size_t i = 0; i < nrows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      mpq_class f = m[i][col] / m[row][col];
      for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
      if (rhs) (*rhs)[i] -= f * (*rhs)[row];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<mpq_class>> solve_exact(std::vector<std::vector<mpq_class>> m,
                                                  std::vector<mpq_class> rhs) {
  if (m.size() != rhs.size()) fail("dimension_mismatch", "linear system shape");
  if (m.empty()) return std::vector<mpq_class>{};
  size_t ncols = m[0].size();
  std::vector<int> pivots = echelon(m, &rhs);
  // Consistency: a zero row with nonzero right-hand side has no solution.
  for (size_t i = pivots.size(); i < m.size(); ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<mpq_class> x(ncols, 0);
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rhs[k] / m[k][pivots[k]];
  return x;
}

int rank_exact(std::vector<std::vector<mpq_class>> m) {
  return static_cast<int>(echelon(m, nullptr).size());
}

}  // namespace cgb
