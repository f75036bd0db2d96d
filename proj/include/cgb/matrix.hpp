#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cgb/errors.hpp"

namespace cgb {

// gmpxx has no long long overloads; long is 64-bit on every supported target.
inline mpq_class to_rational(long long v) { return mpq_class(static_cast<long>(v)); }

// Dense integer matrix, row-major.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  std::vector<long long> col(int c) const;
  bool nonnegative() const;
  bool operator==(const IntMat&) const = default;
};

IntMat mat_mul(const IntMat& lhs, const IntMat& rhs);
std::vector<long long> mat_apply(const IntMat& m, const std::vector<long long>& v);

// One exact solution of m * x = rhs over Q, if the system is consistent.
std::optional<std::vector<mpq_class>> solve_exact(std::vector<std::vector<mpq_class>> m,
                                                  std::vector<mpq_class> rhs);
int rank_exact(std::vector<std::vector<mpq_class>> m);

std::vector<std::vector<mpq_class>> to_rational_rows(const IntMat& m);

}  // namespace cgb
