#include "skewalex/int_matrix.hpp"

#include "skewalex/errors.hpp"

namespace skewalex {

IntMat::IntMat(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw ShapeError("integer matrix product shape mismatch");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const std::int64_t a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeError("integer matrix-vector shape mismatch");
  IntVec r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::int64_t IntMat::determinant() const {
  if (rows_ != cols_) throw ShapeError("determinant of non-square integer matrix");
  const int n = rows_;
  if (n == 0) return 1;
  // Laplace expansion; matrices here are at most a handful of rows.
  if (n == 1) return at(0, 0);
  if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  std::int64_t det = 0;
  for (int j = 0; j < n; ++j) {
    if (at(0, j) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = at(i, c);
      }
    }
    const std::int64_t term = at(0, j) * minor.determinant();
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

IntMat IntMat::inverse_unimodular() const {
  const std::int64_t d = determinant();
  if (d != 1 && d != -1) throw PreconditionError("matrix is not in GL(m,Z)");
  const int n = rows_;
  IntMat adj(n, n);
  if (n == 0) return adj;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = at(r, c);
        }
        ++rr;
      }
      std::int64_t cof = minor.determinant();
      if ((i + j) % 2 != 0) cof = -cof;
      adj.at(j, i) = cof * d;  // d = 1/d for d = +-1
    }
  return adj;
}

IntMat IntMat::power(std::int64_t k) const {
  if (rows_ != cols_) throw ShapeError("power of non-square integer matrix");
  IntMat base = k >= 0 ? *this : inverse_unimodular();
  std::int64_t e = k >= 0 ? k : -k;
  IntMat acc = identity(rows_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ShapeError("integer vector size mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec negate(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

}  // namespace skewalex
