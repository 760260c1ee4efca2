#include "skewalex/skew_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewalex/errors.hpp"

namespace skewalex {

SkewMatrix::SkewMatrix(FieldSpec spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, SkewPoly(spec_)) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
}

SkewMatrix SkewMatrix::identity(const FieldSpec& spec, int n) {
  SkewMatrix m(spec, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = SkewPoly::one(spec);
  return m;
}

SkewMatrix SkewMatrix::operator*(const SkewMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  if (spec_ != o.spec_) throw FieldMismatch("matrices over different fields");
  SkewMatrix r(spec_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const SkewPoly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * o.at(k, j);
      }
    }
  return r;
}

SkewMatrix SkewMatrix::operator-(const SkewMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  SkewMatrix r(spec_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

SkewMatrix SkewMatrix::operator+(const SkewMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  SkewMatrix r(spec_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

bool SkewMatrix::operator==(const SkewMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && spec_ == o.spec_ && e_ == o.e_;
}

bool SkewMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const SkewPoly& p) { return p.is_zero(); });
}

void SkewMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void SkewMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void SkewMatrix::add_left_multiple_of_row(int j, int i, const SkewPoly& c) {
  for (int k = 0; k < cols_; ++k) at(j, k) = at(j, k) + c * at(i, k);
}

void SkewMatrix::add_right_multiple_of_col(int k, int i, const SkewPoly& c) {
  for (int j = 0; j < rows_; ++j) at(j, k) = at(j, k) + at(j, i) * c;
}

void SkewMatrix::scale_row_left(int j, const SkewPoly& c) {
  for (int k = 0; k < cols_; ++k) at(j, k) = c * at(j, k);
}

SkewMatrix SkewMatrix::submatrix(const std::vector<int>& row_idx,
                                 const std::vector<int>& col_idx) const {
  SkewMatrix r(spec_, static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j) r.at(i, j) = at(row_idx[i], col_idx[j]);
  return r;
}

SkewMatrix SkewMatrix::column(int j) const {
  return submatrix([&] {
    std::vector<int> all(rows_);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }(), {j});
}

std::string SkewMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[ ";
    for (int j = 0; j < cols_; ++j) os << at(i, j).to_string() << (j + 1 < cols_ ? " | " : " ");
    os << "]\n";
  }
  return os.str();
}

namespace {

std::int64_t span_of(const SkewPoly& p) { return p.degree().value; }

// Position of the nonzero entry with minimal degree span in the submatrix
// rows >= i0, cols >= j0; ties by lowest (row, col). Returns false if the
// submatrix is zero.
bool find_pivot(const SkewMatrix& m, int i0, int j0, int& pi, int& pj) {
  bool found = false;
  std::int64_t best = 0;
  for (int i = i0; i < m.rows(); ++i)
    for (int j = j0; j < m.cols(); ++j) {
      const SkewPoly& p = m.at(i, j);
      if (p.is_zero()) continue;
      const std::int64_t s = span_of(p);
      if (!found || s < best) {
        found = true;
        best = s;
        pi = i;
        pj = j;
      }
    }
  return found;
}

// Factors the scalar content out of a row; the row was equal to
// (returned scalar) * (new row). Returns 1 when there is nothing to do.
Scalar extract_row_content(SkewMatrix& w, int row) {
  std::vector<const SkewPoly*> entries;
  for (int j = 0; j < w.cols(); ++j)
    if (!w.at(row, j).is_zero()) entries.push_back(&w.at(row, j));
  if (entries.empty()) return Scalar::one(w.spec());
  const Scalar c = coefficient_content(w.spec(), entries);
  if (c.is_zero() || c.is_one()) return Scalar::one(w.spec());
  const Scalar ci = c.inverse();
  for (int j = 0; j < w.cols(); ++j)
    if (!w.at(row, j).is_zero()) w.at(row, j) = w.at(row, j).scaled_left(ci);
  return c;
}

struct Elimination {
  SkewMatrix work;
  std::vector<SkewPoly> left_factors;   // recorded u's (determinant denominators)
  std::vector<Scalar> content_factors;  // extracted row contents (numerators)
  int rank = 0;
  bool negated = false;
};

// Fraction-free row elimination with full pivoting: clears below-pivot
// entries with common left multiples, recording the left factor applied to
// each target row and every scalar content pulled out along the way.
Elimination eliminate_rows(const SkewMatrix& m) {
  Elimination r{m, {}, {}, 0, false};
  SkewMatrix& w = r.work;
  for (int row = 0; row < w.rows(); ++row) {
    const Scalar c = extract_row_content(w, row);
    if (!c.is_one()) r.content_factors.push_back(c);
  }
  const int n = std::min(w.rows(), w.cols());
  for (int i = 0; i < n; ++i) {
    int pi, pj;
    if (!find_pivot(w, i, i, pi, pj)) return r;
    if (pi != i) {
      w.swap_rows(i, pi);
      r.negated = !r.negated;
    }
    if (pj != i) {
      w.swap_cols(i, pj);
      r.negated = !r.negated;
    }
    for (int j = i + 1; j < w.rows(); ++j) {
      if (w.at(j, i).is_zero()) continue;
      auto [u, v] = common_left_multiple(w.at(j, i), w.at(i, i));
      w.scale_row_left(j, u);
      w.add_left_multiple_of_row(j, i, -v);
      if (!w.at(j, i).is_zero())
        throw InternalInvariantError("row elimination failed to clear entry");
      r.left_factors.push_back(std::move(u));
      const Scalar c = extract_row_content(w, j);
      if (!c.is_one()) r.content_factors.push_back(c);
    }
    ++r.rank;
  }
  return r;
}

}  // namespace

std::optional<AbelianizedUnit> dieudonne_det(const SkewMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("Dieudonne determinant of non-square matrix");
  Elimination e = eliminate_rows(m);
  if (e.rank < m.rows()) return std::nullopt;
  AbelianizedUnit det(m.spec());
  if (e.negated)
    det.push_numerator(SkewPoly::constant(-Scalar::one(m.spec())));
  for (int i = 0; i < m.rows(); ++i) det.push_numerator(e.work.at(i, i));
  for (const auto& c : e.content_factors) det.push_numerator(SkewPoly::constant(c));
  for (const auto& u : e.left_factors) det.push_denominator(u);
  return det;
}

int matrix_rank(const SkewMatrix& m) { return eliminate_rows(m).rank; }

DiagonalForm diagonalize(const SkewMatrix& m) {
  DiagonalForm r;
  SkewMatrix w = m;
  // Scalar row contents are kt^0 units; the diagonal is only meaningful up
  // to kt^e, so they are dropped rather than recorded.
  for (int row = 0; row < w.rows(); ++row) extract_row_content(w, row);
  const int n = std::min(w.rows(), w.cols());
  for (int i = 0; i < n; ++i) {
    int pi, pj;
    if (!find_pivot(w, i, i, pi, pj)) break;
    if (pi != i) {
      w.swap_rows(i, pi);
      r.negated = !r.negated;
    }
    if (pj != i) {
      w.swap_cols(i, pj);
      r.negated = !r.negated;
    }
    // Euclidean sweeps shrink the pivot until its row and column are clear.
    while (true) {
      bool clean = true;
      for (int j = i + 1; j < w.rows(); ++j) {
        if (w.at(j, i).is_zero()) continue;
        auto [q, rem] = left_divide(w.at(j, i), w.at(i, i));
        w.add_left_multiple_of_row(j, i, -q);
        extract_row_content(w, j);
        if (!rem.is_zero()) clean = false;
      }
      for (int k = i + 1; k < w.cols(); ++k) {
        if (w.at(i, k).is_zero()) continue;
        auto [q, rem] = right_divide(w.at(i, k), w.at(i, i));
        w.add_right_multiple_of_col(k, i, -q);
        if (!rem.is_zero()) clean = false;
      }
      if (clean) break;
      int qi, qj;
      if (!find_pivot(w, i, i, qi, qj))
        throw InternalInvariantError("pivot vanished during diagonalization");
      if (qi != i) {
        w.swap_rows(i, qi);
        r.negated = !r.negated;
      }
      if (qj != i) {
        w.swap_cols(i, qj);
        r.negated = !r.negated;
      }
    }
    r.diagonal.push_back(w.at(i, i));
    ++r.rank;
  }
  return r;
}

AbelianizedUnit det_fullrank_rect(const SkewMatrix& m) {
  if (m.rows() > m.cols())
    throw RankDeficient("more rows than columns; rank cannot reach the row count");
  DiagonalForm d = diagonalize(m);
  if (d.rank < m.rows()) throw RankDeficient("matrix does not have full row rank");
  AbelianizedUnit det(m.spec());
  if (d.negated) det.push_numerator(SkewPoly::constant(-Scalar::one(m.spec())));
  for (const auto& p : d.diagonal) det.push_numerator(p);
  det.set_unit_ambiguous(true);
  return det;
}

ModuleOrder module_order(const SkewMatrix& presentation) {
  DiagonalForm d = diagonalize(presentation);
  const FieldSpec& spec = presentation.spec();
  if (d.rank < presentation.rows())
    return {SkewPoly::zero(spec), Degree::infinite()};
  SkewPoly order = SkewPoly::one(spec);
  std::int64_t deg = 0;
  for (const auto& p : d.diagonal) {
    order = order * p;
    deg += p.degree().value;
  }
  return {order, Degree::of(deg)};
}

namespace {

// Column echelon pass: returns the transformed matrix h = m * q with q
// invertible over the ring, the pivot row of each pivot column (-1 for the
// all-zero columns), and q itself.
struct ColumnEchelon {
  SkewMatrix h, q;
  std::vector<int> pivot_row;  // per column of h
};

ColumnEchelon column_echelon(const SkewMatrix& m) {
  ColumnEchelon ce{m, SkewMatrix::identity(m.spec(), m.cols()),
                   std::vector<int>(m.cols(), -1)};
  std::vector<int> active(m.cols());
  std::iota(active.begin(), active.end(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    while (true) {
      std::vector<int> hit;
      for (int k : active)
        if (!ce.h.at(i, k).is_zero()) hit.push_back(k);
      if (hit.size() <= 1) {
        if (hit.size() == 1) {
          ce.pivot_row[hit[0]] = i;
          active.erase(std::find(active.begin(), active.end(), hit[0]));
        }
        break;
      }
      int p = hit[0];
      for (int k : hit)
        if (span_of(ce.h.at(i, k)) < span_of(ce.h.at(i, p))) p = k;
      for (int k : hit) {
        if (k == p) continue;
        auto [q, rem] = right_divide(ce.h.at(i, k), ce.h.at(i, p));
        ce.h.add_right_multiple_of_col(k, p, -q);
        ce.q.add_right_multiple_of_col(k, p, -q);
      }
    }
  }
  return ce;
}

}  // namespace

SkewMatrix kernel_basis(const SkewMatrix& m) {
  ColumnEchelon ce = column_echelon(m);
  std::vector<int> zero_cols;
  for (int k = 0; k < m.cols(); ++k)
    if (ce.pivot_row[k] < 0) zero_cols.push_back(k);
  std::vector<int> all_rows(m.cols());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  return ce.q.submatrix(all_rows, zero_cols);
}

SkewMatrix solve_in_column_span(const SkewMatrix& basis, const SkewMatrix& b) {
  if (basis.rows() != b.rows()) throw ShapeError("solve: row counts differ");
  ColumnEchelon ce = column_echelon(basis);
  // A basis must come out with every column pivoted.
  std::vector<std::pair<int, int>> pivots;  // (row, col), ascending rows
  for (int k = 0; k < basis.cols(); ++k) {
    if (ce.pivot_row[k] < 0)
      throw InternalInvariantError("basis columns are not independent");
    pivots.emplace_back(ce.pivot_row[k], k);
  }
  std::sort(pivots.begin(), pivots.end());
  SkewMatrix y(basis.spec(), basis.cols(), b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    std::vector<SkewPoly> res;
    res.reserve(b.rows());
    for (int i = 0; i < b.rows(); ++i) res.push_back(b.at(i, c));
    for (auto [prow, pcol] : pivots) {
      if (res[prow].is_zero()) continue;
      auto [q, rem] = right_divide(res[prow], ce.h.at(prow, pcol));
      if (!rem.is_zero())
        throw InternalInvariantError("vector not in the span of the basis");
      y.at(pcol, c) = q;
      for (int i = 0; i < basis.rows(); ++i)
        res[i] = res[i] - ce.h.at(i, pcol) * q;
    }
    for (const auto& p : res)
      if (!p.is_zero())
        throw InternalInvariantError("vector not in the span of the basis");
  }
  return ce.q * y;
}

}  // namespace skewalex
