#pragma once

#include <optional>
#include <vector>

#include "skewalex/abelian_unit.hpp"
#include "skewalex/skew_poly.hpp"

namespace skewalex {

/// Dense matrix over K_gamma[t^+-1]. Column-vector convention: a matrix maps
/// column vectors by left multiplication, composition is the matrix product.
class SkewMatrix {
public:
  SkewMatrix(FieldSpec spec, int rows, int cols);
  static SkewMatrix identity(const FieldSpec& spec, int n);

  const FieldSpec& spec() const { return spec_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  SkewPoly& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const SkewPoly& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  SkewMatrix operator*(const SkewMatrix& o) const;
  SkewMatrix operator-(const SkewMatrix& o) const;
  SkewMatrix operator+(const SkewMatrix& o) const;
  bool operator==(const SkewMatrix& o) const;
  bool is_zero() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row_j <- row_j + c * row_i (left multiple; elementary).
  void add_left_multiple_of_row(int j, int i, const SkewPoly& c);
  /// col_k <- col_k + col_i * c (right multiple; elementary).
  void add_right_multiple_of_col(int k, int i, const SkewPoly& c);
  /// row_j <- c * row_j (not elementary; scales the Dieudonne determinant).
  void scale_row_left(int j, const SkewPoly& c);

  SkewMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
  SkewMatrix column(int j) const;

  std::string to_string() const;

private:
  FieldSpec spec_;
  int rows_, cols_;
  std::vector<SkewPoly> e_;
};

/// Dieudonne determinant of a square matrix, nullopt when the matrix is
/// singular over K_gamma(t). Elimination stays inside the ring: entries below
/// a pivot are cleared through common left multiples, whose left factors are
/// recorded as denominators.
std::optional<AbelianizedUnit> dieudonne_det(const SkewMatrix& m);

/// Rank over the quotient skew field K_gamma(t).
int matrix_rank(const SkewMatrix& m);

/// Determinant of a full-row-rank rectangular matrix (rows <= cols), defined
/// through the (D 0) normal form; well-defined up to kt^e. Throws
/// RankDeficient when rank < rows.
AbelianizedUnit det_fullrank_rect(const SkewMatrix& m);

/// Order of the module presented by K^cols -> K^rows -> H -> 0.
struct ModuleOrder {
  SkewPoly value;  // zero iff the module is not torsion
  Degree degree;
};
ModuleOrder module_order(const SkewMatrix& presentation);

/// Columns form a free basis of ker(m) as a K_gamma[t^+-1]-module; the
/// column count equals cols - rank.
SkewMatrix kernel_basis(const SkewMatrix& m);

/// Solves basis * X = b where the columns of b lie in the span of the basis
/// columns (a free summand). Throws InternalInvariantError otherwise.
SkewMatrix solve_in_column_span(const SkewMatrix& basis, const SkewMatrix& b);

/// Two-sided diagonalization by elementary row/column operations and swaps.
struct DiagonalForm {
  std::vector<SkewPoly> diagonal;  // nonzero pivots, in order
  int rank = 0;
  bool negated = false;  // odd number of swaps
};
DiagonalForm diagonalize(const SkewMatrix& m);

}  // namespace skewalex
