#pragma once

#include <cstdint>
#include <vector>

namespace skewalex {

using IntVec = std::vector<std::int64_t>;

/// Dense square integer matrix, used for monomial automorphisms (elements of
/// GL(m,Z)) and for the Z^m x| Z group law. Sizes stay tiny.
class IntMat {
public:
  IntMat() = default;
  IntMat(int rows, int cols);
  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  std::int64_t at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  IntMat operator*(const IntMat& o) const;
  IntVec operator*(const IntVec& v) const;
  bool operator==(const IntMat& o) const = default;

  bool is_identity() const;
  std::int64_t determinant() const;

  /// Inverse of a matrix with determinant +-1; throws otherwise.
  IntMat inverse_unimodular() const;

  /// Integer power, negative exponents via the unimodular inverse.
  IntMat power(std::int64_t k) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> e_;
};

IntVec add(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& a);

}  // namespace skewalex
