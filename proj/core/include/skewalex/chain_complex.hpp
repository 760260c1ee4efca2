#pragma once

#include <optional>
#include <vector>

#include "skewalex/skew_matrix.hpp"

namespace skewalex {

/// Finite free chain complex 0 -> C_n -> ... -> C_1 -> C_0 -> 0 over
/// K_gamma[t^+-1]. boundaries[i-1] is the matrix A_i of
/// del_i : C_i -> C_{i-1}, of shape ranks[i-1] x ranks[i].
/// del o del = 0 is checked at construction.
class FreeChainComplex {
public:
  FreeChainComplex(FieldSpec spec, std::vector<int> ranks, std::vector<SkewMatrix> boundaries);

  const FieldSpec& spec() const { return spec_; }
  int top_dimension() const { return static_cast<int>(ranks_.size()) - 1; }
  const std::vector<int>& ranks() const { return ranks_; }
  int rank(int i) const { return ranks_[i]; }
  /// A_i for i in 1..n.
  const SkewMatrix& boundary(int i) const { return boundaries_[i - 1]; }

private:
  FieldSpec spec_;
  std::vector<int> ranks_;
  std::vector<SkewMatrix> boundaries_;
};

/// Matrix chain xi = (xi_0,...,xi_n): xi_i is a set of column indices
/// (0-based) of A_i, with xi_0 empty. It is a tau-chain when every extracted
/// block A_i(xi) is square.
using MatrixChain = std::vector<std::vector<int>>;

/// A_i(xi): the columns of A_i in xi_i, with the xi_{i-1} rows removed.
SkewMatrix submatrix_of_chain(const FreeChainComplex& c, const MatrixChain& xi, int i);

struct TorsionResult {
  bool defined = false;
  std::optional<AbelianizedUnit> value;  // set iff defined
  std::int64_t degree() const;           // requires defined
};

/// Turaev's tau-chain formula: tau = prod A_i(xi)^((-1)^i). Throws
/// OddBlockSingular when an odd block is singular; a singular even block
/// means nonzero homology, reported as defined = false.
TorsionResult torsion_via_tau_chain(const FreeChainComplex& c, const MatrixChain& xi);

/// Searches for a tau-chain with invertible odd blocks. Hints are optional
/// per-level column subsets tried first. Bounded search; nullopt when
/// exhausted.
std::optional<MatrixChain> find_tau_chain(
    const FreeChainComplex& c,
    const std::vector<std::optional<std::vector<int>>>& hints = {},
    int candidate_cap = 10000);

/// Twisted Alexander polynomials: orders[i] = Delta_i = ord H_i.
struct AlexanderPolys {
  std::vector<ModuleOrder> orders;
  bool all_nonzero() const;
};
AlexanderPolys alexander_polynomials(const FreeChainComplex& c);

/// Cross-check of det(tau) = prod Delta_i^((-1)^{i+1}): recomputes both
/// sides independently. Degree equality always; reduced value equality up to
/// kt^e over commutative specs. A mismatch is an internal bug and throws.
struct Theorem1Report {
  bool torsion_defined = false;
  std::int64_t tau_degree = 0;
  std::int64_t alternating_degree_sum = 0;
  std::vector<std::int64_t> alexander_degrees;
  bool value_checked = false;  // commutative specs only
};
Theorem1Report check_theorem1(const FreeChainComplex& c);

}  // namespace skewalex
