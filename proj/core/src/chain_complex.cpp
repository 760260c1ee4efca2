#include "skewalex/chain_complex.hpp"

#include <algorithm>
#include <numeric>

#include "skewalex/errors.hpp"

namespace skewalex {

FreeChainComplex::FreeChainComplex(FieldSpec spec, std::vector<int> ranks,
                                   std::vector<SkewMatrix> boundaries)
    : spec_(std::move(spec)), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) throw ShapeError("chain complex needs at least one level");
  if (boundaries_.size() + 1 != ranks_.size())
    throw ShapeError("chain complex needs one boundary per adjacent level pair");
  for (size_t i = 0; i < boundaries_.size(); ++i) {
    const SkewMatrix& a = boundaries_[i];
    if (a.spec() != spec_) throw FieldMismatch("boundary over a different field");
    if (a.rows() != ranks_[i] || a.cols() != ranks_[i + 1])
      throw ShapeError("boundary matrix shape does not match ranks");
  }
  for (size_t i = 0; i + 1 < boundaries_.size(); ++i) {
    if (!(boundaries_[i] * boundaries_[i + 1]).is_zero())
      throw BoundaryCheckFailed("del o del != 0");
  }
}

SkewMatrix submatrix_of_chain(const FreeChainComplex& c, const MatrixChain& xi, int i) {
  const int n = c.top_dimension();
  if (static_cast<int>(xi.size()) != n + 1) throw ShapeError("matrix chain has wrong length");
  if (!xi[0].empty()) throw ShapeError("xi_0 must be empty");
  if (i < 1 || i > n) throw ShapeError("boundary index out of range");
  std::vector<int> rows;
  for (int r = 0; r < c.rank(i - 1); ++r)
    if (std::find(xi[i - 1].begin(), xi[i - 1].end(), r) == xi[i - 1].end()) rows.push_back(r);
  const std::vector<int>& cols = xi[i];
  for (int k : cols)
    if (k < 0 || k >= c.rank(i)) throw ShapeError("chain column index out of range");
  if (rows.size() != cols.size())
    throw ShapeError("not a tau-chain: extracted block is not square at level " +
                     std::to_string(i));
  return c.boundary(i).submatrix(rows, cols);
}

std::int64_t TorsionResult::degree() const {
  if (!defined || !value) throw PreconditionError("torsion is not defined");
  return value->degree();
}

TorsionResult torsion_via_tau_chain(const FreeChainComplex& c, const MatrixChain& xi) {
  const int n = c.top_dimension();
  AbelianizedUnit tau(c.spec());
  for (int i = 1; i <= n; ++i) {
    const SkewMatrix block = submatrix_of_chain(c, xi, i);
    const auto det = dieudonne_det(block);
    const bool odd = (i % 2) != 0;
    if (!det) {
      if (odd)
        throw OddBlockSingular("A_" + std::to_string(i) + "(xi) is singular");
      return TorsionResult{false, std::nullopt};
    }
    // tau = prod A_i(xi)^((-1)^i): even blocks to the numerator, odd to the
    // denominator.
    tau.multiply_by(*det, /*inverted=*/odd);
  }
  tau.set_sign_ambiguous(true);
  return TorsionResult{true, std::move(tau)};
}

namespace {

// Enumerates size-k subsets of {0..m-1} in lexicographic order, starting
// from a preferred subset when given.
class SubsetIter {
public:
  SubsetIter(int m, int k, std::optional<std::vector<int>> preferred)
      : m_(m), k_(k), preferred_(std::move(preferred)) {}

  std::optional<std::vector<int>> next() {
    if (preferred_) {
      auto p = *preferred_;
      preferred_.reset();
      std::sort(p.begin(), p.end());
      if (static_cast<int>(p.size()) == k_) return p;
      // fall through to systematic enumeration when the hint is unusable
    }
    if (!started_) {
      started_ = true;
      if (k_ > m_) return std::nullopt;
      cur_.resize(k_);
      std::iota(cur_.begin(), cur_.end(), 0);
      return cur_;
    }
    // classic next-combination
    int i = k_ - 1;
    while (i >= 0 && cur_[i] == m_ - k_ + i) --i;
    if (i < 0) return std::nullopt;
    ++cur_[i];
    for (int j = i + 1; j < k_; ++j) cur_[j] = cur_[j - 1] + 1;
    return cur_;
  }

private:
  int m_, k_;
  std::optional<std::vector<int>> preferred_;
  bool started_ = false;
  std::vector<int> cur_;
};

bool search_chain(const FreeChainComplex& c, int level, const std::vector<int>& sizes,
                  MatrixChain& xi, const std::vector<std::optional<std::vector<int>>>& hints,
                  int& budget) {
  const int n = c.top_dimension();
  if (level > n) return true;
  const int k = sizes[level];
  SubsetIter it(c.rank(level), k,
                level < static_cast<int>(hints.size()) ? hints[level] : std::nullopt);
  while (auto cols = it.next()) {
    if (--budget < 0) return false;
    xi[level] = *cols;
    if (level % 2 == 1) {
      const SkewMatrix block = submatrix_of_chain(c, xi, level);
      if (matrix_rank(block) < block.rows()) continue;
    }
    if (search_chain(c, level + 1, sizes, xi, hints, budget)) return true;
  }
  xi[level].clear();
  return false;
}

}  // namespace

std::optional<MatrixChain> find_tau_chain(
    const FreeChainComplex& c, const std::vector<std::optional<std::vector<int>>>& hints,
    int candidate_cap) {
  const int n = c.top_dimension();
  std::vector<int> sizes(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    sizes[i] = c.rank(i - 1) - sizes[i - 1];
    if (sizes[i] < 0 || sizes[i] > c.rank(i)) return std::nullopt;
  }
  MatrixChain xi(n + 1);
  int budget = candidate_cap;
  if (!search_chain(c, 1, sizes, xi, hints, budget)) return std::nullopt;
  return xi;
}

bool AlexanderPolys::all_nonzero() const {
  return std::all_of(orders.begin(), orders.end(),
                     [](const ModuleOrder& o) { return !o.value.is_zero(); });
}

AlexanderPolys alexander_polynomials(const FreeChainComplex& c) {
  const int n = c.top_dimension();
  AlexanderPolys result;
  for (int i = 0; i <= n; ++i) {
    // ker del_i: all of C_i at the bottom, else computed.
    SkewMatrix kb = (i == 0) ? SkewMatrix::identity(c.spec(), c.rank(0))
                             : kernel_basis(c.boundary(i));
    SkewMatrix presentation(c.spec(), kb.cols(), 0);
    if (i < n) {
      // Express the columns of A_{i+1} in the kernel basis.
      presentation = solve_in_column_span(kb, c.boundary(i + 1));
    } else {
      presentation = SkewMatrix(c.spec(), kb.cols(), 0);
    }
    result.orders.push_back(module_order(presentation));
  }
  return result;
}

Theorem1Report check_theorem1(const FreeChainComplex& c) {
  Theorem1Report rep;
  const auto chain = find_tau_chain(c);
  if (!chain) throw TauChainNotFound("no tau-chain with invertible odd blocks");
  const TorsionResult tau = torsion_via_tau_chain(c, *chain);
  const AlexanderPolys alex = alexander_polynomials(c);
  rep.torsion_defined = tau.defined;
  if (!tau.defined) {
    if (alex.all_nonzero())
      throw InternalInvariantError("tau undefined but all Alexander polynomials nonzero");
    return rep;
  }
  if (!alex.all_nonzero())
    throw InternalInvariantError("tau defined but some Alexander polynomial vanishes");
  rep.tau_degree = tau.degree();
  std::int64_t sum = 0;
  for (size_t i = 0; i < alex.orders.size(); ++i) {
    rep.alexander_degrees.push_back(alex.orders[i].degree.value);
    sum += (i % 2 == 0 ? -1 : 1) * alex.orders[i].degree.value;
  }
  rep.alternating_degree_sum = sum;
  if (rep.tau_degree != sum)
    throw InternalInvariantError("torsion degree disagrees with alternating Alexander degrees");
  if (c.spec().commutative()) {
    AbelianizedUnit alt(c.spec());
    for (size_t i = 0; i < alex.orders.size(); ++i) {
      if (i % 2 == 0) alt.push_denominator(alex.orders[i].value);
      else alt.push_numerator(alex.orders[i].value);
    }
    if (!tau.value->equal_up_to_unit(alt))
      throw InternalInvariantError("torsion value disagrees with Alexander product");
    rep.value_checked = true;
  }
  return rep;
}

}  // namespace skewalex
