#pragma once

#include <random>

#include "skewalex/presentation.hpp"

namespace testutil {

using namespace skewalex;

using Rng = std::mt19937_64;

inline std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline FieldSpec ratfun2_spec() {
  IntMat a(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 1;
  a.at(1, 0) = 0; a.at(1, 1) = 1;
  return FieldSpec::rat_fun(2, a);
}

/// The genuinely skew spec used throughout the random suites: Q(x1,x2) with
/// the shear automorphism.
inline FieldSpec skew_spec() { return ratfun2_spec(); }

inline Scalar random_scalar(Rng& rng, const FieldSpec& spec, bool nonzero = false) {
  switch (spec.kind()) {
    case FieldKind::rationals: {
      std::int64_t num = pick(rng, -6, 6);
      if (nonzero && num == 0) num = 1;
      return Scalar::rational(spec, mpq_class(num, pick(rng, 1, 5)));
    }
    case FieldKind::prime_field: {
      std::int64_t r = pick(rng, nonzero ? 1 : 0, spec.prime() - 1);
      return Scalar::from_int(spec, r);
    }
    case FieldKind::rat_fun: {
      auto poly = [&](bool nz) {
        MPoly p(spec.vars());
        const int terms = static_cast<int>(pick(rng, nz ? 1 : 0, 2));
        for (int t = 0; t < terms; ++t) {
          Exponents e(spec.vars());
          for (int v = 0; v < spec.vars(); ++v) e[v] = pick(rng, 0, 2);
          p.add_term(e, pick(rng, -3, 3));
        }
        if (nz && p.is_zero()) p = MPoly::constant(spec.vars(), 1);
        return p;
      };
      MPoly num = poly(nonzero);
      if (nonzero && num.is_zero()) num = MPoly::constant(spec.vars(), 1);
      return Scalar::fraction(spec, num, poly(true));
    }
  }
  return Scalar::zero(spec);
}

inline SkewPoly random_poly(Rng& rng, const FieldSpec& spec, bool nonzero = false,
                            std::int64_t max_span = 3) {
  SkewPoly p(spec);
  const std::int64_t lo = pick(rng, -2, 2);
  const int terms = static_cast<int>(pick(rng, nonzero ? 1 : 0, 3));
  for (int t = 0; t < terms; ++t)
    p.add_term(lo + pick(rng, 0, max_span), random_scalar(rng, spec));
  if (nonzero && p.is_zero()) p.add_term(lo, Scalar::one(spec));
  return p;
}

inline KMatrix random_invertible_kmatrix(Rng& rng, const FieldSpec& spec, int d) {
  while (true) {
    KMatrix m(spec, d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = random_scalar(rng, spec);
    if (m.inverse()) return m;
  }
}

/// Random matrix invertible over the ring: unit monomials on the diagonal,
/// stirred by elementary row/column transvections.
inline SkewMatrix random_ring_invertible(Rng& rng, const FieldSpec& spec, int n, int stirs = 6) {
  SkewMatrix m(spec, n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = SkewPoly::monomial(random_scalar(rng, spec, true), pick(rng, -1, 1));
  for (int s = 0; s < stirs; ++s) {
    const int a = static_cast<int>(pick(rng, 0, n - 1));
    int b = static_cast<int>(pick(rng, 0, n - 1));
    if (a == b) b = (b + 1) % n;
    const SkewPoly c = random_poly(rng, spec, false, 2);
    if (pick(rng, 0, 1) == 0) m.add_left_multiple_of_row(a, b, c);
    else m.add_right_multiple_of_col(a, b, c);
  }
  return m;
}

inline SkewMatrix random_matrix(Rng& rng, const FieldSpec& spec, int rows, int cols,
                                std::int64_t max_span = 2) {
  SkewMatrix m(spec, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_poly(rng, spec, false, max_span);
  return m;
}

/// Random acyclic complex over the given spec: block boundaries
/// [[0, D],[0, 0]] with nonzero diagonal D, conjugated by random
/// ring-invertible changes of basis level by level.
inline FreeChainComplex random_acyclic_complex(Rng& rng, const FieldSpec& spec,
                                               const std::vector<int>& kernel_ranks) {
  // kernel_ranks s_0..s_n with s_n = 0 gives ranks r_i = s_i + s_{i-1}.
  const int n = static_cast<int>(kernel_ranks.size()) - 1;
  std::vector<int> ranks(n + 1);
  for (int i = 0; i <= n; ++i) ranks[i] = kernel_ranks[i] + (i > 0 ? kernel_ranks[i - 1] : 0);
  std::vector<SkewMatrix> base;
  for (int i = 1; i <= n; ++i) {
    SkewMatrix a(spec, ranks[i - 1], ranks[i]);
    // columns: first s_i land in the kernel block, the rest map onto D.
    for (int k = 0; k < kernel_ranks[i - 1]; ++k) {
      SkewPoly d = random_poly(rng, spec, true, 2);
      a.at(k, kernel_ranks[i] + k) = d;
    }
    base.push_back(std::move(a));
  }
  std::vector<SkewMatrix> p;  // change of basis per level
  for (int i = 0; i <= n; ++i) p.push_back(random_ring_invertible(rng, spec, ranks[i], 4));
  // inverse via dedicated solve: P is a product of elementary ops, so solve
  // P X = I columnwise through the kernel-free solver.
  std::vector<SkewMatrix> boundaries;
  for (int i = 1; i <= n; ++i) {
    const SkewMatrix pi_inv =
        solve_in_column_span(p[i], SkewMatrix::identity(spec, ranks[i]));
    boundaries.push_back(p[i - 1] * base[i - 1] * pi_inv);
  }
  return FreeChainComplex(spec, ranks, boundaries);
}

/// Random presentation whose relators are commutators of random words, hence
/// killed by every one-dimensional trivial-alpha representation and every
/// pair representation factoring through the abelianization of phi.
inline GroupPresentation random_commutator_presentation(Rng& rng, int gens) {
  auto random_word = [&](int len) {
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i)
      ls.push_back(Letter{static_cast<int>(pick(rng, 0, gens - 1)),
                          pick(rng, 0, 1) == 0 ? 1 : -1});
    return Word(ls);
  };
  std::vector<Word> relators;
  for (int r = 0; r < gens - 1; ++r) {
    Word c;
    do {
      const Word u = random_word(static_cast<int>(pick(rng, 1, 3)));
      const Word v = random_word(static_cast<int>(pick(rng, 1, 3)));
      c = u * v * u.inverse() * v.inverse();
    } while (c.empty());
    relators.push_back(c);
  }
  std::vector<std::string> names;
  for (int g = 0; g < gens; ++g) names.push_back(std::string(1, static_cast<char>('a' + g)));
  return GroupPresentation(names, relators, PresentationKind::deficiency_one);
}

}  // namespace testutil
