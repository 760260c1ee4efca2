#include "skewalex/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "skewalex/errors.hpp"

namespace skewalex {

KMatrix::KMatrix(FieldSpec spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, Scalar::zero(spec_)) {}

KMatrix KMatrix::identity(const FieldSpec& spec, int n) {
  KMatrix m(spec, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
  return m;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("constant matrix product shape mismatch");
  KMatrix r(spec_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

bool KMatrix::operator==(const KMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool KMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<KMatrix> KMatrix::inverse() const {
  if (rows_ != cols_) throw ShapeError("inverse of non-square matrix");
  KMatrix a = *this;
  KMatrix inv = identity(spec_, rows_);
  for (int i = 0; i < rows_; ++i) {
    int p = -1;
    for (int r = i; r < rows_; ++r)
      if (!a.at(r, i).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;
    for (int j = 0; j < cols_; ++j) {
      std::swap(a.at(i, j), a.at(p, j));
      std::swap(inv.at(i, j), inv.at(p, j));
    }
    const Scalar piv = a.at(i, i).inverse();
    for (int j = 0; j < cols_; ++j) {
      a.at(i, j) = piv * a.at(i, j);
      inv.at(i, j) = piv * inv.at(i, j);
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == i || a.at(r, i).is_zero()) continue;
      const Scalar f = a.at(r, i);
      for (int j = 0; j < cols_; ++j) {
        a.at(r, j) = a.at(r, j) - f * a.at(i, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(i, j);
      }
    }
  }
  return inv;
}

KMatrix KMatrix::twisted(std::int64_t k) const {
  KMatrix r = *this;
  if (spec_.commutative() || k == 0) return r;
  for (auto& s : r.e_) s = s.automorphism(k);
  return r;
}

KMatrix KMatrix::scaled(const Scalar& c) const {
  KMatrix r = *this;
  for (auto& s : r.e_) s = c * s;
  return r;
}

GroupPresentation::GroupPresentation(std::vector<std::string> generator_names,
                                     std::vector<Word> relators, PresentationKind kind,
                                     std::vector<Word> dual_words)
    : names_(std::move(generator_names)), relators_(std::move(relators)), kind_(kind),
      duals_(std::move(dual_words)) {
  const int n = static_cast<int>(names_.size());
  if (n == 0) throw PreconditionError("presentation needs at least one generator");
  if (kind_ == PresentationKind::deficiency_one) {
    if (static_cast<int>(relators_.size()) != n - 1)
      throw ShapeError("deficiency-one presentation needs #generators - 1 relators");
    if (!duals_.empty()) throw ShapeError("dual words only apply to balanced closed input");
  } else {
    if (static_cast<int>(relators_.size()) != n)
      throw ShapeError("balanced closed presentation needs #generators relators");
    if (static_cast<int>(duals_.size()) != n)
      throw ShapeError("balanced closed presentation needs one dual word per relator");
  }
  for (const Word& r : relators_)
    for (const Letter& l : r.letters())
      if (l.gen < 0 || l.gen >= n) throw ShapeError("relator references unknown generator");
}

CohomologyClass::CohomologyClass(const GroupPresentation& p, IntVec values)
    : values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != p.generator_count())
    throw ShapeError("phi needs one value per generator");
  for (const Word& r : p.relators())
    if (evaluate(r) != 0)
      throw PreconditionError("phi does not vanish on a relator; not a homomorphism to Z");
  std::int64_t g = 0;
  for (auto v : values_) g = std::gcd(g, v);
  primitive_ = (g == 1);
}

std::int64_t CohomologyClass::evaluate(const Word& w) const {
  std::int64_t s = 0;
  for (const Letter& l : w.letters()) s += l.sign * values_[l.gen];
  return s;
}

bool CohomologyClass::trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
}

LinearRep::LinearRep(const GroupPresentation& p, FieldSpec spec, int dim,
                     std::vector<KMatrix> images)
    : spec_(std::move(spec)), dim_(dim), images_(std::move(images)) {
  if (!spec_.commutative())
    throw PreconditionError("linear representations live over a commutative field");
  if (static_cast<int>(images_.size()) != p.generator_count())
    throw ShapeError("representation needs one matrix per generator");
  for (const KMatrix& m : images_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw ShapeError("representation matrix shape");
    if (!m.inverse()) throw PreconditionError("representation matrix is singular");
  }
  for (const Word& r : p.relators())
    if (!evaluate(r).is_identity())
      throw RelatorViolation("representation does not kill a relator");
}

KMatrix LinearRep::evaluate(const Word& w) const {
  KMatrix acc = KMatrix::identity(spec_, dim_);
  for (const Letter& l : w.letters()) {
    if (l.sign > 0) acc = acc * images_[l.gen];
    else acc = acc * *images_[l.gen].inverse();
  }
  return acc;
}

LinearRep LinearRep::conjugated(const KMatrix& s) const {
  const auto si = s.inverse();
  if (!si) throw PreconditionError("conjugating matrix is singular");
  LinearRep r = *this;
  for (auto& m : r.images_) m = s * m * *si;
  return r;
}

AdmissiblePair::AdmissiblePair(const GroupPresentation& p, const CohomologyClass& phi, int m,
                               IntMat aut, std::vector<PairElem> images, std::string name)
    : m_(m), aut_(std::move(aut)), images_(std::move(images)), name_(std::move(name)) {
  if (m_ < 0) throw PreconditionError("negative rank");
  if (aut_.rows() != m_ || aut_.cols() != m_)
    throw ShapeError("pair automorphism shape must match rank m");
  if (m_ > 0) {
    const auto det = aut_.determinant();
    if (det != 1 && det != -1) throw PreconditionError("pair automorphism must be in GL(m,Z)");
  }
  if (static_cast<int>(images_.size()) != p.generator_count())
    throw ShapeError("pair needs one image per generator");
  for (const PairElem& e : images_)
    if (static_cast<int>(e.v.size()) != m_) throw ShapeError("pair image vector length");
  for (int g = 0; g < p.generator_count(); ++g)
    if (images_[g].n != phi.value(g))
      throw PhiMismatch("pair image n-component disagrees with phi");
  std::int64_t gcd_n = 0;
  for (const PairElem& e : images_) gcd_n = std::gcd(gcd_n, e.n);
  if (gcd_n != 1)
    throw NotAHomomorphism("pair images do not surject onto Z");
  for (const Word& r : p.relators()) {
    const PairElem img = evaluate(r);
    if (img.n != 0 || img.v != IntVec(m_, 0))
      throw NotAHomomorphism("pair images do not kill a relator");
  }
}

PairElem AdmissiblePair::multiply(const PairElem& a, const PairElem& b) const {
  return PairElem{add(a.v, aut_.power(a.n) * b.v), a.n + b.n};
}

PairElem AdmissiblePair::inverse_of(const PairElem& a) const {
  return PairElem{negate(aut_.power(-a.n) * a.v), -a.n};
}

PairElem AdmissiblePair::evaluate(const Word& w) const {
  PairElem acc{IntVec(m_, 0), 0};
  for (const Letter& l : w.letters()) {
    const PairElem& g = images_[l.gen];
    acc = multiply(acc, l.sign > 0 ? g : inverse_of(g));
  }
  return acc;
}

PhiCompatibleRep::PhiCompatibleRep(const GroupPresentation& p, FieldSpec spec, int dim,
                                   std::vector<GenImage> images)
    : spec_(std::move(spec)), dim_(dim), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != p.generator_count())
    throw ShapeError("rep needs one image per generator");
  for (const GenImage& g : images_) {
    if (g.mat.rows() != dim_ || g.mat.cols() != dim_) throw ShapeError("rep image shape");
    if (!g.mat.inverse()) throw PreconditionError("rep constant part is singular");
  }
  for (const Word& r : p.relators()) {
    const GenImage img = evaluate_word(r);
    if (img.tpow != 0 || !img.mat.is_identity())
      throw RelatorViolation("phi-compatible rep does not kill a relator");
  }
}

PhiCompatibleRep::GenImage PhiCompatibleRep::evaluate_word(const Word& w) const {
  GenImage acc{KMatrix::identity(spec_, dim_), 0};
  for (const Letter& l : w.letters()) {
    GenImage g = images_[l.gen];
    if (l.sign < 0) {
      // (M t^e)^{-1} = gamma^{-e}(M^{-1}) t^{-e}
      g = GenImage{g.mat.inverse()->twisted(-g.tpow), -g.tpow};
    }
    // (M t^e)(N t^f) = M gamma^e(N) t^{e+f}
    acc = GenImage{acc.mat * g.mat.twisted(acc.tpow), acc.tpow + g.tpow};
  }
  return acc;
}

SkewMatrix PhiCompatibleRep::evaluate(const Word& w) const {
  const GenImage g = evaluate_word(w);
  SkewMatrix m(spec_, dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (!g.mat.at(i, j).is_zero()) m.at(i, j) = SkewPoly::monomial(g.mat.at(i, j), g.tpow);
  return m;
}

SkewMatrix PhiCompatibleRep::evaluate(const GroupRingElem& e) const {
  SkewMatrix m(spec_, dim_, dim_);
  for (const auto& [w, c] : e.terms()) {
    const GenImage g = evaluate_word(w);
    const Scalar cs = Scalar::from_int(spec_, c);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (!g.mat.at(i, j).is_zero())
          m.at(i, j).add_term(g.tpow, cs * g.mat.at(i, j));
  }
  return m;
}

SkewMatrix PhiCompatibleRep::one_minus(const Word& w) const {
  GroupRingElem e = GroupRingElem::one() - GroupRingElem::from_word(w);
  return evaluate(e);
}

PhiCompatibleRep assemble_alpha_tensor_phi(const GroupPresentation& p, const LinearRep& alpha,
                                           const CohomologyClass& phi) {
  std::vector<PhiCompatibleRep::GenImage> images;
  images.reserve(p.generator_count());
  for (int g = 0; g < p.generator_count(); ++g)
    images.push_back({alpha.image(g), phi.value(g)});
  return PhiCompatibleRep(p, alpha.spec(), alpha.dim(), std::move(images));
}

PhiCompatibleRep assemble_pair_rep(const GroupPresentation& p, const AdmissiblePair& pair,
                                   const CohomologyClass& phi) {
  const FieldSpec spec = pair.m() == 0 ? FieldSpec::rationals()
                                       : FieldSpec::rat_fun(pair.m(), pair.automorphism());
  std::vector<PhiCompatibleRep::GenImage> images;
  for (int g = 0; g < p.generator_count(); ++g) {
    const PairElem& e = pair.image(g);
    KMatrix m(spec, 1, 1);
    m.at(0, 0) = pair.m() == 0 ? Scalar::one(spec) : Scalar::laurent_monomial(spec, e.v);
    images.push_back({std::move(m), e.n});
  }
  (void)phi;  // the pair constructor already pinned n-components to phi
  return PhiCompatibleRep(p, spec, 1, std::move(images));
}

PhiCompatibleRep assemble_pair_tensor_rep(const GroupPresentation& p, const AdmissiblePair& pair,
                                          const LinearRep& alpha, const CohomologyClass& phi) {
  if (alpha.spec().kind() != FieldKind::rationals)
    throw PreconditionError("tensor with a pair requires a representation over Q");
  const FieldSpec spec = pair.m() == 0 ? FieldSpec::rationals()
                                       : FieldSpec::rat_fun(pair.m(), pair.automorphism());
  std::vector<PhiCompatibleRep::GenImage> images;
  for (int g = 0; g < p.generator_count(); ++g) {
    const PairElem& e = pair.image(g);
    KMatrix m(spec, alpha.dim(), alpha.dim());
    const Scalar mono = pair.m() == 0 ? Scalar::one(spec) : Scalar::laurent_monomial(spec, e.v);
    for (int i = 0; i < alpha.dim(); ++i)
      for (int j = 0; j < alpha.dim(); ++j) {
        const Scalar& a = alpha.image(g).at(i, j);
        if (!a.is_zero()) m.at(i, j) = mono * Scalar::rational(spec, a.rational_value());
      }
    images.push_back({std::move(m), e.n});
  }
  (void)phi;
  return PhiCompatibleRep(p, spec, alpha.dim(), std::move(images));
}

namespace {

// del_1 = (id - alpha(h_1), ..., id - alpha(h_n)) as a d x nd block row.
SkewMatrix boundary_one(const GroupPresentation& p, const PhiCompatibleRep& rep) {
  const int d = rep.dim(), n = p.generator_count();
  SkewMatrix a1(rep.spec(), d, n * d);
  for (int g = 0; g < n; ++g) {
    const SkewMatrix blk = rep.one_minus(Word::generator(g));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a1.at(i, g * d + j) = blk.at(i, j);
  }
  return a1;
}

// del_2 = alpha of the mirrored Fox Jacobian: block (g, k) is
// alpha(d'_g(r_k)), an nd x (#relators d) matrix.
SkewMatrix boundary_two(const GroupPresentation& p, const PhiCompatibleRep& rep) {
  const int d = rep.dim(), n = p.generator_count();
  const int m = static_cast<int>(p.relators().size());
  SkewMatrix a2(rep.spec(), n * d, m * d);
  for (int k = 0; k < m; ++k)
    for (int g = 0; g < n; ++g) {
      const SkewMatrix blk = rep.evaluate(fox_derivative_right(p.relators()[k], g));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a2.at(g * d + i, k * d + j) = blk.at(i, j);
    }
  return a2;
}

}  // namespace

FreeChainComplex build_two_complex(const GroupPresentation& p, const PhiCompatibleRep& rep) {
  if (p.kind() != PresentationKind::deficiency_one)
    throw PreconditionError("two-complex construction needs a deficiency-one presentation");
  const int d = rep.dim(), n = p.generator_count();
  std::vector<int> ranks{d, n * d, (n - 1) * d};
  std::vector<SkewMatrix> boundaries{boundary_one(p, rep), boundary_two(p, rep)};
  return FreeChainComplex(rep.spec(), std::move(ranks), std::move(boundaries));
}

FreeChainComplex build_closed_complex(const GroupPresentation& p, const PhiCompatibleRep& rep) {
  if (p.kind() != PresentationKind::balanced_closed)
    throw PreconditionError("closed construction needs a balanced presentation with duals");
  const int d = rep.dim(), n = p.generator_count();
  SkewMatrix a3(rep.spec(), n * d, d);
  for (int k = 0; k < n; ++k) {
    const SkewMatrix blk = rep.one_minus(p.dual_words()[k]);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a3.at(k * d + i, j) = blk.at(i, j);
  }
  std::vector<int> ranks{d, n * d, n * d, d};
  std::vector<SkewMatrix> boundaries{boundary_one(p, rep), boundary_two(p, rep), std::move(a3)};
  return FreeChainComplex(rep.spec(), std::move(ranks), std::move(boundaries));
}

namespace {

std::vector<int> block_rows_except(int blocks, int d, int skip_block) {
  std::vector<int> rows;
  for (int b = 0; b < blocks; ++b) {
    if (b == skip_block) continue;
    for (int i = 0; i < d; ++i) rows.push_back(b * d + i);
  }
  return rows;
}

std::vector<int> all_indices(int count) {
  std::vector<int> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

TorsionResult assemble_direct(const FieldSpec& spec, const std::optional<AbelianizedUnit>& det_b,
                              const std::vector<AbelianizedUnit>& denominators) {
  if (!det_b) return TorsionResult{false, std::nullopt};
  AbelianizedUnit tau = *det_b;
  for (const auto& d : denominators) tau.multiply_by(d, /*inverted=*/true);
  tau.set_sign_ambiguous(true);
  return TorsionResult{true, std::move(tau)};
}

}  // namespace

TorsionResult torsion_two_complex_direct(const GroupPresentation& p, const PhiCompatibleRep& rep,
                                         int l) {
  if (p.kind() != PresentationKind::deficiency_one)
    throw PreconditionError("direct two-complex torsion needs deficiency one");
  if (rep.phi_of(l) == 0)
    throw PreconditionError("chosen generator has phi = 0");
  const int d = rep.dim(), n = p.generator_count();
  const SkewMatrix a2 = boundary_two(p, rep);
  const SkewMatrix b =
      a2.submatrix(block_rows_except(n, d, l), all_indices((n - 1) * d));
  const auto det_b = dieudonne_det(b);
  const auto det_h = dieudonne_det(rep.one_minus(Word::generator(l)));
  if (!det_h)
    throw InternalInvariantError("id - alpha(h_l) singular despite phi(h_l) != 0");
  return assemble_direct(rep.spec(), det_b, {*det_h});
}

TorsionResult torsion_closed_direct(const GroupPresentation& p, const PhiCompatibleRep& rep,
                                    int k, int l) {
  if (p.kind() != PresentationKind::balanced_closed)
    throw PreconditionError("direct closed torsion needs a balanced presentation");
  if (rep.phi_of(l) == 0)
    throw PreconditionError("chosen generator has phi = 0");
  {
    std::int64_t s = 0;
    for (const Letter& let : p.dual_words()[k].letters()) s += let.sign * rep.phi_of(let.gen);
    if (s == 0) throw PreconditionError("chosen dual word has phi = 0");
  }
  const int d = rep.dim(), n = p.generator_count();
  const SkewMatrix a2 = boundary_two(p, rep);
  std::vector<int> cols;
  for (int b = 0; b < n; ++b) {
    if (b == k) continue;
    for (int i = 0; i < d; ++i) cols.push_back(b * d + i);
  }
  const SkewMatrix b = a2.submatrix(block_rows_except(n, d, l), cols);
  const auto det_b = dieudonne_det(b);
  const auto det_g = dieudonne_det(rep.one_minus(p.dual_words()[k]));
  const auto det_h = dieudonne_det(rep.one_minus(Word::generator(l)));
  if (!det_g || !det_h)
    throw InternalInvariantError("1 - alpha factor singular despite nonzero phi");
  return assemble_direct(rep.spec(), det_b, {*det_g, *det_h});
}

TripleReport validate_admissible_triple(const GroupPresentation& p, const AdmissiblePair& pair1,
                                        const AdmissiblePair& pair2, const TripleMap& map,
                                        const CohomologyClass& phi) {
  TripleReport rep;
  rep.initial2 = pair2.initial();
  const int m1 = pair1.m(), m2 = pair2.m();
  if (map.matrix.rows() != m2 || map.matrix.cols() != m1) {
    rep.failure = "triple map matrix must be m2 x m1";
    return rep;
  }
  if (static_cast<int>(map.mu_image_v.size()) != m2) {
    rep.failure = "mu image vector must have length m2";
    return rep;
  }
  // Homomorphism condition: conjugation intertwines, M A_1 = A_2 M.
  if (!(map.matrix * pair1.automorphism() == pair2.automorphism() * map.matrix)) {
    rep.failure = "map does not intertwine the automorphisms (M A1 != A2 M)";
    return rep;
  }
  // Image of (v, n): (M v, 0) * (w, 1)^n.
  auto apply = [&](const PairElem& e) -> PairElem {
    PairElem acc{map.matrix * e.v, 0};
    const PairElem mu{map.mu_image_v, 1};
    const PairElem mu_inv = pair2.inverse_of(mu);
    for (std::int64_t i = 0; i < std::llabs(e.n); ++i)
      acc = pair2.multiply(acc, e.n > 0 ? mu : mu_inv);
    return acc;
  };
  for (int g = 0; g < p.generator_count(); ++g) {
    if (!(apply(pair1.image(g)) == pair2.image(g))) {
      rep.failure = "diagram does not commute on generator " + p.generator_names()[g];
      return rep;
    }
    if (pair1.image(g).n != phi.value(g) || pair2.image(g).n != phi.value(g)) {
      rep.failure = "pair projections disagree with phi";
      return rep;
    }
  }
  if (m1 == m2) {
    const auto det = map.matrix.rows() == 0 ? 1 : map.matrix.determinant();
    if (det == 1 || det == -1) {
      rep.warnings.push_back(
          "triple map is an isomorphism; admissible triples require a proper quotient");
      return rep;
    }
  }
  rep.valid = true;
  return rep;
}

}  // namespace skewalex
