#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewalex/chain_complex.hpp"
#include "skewalex/int_matrix.hpp"
#include "skewalex/words.hpp"

namespace skewalex {

/// Dense matrix over the coefficient field K (constant in t). K is
/// commutative in every implemented spec, so this is ordinary linear algebra.
class KMatrix {
public:
  KMatrix(FieldSpec spec, int rows, int cols);
  static KMatrix identity(const FieldSpec& spec, int n);

  const FieldSpec& spec() const { return spec_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  KMatrix operator*(const KMatrix& o) const;
  bool operator==(const KMatrix& o) const;
  bool is_identity() const;

  std::optional<KMatrix> inverse() const;  // nullopt when singular
  KMatrix twisted(std::int64_t k) const;   // gamma^k entrywise
  KMatrix scaled(const Scalar& c) const;

private:
  FieldSpec spec_;
  int rows_, cols_;
  std::vector<Scalar> e_;
};

enum class PresentationKind { deficiency_one, balanced_closed };

/// Group presentation with the word conventions of the input DSL. Closed
/// (balanced) presentations also carry the dual words used for the top
/// boundary.
class GroupPresentation {
public:
  GroupPresentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                    PresentationKind kind, std::vector<Word> dual_words = {});

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  PresentationKind kind() const { return kind_; }
  const std::vector<Word>& dual_words() const { return duals_; }

private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  PresentationKind kind_;
  std::vector<Word> duals_;
};

/// Integral cohomology class phi: one integer per generator, vanishing on
/// every relator.
class CohomologyClass {
public:
  CohomologyClass(const GroupPresentation& p, IntVec values);

  std::int64_t value(int gen) const { return values_[gen]; }
  const IntVec& values() const { return values_; }
  std::int64_t evaluate(const Word& w) const;
  bool primitive() const { return primitive_; }
  bool trivial() const;

private:
  IntVec values_;
  bool primitive_ = false;
};

/// Representation of the group into GL(K, d) for a commutative field K;
/// relators must map to the identity.
class LinearRep {
public:
  LinearRep(const GroupPresentation& p, FieldSpec spec, int dim, std::vector<KMatrix> images);

  const FieldSpec& spec() const { return spec_; }
  int dim() const { return dim_; }
  const KMatrix& image(int gen) const { return images_[gen]; }
  KMatrix evaluate(const Word& w) const;
  LinearRep conjugated(const KMatrix& s) const;

private:
  FieldSpec spec_;
  int dim_;
  std::vector<KMatrix> images_;
};

/// Element of G = Z^m x|_A Z.
struct PairElem {
  IntVec v;
  std::int64_t n = 0;
  bool operator==(const PairElem& o) const = default;
};

/// Admissible pair (varphi : pi -> G, phi) with G = Z^m x|_A Z given by
/// explicit generator images. The group law is
/// (v, n) * (w, k) = (v + A^n w, n + k).
class AdmissiblePair {
public:
  AdmissiblePair(const GroupPresentation& p, const CohomologyClass& phi, int m, IntMat aut,
                 std::vector<PairElem> images, std::string name = "");

  int m() const { return m_; }
  const IntMat& automorphism() const { return aut_; }
  const PairElem& image(int gen) const { return images_[gen]; }
  const std::string& name() const { return name_; }
  /// phi_G is an isomorphism exactly when the abelian kernel is trivial.
  bool initial() const { return m_ == 0; }

  PairElem multiply(const PairElem& a, const PairElem& b) const;
  PairElem inverse_of(const PairElem& a) const;
  PairElem evaluate(const Word& w) const;

private:
  int m_;
  IntMat aut_;
  std::vector<PairElem> images_;
  std::string name_;
};

/// phi-compatible representation: every generator maps to M t^{phi(g)} with
/// M an invertible constant matrix over K.
class PhiCompatibleRep {
public:
  struct GenImage {
    KMatrix mat;
    std::int64_t tpow;
  };

  PhiCompatibleRep(const GroupPresentation& p, FieldSpec spec, int dim,
                   std::vector<GenImage> images);

  const FieldSpec& spec() const { return spec_; }
  int dim() const { return dim_; }
  const GenImage& image(int gen) const { return images_[gen]; }
  std::int64_t phi_of(int gen) const { return images_[gen].tpow; }

  /// Image of a word, in the structured (constant matrix, t-power) form.
  GenImage evaluate_word(const Word& w) const;
  /// Image of a group ring element, as a d x d matrix over K_gamma[t^+-1].
  SkewMatrix evaluate(const GroupRingElem& e) const;
  SkewMatrix evaluate(const Word& w) const;
  /// id - alpha(w) as a d x d skew matrix.
  SkewMatrix one_minus(const Word& w) const;

private:
  FieldSpec spec_;
  int dim_;
  std::vector<GenImage> images_;
};

PhiCompatibleRep assemble_alpha_tensor_phi(const GroupPresentation& p, const LinearRep& alpha,
                                           const CohomologyClass& phi);
PhiCompatibleRep assemble_pair_rep(const GroupPresentation& p, const AdmissiblePair& pair,
                                   const CohomologyClass& phi);
/// The tensor of a pair representation with a d-dimensional alpha over Q:
/// g -> (x^{v_g} alpha(g)) t^{phi(g)} over Q(x_1..x_m).
PhiCompatibleRep assemble_pair_tensor_rep(const GroupPresentation& p, const AdmissiblePair& pair,
                                          const LinearRep& alpha, const CohomologyClass& phi);

/// Chain complex of the presentation 2-complex (deficiency one):
/// 0 -> C_2 -> C_1 -> C_0 -> 0 with ranks ((n-1)d, nd, d).
FreeChainComplex build_two_complex(const GroupPresentation& p, const PhiCompatibleRep& rep);

/// Four-term complex of a closed 3-manifold style balanced presentation with
/// dual words; del_2 del_3 = 0 is verified against the supplied data.
FreeChainComplex build_closed_complex(const GroupPresentation& p, const PhiCompatibleRep& rep);

/// tau(X, alpha) = det alpha(B) / det alpha(1 - h_l) where B deletes the
/// l-th generator block row of del_2. Requires phi(h_l) != 0.
TorsionResult torsion_two_complex_direct(const GroupPresentation& p, const PhiCompatibleRep& rep,
                                         int l);

/// Closed version: B deletes the k-th relator block column and the l-th
/// generator block row; tau = det alpha(1-g_k)^-1 det alpha(B) det alpha(1-h_l)^-1.
TorsionResult torsion_closed_direct(const GroupPresentation& p, const PhiCompatibleRep& rep,
                                    int k, int l);

/// Supplied generator-level map G_1 -> G_2 of an admissible triple:
/// Z^{m1} -> Z^{m2} matrix plus the image (w, 1) of the distinguished mu_1.
struct TripleMap {
  IntMat matrix;
  IntVec mu_image_v;
};

struct TripleReport {
  bool valid = false;
  bool initial2 = false;
  std::vector<std::string> warnings;
  std::string failure;
};

TripleReport validate_admissible_triple(const GroupPresentation& p, const AdmissiblePair& pair1,
                                        const AdmissiblePair& pair2, const TripleMap& map,
                                        const CohomologyClass& phi);

}  // namespace skewalex
