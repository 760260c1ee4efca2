#pragma once

#include <gmpxx.h>

#include <optional>
#include <variant>

#include "skewalex/presentation.hpp"

namespace skewalex {

enum class SpaceMode { two_complex, closed };

/// Lower bound on the Thurston norm from the degree of Reidemeister torsion:
/// ||phi||_T >= deg(tau)/d, with equality (after clamping at 0) for fibered
/// classes.
struct ThurstonBound {
  std::int64_t torsion_degree = 0;
  int dim = 1;
  mpq_class bound;                         // torsion_degree / dim
  bool fibered_mode = false;
  std::optional<mpq_class> norm_estimate;  // max{0, bound}, fibered inputs
  std::optional<mpq_class> genus_bound;    // (bound + 1)/2, knot inputs
};

/// Torsion undefined: Delta_1 = 0 is the witness.
struct UndefinedBound {
  std::vector<std::int64_t> alexander_degrees;  // -1 marks a vanishing order
};

using BoundResult = std::variant<ThurstonBound, UndefinedBound>;

BoundResult thurston_lower_bound(const GroupPresentation& p, const CohomologyClass& phi,
                                 const PhiCompatibleRep& rep, SpaceMode mode,
                                 bool knot_with_primitive_phi = false, bool fibered = false);

/// Computes torsion by the direct section-6 formulas, trying every legal
/// generator choice, with the tau-chain algorithm as cross-check fallback.
TorsionResult torsion_of_presentation(const GroupPresentation& p, const PhiCompatibleRep& rep,
                                      SpaceMode mode);

/// Harvey's delta-bar invariant of an admissible pair: dim_{K(G')} of the
/// first homology, read off as deg Delta_1; zero with a cleared flag when
/// the module is not torsion.
struct HarveyDelta {
  std::int64_t value = 0;
  bool torsion_flag = false;
};

HarveyDelta harvey_delta(const GroupPresentation& p, const AdmissiblePair& pair,
                         const CohomologyClass& phi, SpaceMode mode = SpaceMode::two_complex);

/// Monotonicity comparison across an admissible triple. The correction term
/// follows the closed (-2) / deficiency-one (-1) cases when the second pair
/// is initial. An optional alpha over Q adds the torsion-degree comparison
/// of the tensor representations.
struct MonotonicityReport {
  HarveyDelta delta1, delta2;
  int correction = 0;
  bool initial2 = false;
  bool satisfied = false;
  bool torsion_compared = false;
  std::optional<std::int64_t> torsion_degree1, torsion_degree2;
  bool torsion_satisfied = true;
};

MonotonicityReport monotonicity_check(const GroupPresentation& p, const AdmissiblePair& pair1,
                                      const AdmissiblePair& pair2, const TripleMap& map,
                                      const CohomologyClass& phi, SpaceMode mode,
                                      const LinearRep* alpha = nullptr);

/// Fibered inputs: max{0, deg(tau)/d} must reproduce the declared norm.
struct FiberedReport {
  bool torsion_defined = false;
  mpq_class computed_norm;
  mpq_class declared_norm;
  bool consistent = false;
};

FiberedReport fibered_consistency(const GroupPresentation& p, const CohomologyClass& phi,
                                  const PhiCompatibleRep& rep, SpaceMode mode,
                                  const mpq_class& declared_norm);

}  // namespace skewalex
