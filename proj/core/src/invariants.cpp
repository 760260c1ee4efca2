#include "skewalex/invariants.hpp"

#include "skewalex/errors.hpp"

namespace skewalex {

TorsionResult torsion_of_presentation(const GroupPresentation& p, const PhiCompatibleRep& rep,
                                      SpaceMode mode) {
  // Several generator choices can be legal; torsion is nonzero iff the
  // extracted block is invertible for any one of them, so all are tried.
  if (mode == SpaceMode::two_complex) {
    for (int l = 0; l < p.generator_count(); ++l) {
      if (rep.phi_of(l) == 0) continue;
      TorsionResult t = torsion_two_complex_direct(p, rep, l);
      if (t.defined) return t;
    }
    return TorsionResult{false, std::nullopt};
  }
  bool tried = false;
  for (int k = 0; k < p.generator_count(); ++k) {
    std::int64_t s = 0;
    for (const Letter& let : p.dual_words()[k].letters()) s += let.sign * rep.phi_of(let.gen);
    if (s == 0) continue;
    for (int l = 0; l < p.generator_count(); ++l) {
      if (rep.phi_of(l) == 0) continue;
      tried = true;
      TorsionResult t = torsion_closed_direct(p, rep, k, l);
      if (t.defined) return t;
    }
  }
  if (!tried)
    throw PreconditionError("no generator with nonzero phi available for the direct formula");
  return TorsionResult{false, std::nullopt};
}

BoundResult thurston_lower_bound(const GroupPresentation& p, const CohomologyClass& phi,
                                 const PhiCompatibleRep& rep, SpaceMode mode,
                                 bool knot_with_primitive_phi, bool fibered) {
  if (phi.trivial()) throw PreconditionError("phi is trivial; no dual class to bound");
  const TorsionResult tau = torsion_of_presentation(p, rep, mode);
  if (!tau.defined) {
    const FreeChainComplex c = mode == SpaceMode::two_complex ? build_two_complex(p, rep)
                                                              : build_closed_complex(p, rep);
    const AlexanderPolys alex = alexander_polynomials(c);
    UndefinedBound u;
    for (const auto& o : alex.orders)
      u.alexander_degrees.push_back(o.value.is_zero() ? -1 : o.degree.value);
    return u;
  }
  ThurstonBound b;
  b.torsion_degree = tau.degree();
  b.dim = rep.dim();
  b.bound = mpq_class(b.torsion_degree, b.dim);
  b.bound.canonicalize();
  b.fibered_mode = fibered;
  if (fibered) b.norm_estimate = b.bound > 0 ? b.bound : mpq_class(0);
  if (knot_with_primitive_phi && phi.primitive()) {
    mpq_class g = (b.bound + 1) / 2;
    g.canonicalize();
    b.genus_bound = g;
  }
  return b;
}

HarveyDelta harvey_delta(const GroupPresentation& p, const AdmissiblePair& pair,
                         const CohomologyClass& phi, SpaceMode mode) {
  const PhiCompatibleRep rep = assemble_pair_rep(p, pair, phi);
  const FreeChainComplex c = mode == SpaceMode::two_complex ? build_two_complex(p, rep)
                                                            : build_closed_complex(p, rep);
  const AlexanderPolys alex = alexander_polynomials(c);
  const ModuleOrder& delta1 = alex.orders[1];
  if (delta1.value.is_zero()) return HarveyDelta{0, false};
  return HarveyDelta{delta1.degree.value, true};
}

MonotonicityReport monotonicity_check(const GroupPresentation& p, const AdmissiblePair& pair1,
                                      const AdmissiblePair& pair2, const TripleMap& map,
                                      const CohomologyClass& phi, SpaceMode mode,
                                      const LinearRep* alpha) {
  const TripleReport tr = validate_admissible_triple(p, pair1, pair2, map, phi);
  if (!tr.valid) {
    throw DiagramDoesNotCommute(tr.failure.empty()
                                    ? (tr.warnings.empty() ? "invalid admissible triple"
                                                           : tr.warnings.front())
                                    : tr.failure);
  }
  MonotonicityReport rep;
  rep.initial2 = tr.initial2;
  rep.delta1 = harvey_delta(p, pair1, phi, mode);
  rep.delta2 = harvey_delta(p, pair2, phi, mode);
  rep.correction = tr.initial2 ? (mode == SpaceMode::closed ? -2 : -1) : 0;
  rep.satisfied = rep.delta1.value >= rep.delta2.value + rep.correction;
  if (alpha != nullptr) {
    rep.torsion_compared = true;
    const PhiCompatibleRep rep1 = assemble_pair_tensor_rep(p, pair1, *alpha, phi);
    const PhiCompatibleRep rep2 = assemble_pair_tensor_rep(p, pair2, *alpha, phi);
    const TorsionResult t1 = torsion_of_presentation(p, rep1, mode);
    const TorsionResult t2 = torsion_of_presentation(p, rep2, mode);
    if (t1.defined) rep.torsion_degree1 = t1.degree();
    if (t2.defined) rep.torsion_degree2 = t2.degree();
    if (t2.defined) {
      // tau_2 defined forces tau_1 defined with at least the same degree.
      rep.torsion_satisfied = t1.defined && t1.degree() >= t2.degree();
    }
  }
  return rep;
}

FiberedReport fibered_consistency(const GroupPresentation& p, const CohomologyClass& phi,
                                  const PhiCompatibleRep& rep, SpaceMode mode,
                                  const mpq_class& declared_norm) {
  FiberedReport r;
  r.declared_norm = declared_norm;
  const BoundResult b = thurston_lower_bound(p, phi, rep, mode, false, /*fibered=*/true);
  if (const auto* tb = std::get_if<ThurstonBound>(&b)) {
    r.torsion_defined = true;
    r.computed_norm = *tb->norm_estimate;
    r.consistent = (r.computed_norm == r.declared_norm);
  }
  return r;
}

}  // namespace skewalex
