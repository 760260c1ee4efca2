#include <doctest.h>

#include "oracle.hpp"
#include "skewalex/errors.hpp"
#include "skewalex/presentation.hpp"
#include "testutil.hpp"

using namespace skewalex;
using testutil::Rng;

namespace {

const std::vector<std::string> ab{"a", "b"};

GroupPresentation trefoil() {
  return GroupPresentation(ab, {Word::parse("abaBAB", ab)}, PresentationKind::deficiency_one);
}

GroupPresentation unknot() {
  return GroupPresentation({"a"}, {}, PresentationKind::deficiency_one);
}

PhiCompatibleRep trivial_rep(const GroupPresentation& p, const CohomologyClass& phi,
                             const FieldSpec& spec) {
  std::vector<KMatrix> images(p.generator_count(), KMatrix::identity(spec, 1));
  const LinearRep alpha(p, spec, 1, images);
  return assemble_alpha_tensor_phi(p, alpha, phi);
}

IntMat mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  IntMat m(2, 2);
  m.at(0, 0) = a; m.at(0, 1) = b;
  m.at(1, 0) = c; m.at(1, 1) = d;
  return m;
}

AdmissiblePair trefoil_metabelian(const GroupPresentation& p, const CohomologyClass& phi) {
  // Z^2 x|_A Z with A the companion matrix of t^2 - t + 1.
  return AdmissiblePair(p, phi, 2, mat2(0, -1, 1, 1),
                        {PairElem{{0, 0}, 1}, PairElem{{1, 0}, 1}}, "metabelian");
}

}  // namespace

TEST_CASE("left Fox derivative calculus") {
  const Word aa = Word::parse("aa", ab);
  CHECK(fox_derivative(aa, 0) ==
        GroupRingElem::one() + GroupRingElem::from_word(Word::generator(0)));
  const Word ainv = Word::parse("A", ab);
  CHECK(fox_derivative(ainv, 0) == -GroupRingElem::from_word(Word::generator(0, -1)));
  CHECK(fox_derivative(Word::parse("b", ab), 0).is_zero());
}

TEST_CASE("Fox fundamental identity in the free group ring") {
  Rng rng(61);
  auto check_identity = [&](const Word& w) {
    GroupRingElem lhs;
    for (int g = 0; g < 2; ++g) {
      const GroupRingElem xm1 =
          GroupRingElem::from_word(Word::generator(g)) - GroupRingElem::one();
      lhs = lhs + fox_derivative(w, g) * xm1;
    }
    const GroupRingElem rhs = GroupRingElem::from_word(w) - GroupRingElem::one();
    CHECK(lhs == rhs);
  };
  check_identity(Word::parse("abaBAB", ab));
  for (int i = 0; i < 30; ++i) {
    std::vector<Letter> ls;
    for (int j = 0; j < 6; ++j)
      ls.push_back(Letter{static_cast<int>(testutil::pick(rng, 0, 1)),
                          testutil::pick(rng, 0, 1) ? 1 : -1});
    check_identity(Word(ls));
  }
}

TEST_CASE("mirrored derivative: identity and reversal relation") {
  Rng rng(67);
  for (int i = 0; i < 30; ++i) {
    std::vector<Letter> ls;
    for (int j = 0; j < 6; ++j)
      ls.push_back(Letter{static_cast<int>(testutil::pick(rng, 0, 1)),
                          testutil::pick(rng, 0, 1) ? 1 : -1});
    const Word w(ls);
    GroupRingElem lhs;
    for (int g = 0; g < 2; ++g) {
      const GroupRingElem xm1 =
          GroupRingElem::from_word(Word::generator(g)) - GroupRingElem::one();
      lhs = lhs + xm1 * fox_derivative_right(w, g);
    }
    CHECK(lhs == GroupRingElem::from_word(w) - GroupRingElem::one());
    // d'_g(w) = rev(d_g(rev w))
    for (int g = 0; g < 2; ++g) {
      GroupRingElem mirrored;
      for (const auto& [u, c] : fox_derivative(w.reversed(), g).terms())
        mirrored.add_term(u.reversed(), c);
      CHECK(mirrored == fox_derivative_right(w, g));
    }
  }
}

TEST_CASE("word evaluation of representations") {
  const GroupPresentation p = trefoil();
  const CohomologyClass phi(p, {1, 1});
  const PhiCompatibleRep rep = trivial_rep(p, phi, FieldSpec::rationals());
  CHECK(rep.evaluate(Word()) == SkewMatrix::identity(FieldSpec::rationals(), 1));
  const SkewMatrix ta = rep.evaluate(Word::generator(0));
  CHECK(ta.at(0, 0) == SkewPoly::t(FieldSpec::rationals()));
  Rng rng(71);
  for (int i = 0; i < 20; ++i) {
    std::vector<Letter> ls;
    for (int j = 0; j < 5; ++j)
      ls.push_back(Letter{static_cast<int>(testutil::pick(rng, 0, 1)),
                          testutil::pick(rng, 0, 1) ? 1 : -1});
    const Word w(ls);
    const auto img = rep.evaluate_word(w * w.inverse());
    CHECK(img.tpow == 0);
    CHECK(img.mat.is_identity());
  }
}

TEST_CASE("alpha tensor phi assembly") {
  const GroupPresentation p = trefoil();
  const CohomologyClass phi(p, {1, 1});
  SUBCASE("trivial alpha sends both generators to t") {
    const PhiCompatibleRep rep = trivial_rep(p, phi, FieldSpec::rationals());
    CHECK(rep.image(0).tpow == 1);
    CHECK(rep.image(1).tpow == 1);
    CHECK(rep.image(0).mat.is_identity());
  }
  SUBCASE("one-dimensional alpha over F5 with alpha(a) = alpha(b) = 2") {
    const FieldSpec f5 = FieldSpec::prime_field(5);
    KMatrix two(f5, 1, 1);
    two.at(0, 0) = Scalar::from_int(f5, 2);
    const LinearRep alpha(p, f5, 1, {two, two});
    const PhiCompatibleRep rep = assemble_alpha_tensor_phi(p, alpha, phi);
    CHECK(rep.image(0).mat.at(0, 0) == Scalar::from_int(f5, 2));
    CHECK(rep.image(0).tpow == 1);
  }
  SUBCASE("unequal images violate the relator") {
    const FieldSpec f5 = FieldSpec::prime_field(5);
    KMatrix two(f5, 1, 1), three(f5, 1, 1);
    two.at(0, 0) = Scalar::from_int(f5, 2);
    three.at(0, 0) = Scalar::from_int(f5, 3);
    CHECK_THROWS_AS(LinearRep(p, f5, 1, {two, three}), RelatorViolation);
  }
  SUBCASE("phi = 0 on a generator keeps that image constant") {
    const std::vector<std::string> xys{"x", "y", "s"};
    const GroupPresentation fib(
        xys, {Word::parse("sxSYX", xys), Word::parse("sySYXY", xys)},
        PresentationKind::deficiency_one);
    const CohomologyClass fibphi(fib, {0, 0, 1});
    const PhiCompatibleRep rep = trivial_rep(fib, fibphi, FieldSpec::rationals());
    CHECK(rep.image(0).tpow == 0);
    CHECK(rep.image(2).tpow == 1);
  }
}

TEST_CASE("admissible pair representations") {
  const GroupPresentation p = trefoil();
  const CohomologyClass phi(p, {1, 1});
  SUBCASE("initial pair gives g -> t^phi(g) over Q") {
    const AdmissiblePair initial(p, phi, 0, IntMat(0, 0),
                                 {PairElem{{}, 1}, PairElem{{}, 1}}, "abelian");
    CHECK(initial.initial());
    const PhiCompatibleRep rep = assemble_pair_rep(p, initial, phi);
    CHECK(rep.spec() == FieldSpec::rationals());
    CHECK(rep.image(0).mat.is_identity());
    CHECK(rep.image(0).tpow == 1);
  }
  SUBCASE("metabelian trefoil pair verifies aba = bab in Z^2 x| Z") {
    const AdmissiblePair pair = trefoil_metabelian(p, phi);
    CHECK(!pair.initial());
    const PhiCompatibleRep rep = assemble_pair_rep(p, pair, phi);
    // a -> t, b -> x1 t over Q(x1,x2)
    CHECK(rep.image(0).mat.at(0, 0).is_one());
    CHECK(rep.image(1).mat.at(0, 0) ==
          Scalar::laurent_monomial(rep.spec(), {1, 0}));
  }
  SUBCASE("images that break the relator are rejected") {
    CHECK_THROWS_AS(AdmissiblePair(p, phi, 2, mat2(1, 0, 0, 1),
                                   {PairElem{{0, 0}, 1}, PairElem{{1, 0}, 1}}, "bad"),
                    NotAHomomorphism);
  }
  SUBCASE("n-components must match phi") {
    CHECK_THROWS_AS(AdmissiblePair(p, phi, 0, IntMat(0, 0),
                                   {PairElem{{}, 1}, PairElem{{}, 2}}, "bad"),
                    PhiMismatch);
  }
}

TEST_CASE("two-complex construction") {
  const FieldSpec q = FieldSpec::rationals();
  SUBCASE("unknot: 0 -> R^0 -> R -> R -> 0") {
    const GroupPresentation p = unknot();
    const CohomologyClass phi(p, {1});
    const FreeChainComplex c = build_two_complex(p, trivial_rep(p, phi, q));
    CHECK(c.ranks() == std::vector<int>{1, 1, 0});
    CHECK(c.boundary(1).at(0, 0).degree() == Degree::of(1));  // 1 - t
  }
  SUBCASE("trefoil shapes and exactness") {
    const GroupPresentation p = trefoil();
    const CohomologyClass phi(p, {1, 1});
    const FreeChainComplex c = build_two_complex(p, trivial_rep(p, phi, q));
    CHECK(c.ranks() == std::vector<int>{1, 2, 1});
    CHECK((c.boundary(1) * c.boundary(2)).is_zero());
  }
  SUBCASE("Fox identity across random presentations and dimensions") {
    Rng rng(83);
    for (int i = 0; i < 20; ++i) {
      const int gens = static_cast<int>(testutil::pick(rng, 2, 3));
      const GroupPresentation p = testutil::random_commutator_presentation(rng, gens);
      IntVec phiv(gens);
      for (auto& v : phiv) v = testutil::pick(rng, -2, 2);
      if (std::all_of(phiv.begin(), phiv.end(), [](auto v) { return v == 0; })) phiv[0] = 1;
      const CohomologyClass phi(p, phiv);
      const PhiCompatibleRep rep = trivial_rep(p, phi, q);
      CHECK_NOTHROW(build_two_complex(p, rep));  // ctor verifies del o del = 0
    }
  }
}

TEST_CASE("direct two-complex torsion") {
  const FieldSpec q = FieldSpec::rationals();
  SUBCASE("trefoil with the trivial representation") {
    const GroupPresentation p = trefoil();
    const CohomologyClass phi(p, {1, 1});
    const PhiCompatibleRep rep = trivial_rep(p, phi, q);
    const TorsionResult tau = torsion_two_complex_direct(p, rep, 0);
    REQUIRE(tau.defined);
    CHECK(tau.degree() == 1);  // deg(t^2-t+1) - deg(t-1)
    // agreement with the tau-chain route
    const FreeChainComplex c = build_two_complex(p, rep);
    const auto chain = find_tau_chain(c);
    REQUIRE(chain.has_value());
    const TorsionResult tau2 = torsion_via_tau_chain(c, *chain);
    REQUIRE(tau2.defined);
    CHECK(tau2.degree() == tau.degree());
    if (q.commutative()) CHECK(tau.value->equal_up_to_unit(*tau2.value));
  }
  SUBCASE("unknot: empty numerator block") {
    const GroupPresentation p = unknot();
    const CohomologyClass phi(p, {1});
    const TorsionResult tau = torsion_two_complex_direct(p, trivial_rep(p, phi, q), 0);
    REQUIRE(tau.defined);
    CHECK(tau.degree() == -1);
  }
  SUBCASE("phi(h_l) = 0 is rejected") {
    const std::vector<std::string> xys{"x", "y", "s"};
    const GroupPresentation fib(
        xys, {Word::parse("sxSYX", xys), Word::parse("sySYXY", xys)},
        PresentationKind::deficiency_one);
    const CohomologyClass phi(fib, {0, 0, 1});
    const PhiCompatibleRep rep = trivial_rep(fib, phi, q);
    CHECK_THROWS_AS(torsion_two_complex_direct(fib, rep, 0), PreconditionError);
    const TorsionResult tau = torsion_two_complex_direct(fib, rep, 2);
    REQUIRE(tau.defined);
    CHECK(tau.degree() == 1);
  }
}

TEST_CASE("degree of 1 - alpha(h) blocks equals d |phi(h)|") {
  Rng rng(97);
  const GroupPresentation p = trefoil();
  const CohomologyClass phi(p, {1, 1});
  for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
    for (int d : {1, 2, 3}) {
      std::vector<KMatrix> images(2, testutil::random_invertible_kmatrix(rng, spec, d));
      const LinearRep alpha(p, spec, d, images);
      const PhiCompatibleRep rep = assemble_alpha_tensor_phi(p, alpha, phi);
      const auto det = dieudonne_det(rep.one_minus(Word::generator(0)));
      REQUIRE(det.has_value());
      CHECK(det->degree() == d);
    }
  }
}

TEST_CASE("closed complex: the three-torus") {
  const std::vector<std::string> abc{"a", "b", "c"};
  const GroupPresentation t3(abc,
                             {Word::parse("abAB", abc), Word::parse("caCA", abc),
                              Word::parse("bcBC", abc)},
                             PresentationKind::balanced_closed,
                             {Word::parse("C", abc), Word::parse("B", abc),
                              Word::parse("A", abc)});
  const CohomologyClass phi(t3, {1, 0, 0});
  const FieldSpec q = FieldSpec::rationals();
  std::vector<KMatrix> images(3, KMatrix::identity(q, 1));
  const LinearRep alpha(t3, q, 1, images);
  const PhiCompatibleRep rep = assemble_alpha_tensor_phi(t3, alpha, phi);

  const FreeChainComplex c = build_closed_complex(t3, rep);
  CHECK(c.ranks() == std::vector<int>{1, 3, 3, 1});

  // torsion of the fibered class on T^3 has degree 0
  const TorsionResult tau = torsion_closed_direct(t3, rep, 0, 0);
  REQUIRE(tau.defined);
  CHECK(tau.degree() == 0);

  // Alexander degrees (1, 2, 1, 0); deg Delta_2 = deg Delta_0 for closed input
  const AlexanderPolys alex = alexander_polynomials(c);
  CHECK(alex.orders[0].degree.value == 1);
  CHECK(alex.orders[1].degree.value == 2);
  CHECK(alex.orders[2].degree.value == 1);
  CHECK(alex.orders[3].degree.value == 0);

  // degree bookkeeping: deg tau = deg det B - d|phi(g_k)| - d|phi(h_l)|
  const Theorem1Report rep1 = check_theorem1(c);
  CHECK(rep1.tau_degree == 0);
}

TEST_CASE("closed complex input is validated") {
  const std::vector<std::string> abc{"a", "b", "c"};
  const GroupPresentation t3(abc,
                             {Word::parse("abAB", abc), Word::parse("caCA", abc),
                              Word::parse("bcBC", abc)},
                             PresentationKind::balanced_closed,
                             {Word::parse("a", abc), Word::parse("B", abc),
                              Word::parse("A", abc)});
  const CohomologyClass phi(t3, {1, 0, 0});
  const FieldSpec q = FieldSpec::rationals();
  std::vector<KMatrix> images(3, KMatrix::identity(q, 1));
  const LinearRep alpha(t3, q, 1, images);
  const PhiCompatibleRep rep = assemble_alpha_tensor_phi(t3, alpha, phi);
  // wrong dual words: del_2 del_3 != 0
  CHECK_THROWS_AS(build_closed_complex(t3, rep), BoundaryCheckFailed);

  // deficiency-one input is rejected by the closed builder
  const GroupPresentation tre = trefoil();
  const CohomologyClass tphi(tre, {1, 1});
  const PhiCompatibleRep trep = trivial_rep(tre, tphi, q);
  CHECK_THROWS_AS(build_closed_complex(tre, trep), PreconditionError);
  CHECK_THROWS_AS(torsion_closed_direct(tre, trep, 0, 0), PreconditionError);
}

TEST_CASE("admissible triple validation") {
  const GroupPresentation p = trefoil();
  const CohomologyClass phi(p, {1, 1});
  const AdmissiblePair meta = trefoil_metabelian(p, phi);
  const AdmissiblePair initial(p, phi, 0, IntMat(0, 0),
                               {PairElem{{}, 1}, PairElem{{}, 1}}, "abelian");
  SUBCASE("metabelian to abelian quotient is a valid triple") {
    const TripleMap map{IntMat(0, 2), {}};
    const TripleReport rep = validate_admissible_triple(p, meta, initial, map, phi);
    CHECK(rep.valid);
    CHECK(rep.initial2);
  }
  SUBCASE("identity triple is flagged as an isomorphism") {
    const TripleMap map{IntMat::identity(2), {0, 0}};
    const TripleReport rep = validate_admissible_triple(p, meta, meta, map, phi);
    CHECK(!rep.valid);
    CHECK(!rep.warnings.empty());
  }
  SUBCASE("non-commuting diagrams are rejected") {
    // wrong matrix: doesn't intertwine the automorphisms
    IntMat bad(2, 2);
    bad.at(0, 0) = 1;
    const TripleMap map{bad, {0, 0}};
    const TripleReport rep = validate_admissible_triple(p, meta, meta, map, phi);
    CHECK(!rep.valid);
  }
}

TEST_CASE("Alexander polynomial shapes from the corpus presentations") {
  const FieldSpec q = FieldSpec::rationals();
  const GroupPresentation p = trefoil();
  const CohomologyClass phi(p, {1, 1});
  const PhiCompatibleRep rep = trivial_rep(p, phi, q);
  const FreeChainComplex c = build_two_complex(p, rep);
  const AlexanderPolys alex = alexander_polynomials(c);
  REQUIRE(alex.orders.size() == 3);
  // Delta_0 = t - 1 (cyclic image), Delta_1 = t^2 - t + 1, Delta_2 = 1
  CHECK(alex.orders[0].degree.value == 1);
  CHECK(alex.orders[1].degree.value == 2);
  CHECK(alex.orders[2].degree.value == 0);

  // compare Delta_1 with the independent commutative Fox oracle
  const oracle::QPoly classical =
      oracle::classical_alexander(p.relators(), 2, {1, 1}, 0).unit_normalized();
  AbelianizedUnit u(q);
  u.push_numerator(alex.orders[1].value);
  const auto frac = u.reduced_normalized();
  oracle::QPoly mine;
  for (const auto& [e, cf] : frac.num.coeffs()) mine.set(e, cf.rational_value());
  CHECK(mine == classical);

  // metabelian pair: image is not cyclic, so Delta_0 = 1 (degree 0)
  const AdmissiblePair meta = trefoil_metabelian(p, phi);
  const PhiCompatibleRep prep = assemble_pair_rep(p, meta, phi);
  const AlexanderPolys palex = alexander_polynomials(build_two_complex(p, prep));
  CHECK(palex.orders[0].degree.value == 0);
  CHECK(!palex.orders[1].value.is_zero());
}
