#include <gtest/gtest.h>

#include "braidrep/analyze.hpp"
#include "braidrep/catalog.hpp"
#include "braidrep/construct.hpp"

using namespace braidrep;

namespace {

Representation direct_sum(const Representation& a, const Representation& b) {
  Representation s;
  s.n = a.n;
  s.dim = a.dim + b.dim;
  for (std::size_t k = 0; k < a.generators.size(); ++k) {
    CMatrix m = CMatrix::Zero(s.dim, s.dim);
    m.topLeftCorner(a.dim, a.dim) = a.generators[k];
    m.bottomRightCorner(b.dim, b.dim) = b.generators[k];
    s.generators.push_back(m);
  }
  return s;
}

Representation single(const CMatrix& g) {
  Representation r;
  r.n = 2;
  r.dim = static_cast<int>(g.rows());
  r.generators = {g};
  return r;
}

CMatrix jordan() {
  CMatrix j(2, 2);
  j << 1.0, 1.0, 0.0, 1.0;
  return j;
}

FiveTuple normalized(FiveTuple t) {
  const double m = t.total_mass();
  for (auto& w : t.mu) w /= m;
  return t;
}

/// X = {0,1,2,3}, pi_1 swaps 0<->1 and 2<->3.
FiveTuple two_orbit_tuple(std::vector<double> mu) {
  FiveTuple t;
  t.n = 2;
  t.points = {{0}, {1}, {2}, {3}};
  t.mu = std::move(mu);
  t.nu = {1, 1, 1, 1};
  t.action = {{1, 0, 3, 2}};
  t.derive_inverses();
  t.cocycle.emplace_back();
  for (std::size_t x = 0; x < 4; ++x) {
    if (t.mu[x] > 0) t.cocycle[0][x] = CMatrix::Constant(1, 1, 1.0);
  }
  return t;
}

/// Single point carrying a constant cocycle rho.
FiveTuple constant_tuple(const Representation& rho) {
  FiveTuple t;
  t.n = rho.n;
  t.points = {{0}};
  t.mu = {1.0};
  t.nu = {rho.dim};
  for (const auto& g : rho.generators) {
    t.action.push_back({0});
    t.cocycle.push_back({{0, g}});
  }
  t.derive_inverses();
  return t;
}

}  // namespace

TEST(Commutant, StandardIsScalar) {
  const auto c = commutant(catalog::standard(4, 2.0));
  EXPECT_EQ(c.dimension, 1);
  EXPECT_TRUE(c.is_scalar);
  EXPECT_TRUE(c.is_local);
}

TEST(Commutant, TwoCopiesOfStandard) {
  const auto s = catalog::standard(4, 2.0);
  const auto c = commutant(direct_sum(s, s));
  EXPECT_EQ(c.dimension, 4);
  EXPECT_EQ(c.semisimple_quotient_dim, 4);
  EXPECT_FALSE(c.is_local);
}

TEST(Commutant, IndecomposableExampleTwoStrands) {
  // psi = perm (x) A splits as A + A + A + (-A) over the three orbits of {0,1}^2.
  const auto c = commutant(build_representation(catalog::indecomposable_example(2)));
  EXPECT_EQ(c.dimension, 20);
  EXPECT_EQ(c.radical_dim, 10);
  EXPECT_EQ(c.semisimple_quotient_dim, 10);
  EXPECT_FALSE(c.is_local);
}

TEST(Irreducible, OneDimensional) {
  const auto r = is_irreducible(single(CMatrix::Constant(1, 1, 3.0)));
  EXPECT_EQ(r.verdict, Verdict::Yes);
  EXPECT_EQ(r.closure_dim, 1);
}

TEST(Irreducible, StandardFour) {
  const auto r = is_irreducible(catalog::standard(4, 2.0));
  EXPECT_EQ(r.verdict, Verdict::Yes);
  EXPECT_EQ(r.closure_dim, 16);
}

TEST(Irreducible, EgTwoOfFourIsReducible) {
  const auto rep = catalog::eg_family({1, 1, 0, 0}, catalog::eg_symmetric_q(2.0), 4).rep;
  const auto r = is_irreducible(rep);
  EXPECT_EQ(r.verdict, Verdict::No);
  EXPECT_EQ(r.closure_dim, 18);
  ASSERT_TRUE(r.invariant_subspace.has_value());
  EXPECT_LE(detail::invariance_leak(rep, *r.invariant_subspace), 1e-8);
}

TEST(Irreducible, IndecomposableExampleWitness) {
  const auto rep = build_representation(catalog::indecomposable_example(2));
  const auto r = is_irreducible(rep);
  EXPECT_EQ(r.verdict, Verdict::No);
  ASSERT_TRUE(r.invariant_subspace.has_value());
  const auto& p = *r.invariant_subspace;
  EXPECT_GT(p.cols(), 0);
  EXPECT_LT(p.cols(), rep.dim);
  EXPECT_LE(detail::invariance_leak(rep, p), 1e-8);
}

TEST(Irreducible, JordanBlockWitness) {
  const auto rep = single(jordan());
  const auto r = is_irreducible(rep);
  EXPECT_EQ(r.verdict, Verdict::No);
  ASSERT_TRUE(r.invariant_subspace.has_value());
  EXPECT_EQ(r.invariant_subspace->cols(), 1);
  EXPECT_NEAR(std::abs((*r.invariant_subspace)(0, 0)), 1.0, 1e-12);
}

TEST(Factor, Examples) {
  const auto a = catalog::standard(4, 2.0);
  const auto b = catalog::standard(4, 3.0);
  EXPECT_EQ(is_factor(a).verdict, Verdict::Yes);
  const auto mixed = is_factor(direct_sum(a, b));
  EXPECT_EQ(mixed.verdict, Verdict::No);
  EXPECT_EQ(mixed.center_dim, 2);
  const auto same = is_factor(direct_sum(a, a));
  EXPECT_EQ(same.verdict, Verdict::Yes);
  EXPECT_EQ(same.algebra_dim, 16);
}

TEST(Indecomposable, Examples) {
  const auto a = catalog::standard(4, 2.0);
  EXPECT_EQ(is_indecomposable(a).verdict, Verdict::Yes);
  EXPECT_EQ(is_indecomposable(direct_sum(a, catalog::standard(4, 3.0))).verdict, Verdict::No);
  const auto j = single(jordan());
  EXPECT_EQ(is_indecomposable(j).verdict, Verdict::Yes);
  EXPECT_EQ(is_irreducible(j).verdict, Verdict::No);
  EXPECT_EQ(is_indecomposable(build_representation(catalog::indecomposable_example(2))).verdict, Verdict::No);
}

TEST(Equivalent, SelfGivesIdentity) {
  const auto a = catalog::standard(4, 2.0);
  const auto r = are_equivalent(a, a);
  EXPECT_EQ(r.verdict, Verdict::Yes);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ((*r.witness - CMatrix::Identity(4, 4)).norm(), 0.0);
}

TEST(Equivalent, StandardVersusEgSingleOne) {
  const auto eg = catalog::eg_family({1, 0, 0, 0}, catalog::eg_symmetric_q(2.0), 4).rep;
  // The eg parameter t enters squared: eg(e1, t) matches standard(t^2).
  const auto yes = are_equivalent(catalog::standard(4, 4.0), eg);
  EXPECT_EQ(yes.verdict, Verdict::Yes);
  EXPECT_EQ(yes.intertwiner_dim, 1);
  EXPECT_LE(yes.residual, 1e-10);
  EXPECT_EQ(are_equivalent(eg, catalog::standard(4, 4.0)).verdict, Verdict::Yes);
  EXPECT_EQ(are_equivalent(catalog::standard(4, 2.0), eg).verdict, Verdict::No);
}

TEST(Equivalent, DifferentParameters) {
  const auto r = are_equivalent(catalog::standard(4, 2.0), catalog::standard(4, 3.0));
  EXPECT_EQ(r.verdict, Verdict::No);
  EXPECT_EQ(r.intertwiner_dim, 0);
  EXPECT_EQ(are_equivalent(catalog::standard(4, 2.0), catalog::standard(5, 2.0)).verdict, Verdict::No);
}

TEST(Equivalent, CatalogPairs) {
  CMatrix q(2, 2);
  q << 1.0, 2.0, Complex(0.0, 3.0), 1.0;
  EXPECT_EQ(are_equivalent(catalog::diagonal_local(q, 3), build_representation(catalog::diagonal_local_tuple(q, 3)))
                .verdict,
            Verdict::Yes);
  EXPECT_EQ(are_equivalent(catalog::standard(5, 2.0), build_representation(catalog::standard_tuple(5, 2.0))).verdict,
            Verdict::Yes);
}

TEST(Orbits, StandardTupleSingleOrbit) {
  const auto r = orbit_decomposition(catalog::standard_tuple(4, 2.0));
  ASSERT_EQ(r.orbits.size(), 1u);
  EXPECT_EQ(r.orbits[0].size(), 4u);
  EXPECT_TRUE(r.ergodic);
}

TEST(Orbits, TwoOrbitsAndSinglePoint) {
  const auto r = orbit_decomposition(two_orbit_tuple({1.0, 1.0, 0.5, 0.5}));
  ASSERT_EQ(r.orbits.size(), 2u);
  EXPECT_FALSE(r.ergodic);
  EXPECT_DOUBLE_EQ(r.masses[0], 2.0);
  EXPECT_DOUBLE_EQ(r.masses[1], 1.0);
  EXPECT_TRUE(orbit_decomposition(constant_tuple(catalog::standard(3, 2.0))).ergodic);
}

TEST(Orbits, ErgodicMeansInvariantIndicatorsConstant) {
  const std::vector<FiveTuple> tuples{catalog::standard_tuple(4, 2.0), two_orbit_tuple({1.0, 1.0, 1.0, 1.0}),
                                      two_orbit_tuple({0.0, 0.0, 1.0, 2.0}),
                                      catalog::eg_family({1, 1, 0}, catalog::eg_symmetric_q(2.0), 3).tuple};
  for (const auto& t : tuples) {
    const auto sup = t.support();
    bool nonconstant_invariant = false;
    for (unsigned mask = 0; mask < (1u << sup.size()); ++mask) {
      std::map<std::size_t, int> f;
      for (std::size_t i = 0; i < sup.size(); ++i) f[sup[i]] = (mask >> i) & 1u;
      bool invariant = true;
      for (const auto& p : t.action) {
        for (auto x : sup) invariant = invariant && f.at(p[x]) == f.at(x);
      }
      const bool constant = mask == 0 || mask == (1u << sup.size()) - 1;
      if (invariant && !constant) nonconstant_invariant = true;
    }
    EXPECT_EQ(orbit_decomposition(t).ergodic, !nonconstant_invariant);
  }
}

TEST(Disjointness, DifferentOrbits) {
  const auto r = check_disjointness(two_orbit_tuple({0.5, 0.5, 0.0, 0.0}), two_orbit_tuple({0.0, 0.0, 0.25, 0.75}));
  EXPECT_TRUE(r.disjoint);
  EXPECT_FALSE(r.equivalent);
  EXPECT_EQ(r.witness_set, (std::vector<std::size_t>{0, 1}));
  EXPECT_DOUBLE_EQ(r.mass_first, 1.0);
  EXPECT_DOUBLE_EQ(r.mass_second, 0.0);
}

TEST(Disjointness, SameOrbit) {
  const auto a = two_orbit_tuple({0.5, 0.5, 0.0, 0.0});
  EXPECT_TRUE(check_disjointness(a, a).equivalent);
  const auto r = check_disjointness(a, two_orbit_tuple({0.1, 0.9, 0.0, 0.0}));
  EXPECT_TRUE(r.equivalent);
  EXPECT_FALSE(r.disjoint);
}

TEST(Disjointness, Errors) {
  const auto a = two_orbit_tuple({0.5, 0.5, 0.0, 0.0});
  try {
    check_disjointness(a, two_orbit_tuple({1.0, 1.0, 0.0, 0.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormalized);
  }
  try {
    check_disjointness(a, two_orbit_tuple({0.25, 0.25, 0.25, 0.25}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotErgodic);
  }
}

TEST(CrossCheck, FirstPropositionConfirmed) {
  const auto t = normalized(catalog::eg_family({1, 0, 0, 0}, catalog::eg_symmetric_q(2.0), 4).tuple);
  const auto r = cross_check_section6(t);
  const auto& c = r.at("selfadjoint_ergodic_irreducible");
  EXPECT_EQ(c.verdict, CrossVerdict::Confirmed);
  EXPECT_TRUE(c.conclusion_holds.value_or(false));
  EXPECT_FALSE(r.any_violation());
  EXPECT_EQ(r.at("factor_implies_ergodic").verdict, CrossVerdict::Confirmed);
  EXPECT_EQ(r.at("factor_implies_constant_nu").verdict, CrossVerdict::Confirmed);
}

TEST(CrossCheck, ConstantCocycleConfirmed) {
  const auto rho = catalog::eg_family({1, 0, 0}, catalog::eg_symmetric_q(2.0), 3).rep;
  const auto r = cross_check_section6(constant_tuple(rho));
  EXPECT_EQ(r.at("constant_cocycle_irreducible").verdict, CrossVerdict::Confirmed);
  EXPECT_EQ(r.at("selfadjoint_ergodic_irreducible").verdict, CrossVerdict::Vacuous);
  EXPECT_FALSE(r.any_violation());
}

TEST(CrossCheck, IndecomposableExampleVacuous) {
  const auto r = cross_check_section6(normalized(catalog::indecomposable_example(2)));
  const auto& c = r.at("selfadjoint_ergodic_irreducible");
  EXPECT_EQ(c.verdict, CrossVerdict::Vacuous);
  EXPECT_FALSE(c.conclusion_holds.has_value());
  EXPECT_FALSE(r.any_violation());
}

TEST(CrossCheck, PhaseCocycleNeedsFiberPremise) {
  // Self-adjoint, ergodic, nu = 1, U = (i, -i): reducible, since the fibers
  // are invisible to psi psi^H = 1.
  FiveTuple t;
  t.n = 2;
  t.points = {{0}, {1}};
  t.mu = {0.5, 0.5};
  t.nu = {1, 1};
  t.action = {{1, 0}};
  t.derive_inverses();
  t.cocycle = {{{0, CMatrix::Constant(1, 1, Complex(0.0, 1.0))}, {1, CMatrix::Constant(1, 1, Complex(0.0, -1.0))}}};
  const auto r = cross_check_section6(t);
  const auto& c = r.at("selfadjoint_ergodic_irreducible");
  EXPECT_EQ(c.verdict, CrossVerdict::Vacuous);
  bool premise_failed = false;
  for (const auto& h : c.hypotheses) {
    if (h.name == "fibers_in_spectral_algebra") premise_failed = !h.holds;
    if (h.name == "self_adjoint" || h.name == "ergodic" || h.name == "nu_one") {
      EXPECT_TRUE(h.holds) << h.name;
    }
  }
  EXPECT_TRUE(premise_failed);
  EXPECT_EQ(is_irreducible(build_representation(t)).verdict, Verdict::No);
}

TEST(CrossCheck, NoViolationsOnCatalog) {
  CMatrix q(2, 2);
  q << 1.0, 2.0, 2.0, 3.0;
  const std::vector<FiveTuple> tuples{
      normalized(catalog::standard_tuple(4, 2.0)),
      normalized(catalog::diagonal_local_tuple(q, 3)),
      normalized(catalog::eg_family({1, 1, 0, 0}, catalog::eg_symmetric_q(2.0), 4).tuple),
      two_orbit_tuple({0.25, 0.25, 0.25, 0.25}),
      normalized(catalog::indecomposable_example(3)),
  };
  for (const auto& t : tuples) {
    const auto r = cross_check_section6(t);
    for (const auto& c : r.checks) EXPECT_NE(c.verdict, CrossVerdict::Violation) << c.proposition;
  }
}

TEST(CrossCheck, NonErgodicIsNotFactor) {
  const auto r = cross_check_section6(two_orbit_tuple({0.25, 0.25, 0.25, 0.25}));
  const auto& c = r.at("factor_implies_ergodic");
  EXPECT_EQ(c.verdict, CrossVerdict::Vacuous);
  EXPECT_FALSE(c.hypotheses.front().holds);
}
