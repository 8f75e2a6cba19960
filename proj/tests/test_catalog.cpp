#include <gtest/gtest.h>

#include <random>

#include "braidrep/catalog.hpp"
#include "braidrep/construct.hpp"
#include "braidrep/linalg.hpp"

using namespace braidrep;

namespace {

double worst(const Representation& rep) { return max_relation_residual(braid_relation_residuals(rep)); }

CMatrix random_q(int m, std::mt19937& rng) {
  std::normal_distribution<double> g;
  CMatrix q(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) q(i, j) = Complex(g(rng), g(rng));
  }
  return q;
}

void expect_same(const Representation& a, const Representation& b, double tol = 0.0) {
  ASSERT_EQ(a.dim, b.dim);
  ASSERT_EQ(a.generators.size(), b.generators.size());
  for (std::size_t k = 0; k < a.generators.size(); ++k) {
    EXPECT_LE((a.generators[k] - b.generators[k]).norm(), tol) << "generator " << k + 1;
  }
}

}  // namespace

TEST(Standard, DisplayedMatrix) {
  const auto rep = catalog::standard(3, 1.0);
  CMatrix expect(3, 3);
  expect << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  EXPECT_EQ((rep.generators[0] - expect).norm(), 0.0);
}

TEST(Standard, RelationsAndPositiveOperator) {
  for (int n = 3; n <= 6; ++n) EXPECT_LE(worst(catalog::standard(n, Complex(-1.0, 1.0))), 1e-12);
  const auto rep = catalog::standard(4, 2.0);
  CMatrix expect = CMatrix::Identity(4, 4);
  expect(0, 0) = 4.0;
  EXPECT_EQ((rep.generators[0] * rep.generators[0].adjoint() - expect).norm(), 0.0);
}

TEST(Standard, InvalidParameter) {
  EXPECT_THROW(catalog::standard(4, 0.0), Error);
  EXPECT_THROW(catalog::standard(2, 1.0), Error);
  EXPECT_THROW(catalog::burau(4, 0.0), Error);
}

TEST(StandardTuple, SupportAndMeasure) {
  for (int n = 3; n <= 6; ++n) {
    const auto t = catalog::standard_tuple(n, 2.0);
    EXPECT_EQ(t.size(), std::size_t{1} << (n - 1));
    EXPECT_EQ(t.support().size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(check_quasi_invariance(t).invariant);
  }
}

TEST(Burau, RelationsAndNonCommuting) {
  for (int n = 3; n <= 5; ++n) EXPECT_LE(worst(catalog::burau(n, 2.0)), 1e-12);
  const auto rep = catalog::burau(4, 2.0);
  std::vector<CMatrix> h;
  for (const auto& g : rep.generators) h.push_back(g * g.adjoint());
  EXPECT_NEAR(linalg::commutator(h[0], h[1]).norm(), 22.67156809750927, 1e-9);
  EXPECT_NEAR(linalg::commutator(h[0], h[2]).norm(), 2.8284271247461903, 1e-9);
  EXPECT_NEAR(linalg::commutator(h[1], h[2]).norm(), 33.015148038438355, 1e-9);
}

TEST(DiagonalLocal, TrivialQIsPermutation) {
  const auto rep = catalog::diagonal_local(CMatrix::Ones(2, 2), 3);
  EXPECT_LE(worst(rep), 0.0);
  for (const auto& g : rep.generators) {
    EXPECT_LE((g * g.adjoint() - CMatrix::Identity(8, 8)).norm(), 0.0);
  }
}

TEST(DiagonalLocal, SpectrumOfFirstGenerator) {
  CMatrix q(2, 2);
  q << 1.0, 2.0, 3.0, 1.0;
  const auto rep = catalog::diagonal_local(q, 3);
  const auto c = linalg::hermitian_eig(rep.generators[0] * rep.generators[0].adjoint());
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NEAR(c[0].value.real(), 9.0, 1e-12);
  EXPECT_EQ(c[0].multiplicity, 2);
  EXPECT_NEAR(c[1].value.real(), 4.0, 1e-12);
  EXPECT_EQ(c[1].multiplicity, 2);
  EXPECT_NEAR(c[2].value.real(), 1.0, 1e-12);
  EXPECT_EQ(c[2].multiplicity, 4);
}

TEST(DiagonalLocal, RandomQSatisfiesBraidEquation) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 2 + trial % 2;
    const auto rep = catalog::diagonal_local(random_q(m, rng), 4);
    EXPECT_LE(worst(rep), 1e-12);
    // c_k c_k^H = sum |q_ab|^2 P_{k,(a,b)}: diagonal in the tensor basis
    for (const auto& g : rep.generators) {
      const CMatrix h = g * g.adjoint();
      EXPECT_LE((h - CMatrix(h.diagonal().asDiagonal())).norm(), 1e-12);
    }
  }
}

TEST(DiagonalLocal, TupleBuildsTheSameMatrices) {
  std::mt19937 rng(23);
  for (int m = 2; m <= 3; ++m) {
    for (int n = 3; n <= 4; ++n) {
      const CMatrix q = random_q(m, rng);
      const auto t = catalog::diagonal_local_tuple(q, n);
      std::size_t expected = 1;
      for (int i = 0; i < n; ++i) expected *= static_cast<std::size_t>(m);
      EXPECT_EQ(t.support().size(), expected);
      std::size_t all = 1;
      for (int i = 0; i < 2 * (n - 1); ++i) all *= static_cast<std::size_t>(m);
      EXPECT_EQ(t.size(), all);
      expect_same(build_representation(t), catalog::diagonal_local(q, n));
    }
  }
}

TEST(GroupTable, SymmetricGroupLaws) {
  const auto s3 = catalog::symmetric_group(3);
  EXPECT_EQ(s3.table.order, 6);
  EXPECT_NO_THROW(s3.table.validate());
  const auto tset = s3.transpositions();
  EXPECT_EQ(tset.elements.size(), 3u);
  EXPECT_NO_THROW(tset.validate(s3.table));
  catalog::ConjClosedSubset bad{{tset.elements[0]}};
  EXPECT_THROW(bad.validate(s3.table), Error);
  auto broken = s3.table;
  std::swap(broken.product[1][2], broken.product[1][3]);
  EXPECT_THROW(broken.validate(), Error);
}

TEST(GroupCocycle, TrivialGammaOnS3) {
  const auto s3 = catalog::symmetric_group(3);
  const auto tset = s3.transpositions();
  const auto gamma = catalog::gamma_trivial(s3.table, tset);
  const auto rep = catalog::group_cocycle_local(s3.table, tset, gamma, 3);
  EXPECT_EQ(rep.dim, 27);
  EXPECT_LE(worst(rep), 1e-12);
  expect_same(build_representation(catalog::group_cocycle_local_tuple(s3.table, tset, gamma, 3)), rep);
}

TEST(GroupCocycle, CoboundaryEigenvalues) {
  const auto s3 = catalog::symmetric_group(3);
  const auto tset = s3.transpositions();
  std::map<int, Complex> f;
  const double fv[] = {1.0, 2.0, 5.0};
  for (std::size_t i = 0; i < 3; ++i) f[tset.elements[i]] = fv[i];
  const auto gamma = catalog::gamma_coboundary(s3.table, tset, [&](int g) { return Complex(s3.sign(g), 0.0); }, f);
  EXPECT_NO_THROW(gamma.validate(s3.table, tset));
  const auto rep = catalog::group_cocycle_local(s3.table, tset, gamma, 3);
  EXPECT_LE(worst(rep), 1e-12);
  // c_k c_k^H at basis vector (a, b, ...) equals |gamma(b, b^{-1} a b)|^2
  const CMatrix h = rep.generators[0] * rep.generators[0].adjoint();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const int ga = tset.elements[static_cast<std::size_t>(a)];
      const int gb = tset.elements[static_cast<std::size_t>(b)];
      const double expect = std::norm(gamma.at(gb, s3.table.conj(s3.table.inv(gb), ga)));
      for (int c = 0; c < 3; ++c) EXPECT_NEAR(h(a * 9 + b * 3 + c, a * 9 + b * 3 + c).real(), expect, 1e-12);
    }
  }
  // the induced action is not an involution
  const auto t = catalog::group_cocycle_local_tuple(s3.table, tset, gamma, 3);
  EXPECT_NE(t.action[0], t.action_inverse[0]);
  expect_same(build_representation(t), rep);
}

TEST(GroupCocycle, RejectsBadGamma) {
  const auto s3 = catalog::symmetric_group(3);
  const auto tset = s3.transpositions();
  auto gamma = catalog::gamma_trivial(s3.table, tset);
  gamma.values[{0, tset.elements[0]}] = 2.0;  // gamma(1, t) != 1
  try {
    catalog::group_cocycle_local(s3.table, tset, gamma, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidGamma);
  }
  gamma = catalog::gamma_trivial(s3.table, tset);
  gamma.values[{1, tset.elements[1]}] = 3.0;
  try {
    catalog::group_cocycle_local(s3.table, tset, gamma, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidGamma);
  }
}

TEST(GroupCocycle, ExhaustiveSingleValuePerturbationsRejected) {
  const auto s3 = catalog::symmetric_group(3);
  const auto tset = s3.transpositions();
  const auto base = catalog::gamma_trivial(s3.table, tset);
  for (const auto& [key, value] : base.values) {
    auto gamma = base;
    gamma.values[key] = value * 1.5;
    EXPECT_THROW(gamma.validate(s3.table, tset), Error) << key.first << "," << key.second;
  }
}

TEST(EgFamily, DimensionsAndTuple) {
  const auto eg = catalog::eg_family({1, 1, 0, 0}, catalog::eg_symmetric_q(2.0), 4);
  EXPECT_EQ(eg.rep.dim, 6);
  EXPECT_EQ(eg.tuple.size(), 16u);
  EXPECT_EQ(eg.tuple.support().size(), 6u);
  EXPECT_LE(worst(eg.rep), 1e-12);
  expect_same(build_representation(eg.tuple), eg.rep);
  const auto five = catalog::eg_family({1, 1, 0, 0, 0}, catalog::eg_symmetric_q(2.0), 5);
  EXPECT_EQ(five.rep.dim, 10);
}

TEST(EgFamily, FirstUnitPatternMatchesStandardAtTSquared) {
  // symmetric q gives a representation equivalent to standard(t^2), not standard(t)
  for (int n = 4; n <= 5; ++n) {
    std::vector<int> z(static_cast<std::size_t>(n), 0);
    z[0] = 1;
    const auto eg = catalog::eg_family(z, catalog::eg_symmetric_q(2.0), n);
    EXPECT_EQ(linalg::intertwiner_space(catalog::standard(n, 4.0).generators, eg.rep.generators).size(), 1u);
    EXPECT_EQ(linalg::intertwiner_space(catalog::standard(n, 2.0).generators, eg.rep.generators).size(), 0u);
  }
}

TEST(EgFamily, ClosureOfTwoOnesPattern) {
  const auto eg = catalog::eg_family({1, 1, 0, 0}, catalog::eg_symmetric_q(2.0), 4);
  EXPECT_EQ(linalg::algebra_closure(eg.rep.generators).size(), 18u);
}

TEST(EgFamily, InvalidParameters) {
  EXPECT_THROW(catalog::eg_family({1, 0}, catalog::eg_symmetric_q(0.0), 2), Error);
  EXPECT_THROW(catalog::eg_family({1, 0, 0}, catalog::eg_symmetric_q(2.0), 2), Error);
  EXPECT_THROW(catalog::eg_family({-1, 0}, catalog::eg_symmetric_q(2.0), 2), Error);
}

TEST(Indecomposable, StructureAndInvariantLine) {
  const auto t = catalog::indecomposable_example(2);
  const auto rep = build_representation(t);
  EXPECT_EQ(rep.dim, 8);
  EXPECT_LE(worst(rep), 0.0);
  EXPECT_TRUE(check_transposition_shortcut(t).pass);
  // constant section f = (1, 0) on every fiber spans an invariant subspace
  CMatrix k = CMatrix::Zero(8, 4);
  for (int p = 0; p < 4; ++p) k(2 * p, p) = 1.0;
  for (const auto& g : rep.generators) {
    const CMatrix leak = (CMatrix::Identity(8, 8) - k * k.adjoint()) * g * k;
    EXPECT_LE(leak.norm(), 0.0);
  }
  EXPECT_LE(worst(build_representation(catalog::indecomposable_example(3))), 0.0);
}
