#include <gtest/gtest.h>

#include "burnside/bar.hpp"
#include "burnside/deformation.hpp"
#include "burnside/fixtures.hpp"
#include "burnside/module.hpp"
#include "burnside/poset.hpp"

using namespace burnside;
using R = Rational;

namespace {

/* deformation whose correction at radical element u is the given
 * degree-1 cochain, all other corrections zero */
Deformation<R> cochain_deformation(const FinDimAlgebra<R>& a,
                                   const ModuleFamily<R>& family,
                                   const TestRing<R>& ring, std::size_t u,
                                   const BarCochain<R>& f) {
  auto d = trivial_deformation(a, family, ring);
  for (std::size_t b = 0; b < a.dim(); ++b) d.radical_part[b][u] = f.vals[b];
  return d;
}

RightModule<R> m2_row_module(const FinDimAlgebra<R>& m2) {
  RightModule<R> m;
  m.dim = 2;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Matrix<R> act(2, 2);
      act.at(a, b) = R(1);
      m.action.push_back(std::move(act));
    }
  m.validate(m2);
  return m;
}

}  // namespace

TEST(TestRings, TerminalAndEpsilon) {
  auto terminal = trivial_test_ring<R>(3);
  EXPECT_EQ(terminal.dim(), 3u);
  EXPECT_EQ(terminal.radical_dim(), 0u);
  EXPECT_EQ(terminal.nilpotency, 1u);
  EXPECT_TRUE(terminal.square_zero());

  auto eps = epsilon_ring<R>(2, 0, 1);
  EXPECT_EQ(eps.dim(), 3u);
  EXPECT_EQ(eps.nilpotency, 2u);
  EXPECT_EQ(eps.peirce(0, 0), (std::vector<std::size_t>{0}));
  EXPECT_EQ(eps.peirce(0, 1), (std::vector<std::size_t>{2}));
  EXPECT_EQ(eps.peirce(1, 0), (std::vector<std::size_t>{}));
  // e_0 * eps = eps, eps * e_0 = 0
  auto left = eps.algebra.mult(eps.algebra.basis_vector(0), eps.algebra.basis_vector(2));
  auto right = eps.algebra.mult(eps.algebra.basis_vector(2), eps.algebra.basis_vector(0));
  EXPECT_EQ(left, eps.algebra.basis_vector(2));
  EXPECT_EQ(right, Vec<R>(3, R(0)));
}

TEST(TestRings, TruncatedPowers) {
  auto ring = truncated_power_ring<R>(3);
  EXPECT_EQ(ring.dim(), 3u);
  EXPECT_EQ(ring.nilpotency, 3u);
  EXPECT_FALSE(ring.square_zero());
  // x * x = x^2, x * x^2 = 0
  auto xx = ring.algebra.mult(ring.algebra.basis_vector(1), ring.algebra.basis_vector(1));
  EXPECT_EQ(xx, ring.algebra.basis_vector(2));
  auto xxx = ring.algebra.mult(ring.algebra.basis_vector(1), ring.algebra.basis_vector(2));
  EXPECT_EQ(xxx, Vec<R>(3, R(0)));
}

TEST(TestRings, RejectsBadSpecs) {
  TestRingSpec<R> bad;
  bad.points = 2;
  bad.positions = {{0, 1}, {0, 1}};
  bad.products = {{0, 1, 0, R(1)}};  // (0,1) then (0,1) does not compose
  EXPECT_THROW(make_test_ring(bad), StructuralMapViolation);

  TestRingSpec<R> misplaced;
  misplaced.points = 2;
  misplaced.positions = {{0, 1}, {1, 0}, {1, 1}};
  misplaced.products = {{0, 1, 2, R(1)}};  // (0,1)*(1,0) must land in (0,0)
  EXPECT_THROW(make_test_ring(misplaced), StructuralMapViolation);

  TestRingSpec<R> outside;
  outside.points = 1;
  outside.positions = {{0, 2}};
  EXPECT_THROW(make_test_ring(outside), StructuralMapViolation);

  TestRingSpec<R> idem;
  idem.points = 1;
  idem.positions = {{0, 0}};
  idem.products = {{0, 0, 0, R(1)}};  // n^2 = n never dies
  EXPECT_THROW(make_test_ring(idem), RadicalNotNilpotent);
}

TEST(Lifting, TrivialLiftIsADeformation) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  auto d = trivial_deformation(inc.algebra, fam, trivial_test_ring<R>(4));
  EXPECT_TRUE(is_deformation(inc.algebra, fam, d).ok);

  auto eps = trivial_deformation(inc.algebra, fam, epsilon_ring<R>(4, 0, 1));
  EXPECT_TRUE(is_deformation(inc.algebra, fam, eps).ok);
}

TEST(Lifting, CocycleTailsLiftAndOthersDoNot) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  auto ring = epsilon_ring<R>(4, 0, 1);

  auto e1 = ext(inc.algebra, fam, 0, 1, 1);
  ASSERT_EQ(e1.dimension, 1u);
  auto good = cochain_deformation(inc.algebra, fam, ring, 0, e1.reps[0]);
  auto verdict = is_deformation(inc.algebra, fam, good);
  EXPECT_TRUE(verdict.ok);
  EXPECT_TRUE(verdict.failure.empty());

  // indicator of e(2,2): not a cocycle, and it meets the unit
  auto bad = BarCochain<R>::zero(1, 0, 1, inc.algebra.dim(), 1, 1);
  bad.vals[inc.pair_index(1, 1)].at(0, 0) = R(1);
  auto d = cochain_deformation(inc.algebra, fam, ring, 0, bad);
  auto report = is_deformation(inc.algebra, fam, d);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.failure.empty());
}

TEST(Lifting, UnitDiagnostic) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  auto d = trivial_deformation(inc.algebra, fam, epsilon_ring<R>(4, 0, 1));
  for (std::size_t b = 0; b < inc.algebra.dim(); ++b)
    d.radical_part[b][0].at(0, 0) = R(1);
  auto report = is_deformation(inc.algebra, fam, d);
  EXPECT_FALSE(report.ok);
  EXPECT_NE(report.failure.find("unit"), std::string::npos);
}

TEST(Equivalence, SelfAndCoboundaryShift) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  auto ring = epsilon_ring<R>(4, 0, 1);
  auto e1 = ext(inc.algebra, fam, 0, 1, 1);
  auto d = cochain_deformation(inc.algebra, fam, ring, 0, e1.reps[0]);

  EXPECT_TRUE(equivalent(inc.algebra, fam, d, d));

  auto u = BarCochain<R>::from_flat(Vec<R>{R(3)}, 0, 0, 1, inc.algebra.dim(), 1, 1);
  auto shift = bar_differential(inc.algebra, fam, u);
  auto shifted = d;
  for (std::size_t b = 0; b < inc.algebra.dim(); ++b)
    shifted.radical_part[b][0] = shifted.radical_part[b][0] + shift.vals[b];
  EXPECT_TRUE(is_deformation(inc.algebra, fam, shifted).ok);
  EXPECT_TRUE(equivalent(inc.algebra, fam, d, shifted));
}

TEST(Equivalence, NonzeroClassIsNotTrivial) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  auto ring = epsilon_ring<R>(4, 0, 1);
  auto e1 = ext(inc.algebra, fam, 0, 1, 1);
  auto d = cochain_deformation(inc.algebra, fam, ring, 0, e1.reps[0]);
  auto trivial = trivial_deformation(inc.algebra, fam, ring);
  EXPECT_FALSE(equivalent(inc.algebra, fam, d, trivial));
}

TEST(Equivalence, RefusesDeepOrForeignRings) {
  auto base = fixtures::base_field_algebra<R>();
  ModuleFamily<R> one = {regular_module(base)};
  auto deep = trivial_deformation(base, one, truncated_power_ring<R>(3));
  EXPECT_THROW(equivalent(base, one, deep, deep), NilpotencyTooDeep);

  auto inc = incidence_algebra<R>(fixtures::poset("chain2"));
  auto fam = simple_modules(inc);
  auto d1 = trivial_deformation(inc.algebra, fam, epsilon_ring<R>(2, 0, 1));
  auto d2 = trivial_deformation(inc.algebra, fam, epsilon_ring<R>(2, 1, 0));
  EXPECT_THROW(equivalent(inc.algebra, fam, d1, d2), IndexMismatch);
}

TEST(Tangent, PinnedTables) {
  auto diamond = incidence_algebra<R>(fixtures::poset("diamond"));
  auto dfam = simple_modules(diamond);
  std::vector<std::vector<std::size_t>> expected = {
      {0, 1, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}};
  EXPECT_EQ(tangent_dimensions(diamond.algebra, dfam), expected);

  auto hered = incidence_algebra<R>(fixtures::poset("hereditary"));
  auto hfam = simple_modules(hered);
  std::vector<std::vector<std::size_t>> hexp = {
      {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}};
  EXPECT_EQ(tangent_dimensions(hered.algebra, hfam), hexp);
}

TEST(Tangent, MatrixAlgebraIsRigid) {
  auto m2 = fixtures::matrix2_algebra<R>();
  ModuleFamily<R> fam = {m2_row_module(m2)};
  std::vector<std::vector<std::size_t>> expected = {{0}};
  EXPECT_EQ(tangent_dimensions(m2, fam), expected);
}

TEST(Tangent, MatchesTheComplexOnTheCatalog) {
  for (const auto& name : fixtures::poset_names()) {
    auto inc = incidence_algebra<R>(fixtures::poset(name));
    auto fam = simple_modules(inc);
    auto table = tangent_dimensions(inc.algebra, fam);
    const std::size_t r = fam.size();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        EXPECT_EQ(table[i][j], ext(inc.algebra, fam, i, j, 1).dimension)
            << name << " " << i << "," << j;
  }
}
