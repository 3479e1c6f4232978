#include <gtest/gtest.h>

#include <cstdlib>

#include "burnside/bar.hpp"
#include "burnside/fixtures.hpp"
#include "burnside/module.hpp"
#include "burnside/poset.hpp"
#include "support.hpp"

using namespace burnside;
using R = Rational;

namespace {

template <Field K>
BarCochain<K> random_cochain(burnside::testing::SmallRng& rng, std::size_t degree, std::size_t i,
                             std::size_t j, std::size_t na, std::size_t di,
                             std::size_t dj) {
  auto f = BarCochain<K>::zero(degree, i, j, na, di, dj);
  for (auto& m : f.vals)
    for (auto& x : m.a) x = rng.template scalar<K>();
  return f;
}

/* sum over the unit's support of f(..., e_u, ...), unit slot fixed */
template <Field K>
Matrix<K> unit_slot_sum(const FinDimAlgebra<K>& a, const BarCochain<K>& f,
                        std::size_t slot, std::size_t other) {
  Matrix<K> acc(f.di, f.dj);
  for (std::size_t u = 0; u < a.dim(); ++u) {
    if (k_is_zero(a.unit()[u])) continue;
    std::vector<std::size_t> t = slot == 0 ? std::vector<std::size_t>{u, other}
                                           : std::vector<std::size_t>{other, u};
    acc = acc + a.unit()[u] * f.at(t);
  }
  return acc;
}

}  // namespace

TEST(Chain2, FrozenFirstExtension) {
  // Hand computation on the two-element chain 1 > 2, basis
  // e(1,1), e(1,2), e(2,2).  Writing f = (f0, f1, f2) for a cochain
  // A -> Hom(M1, M2) = k, the only cocycle constraint is
  // df(e(1,1), e(2,2)) = f0 + f2 = 0 and the coboundaries are spanned
  // by (1, 0, -1).  So the extension space is one-dimensional and the
  // deterministic representative is the e(1,2) indicator.
  auto inc = incidence_algebra<R>(fixtures::poset("chain2"));
  auto fam = simple_modules(inc);

  auto up = ext(inc.algebra, fam, 0, 1, 1);
  EXPECT_EQ(up.dimension, 1u);
  Vec<R> flat = up.reps[0].flatten();
  EXPECT_EQ(flat, (Vec<R>{R(0), R(1), R(0)}));

  // (3, 5, -3) = 5 * representative + 3 * coboundary
  auto z = BarCochain<R>::from_flat({R(3), R(5), R(-3)}, 1, 0, 1, 3, 1, 1);
  EXPECT_TRUE(bar_differential(inc.algebra, fam, z).is_zero());
  EXPECT_EQ(up.decompose(z), (Vec<R>{R(5)}));

  auto down = ext(inc.algebra, fam, 1, 0, 1);
  EXPECT_EQ(down.dimension, 0u);
}

TEST(BarDifferential, SquaresToZeroAsMatrices) {
  for (const char* name : {"chain3", "hereditary", "diamond"}) {
    auto inc = incidence_algebra<R>(fixtures::poset(name));
    auto fam = simple_modules(inc);
    const std::size_t r = fam.size();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        auto d0 = differential_matrix(inc.algebra, fam, i, j, 0);
        auto d1 = differential_matrix(inc.algebra, fam, i, j, 1);
        auto d2 = differential_matrix(inc.algebra, fam, i, j, 2);
        EXPECT_TRUE((d1 * d0).is_zero()) << name << " " << i << "," << j;
        EXPECT_TRUE((d2 * d1).is_zero()) << name << " " << i << "," << j;
      }
  }
}

TEST(BarDifferential, DegreeZeroKernelIsTheHomSpace) {
  auto m2 = fixtures::matrix2_algebra<R>();
  RightModule<R> row;
  row.dim = 2;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Matrix<R> act(2, 2);
      act.at(a, b) = R(1);
      row.action.push_back(std::move(act));
    }
  row.validate(m2);
  ModuleFamily<R> fam = {row};

  EXPECT_EQ(ext(m2, fam, 0, 0, 0).dimension, hom_A(m2, row, row).dim());
  EXPECT_EQ(ext(m2, fam, 0, 0, 0).dimension, 1u);

  // the identity is module-linear, a single matrix unit is not
  auto id = BarCochain<R>::from_flat({R(1), R(0), R(0), R(1)}, 0, 0, 0, 4, 2, 2);
  auto e11 = BarCochain<R>::from_flat({R(1), R(0), R(0), R(0)}, 0, 0, 0, 4, 2, 2);
  EXPECT_TRUE(bar_differential(m2, fam, id).is_zero());
  EXPECT_FALSE(bar_differential(m2, fam, e11).is_zero());

  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam2 = simple_modules(inc);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(ext(inc.algebra, fam2, i, j, 0).dimension,
                hom_A(inc.algebra, fam2[i], fam2[j]).dim());
      EXPECT_EQ(ext(inc.algebra, fam2, i, j, 0).dimension, i == j ? 1u : 0u);
    }
}

TEST(Catalog, OracleAgreesWithTheComplex) {
  for (const auto& name : fixtures::poset_names()) {
    auto p = fixtures::poset(name);
    auto inc = incidence_algebra<R>(p);
    auto fam = simple_modules(inc);
    auto data = compute_ext_data(inc.algebra, fam);
    auto oracle = ext_oracle(p);
    EXPECT_EQ(data.dims(1), oracle.ext1) << name;
    EXPECT_EQ(data.dims(2), oracle.ext2) << name;
  }
}

TEST(Semisimple, NoHigherExtensions) {
  auto m2 = fixtures::matrix2_algebra<R>();
  RightModule<R> row;
  row.dim = 2;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Matrix<R> act(2, 2);
      act.at(a, b) = R(1);
      row.action.push_back(std::move(act));
    }
  row.validate(m2);
  ModuleFamily<R> fam = {row};
  EXPECT_EQ(ext(m2, fam, 0, 0, 1).dimension, 0u);
  EXPECT_EQ(ext(m2, fam, 0, 0, 2).dimension, 0u);
}

TEST(Diamond, ExtensionTables) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  auto data = compute_ext_data(inc.algebra, fam);

  std::vector<std::vector<std::size_t>> e1 = {
      {0, 1, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}};
  std::vector<std::vector<std::size_t>> e2 = {
      {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  EXPECT_EQ(data.dims(1), e1);
  EXPECT_EQ(data.dims(2), e2);
}

TEST(Diamond, CupProductsHitTheObstructionSpace) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  auto data = compute_ext_data(inc.algebra, fam);

  const auto& top = data.ext2(0, 3);
  ASSERT_EQ(top.dimension, 1u);

  // both composable routes 1 -> 2 -> 4 and 1 -> 3 -> 4 give nonzero classes
  auto via2 = cup(data.ext1(0, 1).reps[0], data.ext1(1, 3).reps[0]);
  auto via3 = cup(data.ext1(0, 2).reps[0], data.ext1(2, 3).reps[0]);
  Vec<R> c2 = top.decompose(via2);
  Vec<R> c3 = top.decompose(via3);
  EXPECT_FALSE(k_is_zero(c2[0]));
  EXPECT_FALSE(k_is_zero(c3[0]));

  // cocycle cup cocycle is again a cocycle
  EXPECT_TRUE(bar_differential(inc.algebra, fam, via2).is_zero());
  EXPECT_TRUE(bar_differential(inc.algebra, fam, via3).is_zero());

  // cupping with a coboundary on either side lands in the zero class
  auto u = BarCochain<R>::from_flat(Vec<R>{R(7)}, 0, 0, 1, inc.algebra.dim(), 1, 1);
  auto cob = bar_differential(inc.algebra, fam, u);
  auto killed = cup(cob, data.ext1(1, 3).reps[0]);
  EXPECT_TRUE(k_is_zero(top.decompose(killed)[0]));
  auto v = BarCochain<R>::from_flat(Vec<R>{R(-2)}, 0, 1, 3, inc.algebra.dim(), 1, 1);
  auto killed2 = cup(data.ext1(0, 1).reps[0], bar_differential(inc.algebra, fam, v));
  EXPECT_TRUE(k_is_zero(top.decompose(killed2)[0]));
}

TEST(Relabel, ModuleBasisChangeKeepsDimensions) {
  auto m2 = fixtures::matrix2_algebra<R>();
  RightModule<R> row, swapped;
  row.dim = swapped.dim = 2;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Matrix<R> act(2, 2);
      act.at(a, b) = R(1);
      row.action.push_back(act);
      Matrix<R> sw(2, 2);
      sw.at(1 - a, 1 - b) = R(1);
      swapped.action.push_back(std::move(sw));
    }
  row.validate(m2);
  swapped.validate(m2);
  for (std::size_t n : {0u, 1u, 2u}) {
    ModuleFamily<R> fa = {row}, fb = {swapped};
    EXPECT_EQ(ext(m2, fa, 0, 0, n).dimension, ext(m2, fb, 0, 0, n).dimension);
  }
}

TEST(Cup, BilinearAssociativeLeibniz) {
  auto inc = incidence_algebra<R>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  const std::size_t na = inc.algebra.dim();
  burnside::testing::SmallRng rng(20260816);

  auto f = random_cochain<R>(rng, 1, 0, 1, na, 1, 1);
  auto f2 = random_cochain<R>(rng, 1, 0, 1, na, 1, 1);
  auto g = random_cochain<R>(rng, 1, 1, 3, na, 1, 1);
  auto h = random_cochain<R>(rng, 0, 3, 3, na, 1, 1);

  {
    auto one = cup(f, g).flatten();
    auto two = cup(f2, g).flatten();
    Vec<R> expect(one.size());
    for (std::size_t k = 0; k < one.size(); ++k) expect[k] = one[k] + two[k];
    BarCochain<R> fs = f;
    for (std::size_t k = 0; k < fs.vals.size(); ++k) fs.vals[k] = fs.vals[k] + f2.vals[k];
    EXPECT_EQ(cup(fs, g).flatten(), expect);
  }

  EXPECT_EQ(cup(cup(f, g), h).flatten(), cup(f, cup(g, h)).flatten());

  // d(f u g) = df u g - f u dg for degree-one f
  auto left = bar_differential(inc.algebra, fam, cup(f, g)).flatten();
  auto right1 = cup(bar_differential(inc.algebra, fam, f), g).flatten();
  auto right2 = cup(f, bar_differential(inc.algebra, fam, g)).flatten();
  ASSERT_EQ(left.size(), right1.size());
  for (std::size_t k = 0; k < left.size(); ++k)
    EXPECT_EQ(left[k], right1[k] - right2[k]);

  EXPECT_THROW(cup(f, f), IndexMismatch);
}

TEST(Normalization, DegreeTwoRepsVanishOnTheUnit) {
  for (const char* name : {"diamond", "diamond_tail"}) {
    auto inc = incidence_algebra<R>(fixtures::poset(name));
    auto fam = simple_modules(inc);
    const std::size_t r = fam.size();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        auto e2 = ext(inc.algebra, fam, i, j, 2);
        for (const auto& rep : e2.reps)
          for (std::size_t other = 0; other < inc.algebra.dim(); ++other) {
            EXPECT_TRUE(unit_slot_sum(inc.algebra, rep, 0, other).is_zero());
            EXPECT_TRUE(unit_slot_sum(inc.algebra, rep, 1, other).is_zero());
          }
      }
  }
}

TEST(Relabel, DimensionTablesFollowTheElementOrder) {
  auto original = fixtures::poset("diamond");
  auto shuffled = Poset::from_pairs(
      {"3", "1", "4", "2"},
      {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}});

  std::vector<std::size_t> sigma(original.size());
  for (std::size_t e = 0; e < original.size(); ++e)
    for (std::size_t f = 0; f < shuffled.size(); ++f)
      if (shuffled.label(f) == original.label(e)) sigma[e] = f;

  auto a = compute_ext_data(
      incidence_algebra<R>(original).algebra,
      simple_modules(incidence_algebra<R>(original)));
  auto b = compute_ext_data(
      incidence_algebra<R>(shuffled).algebra,
      simple_modules(incidence_algebra<R>(shuffled)));

  for (std::size_t degree : {1u, 2u}) {
    auto ta = a.dims(degree), tb = b.dims(degree);
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = 0; j < sigma.size(); ++j)
        EXPECT_EQ(ta[i][j], tb[sigma[i]][sigma[j]]) << degree;
  }
}

TEST(CharP, DiamondTablesOverF5) {
  Fp::set_modulus(5);
  auto inc = incidence_algebra<Fp>(fixtures::poset("diamond"));
  auto fam = simple_modules(inc);
  auto data = compute_ext_data(inc.algebra, fam);
  auto oracle = ext_oracle(fixtures::poset("diamond"));
  EXPECT_EQ(data.dims(1), oracle.ext1);
  EXPECT_EQ(data.dims(2), oracle.ext2);
}
