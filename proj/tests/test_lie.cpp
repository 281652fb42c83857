#include <gtest/gtest.h>

#include "corpus.hpp"
#include "tga/error.hpp"
#include "tga/lie.hpp"

namespace tga {
namespace {

using testing::klein_quaternion_cocycle;

GroupPtr share(Group g) { return std::make_shared<const Group>(std::move(g)); }

CrossedProduct trivial_algebra(Group g, std::uint32_t p, unsigned n = 1) {
  TwistingData t(share(std::move(g)), Field::make(p, n));
  t.validate();
  return CrossedProduct(t);
}

std::vector<std::size_t> dims(const SeriesReport& s, unsigned count) {
  std::vector<std::size_t> out;
  for (unsigned n = 1; n <= count; ++n) out.push_back(s.term(n).dim());
  return out;
}

TEST(Series, FrozenDimensionsD8OverGf2) {
  // Oracle: gamma [8,3,0], lower [8,4,0], upper [8,4,0]; index 3.
  const auto a = trivial_algebra(dihedral(8), 2);
  const auto g = gamma_series(a), l = lower_lie_powers(a), u = upper_lie_powers(a);
  EXPECT_EQ(g.prime_dims, (std::vector<std::size_t>{8, 3, 0}));
  EXPECT_EQ(l.prime_dims, (std::vector<std::size_t>{8, 4, 0}));
  EXPECT_EQ(u.prime_dims, (std::vector<std::size_t>{8, 4, 0}));
  EXPECT_EQ(l.index, 3u);
  EXPECT_EQ(u.index, 3u);
  EXPECT_TRUE(l.terminated);
}

TEST(Series, FrozenDimensionsS3NeverVanish) {
  // Oracle: gamma [6,3,3], lower [6,4,4], upper [6,4,4] over GF(3) and GF(2).
  for (std::uint32_t p : {3u, 2u}) {
    const auto a = trivial_algebra(symmetric(3), p);
    const auto g = gamma_series(a), l = lower_lie_powers(a), u = upper_lie_powers(a);
    EXPECT_EQ(dims(g, 3), (std::vector<std::size_t>{6, 3, 3})) << p;
    EXPECT_EQ(dims(l, 3), (std::vector<std::size_t>{6, 4, 4})) << p;
    EXPECT_EQ(dims(u, 3), (std::vector<std::size_t>{6, 4, 4})) << p;
    EXPECT_FALSE(l.index.has_value());
    EXPECT_TRUE(g.stabilized);
  }
}

TEST(Series, FrozenDimensionsQuaternionCocycle) {
  // Oracle: gamma [4,3,3], lower [4,4], upper [4,4].
  const CrossedProduct q(klein_quaternion_cocycle());
  EXPECT_EQ(dims(gamma_series(q), 3), (std::vector<std::size_t>{4, 3, 3}));
  EXPECT_EQ(dims(lower_lie_powers(q), 2), (std::vector<std::size_t>{4, 4}));
  EXPECT_EQ(dims(upper_lie_powers(q), 2), (std::vector<std::size_t>{4, 4}));
}

TEST(Series, CommutativeAlgebraHasIndexTwo) {
  const auto a = trivial_algebra(cyclic(6), 3);
  EXPECT_EQ(lower_lie_powers(a).index, 2u);
  EXPECT_EQ(upper_lie_powers(a).index, 2u);
}

TEST(Series, DimensionsOverExtensionFieldsScaleWithDegree) {
  const auto a = trivial_algebra(dihedral(8), 2, 2);
  EXPECT_EQ(lower_lie_powers(a).prime_dims, (std::vector<std::size_t>{16, 8, 0}));
}

TEST(Series, StepBudgetIsRespected) {
  const auto a = trivial_algebra(dihedral(8), 2);
  const auto g = gamma_series(a, 2);
  EXPECT_EQ(g.terms.size(), 2u);
  EXPECT_FALSE(g.terminated);
  EXPECT_THROW(g.term(3), UsageError);
}

TEST(Series, InclusionsHoldAcrossTheCorpus) {
  for (const auto& inst : testing::corpus()) {
    const CrossedProduct a(inst.twisting);
    const auto r = check_power_inclusions(a, gamma_series(a), lower_lie_powers(a), upper_lie_powers(a));
    EXPECT_TRUE(r.holds) << inst.id << ": " << r.failure;
  }
}

TEST(StablyUntwisted, Landmarks) {
  const CrossedProduct q(klein_quaternion_cocycle());
  const auto rq = stably_untwisted_test(q);
  EXPECT_FALSE(rq.stably_untwisted);
  EXPECT_EQ(rq.codimension, 0u);
  const auto a = trivial_algebra(dihedral(8), 2);
  const auto ra = stably_untwisted_test(a);
  EXPECT_TRUE(ra.stably_untwisted);
  EXPECT_TRUE(ra.quotient.is_commutative());
  EXPECT_EQ(ra.codimension, 4u);
}

TEST(StablyUntwisted, CoboundariesAreStablyUntwisted) {
  for (const auto& inst : testing::corpus()) {
    if (!inst.twisting.sigma_trivial()) continue;
    if (coboundary_solve(inst.twisting)) EXPECT_TRUE(stably_untwisted_test(CrossedProduct(inst.twisting)).stably_untwisted) << inst.id;
  }
}

TEST(NilIdeal, AugmentationOfAPGroup) {
  const auto a = trivial_algebra(cyclic(4), 2);
  EXPECT_FALSE(is_nil_ideal(a, lower_lie_powers(a).term(1)));
  const auto d = trivial_algebra(dihedral(8), 2);
  EXPECT_TRUE(is_nil_ideal(d, lower_lie_powers(d).term(2)));
}

// Independent oracle: iterate the bracket directly for every pair (a, b).
struct PairScan {
  bool holds = true;
  std::optional<unsigned> minimal_n;
};

AlgebraElement element_from_code(const CrossedProduct& a, std::uint64_t code) {
  std::vector<Lane> v(a.prime_dim());
  for (auto& x : v) {
    x = static_cast<Lane>(code % a.field().characteristic());
    code /= a.field().characteristic();
  }
  return a.unflatten(v);
}

PairScan pair_scan(const CrossedProduct& a, unsigned n, unsigned m) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < a.prime_dim(); ++i) size *= a.field().characteristic();
  PairScan out;
  unsigned worst = 0;
  bool all_nilpotent = true;
  for (std::uint64_t bc = 0; bc < size; ++bc) {
    const auto bm = a.power(element_from_code(a, bc), m);
    for (std::uint64_t ac = 0; ac < size; ++ac) {
      auto x = element_from_code(a, ac);
      unsigned steps = 0;
      while (!x.is_zero() && steps <= a.prime_dim() + 1) {
        x = a.bracket(x, bm);
        ++steps;
      }
      if (!x.is_zero()) all_nilpotent = false;
      worst = std::max(worst, steps);
      if (steps > n) out.holds = false;
    }
  }
  if (all_nilpotent) out.minimal_n = std::max(worst, 1u);
  return out;
}

TEST(Engel, LinearCheckAgreesWithPairScan) {
  std::vector<CrossedProduct> algebras;
  algebras.push_back(trivial_algebra(klein_four(), 2));
  algebras.push_back(trivial_algebra(cyclic(3), 2));
  algebras.push_back(trivial_algebra(symmetric(3), 2));
  algebras.push_back(trivial_algebra(cyclic(4), 2));
  algebras.push_back(CrossedProduct(klein_quaternion_cocycle()));
  algebras.push_back(trivial_algebra(cyclic(2), 3));
  for (const auto& a : algebras) {
    for (unsigned m : {1u, 2u}) {
      const auto scan = pair_scan(a, 1, m);
      for (unsigned n = 1; n <= a.prime_dim() + 1; ++n) {
        EngelOptions eo;
        eo.n = n;
        eo.m = m;
        const auto r = engel_check(a, eo);
        const auto s = pair_scan(a, n, m);
        EXPECT_EQ(r.holds, s.holds) << "n=" << n << " m=" << m << " |G|=" << a.order();
        EXPECT_EQ(r.minimal_n.has_value(), scan.minimal_n.has_value());
        if (r.minimal_n && scan.minimal_n) EXPECT_EQ(*r.minimal_n, *scan.minimal_n);
        if (r.counterexample) {
          auto x = r.counterexample->first;
          const auto bm = a.power(r.counterexample->second, m);
          for (unsigned i = 0; i < n; ++i) x = a.bracket(x, bm);
          EXPECT_FALSE(x.is_zero()) << "replayed counterexample vanishes";
        }
      }
    }
  }
}

TEST(Engel, QuaternionCocycleIsNotEngel) {
  // Oracle: not (8,1)-Engel.
  const CrossedProduct q(klein_quaternion_cocycle());
  EngelOptions eo;
  eo.n = 8;
  const auto r = engel_check(q, eo);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_FALSE(r.minimal_n.has_value());
}

TEST(Engel, D8OverGf2IsEngel) {
  const auto a = trivial_algebra(dihedral(8), 2);
  EngelOptions eo;
  eo.n = 9;
  const auto r = engel_check(a, eo);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.b_checked, 256u);
  ASSERT_TRUE(r.minimal_n.has_value());
  EXPECT_LE(*r.minimal_n, 3u);
}

TEST(Engel, RandomizedIsReproducibleAndOneSided) {
  const auto a = trivial_algebra(dihedral(8), 3);
  EngelOptions eo;
  eo.n = 9;
  eo.strategy = EngelStrategy::Randomized;
  eo.samples = 500;
  eo.seed = 42;
  const auto r1 = engel_check(a, eo), r2 = engel_check(a, eo);
  EXPECT_EQ(r1.holds, r2.holds);
  EXPECT_EQ(r1.counterexample, r2.counterexample);
  EXPECT_EQ(r1.b_checked, 500u);
  EXPECT_EQ(r1.seed, 42u);
  EXPECT_FALSE(r1.holds);  // F3[D8] is not Lie nilpotent: G' is not a 3-group
}

TEST(Engel, ExhaustiveOverBudgetThrows) {
  const auto a = trivial_algebra(dihedral(8), 3);
  EngelOptions eo;
  eo.n = 9;
  EXPECT_THROW(engel_check(a, eo), BudgetError);
}

TEST(Engel, Reduction) {
  EXPECT_EQ(engel_reduce(2, 2, 2), (std::pair<std::uint64_t, std::uint64_t>{4, 1}));
  EXPECT_EQ(engel_reduce(3, 6, 2), (std::pair<std::uint64_t, std::uint64_t>{8, 3}));
  EXPECT_EQ(engel_reduce(1, 1, 3), (std::pair<std::uint64_t, std::uint64_t>{1, 1}));
  EXPECT_EQ(engel_reduce(4, 9, 3), (std::pair<std::uint64_t, std::uint64_t>{81, 1}));
}

TEST(Engel, ReductionPreservesEngelOnSmallAlgebras) {
  // (n, m)-Engel implies (p^{l+t}, r)-Engel.
  for (const auto& inst : testing::corpus()) {
    if (inst.twisting.order() > 4 || inst.twisting.field().order() > 3) continue;
    const CrossedProduct a(inst.twisting);
    for (unsigned n : {1u, 2u, 3u})
      for (unsigned m : {1u, 2u, 3u}) {
        EngelOptions eo;
        eo.n = n;
        eo.m = m;
        if (!engel_check(a, eo).holds) continue;
        const auto [n2, m2] = engel_reduce(n, m, a.field().characteristic());
        eo.n = static_cast<unsigned>(n2);
        eo.m = static_cast<unsigned>(m2);
        EXPECT_TRUE(engel_check(a, eo).holds) << inst.id;
      }
  }
}

}  // namespace
}  // namespace tga
