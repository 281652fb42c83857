#include <gtest/gtest.h>

#include <map>
#include <random>

#include "corpus.hpp"
#include "tga/error.hpp"
#include "tga/twisting.hpp"

namespace tga {
namespace {

using testing::klein_quaternion_cocycle;

GroupPtr share(Group g) { return std::make_shared<const Group>(std::move(g)); }

TEST(Twisting, TrivialDataValidates) {
  TwistingData t(share(dihedral(8)), Field::make(3, 1));
  EXPECT_TRUE(t.validate().ok());
  EXPECT_TRUE(t.is_normalized());
  EXPECT_TRUE(t.sigma_trivial());
}

TEST(Twisting, ReportsViolationsInOrder) {
  const auto g = share(cyclic(3));
  const auto f4 = Field::make(2, 2);
  TwistingData zero(g, f4);
  zero.set_lambda(1, 2, 0);
  EXPECT_EQ(zero.validate().kind, ValidationReport::Kind::ZeroEntry);

  TwistingData range(g, f4, {0, 2, 0}, std::vector<Elt>(9, 1));
  EXPECT_EQ(range.validate().kind, ValidationReport::Kind::SigmaRange);

  TwistingData hom(g, f4, {0, 1, 1}, std::vector<Elt>(9, 1));  // C3 has no map onto Z/2
  EXPECT_EQ(hom.validate().kind, ValidationReport::Kind::SigmaHomomorphism);

  TwistingData bad(g, Field::make(3, 1));
  bad.set_lambda(1, 1, 2);
  const auto& r = bad.validate();
  EXPECT_EQ(r.kind, ValidationReport::Kind::Cocycle);
  EXPECT_NE(r.message.find("cocycle identity fails at ("), std::string::npos);
  EXPECT_FALSE(bad.is_validated());
}

TEST(Twisting, ReportNamesAGenuinelyFailingTriple) {
  std::mt19937_64 rng(9);
  const TwistingData base = klein_quaternion_cocycle();
  for (int k = 0; k < 30; ++k) {
    TwistingData t = base;
    const Index a = static_cast<Index>(rng() % 4), b = static_cast<Index>(rng() % 4);
    t.set_lambda(a, b, t.lambda(a, b) == 1 ? 2 : 1);
    const auto r = check_twisting(t);
    ASSERT_EQ(r.kind, ValidationReport::Kind::Cocycle);
    const Group& g = t.group();
    const Field& f = t.field();
    EXPECT_NE(f.mul(t.lambda(r.a, g.mul(r.b, r.c)), t.lambda(r.b, r.c)),
              f.mul(t.lambda(g.mul(r.a, r.b), r.c), t.lambda(r.a, r.b)));
  }
}

TEST(Twisting, ConstructorRejectsMalformedTables) {
  const auto g = share(cyclic(2));
  const auto f = Field::make(3, 1);
  EXPECT_THROW(TwistingData(g, f, {0}, std::vector<Elt>(4, 1)), ValidationError);
  EXPECT_THROW(TwistingData(g, f, {0, 0}, std::vector<Elt>(3, 1)), ValidationError);
  EXPECT_THROW(TwistingData(g, f, {0, 0}, std::vector<Elt>{1, 1, 1, 3}), ValidationError);
}

TEST(Twisting, OperationsRequireValidation) {
  TwistingData t(share(cyclic(2)), Field::make(3, 1));
  EXPECT_THROW(normalize(t), UsageError);
  t.validate();
  EXPECT_NO_THROW(normalize(t));
}

TEST(Twisting, NormalizeMakesLambdaOneOnIdentity) {
  const auto g = share(cyclic(4));
  const auto f = Field::make(5, 1);
  const TwistingData t = diagonal_rescale(
      [&] {
        TwistingData x(g, f);
        x.validate();
        return x;
      }(),
      DiagonalRescaling{{3, 2, 4, 1}});
  EXPECT_FALSE(t.is_normalized());
  const TwistingData n = normalize(t);
  EXPECT_TRUE(n.is_normalized());
  for (Index x = 0; x < 4; ++x) {
    EXPECT_EQ(n.lambda(0, x), 1u);
    EXPECT_EQ(n.lambda(x, 0), 1u);
  }
}

TEST(Twisting, RescalingByOneIsIdentityAndPreservesCocycles) {
  std::mt19937_64 rng(4);
  for (const auto& inst : testing::corpus()) {
    if (!inst.twisting.sigma_trivial() || inst.twisting.order() > 6) continue;
    const std::size_t n = inst.twisting.order();
    EXPECT_EQ(diagonal_rescale(inst.twisting, DiagonalRescaling{std::vector<Elt>(n, 1)}).lambda_table(),
              inst.twisting.lambda_table());
    DiagonalRescaling d;
    for (std::size_t i = 0; i < n; ++i) d.d.push_back(static_cast<Elt>(1 + rng() % (inst.twisting.field().order() - 1)));
    const TwistingData r = diagonal_rescale(inst.twisting, d);
    EXPECT_TRUE(check_twisting(r).ok());
    EXPECT_EQ(cohomology_class_key(r), cohomology_class_key(inst.twisting));
  }
}

TEST(Twisting, CoboundaryConvention) {
  // lambda(g, h) = d_g d_h / d_gh for the returned witness.
  const auto g = share(cyclic(3));
  const auto f = Field::make(7, 1);
  const DiagonalRescaling d{{2, 3, 5}};
  const TwistingData c = coboundary(g, f, d);
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b)
      EXPECT_EQ(c.lambda(a, b), f->div(f->mul(d.d[a], d.d[b]), d.d[g->mul(a, b)]));
  const auto w = coboundary_solve(c);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(coboundary(g, f, *w).lambda_table(), c.lambda_table());
}

TEST(Twisting, QuaternionCocycleIsNotACoboundary) {
  // Oracle: exhaustive search over d finds no witness.
  EXPECT_FALSE(coboundary_solve(klein_quaternion_cocycle()).has_value());
  const TwistingData trivial = [] {
    TwistingData t(share(klein_four()), Field::make(3, 1));
    t.validate();
    return t;
  }();
  EXPECT_NE(cohomology_class_key(klein_quaternion_cocycle()), cohomology_class_key(trivial));
}

TEST(Twisting, QuaternionCocycleStaysTwistedOverGf9) {
  // a~ and b~ anticommute over every extension, so no extension untwists it.
  const TwistingData lifted = lift_to_extension(klein_quaternion_cocycle(), Field::make(3, 2));
  EXPECT_TRUE(check_twisting(lifted).ok());
  EXPECT_FALSE(coboundary_solve(lifted).has_value());
  EXPECT_NE(lifted.lambda(1, 2), lifted.lambda(2, 1));
}

TEST(Twisting, TwistOfTheQuaternionCocycle) {
  // a~^2 = b~^2 = (ab)~^2 = -1.
  const auto mu = twist_table(klein_quaternion_cocycle());
  EXPECT_EQ(mu, (std::vector<Elt>{1, 2, 2, 2}));
  EXPECT_EQ(w_subgroup(klein_quaternion_cocycle()).size(), 1u);
}

TEST(Twisting, WIsTheWholeGroupForTrivialLambda) {
  TwistingData t(share(quaternion8()), Field::make(3, 1));
  t.validate();
  EXPECT_EQ(w_subgroup(t).size(), 8u);
}

TEST(Twisting, InducedCocycleRequiresHInsideW) {
  const TwistingData q = klein_quaternion_cocycle();
  const Subgroup h = generate_subgroup(q.group(), {1});
  EXPECT_THROW(induced_cocycle(q, h), DomainError);
}

TEST(Twisting, InducedCocycleOfTrivialLambdaIsTrivial) {
  TwistingData t(share(dihedral(8)), Field::make(3, 1));
  t.validate();
  const auto ind = induced_cocycle(t, center(t.group()));
  EXPECT_EQ(ind.quotient.group.order(), 4u);
  for (Elt v : ind.twisting.lambda_table()) EXPECT_EQ(v, 1u);
}

TEST(Twisting, InducedCocycleWithTrivialHIsARelabeling) {
  const TwistingData q = klein_quaternion_cocycle();
  const auto ind = induced_cocycle(q, trivial_subgroup(q.group()));
  EXPECT_EQ(ind.twisting.lambda_table(), q.lambda_table());
}

TEST(Twisting, Lemma5RescalingKillsLambdaOnHTimesG) {
  // Every class on D8 over GF(3) that is trivial on the center.
  EnumerateOptions eo;
  const auto en = enumerate_cocycles(share(dihedral(8)), Field::make(3, 1), eo);
  std::size_t used = 0;
  for (const auto& t : en.cocycles) {
    const Subgroup z = center(t.group());
    bool trivial_on_h = true;
    for (Index a : z.members)
      for (Index b : z.members) trivial_on_h = trivial_on_h && t.lambda(a, b) == 1;
    if (!trivial_on_h) {
      EXPECT_THROW(lemma5_rescaling(t, z), DomainError);
      continue;
    }
    ++used;
    const TwistingData tau = diagonal_rescale(t, lemma5_rescaling(t, z));
    for (Index h : z.members)
      for (Index g = 0; g < 8; ++g) EXPECT_EQ(tau.lambda(h, g), 1u);
  }
  EXPECT_GT(used, 0u);
}

TEST(Twisting, EnumerationCountsMatchBruteForce) {
  // Oracle: V4/GF(3) has 16 normalized cocycles, 2 normalized coboundaries, 8 classes; C2/GF(3) has 2 cocycles.
  EnumerateOptions all;
  const auto v4 = enumerate_cocycles(share(klein_four()), Field::make(3, 1), all);
  EXPECT_EQ(v4.cocycles.size(), 16u);
  EXPECT_EQ(v4.total, 16u);
  EXPECT_TRUE(v4.complete);
  EnumerateOptions dedup;
  dedup.dedup = true;
  EXPECT_EQ(enumerate_cocycles(share(klein_four()), Field::make(3, 1), dedup).cocycles.size(), 8u);
  EXPECT_EQ(enumerate_cocycles(share(cyclic(2)), Field::make(3, 1), all).cocycles.size(), 2u);
  EXPECT_EQ(enumerate_cocycles(share(dihedral(8)), Field::make(2, 1), all).cocycles.size(), 1u);
}

TEST(Twisting, ClassCountsMatchOracleTable) {
  // Oracle: |Z^2| / |B^2| for normalized cocycles into GF(3)^* and GF(4)^*.
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"C1", {1, 1}}, {"C2", {2, 1}}, {"C3", {1, 3}}, {"C4", {2, 1}},     {"C5", {1, 1}},
      {"C6", {2, 3}}, {"C7", {1, 1}}, {"C8", {2, 1}}, {"V4", {8, 1}},     {"D6", {2, 1}},
      {"D8", {8, 1}}, {"Q8", {4, 1}}, {"C2xC4", {8, 1}}, {"C2xC2xC2", {64, 1}}};
  EnumerateOptions dedup;
  dedup.dedup = true;
  for (const auto& ng : testing::corpus_groups()) {
    const auto& [gf3, gf4] = expected.at(ng.name);
    EXPECT_EQ(enumerate_cocycles(ng.group, Field::make(3, 1), dedup).cocycles.size(), gf3) << ng.name;
    EXPECT_EQ(enumerate_cocycles(ng.group, Field::make(2, 2), dedup).cocycles.size(), gf4) << ng.name;
  }
}

TEST(Twisting, EnumerationHonoursLimitAndBudget) {
  EnumerateOptions eo;
  eo.limit = 3;
  const auto lim = enumerate_cocycles(share(klein_four()), Field::make(3, 1), eo);
  EXPECT_EQ(lim.cocycles.size(), 3u);
  EXPECT_FALSE(lim.complete);
  EnumerateOptions tight;
  tight.budget = 5;
  const auto b = enumerate_cocycles(share(klein_four()), Field::make(3, 1), tight);
  EXPECT_EQ(b.scanned, 5u);
  EXPECT_FALSE(b.complete);
  EXPECT_EQ(b.total, 16u);
}

TEST(Twisting, RestrictionIsACocycle) {
  const TwistingData q = klein_quaternion_cocycle();
  const TwistingData r = restrict_to_subgroup(q, generate_subgroup(q.group(), {1}));
  EXPECT_EQ(r.order(), 2u);
  EXPECT_TRUE(check_twisting(r).ok());
  EXPECT_EQ(r.lambda(1, 1), 2u);
}

}  // namespace
}  // namespace tga
