#include <gtest/gtest.h>

#include <cmath>

#include "tga/error.hpp"
#include "tga/field.hpp"

namespace tga {
namespace {

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, unsigned>> {};

TEST_P(FieldAxioms, RingAndFrobeniusLaws) {
  const auto [p, n] = GetParam();
  const auto f = Field::make(p, n);
  ASSERT_EQ(f->order(), static_cast<std::uint32_t>(std::pow(p, n)));
  const Elt q = f->order();
  for (Elt a = 0; a < q; ++a) {
    EXPECT_EQ(f->add(a, f->neg(a)), 0u);
    if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
    Elt iterated = a;
    for (unsigned i = 0; i < n; ++i) iterated = f->frobenius(iterated, 1 % n);
    EXPECT_EQ(iterated, a);
    EXPECT_EQ(f->frobenius(a, 1 % n), f->pow(a, p));
    EXPECT_EQ(f->from_coords(f->coords(a)), a);
    for (Elt b = 0; b < q; ++b) {
      EXPECT_EQ(f->add(a, b), f->add(b, a));
      EXPECT_EQ(f->mul(a, b), f->mul(b, a));
      EXPECT_EQ(f->frobenius(f->mul(a, b), 1 % n), f->mul(f->frobenius(a, 1 % n), f->frobenius(b, 1 % n)));
      EXPECT_EQ(f->frobenius(f->add(a, b), 1 % n), f->add(f->frobenius(a, 1 % n), f->frobenius(b, 1 % n)));
      for (Elt c = 0; c < q; c += 3) EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    }
  }
}

TEST_P(FieldAxioms, LogsAndRoots) {
  const auto [p, n] = GetParam();
  const auto f = Field::make(p, n);
  EXPECT_EQ(f->multiplicative_order(f->generator()), f->order() - 1);
  for (Elt a = 1; a < f->order(); ++a) {
    EXPECT_EQ(f->exp(f->discrete_log(a)), a);
    for (std::uint64_t k = 1; k <= 4; ++k) {
      const auto r = f->kth_root(a, k);
      if (r) EXPECT_EQ(f->pow(*r, static_cast<std::int64_t>(k)), a);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{2u, 3u},
                                           std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{7u, 1u}));

TEST(Field, Gf4HasAPrimitiveCubeRootOfUnity) {
  const auto f = Field::make(2, 2);
  const Elt w = f->generator();
  EXPECT_EQ(f->add(f->add(1, w), f->mul(w, w)), 0u);
  EXPECT_EQ(f->frobenius(w, 1), f->mul(w, w));
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(Field::make(4, 1), ValidationError);
  EXPECT_THROW(Field::make(2, 0), ValidationError);
  EXPECT_THROW(Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), ValidationError);  // x^2 + 1 = (x + 1)^2
  EXPECT_NO_THROW(Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Field, ElementWrapperChecksFields) {
  const auto f = Field::make(3, 1);
  const auto g = Field::make(5, 1);
  const FieldElement a(f, 2), b(g, 2);
  EXPECT_EQ((a * a).value(), 1u);
  EXPECT_THROW(a + b, UsageError);
}

TEST(Field, Primality) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65537));
  EXPECT_FALSE(is_prime(65535));
}

}  // namespace
}  // namespace tga
