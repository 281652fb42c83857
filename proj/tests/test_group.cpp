#include <gtest/gtest.h>

#include "tga/error.hpp"
#include "tga/group.hpp"

namespace tga {
namespace {

TEST(Group, FamilyOrdersAndClassNumbers) {
  // Oracle: D8 has 5 conjugacy classes, S3 has 3.
  EXPECT_EQ(dihedral(8).order(), 8u);
  EXPECT_EQ(conjugacy_class_count(dihedral(8)), 5u);
  EXPECT_EQ(conjugacy_class_count(symmetric(3)), 3u);
  EXPECT_EQ(conjugacy_class_count(quaternion8()), 5u);
  EXPECT_EQ(conjugacy_class_count(cyclic(7)), 7u);
  EXPECT_TRUE(are_isomorphic(dihedral(6), symmetric(3)));
  EXPECT_FALSE(are_isomorphic(dihedral(8), quaternion8()));
  EXPECT_TRUE(are_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)));
}

TEST(Group, QuaternionHasOneInvolution) {
  const Group q = quaternion8();
  int involutions = 0;
  for (Index a = 0; a < q.order(); ++a) involutions += element_order(q, a) == 2;
  EXPECT_EQ(involutions, 1);
  EXPECT_EQ(exponent(q), 4u);
}

TEST(Group, NilpotencyAndCommutators) {
  EXPECT_EQ(nilpotency_class(dihedral(8)), 2u);
  EXPECT_EQ(nilpotency_class(cyclic(5)), 1u);
  EXPECT_EQ(nilpotency_class(cyclic(1)), 0u);
  EXPECT_FALSE(nilpotency_class(symmetric(3)).has_value());
  EXPECT_EQ(commutator_subgroup(symmetric(3)).size(), 3u);
  EXPECT_EQ(commutator_subgroup(dihedral(8)).size(), 2u);
  EXPECT_EQ(center(dihedral(8)).size(), 2u);
  const Group d = dihedral(8);
  for (Index a = 0; a < d.order(); ++a)
    for (Index b = 0; b < d.order(); ++b)
      EXPECT_EQ(d.mul(d.mul(a, b), group_commutator(d, a, b)), d.mul(b, a));
}

TEST(Group, SubgroupLattice) {
  EXPECT_EQ(all_subgroups(symmetric(3)).size(), 6u);
  EXPECT_EQ(normal_subgroups(symmetric(3)).size(), 3u);
  EXPECT_EQ(all_subgroups(dihedral(8)).size(), 10u);
  EXPECT_EQ(normal_subgroups(dihedral(8)).size(), 6u);
  EXPECT_EQ(all_subgroups(quaternion8()).size(), 6u);
  EXPECT_EQ(normal_subgroups(quaternion8()).size(), 6u);
}

TEST(Group, QuotientUsesSmallestTransversal) {
  const Group d = dihedral(8);
  const Subgroup z = center(d);
  const Quotient q = quotient_group(d, z);
  EXPECT_EQ(q.group.order(), 4u);
  EXPECT_TRUE(are_isomorphic(q.group, klein_four()));
  EXPECT_EQ(q.transversal.front(), 0u);
  for (std::size_t i = 0; i < q.transversal.size(); ++i) {
    EXPECT_EQ(q.coset_of[q.transversal[i]], i);
    for (Index x = 0; x < q.transversal[i]; ++x) EXPECT_NE(q.coset_of[x], i);
  }
}

TEST(Group, QuotientByNonNormalSubgroupThrows) {
  const Group s = symmetric(3);
  for (const auto& h : all_subgroups(s))
    if (h.size() == 2) EXPECT_THROW(quotient_group(s, h), DomainError);
}

TEST(Group, TableValidation) {
  EXPECT_THROW(Group::from_table({{0, 1}, {1, 1}}), ValidationError);
  EXPECT_THROW(Group::from_table({{1, 0}, {0, 1}}), ValidationError);  // identity not at index 0
  // Latin square with identity but not associative.
  EXPECT_THROW(Group::from_table({{0, 1, 2, 3, 4},
                                  {1, 0, 3, 4, 2},
                                  {2, 4, 0, 1, 3},
                                  {3, 2, 4, 0, 1},
                                  {4, 3, 1, 2, 0}}),
               ValidationError);
}

TEST(Group, PrimePowers) {
  EXPECT_TRUE(is_power_of(1, 2));
  EXPECT_TRUE(is_power_of(8, 2));
  EXPECT_FALSE(is_power_of(6, 2));
  EXPECT_EQ(prime_of_prime_power(9), 3u);
  EXPECT_FALSE(prime_of_prime_power(6).has_value());
}

}  // namespace
}  // namespace tga
