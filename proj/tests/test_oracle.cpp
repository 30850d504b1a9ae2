#include <gtest/gtest.h>

#include "csl4/oracle.hpp"

using namespace csl4;

TEST(Divisors, GoldenDivisors) {
  EXPECT_EQ(golden_divisors(1).size(), 1u);
  EXPECT_EQ(golden_divisors(5).size(), 3u);   // 1, sqrt5 up to units, 5
  EXPECT_EQ(golden_divisors(11).size(), 4u);  // 1, two conjugate primes, 11
  EXPECT_EQ(golden_divisors(4).size(), 3u);   // 2 is inert
  for (const auto& d : golden_divisors(44)) {
    EXPECT_TRUE(golden_divides(d, 44));
    EXPECT_EQ(golden_normalize(d), d);
  }
}

TEST(Enumeration, SmallCases) {
  for (Family f : kAllFamilies) {
    auto r = count_classes(f, 1);
    EXPECT_EQ(r.rotation_class_count, 1u) << family_name(f);
    EXPECT_EQ(r.distinct_csl_count, 1u) << family_name(f);
  }
  EXPECT_TRUE(enum_pairs_d4(4).empty());
  auto z2 = count_classes(Family::Z4, 2);
  EXPECT_EQ(z2.rotation_class_count, 2u);
  EXPECT_EQ(z2.distinct_csl_count, 1u);
  auto d15 = count_classes(Family::D4Star, 15);
  EXPECT_EQ(d15.rotation_class_count, 576u);
  EXPECT_EQ(d15.distinct_csl_count, 576u);
  auto d9 = count_classes(Family::D4Star, 9);
  EXPECT_EQ(d9.rotation_class_count, 168u);
  EXPECT_EQ(d9.distinct_csl_count, 152u);
  EXPECT_EQ(d9.class_csl.size(), d9.class_reps.size());
}

TEST(Enumeration, MatchesCountingFunctions) {
  auto check = [](Family f, long n) {
    auto r = count_classes(f, n);
    EXPECT_EQ(BigInt(r.rotation_class_count), f_rot(f, n)) << family_name(f) << " " << n;
    EXPECT_EQ(BigInt(r.distinct_csl_count), f_csl(f, n)) << family_name(f) << " " << n;
    for (const auto& w : r.witnesses) EXPECT_TRUE(check_witness(w, n)) << w.str();
  };
  for (long n = 1; n <= 17; ++n) check(Family::D4Star, n);
  for (long n = 1; n <= 12; ++n) check(Family::Z4, n);
  for (long n = 1; n <= 8; ++n) check(Family::A4, n);
  for (long n : {4, 5, 9}) check(Family::IcosianRing, n);
}

TEST(Enumeration, IcosianNineteen) {
  // Independent count of the coefficient at 19.
  auto r = count_classes(Family::IcosianRing, 19);
  EXPECT_EQ(r.rotation_class_count, 800u);
  EXPECT_EQ(r.distinct_csl_count, 800u);
}

TEST(Enumeration, Witnesses) {
  auto r = count_classes(Family::A4, 5);
  ASSERT_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) {
    EXPECT_EQ(csl_closed(w), csl_brute(w));
    EXPECT_EQ(sigma(w), 5);
  }
  EXPECT_FALSE(check_witness(r.witnesses[0], 7));
}

TEST(Enumeration, BudgetErrors) {
  EXPECT_THROW(count_classes(Family::D4Star, 101), BudgetError);
  EXPECT_THROW(count_classes(Family::IcosianRing, 31), BudgetError);
  Budget tiny;
  tiny.max_elements = 10;
  EXPECT_THROW(count_classes(Family::D4Star, 15, tiny), BudgetError);
  EXPECT_THROW(count_classes(Family::D4Star, 0), std::invalid_argument);
}

TEST(Theorem1, SmallIndices) {
  auto r = verify_theorem1({1, 3, 9});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.mismatches, 0u);
  EXPECT_GT(r.shared_csl_not_related, 0u);
  EXPECT_TRUE(verify_theorem1(5));
}

TEST(PointGroups, Verified) {
  for (Family f : kAllFamilies) {
    auto r = verify_point_group(f, 500);
    EXPECT_EQ(r.size, point_group_order(f)) << family_name(f);
    EXPECT_TRUE(r.preserves) << family_name(f);
    EXPECT_TRUE(r.closed) << family_name(f);
    EXPECT_TRUE(r.all_sigma_one) << family_name(f);
  }
}

TEST(Verify, FamilyRows) {
  auto rows = verify_family(Family::Z4, 6);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) EXPECT_TRUE(r.passed) << r.check << " " << r.n << " " << r.expected << " " << r.actual;
  auto ico = verify_family(Family::IcosianRing, 5);
  for (const auto& r : ico) EXPECT_TRUE(r.n == 1 || r.n == 4 || r.n == 5);
}
