#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "rrcomb/errors.hpp"
#include "rrcomb/partition.hpp"

using namespace rrcomb;

TEST(Partition, ConstructorRejectsBadParts) {
  EXPECT_THROW(Partition({1, 2}), ValidationError);
  EXPECT_THROW(Partition({3, 0}), ValidationError);
  EXPECT_THROW(Partition({-1}), ValidationError);
  EXPECT_NO_THROW(Partition({3, 3, 1}));
  EXPECT_NO_THROW(Partition(std::vector<int>{}));
}

TEST(Partition, ErrorCarriesOffendingIndex) {
  try {
    Partition({5, 4, 6, 1});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.index(), 2);
  }
}

TEST(Partition, FromMultisetSortsAndDropsZeros) {
  EXPECT_EQ(Partition::from_multiset({1, 0, 4, 2, 4}), Partition({4, 4, 2, 1}));
  EXPECT_THROW(Partition::from_multiset({2, -1}), ValidationError);
}

TEST(Partition, ZeroExtendedAccess) {
  const Partition p({5, 5, 4, 1});
  EXPECT_EQ(p.part(1), 5);
  EXPECT_EQ(p.part(4), 1);
  EXPECT_EQ(p.part(5), 0);
  EXPECT_EQ(p.part(100), 0);
  EXPECT_THROW(p.part(0), ValidationError);
  EXPECT_EQ(p.size(), 15);
  EXPECT_EQ(p.length(), 4);
  EXPECT_EQ(p.largest(), 5);
  EXPECT_EQ(p.smallest(), 1);
}

TEST(Partition, ConjugateOfWorkedExample) {
  EXPECT_EQ(conjugate(Partition({5, 5, 4, 1})), Partition({4, 3, 3, 3, 2}));
  EXPECT_EQ(conjugate(Partition()), Partition());
  EXPECT_EQ(conjugate(Partition({1, 1, 1})), Partition({3}));
}

TEST(Partition, ConjugateMatchesCellTranspose) {
  for (int n = 0; n <= 16; ++n) {
    for (const auto& raw : oracle::partitions(n)) {
      const Partition p(raw);
      EXPECT_EQ(conjugate(p).vec(), oracle::conjugate(raw));
      EXPECT_EQ(conjugate(conjugate(p)), p);
    }
  }
}

TEST(Partition, RogersRamanujanMembership) {
  EXPECT_TRUE(is_rogers_ramanujan(Partition()));
  EXPECT_TRUE(is_rogers_ramanujan(Partition({4, 3, 3})));
  EXPECT_FALSE(is_rogers_ramanujan(Partition({3, 3, 2})));
  EXPECT_FALSE(is_rogers_ramanujan(Partition({3, 3, 1})));
  EXPECT_TRUE(is_rogers_ramanujan(Partition({7})));
  EXPECT_FALSE(is_rogers_ramanujan(Partition({1, 1})));
}

TEST(Partition, SumAndUnionAreConjugateDual) {
  const Partition a({4, 2, 2, 1});
  const Partition b({3, 3});
  EXPECT_EQ(sum_partitions(a, b), Partition({7, 5, 2, 1}));
  EXPECT_EQ(union_partitions(a, b), Partition({4, 3, 3, 2, 2, 1}));
  EXPECT_EQ(union_partitions(a, b), conjugate(sum_partitions(conjugate(a), conjugate(b))));
  EXPECT_EQ(sum_partitions(a, Partition()), a);
  EXPECT_EQ(union_partitions(Partition(), b), b);
}

TEST(Partition, RemoveFirstColumn) {
  EXPECT_EQ(remove_first_column(Partition({3, 3, 2, 1, 1})), Partition({2, 2, 1}));
  EXPECT_EQ(remove_first_column(Partition({1, 1})), Partition());
  for (int n = 1; n <= 12; ++n) {
    for (const auto& raw : oracle::partitions(n)) {
      auto c = oracle::conjugate(raw);
      c.erase(c.begin());
      EXPECT_EQ(remove_first_column(Partition(raw)).vec(), oracle::conjugate(c));
    }
  }
}

TEST(Partition, Printing) {
  std::ostringstream os;
  os << Partition({5, 5, 4, 1}) << ' ' << Partition();
  EXPECT_EQ(os.str(), "(5,5,4,1) ()");
}

TEST(PartitionStream, ReverseLexicographicOrder) {
  const auto parts = enumerate_partitions(5);
  std::vector<std::vector<int>> got;
  for (const auto& p : parts) got.push_back(p.vec());
  const std::vector<std::vector<int>> expected{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  EXPECT_EQ(got, expected);
}

TEST(PartitionStream, ZeroYieldsOnlyEmpty) {
  const auto parts = enumerate_partitions(0);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_TRUE(parts.front().empty());
}

TEST(PartitionStream, BoundsAndNegatives) {
  EXPECT_THROW(PartitionStream(-1), ValidationError);
  EXPECT_THROW(PartitionStream(121), ResourceError);
  EXPECT_THROW(PartitionStream(30, 20), ResourceError);
}

TEST(PartitionStream, AgreesWithRecursiveGeneration) {
  for (int n = 0; n <= 20; ++n) {
    std::vector<std::vector<int>> got;
    for_each_partition(n, [&](const Partition& p) { got.push_back(p.vec()); });
    EXPECT_EQ(got, oracle::partitions(n)) << "n=" << n;
    std::set<Partition> unique(got.begin(), got.end());
    EXPECT_EQ(unique.size(), got.size());
  }
}

TEST(Counting, PartitionNumbers) {
  EXPECT_EQ(count_p(-3), 0);
  EXPECT_EQ(count_p(0), 1);
  EXPECT_EQ(count_p(10), 42);
  EXPECT_EQ(count_p(100), 190569292);
  EXPECT_EQ(count_p(200).get_str(), "3972999029388");
  EXPECT_EQ(count_p(1000).get_str(), "24061467864032622473692149727991");
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(count_p(n), oracle::p_count(n)) << n;
}

TEST(Counting, RogersRamanujanCounts) {
  for (int n = 0; n <= 24; ++n) {
    EXPECT_EQ(count_q(n), oracle::rr_count(n)) << n;
    EXPECT_EQ(count_q(n), oracle::one_four_mod_five_count(n)) << n;
  }
}
