#include <gtest/gtest.h>

#include <cmath>

#include "irrtree/degree_sequence.hpp"
#include "irrtree/enumerate.hpp"
#include "oracles.hpp"

namespace irrtree {
namespace {

DegreeSequence seq(std::vector<Degree> v) { return DegreeSequence(std::move(v)); }

// All sorted multisets of length n over [0, maxv].
std::vector<std::vector<Degree>> multisets(int n, Degree maxv) {
  std::vector<std::vector<Degree>> out;
  std::vector<Degree> cur;
  auto rec = [&](auto&& self, Degree lo) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (Degree v = lo; v <= maxv; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Independent count: partitions of 2(n-1) into exactly n parts in [1, n-1].
std::size_t partition_count(int total, int parts, int maxpart) {
  if (parts == 0) return total == 0 ? 1 : 0;
  std::size_t c = 0;
  for (int first = 1; first <= std::min(maxpart, total); ++first)
    c += partition_count(total - first, parts - 1, first);  // non-increasing parts
  return c;
}

TEST(DegreeSequenceType, StoresAscendingPresentsByOrientation) {
  DegreeSequence d({1, 3, 1, 2, 1}, Orientation::NonIncreasing);
  EXPECT_EQ(d.ascending(), (std::vector<Degree>{1, 1, 1, 2, 3}));
  EXPECT_EQ(d.presented(), (std::vector<Degree>{3, 2, 1, 1, 1}));
  EXPECT_EQ(d.with_orientation(Orientation::NonDecreasing).presented(), d.ascending());
  EXPECT_EQ(d.to_string(), "3,2,1,1,1");
  EXPECT_THROW(DegreeSequence(std::vector<Degree>{}), Error);
  EXPECT_THROW(DegreeSequence({1, -1}), Error);
}

TEST(DegreeSequenceType, Parse) {
  auto d = parse_degree_sequence("3,2,1,1,1");
  EXPECT_EQ(d.ascending(), (std::vector<Degree>{1, 1, 1, 2, 3}));
  auto inc = parse_degree_sequence(" 1, 2 ,2,1", Orientation::NonDecreasing);
  EXPECT_EQ(inc.presented(), (std::vector<Degree>{1, 1, 2, 2}));
  EXPECT_THROW(parse_degree_sequence("3,,1"), Error);
  EXPECT_THROW(parse_degree_sequence("a"), Error);
}

TEST(TreeRealizable, Examples) {
  EXPECT_TRUE(is_tree_realizable(seq({1, 1, 1, 3})));
  EXPECT_TRUE(is_tree_realizable(seq({1, 1, 2, 2})));
  EXPECT_FALSE(is_tree_realizable(seq({1, 1, 1, 1, 2, 2})));
  EXPECT_TRUE(is_tree_realizable(seq({0})));
  EXPECT_FALSE(is_tree_realizable(seq({1})));
  EXPECT_TRUE(is_tree_realizable(seq({1, 1})));
  EXPECT_FALSE(is_tree_realizable(seq({0, 2, 1, 1, 2})));
}

// Realizable iff the enumerator produces at least one tree (n <= 9).
TEST(TreeRealizable, AgreesWithEnumeration) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& m : multisets(n, std::min<Degree>(n - 1, 5))) {
      DegreeSequence d(m);
      bool realizable = is_tree_realizable(d);
      if (!realizable) {
        EXPECT_THROW(count_trees(d, EnumerationMode::UpToIsomorphism), Error);
        continue;
      }
      EXPECT_GT(count_trees(d, EnumerationMode::UpToIsomorphism), 0u);
    }
  }
}

TEST(ErdosGallai, Examples) {
  EXPECT_TRUE(erdos_gallai_check(seq({3, 3, 3, 3})));
  EXPECT_FALSE(erdos_gallai_check(seq({4, 1, 1, 1})));
  EXPECT_FALSE(erdos_gallai_check(seq({3, 3, 1, 1})));
  auto v = erdos_gallai_violation(seq({3, 3, 1, 1}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->k, 2u);
  EXPECT_EQ(v->lhs, 6);
  EXPECT_EQ(v->rhs, 4);
}

TEST(ErdosGallai, AgreesWithBruteForceRealizabilityUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    auto graphic = oracle::graphic_sequences(n);
    for (const auto& m : multisets(n, n)) {
      EXPECT_EQ(erdos_gallai_check(DegreeSequence(m)), graphic.count(m) > 0) << n;
    }
  }
}

TEST(PowerMean, Examples) {
  EXPECT_TRUE(power_mean_inequality_check(seq({1, 1, 1, 3}), 1));
  EXPECT_TRUE(power_mean_inequality_check(seq({2, 2, 2}), 2));
  EXPECT_TRUE(power_mean_inequality_check(seq({1, 1, 2, 2}), 2));
  auto pm = power_mean_inequality(seq({2, 2, 2}), 2);
  EXPECT_TRUE(pm.exact);
  EXPECT_EQ(pm.lhs_pow, "12");
  EXPECT_EQ(pm.rhs_pow, "36");
  try {
    power_mean_inequality_check(seq({4, 1, 1, 1}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
  EXPECT_THROW(power_mean_inequality_check(seq({1, 1}), 0), Error);
}

// Equality at (n-1, 0, ..., 0) has an irrational root on both sides; the
// radical grouping must still decide it exactly.
TEST(PowerMean, ExactOnIrrationalEquality) {
  auto pm = power_mean_inequality(seq({3, 0, 0, 0}), 2);
  EXPECT_TRUE(pm.exact);
  EXPECT_TRUE(pm.holds);
  EXPECT_EQ(pm.lhs_pow, pm.rhs_pow);
  auto mixed = power_mean_inequality(seq({2, 3, 1, 0}), 3);
  EXPECT_FALSE(mixed.exact);
  EXPECT_TRUE(mixed.holds);
}

// Cross-check the exact decision against long double on cases far from
// equality.
TEST(PowerMean, AgreesWithFloatingPointAwayFromEquality) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& m : multisets(n, n - 1)) {
      for (unsigned p = 1; p <= 5; ++p) {
        long double s = 0, t = 0;
        for (auto d : m) {
          s += std::pow(static_cast<long double>(d), p);
          t += std::pow(static_cast<long double>(d), 1.0L / p);
        }
        long double lhs = std::pow(s, 1.0L / p);
        long double rhs = std::pow(static_cast<long double>(n - 1), 1.0L - 1.0L / p) * t;
        if (std::fabs(lhs - rhs) < 1e-9L) continue;
        ASSERT_EQ(power_mean_inequality_check(DegreeSequence(m), p), lhs <= rhs);
      }
    }
  }
}

TEST(AllTreeSequences, SmallOrders) {
  auto three = all_tree_sequences(3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].ascending(), (std::vector<Degree>{1, 1, 2}));
  auto four = all_tree_sequences(4);
  ASSERT_EQ(four.size(), 2u);
  EXPECT_EQ(four[0].ascending(), (std::vector<Degree>{1, 1, 1, 3}));
  EXPECT_EQ(four[1].ascending(), (std::vector<Degree>{1, 1, 2, 2}));
  auto five = all_tree_sequences(5);
  ASSERT_EQ(five.size(), 3u);
  EXPECT_EQ(five[0].ascending(), (std::vector<Degree>{1, 1, 1, 1, 4}));
  EXPECT_EQ(five[1].ascending(), (std::vector<Degree>{1, 1, 1, 2, 3}));
  EXPECT_EQ(five[2].ascending(), (std::vector<Degree>{1, 1, 2, 2, 2}));
  EXPECT_EQ(all_tree_sequences(1)[0].ascending(), std::vector<Degree>{0});
}

TEST(AllTreeSequences, CountsMatchPartitionsAndAreSortedRealizable) {
  for (int n = 2; n <= 12; ++n) {
    auto all = all_tree_sequences(static_cast<std::size_t>(n), kHardEnumerationCap);
    EXPECT_EQ(all.size(), partition_count(2 * (n - 1), n, n - 1)) << n;
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_TRUE(is_tree_realizable(all[i]));
      if (i) {
        EXPECT_LT(all[i - 1].ascending(), all[i].ascending());
      }
    }
  }
}

TEST(AllTreeSequences, Caps) {
  try {
    all_tree_sequences(10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  EXPECT_THROW(all_tree_sequences(13, 13), Error);
  EXPECT_THROW(all_tree_sequences(0), Error);
}

}  // namespace
}  // namespace irrtree
