#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "irrtree/extremal.hpp"
#include "oracles.hpp"

namespace irrtree {
namespace {

// Min and max by direct labeled enumeration, sharing no code with the
// iso-class path.
std::pair<IndexValue, IndexValue> labeled_extremes(const DegreeSequence& d, IndexKind kind) {
  bool first = true;
  IndexValue lo, hi;
  for_each_labeled_tree(d, [&](const SimpleGraph& t) {
    auto v = compute_index(t, kind);
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  });
  return {lo, hi};
}

bool same(const ExtremalResult& a, const ExtremalResult& b) {
  auto forms = [](const std::vector<Witness>& w) {
    std::vector<CanonicalForm> out;
    for (const auto& x : w) out.push_back(x.form);
    return out;
  };
  return a.min_value == b.min_value && a.max_value == b.max_value &&
         a.count_labeled == b.count_labeled && a.count_iso == b.count_iso &&
         forms(a.min_witnesses) == forms(b.min_witnesses) &&
         forms(a.max_witnesses) == forms(b.max_witnesses);
}

TEST(ExtremalIndex, SevenVertexExample) {
  DegreeSequence d({4, 2, 2, 1, 1, 1, 1});
  auto sigma = extremal_index(d, IndexKind::Sigma);
  EXPECT_EQ(sigma.min_value, IndexValue(28));
  EXPECT_EQ(sigma.max_value, IndexValue(32));
  auto irr = extremal_index(d, IndexKind::Irr);
  EXPECT_EQ(irr.min_value, IndexValue(12));
  EXPECT_EQ(irr.max_value, IndexValue(12));
  EXPECT_EQ(irr.count_labeled, 20u);
}

TEST(ExtremalIndex, AgreesWithLabeledScanAndWitnessesAreSound) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& d : all_tree_sequences(n)) {
      for (auto kind : kAllIndexKinds) {
        auto r = extremal_index(d, kind);
        auto [lo, hi] = labeled_extremes(d, kind);
        ASSERT_EQ(r.min_value, lo);
        ASSERT_EQ(r.max_value, hi);
        ASSERT_EQ(r.count_labeled, labeled_tree_count(d));
        ASSERT_FALSE(r.min_witnesses.empty());
        ASSERT_LE(r.min_witnesses.size(), kDefaultWitnessCap);
        for (const auto& list : {r.min_witnesses, r.max_witnesses}) {
          for (std::size_t i = 0; i < list.size(); ++i) {
            auto deg = list[i].tree.degrees();
            std::sort(deg.begin(), deg.end());
            ASSERT_EQ(deg, d.ascending());
            ASSERT_EQ(canonical_form(list[i].tree), list[i].form);
            if (i) {
              ASSERT_LT(list[i - 1].form, list[i].form);
            }
          }
        }
        for (const auto& w : r.min_witnesses) ASSERT_EQ(compute_index(w.tree, kind), lo);
        for (const auto& w : r.max_witnesses) ASSERT_EQ(compute_index(w.tree, kind), hi);
      }
    }
  }
}

TEST(ExtremalIndex, DeterministicAcrossThreads) {
  for (const auto& d : all_tree_sequences(9)) {
    ASSERT_TRUE(same(extremal_index(d, IndexKind::Sigma, {9, 1}),
                     extremal_index(d, IndexKind::Sigma, {9, 3})));
  }
}

TEST(Merge, IdentityCommutativeAssociative) {
  auto parts = all_tree_sequences(8);
  std::vector<ExtremalResult> rs;
  for (const auto& d : parts) rs.push_back(extremal_index(d, IndexKind::Sigma));
  ExtremalResult empty;
  empty.kind = IndexKind::Sigma;
  EXPECT_TRUE(same(merge(empty, rs[0]), rs[0]));
  EXPECT_TRUE(same(merge(rs[0], empty), rs[0]));
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, rs.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto& a = rs[pick(rng)];
    const auto& b = rs[pick(rng)];
    const auto& c = rs[pick(rng)];
    ASSERT_TRUE(same(merge(a, b), merge(b, a)));
    ASSERT_TRUE(same(merge(merge(a, b), c), merge(a, merge(b, c))));
  }
  // any bracketing of the full fold gives the per-order extremes
  ExtremalResult left = empty, right = empty;
  for (const auto& r : rs) left = merge(left, r);
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) right = merge(*it, right);
  EXPECT_TRUE(same(left, right));
  EXPECT_TRUE(same(left, extremal_over_order(8, IndexKind::Sigma)));
}

TEST(ExtremalOverOrder, StarMaximizesIrr) {
  for (std::size_t n = 3; n <= 9; ++n) {
    auto r = extremal_over_order(n, IndexKind::Irr);
    const auto nn = static_cast<std::int64_t>(n);
    EXPECT_EQ(r.max_value, IndexValue((nn - 1) * (nn - 2)));
    ASSERT_EQ(r.max_witnesses.size(), 1u);
    EXPECT_EQ(r.max_witnesses[0].form, canonical_form(build_star(n)));
    EXPECT_EQ(r.min_value, IndexValue(2));
    EXPECT_EQ(r.min_witnesses[0].form, canonical_form(build_path(n)));
  }
}

TEST(Zigzag, Examples) {
  EXPECT_EQ(zigzag_ordering({1, 2, 3}), (std::vector<Degree>{2, 1, 3}));
  EXPECT_EQ(zigzag_ordering({4, 3, 2, 1}), (std::vector<Degree>{3, 2, 1, 4}));
  EXPECT_EQ(zigzag_ordering({1, 2, 3, 4, 5, 6}), (std::vector<Degree>{5, 2, 3, 4, 1, 6}));
  EXPECT_EQ(zigzag_ordering({1, 2, 3, 4, 5}), (std::vector<Degree>{4, 2, 3, 1, 5}));
}

// Distinct values: the chain d_k > d_1 > ... > d_2 > d_{k-1} visits every
// position, alternating large (even distance from an end) and small.
TEST(Zigzag, ChainProperty) {
  for (std::size_t k = 4; k <= 9; ++k) {
    std::vector<Degree> v(k);
    std::iota(v.begin(), v.end(), Degree{1});
    auto z = zigzag_ordering(v);
    EXPECT_EQ(z.back(), static_cast<Degree>(k));
    EXPECT_EQ(z.front(), static_cast<Degree>(k - 1));
    EXPECT_EQ(z[k - 2], 1);
    EXPECT_EQ(z[1], 2);
    auto sorted = z;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, v);
  }
}

TEST(SpinePermutation, SmallExample) {
  auto r = spine_permutation_extremal(DegreeSequence({3, 2, 2}), IndexKind::Irr);
  // all three orderings are valid; compare against direct evaluation
  EXPECT_EQ(r.valid_orderings, 3u);
  EXPECT_EQ(r.skipped_orderings, 0u);
  IndexValue lo = caterpillar_index({2, 2, 3}, IndexKind::Irr);
  IndexValue hi = lo;
  for (auto o : std::vector<std::vector<Degree>>{{2, 3, 2}, {3, 2, 2}}) {
    lo = std::min(lo, caterpillar_index(o, IndexKind::Irr));
    hi = std::max(hi, caterpillar_index(o, IndexKind::Irr));
  }
  EXPECT_EQ(r.extremal.min_value, lo);
  EXPECT_EQ(r.extremal.max_value, hi);
  for (const auto& o : r.argmin) EXPECT_EQ(caterpillar_index(o, IndexKind::Irr), lo);
  for (const auto& o : r.argmax) EXPECT_EQ(caterpillar_index(o, IndexKind::Irr), hi);
  EXPECT_EQ(r.ascending, (std::vector<Degree>{2, 2, 3}));
}

TEST(SpinePermutation, SkipsInvalidAndErrors) {
  auto r = spine_permutation_extremal(DegreeSequence({1, 2, 2}), IndexKind::Sigma);
  EXPECT_EQ(r.valid_orderings, 2u);   // 122, 221
  EXPECT_EQ(r.skipped_orderings, 1u);  // 212
  try {
    spine_permutation_extremal(DegreeSequence({1, 1, 1}), IndexKind::Irr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoValidSpec);
  }
  try {
    spine_permutation_extremal(DegreeSequence(std::vector<Degree>(9, 2)), IndexKind::Irr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

}  // namespace
}  // namespace irrtree
