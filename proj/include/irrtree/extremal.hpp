#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "irrtree/canonical.hpp"
#include "irrtree/degree_sequence.hpp"
#include "irrtree/enumerate.hpp"
#include "irrtree/families.hpp"
#include "irrtree/indices.hpp"

namespace irrtree {

inline constexpr std::size_t kDefaultWitnessCap = 4;
inline constexpr std::size_t kDefaultSpineCap = 8;

struct Witness {
  CanonicalForm form;
  SimpleGraph tree;
};

struct ExtremalResult {
  IndexKind kind = IndexKind::Irr;
  IndexValue min_value = 0;
  IndexValue max_value = 0;
  std::vector<Witness> min_witnesses;  // sorted by form, capped
  std::vector<Witness> max_witnesses;
  std::uint64_t count_labeled = 0;
  std::uint64_t count_iso = 0;

  bool empty() const noexcept { return count_iso == 0; }
};

namespace detail {

inline void merge_witnesses(std::vector<Witness>& into, const std::vector<Witness>& from,
                            std::size_t cap) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end(),
            [](const Witness& a, const Witness& b) { return a.form < b.form; });
  into.erase(std::unique(into.begin(), into.end(),
                         [](const Witness& a, const Witness& b) { return a.form == b.form; }),
             into.end());
  if (into.size() > cap) into.resize(cap);
}

}  // namespace detail

// Combines results over disjoint tree spaces: counts add, extremes are taken
// componentwise and witness lists are unioned and re-capped. Associative and
// commutative; an empty result is the identity.
inline ExtremalResult merge(const ExtremalResult& a, const ExtremalResult& b,
                            std::size_t witness_cap = kDefaultWitnessCap) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  ExtremalResult out;
  out.kind = a.kind;
  out.count_labeled = a.count_labeled + b.count_labeled;
  out.count_iso = a.count_iso + b.count_iso;
  out.min_value = std::min(a.min_value, b.min_value);
  out.max_value = std::max(a.max_value, b.max_value);
  if (a.min_value == out.min_value) detail::merge_witnesses(out.min_witnesses, a.min_witnesses, witness_cap);
  if (b.min_value == out.min_value) detail::merge_witnesses(out.min_witnesses, b.min_witnesses, witness_cap);
  if (a.max_value == out.max_value) detail::merge_witnesses(out.max_witnesses, a.max_witnesses, witness_cap);
  if (b.max_value == out.max_value) detail::merge_witnesses(out.max_witnesses, b.max_witnesses, witness_cap);
  return out;
}

// Exact extremes of an index over all trees with degree sequence d.
inline ExtremalResult extremal_index(const DegreeSequence& d, IndexKind kind,
                                     const EnumerationOptions& opts = {},
                                     std::size_t witness_cap = kDefaultWitnessCap) {
  const auto classes = iso_classes(d, opts);
  ExtremalResult out;
  out.kind = kind;
  out.count_labeled = labeled_tree_count(d);
  out.count_iso = classes.size();
  bool first = true;
  for (const auto& cls : classes) {
    const auto value = compute_index(cls.tree, kind);
    Witness w{cls.form, cls.tree};
    if (first || value < out.min_value) {
      out.min_value = value;
      out.min_witnesses.clear();
    }
    if (first || value > out.max_value) {
      out.max_value = value;
      out.max_witnesses.clear();
    }
    if (value == out.min_value) detail::merge_witnesses(out.min_witnesses, {w}, witness_cap);
    if (value == out.max_value) detail::merge_witnesses(out.max_witnesses, {w}, witness_cap);
    first = false;
  }
  return out;
}

// Extremes over every tree of order n (all degree sequences merged).
inline ExtremalResult extremal_over_order(std::size_t n, IndexKind kind,
                                          const EnumerationOptions& opts = {},
                                          std::size_t witness_cap = kDefaultWitnessCap) {
  ExtremalResult total;
  total.kind = kind;
  for (const auto& d : all_tree_sequences(n, opts.cap)) {
    total = merge(total, extremal_index(d, kind, opts, witness_cap), witness_cap);
  }
  return total;
}

// Spine ordering with the largest value at the far end, the next at the near
// end, then positions alternating between large and small by distance from
// the nearest end: even distances (0, 2, 4, ...) take the largest values,
// outermost first and right side before left; odd distances take the rest,
// innermost first and left side before right, so positions 2 and n-1 (in
// 1-based terms) receive the two smallest values with n-1 the smallest.
inline std::vector<Degree> zigzag_ordering(std::vector<Degree> values) {
  const std::size_t k = values.size();
  std::sort(values.begin(), values.end(), std::greater<>());
  struct Slot {
    std::size_t pos;
    std::size_t depth;
  };
  std::vector<Slot> even, odd;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t depth = std::min(i, k - 1 - i);
    (depth % 2 == 0 ? even : odd).push_back({i, depth});
  }
  std::stable_sort(even.begin(), even.end(), [](const Slot& a, const Slot& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.pos > b.pos;
  });
  std::stable_sort(odd.begin(), odd.end(), [](const Slot& a, const Slot& b) {
    if (a.depth != b.depth) return a.depth > b.depth;
    return a.pos < b.pos;
  });
  std::vector<Degree> out(k);
  std::size_t next = 0;
  for (const auto& s : even) out[s.pos] = values[next++];
  for (const auto& s : odd) out[s.pos] = values[next++];
  return out;
}

struct SpineExtremalResult {
  ExtremalResult extremal;  // witnesses are caterpillars; counts are orderings
  std::vector<std::vector<Degree>> argmin;  // lexicographically first, capped
  std::vector<std::vector<Degree>> argmax;
  std::size_t valid_orderings = 0;
  std::size_t skipped_orderings = 0;

  std::vector<Degree> ascending;  // the sorted-ascending ordering
  std::optional<IndexValue> ascending_value;
  bool ascending_attains_min = false;

  std::vector<Degree> zigzag;  // see zigzag_ordering
  std::optional<IndexValue> zigzag_value;
  bool zigzag_attains_max = false;
};

inline IndexValue caterpillar_index(const std::vector<Degree>& spine, IndexKind kind) {
  return compute_index(build_caterpillar(CaterpillarSpec{spine}), kind);
}

// Evaluates the index on the caterpillar of every distinct ordering of the
// spine multiset; orderings with an interior degree below 2 are skipped.
inline SpineExtremalResult spine_permutation_extremal(const DegreeSequence& spine_multiset,
                                                      IndexKind kind,
                                                      std::size_t spine_cap = kDefaultSpineCap,
                                                      std::size_t witness_cap = kDefaultWitnessCap) {
  if (spine_multiset.size() > spine_cap) {
    throw Error(ErrorCode::CapExceeded, "spine length " + std::to_string(spine_multiset.size()) +
                                            " above cap " + std::to_string(spine_cap));
  }
  SpineExtremalResult out;
  out.extremal.kind = kind;
  auto order = spine_multiset.ascending();
  bool first = true;
  do {
    CaterpillarSpec spec{order};
    if (!spec.valid()) {
      ++out.skipped_orderings;
      continue;
    }
    ++out.valid_orderings;
    auto tree = build_caterpillar(spec);
    const auto value = compute_index(tree, kind);
    if (first || value < out.extremal.min_value) {
      out.extremal.min_value = value;
      out.argmin.clear();
      out.extremal.min_witnesses.clear();
    }
    if (first || value > out.extremal.max_value) {
      out.extremal.max_value = value;
      out.argmax.clear();
      out.extremal.max_witnesses.clear();
    }
    first = false;
    if (value == out.extremal.min_value) {
      if (out.argmin.size() < witness_cap) out.argmin.push_back(order);
      detail::merge_witnesses(out.extremal.min_witnesses, {{canonical_form(tree), tree}}, witness_cap);
    }
    if (value == out.extremal.max_value) {
      if (out.argmax.size() < witness_cap) out.argmax.push_back(order);
      detail::merge_witnesses(out.extremal.max_witnesses, {{canonical_form(tree), tree}}, witness_cap);
    }
  } while (std::next_permutation(order.begin(), order.end()));

  if (out.valid_orderings == 0) {
    throw Error(ErrorCode::NoValidSpec, "no valid caterpillar for spine {" +
                                            spine_multiset.to_string() + "}");
  }
  out.extremal.count_labeled = out.valid_orderings;
  out.extremal.count_iso = out.valid_orderings;

  out.ascending = spine_multiset.ascending();
  if (CaterpillarSpec{out.ascending}.valid()) {
    out.ascending_value = caterpillar_index(out.ascending, kind);
    out.ascending_attains_min = *out.ascending_value == out.extremal.min_value;
  }
  out.zigzag = zigzag_ordering(spine_multiset.ascending());
  if (CaterpillarSpec{out.zigzag}.valid()) {
    out.zigzag_value = caterpillar_index(out.zigzag, kind);
    out.zigzag_attains_max = *out.zigzag_value == out.extremal.max_value;
  }
  return out;
}

}  // namespace irrtree
