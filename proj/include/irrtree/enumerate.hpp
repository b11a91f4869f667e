#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "irrtree/canonical.hpp"
#include "irrtree/degree_sequence.hpp"
#include "irrtree/error.hpp"
#include "irrtree/graph.hpp"
#include "irrtree/parallel.hpp"
#include "irrtree/prufer.hpp"

namespace irrtree {

enum class EnumerationMode { Labeled, UpToIsomorphism };

struct EnumerationOptions {
  std::size_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
};

inline void require_enumerable(const DegreeSequence& d, const EnumerationOptions& opts) {
  if (opts.cap > kHardEnumerationCap) {
    throw Error(ErrorCode::CapExceeded, "cap " + std::to_string(opts.cap) + " above hard cap " +
                                            std::to_string(kHardEnumerationCap));
  }
  if (d.size() > opts.cap) {
    throw Error(ErrorCode::CapExceeded,
                "order " + std::to_string(d.size()) + " above cap " + std::to_string(opts.cap));
  }
  if (!is_tree_realizable(d)) {
    throw Error(ErrorCode::NotRealizable, "(" + d.to_string() + ") is not a tree sequence");
  }
}

// (n-2)! / prod (d_i - 1)!  computed as a product of binomials.
inline std::uint64_t labeled_tree_count(const DegreeSequence& d) {
  if (!is_tree_realizable(d)) return 0;
  if (d.size() <= 2) return 1;
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (auto di : d.ascending()) {
    for (std::uint64_t j = 1; j <= static_cast<std::uint64_t>(di - 1); ++j) {
      ++placed;
      result = result * placed / j;  // running binomial(placed, j) stays integral
    }
  }
  return result;
}

namespace detail {

inline SimpleGraph single_vertex() { return graph_from_edge_list(1, {}); }

// Sorted Prüfer multiset: vertex i (in presentation order) repeated d_i - 1 times.
inline std::vector<Vertex> prufer_multiset(const std::vector<Degree>& presented) {
  std::vector<Vertex> code;
  for (Vertex v = 0; v < presented.size(); ++v)
    for (Degree c = 1; c < presented[v]; ++c) code.push_back(v);
  return code;
}

}  // namespace detail

// Labeled enumeration partitions by the first symbol of the Prüfer code; each
// partition walks the remaining multiset in lexicographic order. Vertex i has
// degree presented()[i].
inline std::vector<Vertex> labeled_partition_prefixes(const DegreeSequence& d) {
  auto code = detail::prufer_multiset(d.presented());
  code.erase(std::unique(code.begin(), code.end()), code.end());
  return code;
}

template <typename Fn>
void for_each_labeled_tree_in_partition(const DegreeSequence& d, std::size_t partition, Fn&& fn) {
  const std::size_t n = d.size();
  if (n <= 2) {
    if (partition == 0) fn(n == 1 ? detail::single_vertex() : prufer_decode({}, 2));
    return;
  }
  auto code = detail::prufer_multiset(d.presented());
  auto prefixes = labeled_partition_prefixes(d);
  if (partition >= prefixes.size()) return;
  const Vertex first = prefixes[partition];
  auto it = std::find(code.begin(), code.end(), first);
  code.erase(it);
  PruferCode full;
  full.code.resize(n - 2);
  full.code[0] = first;
  do {
    std::copy(code.begin(), code.end(), full.code.begin() + 1);
    fn(prufer_decode(full, n));
  } while (std::next_permutation(code.begin(), code.end()));
}

inline std::size_t labeled_partition_count(const DegreeSequence& d) {
  return d.size() <= 2 ? 1 : labeled_partition_prefixes(d).size();
}

template <typename Fn>
void for_each_labeled_tree(const DegreeSequence& d, Fn&& fn,
                           const EnumerationOptions& opts = {}) {
  require_enumerable(d, opts);
  const auto parts = labeled_partition_count(d);
  for (std::size_t p = 0; p < parts; ++p) for_each_labeled_tree_in_partition(d, p, fn);
}

// Up-to-isomorphism enumeration. Leaves play no structural role beyond their
// count, so candidates are labeled trees on the internal (degree >= 2)
// vertices, with each internal vertex v of internal degree e_v <= d_v, padded
// with d_v - e_v pendants. Candidates are deduplicated by canonical form; the
// first representative in generation order is kept.
namespace detail {

struct IsoCandidateSpace {
  std::vector<Degree> internal;                  // degrees >= 2, presentation order
  std::size_t leaves = 0;
  std::vector<std::vector<Vertex>> partitions;   // sorted internal Prüfer multisets
};

inline IsoCandidateSpace iso_candidate_space(const DegreeSequence& d) {
  IsoCandidateSpace space;
  for (auto di : d.presented()) {
    if (di >= 2)
      space.internal.push_back(di);
    else
      ++space.leaves;
  }
  const std::size_t k = space.internal.size();
  if (k < 2) {
    space.partitions.push_back({});
    return space;
  }
  // counts c_v in [0, d_v - 1] with sum k - 2; one partition per count vector
  std::vector<Vertex> current;
  auto rec = [&](auto&& self, std::size_t v, std::size_t remaining) -> void {
    if (v == k) {
      if (remaining == 0) space.partitions.push_back(current);
      return;
    }
    const auto limit = std::min<std::size_t>(remaining, static_cast<std::size_t>(space.internal[v] - 1));
    for (std::size_t c = 0; c <= limit; ++c) {
      for (std::size_t i = 0; i < c; ++i) current.push_back(static_cast<Vertex>(v));
      self(self, v + 1, remaining - c);
      for (std::size_t i = 0; i < c; ++i) current.pop_back();
    }
  };
  rec(rec, 0, k - 2);
  return space;
}

inline SimpleGraph attach_pendants(const SimpleGraph& core, const std::vector<Degree>& internal,
                                   std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(n - 1);
  for (const auto& e : core.edges()) pairs.emplace_back(e.u, e.v);
  const auto core_deg = core.degrees();
  auto next = static_cast<Vertex>(internal.size());
  for (Vertex v = 0; v < internal.size(); ++v) {
    for (Degree p = core_deg[v]; p < internal[v]; ++p) pairs.emplace_back(v, next++);
  }
  return graph_from_edge_list(n, pairs);
}

struct IsoClass {
  CanonicalForm form;
  SimpleGraph tree;
};

inline std::vector<IsoClass> iso_partition_classes(const DegreeSequence& d,
                                                   const IsoCandidateSpace& space,
                                                   std::size_t partition) {
  const std::size_t n = d.size();
  const std::size_t k = space.internal.size();
  std::vector<IsoClass> out;
  if (n == 1) {
    out.push_back({canonical_form(single_vertex()), single_vertex()});
    return out;
  }
  if (k == 0) {  // n == 2
    auto edge = prufer_decode({}, 2);
    out.push_back({canonical_form(edge), edge});
    return out;
  }
  if (k == 1) {
    auto star = attach_pendants(graph_from_edge_list(1, {}), space.internal, n);
    out.push_back({canonical_form(star), star});
    return out;
  }
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  auto code = space.partitions[partition];
  PruferCode pc;
  do {
    pc.code = code;
    auto tree = attach_pendants(prufer_decode(pc, k), space.internal, n);
    auto form = canonical_form(tree);
    if (seen.insert(form).second) out.push_back({std::move(form), std::move(tree)});
  } while (std::next_permutation(code.begin(), code.end()));
  return out;
}

}  // namespace detail

// Representatives of every isomorphism class realizing d, in deterministic
// order (independent of thread count).
inline std::vector<detail::IsoClass> iso_classes(const DegreeSequence& d,
                                                 const EnumerationOptions& opts = {}) {
  require_enumerable(d, opts);
  const auto space = detail::iso_candidate_space(d);
  auto parts = parallel_map(space.partitions.size(), opts.threads, [&](std::size_t p) {
    return detail::iso_partition_classes(d, space, p);
  });
  std::vector<detail::IsoClass> merged;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  for (auto& part : parts) {
    for (auto& cls : part) {
      if (seen.insert(cls.form).second) merged.push_back(std::move(cls));
    }
  }
  return merged;
}

template <typename Fn>
void for_each_tree(const DegreeSequence& d, EnumerationMode mode, Fn&& fn,
                   const EnumerationOptions& opts = {}) {
  if (mode == EnumerationMode::Labeled) {
    for_each_labeled_tree(d, fn, opts);
    return;
  }
  for (const auto& cls : iso_classes(d, opts)) fn(cls.tree);
}

inline std::vector<SimpleGraph> enumerate_trees(const DegreeSequence& d, EnumerationMode mode,
                                                const EnumerationOptions& opts = {}) {
  std::vector<SimpleGraph> out;
  for_each_tree(d, mode, [&](const SimpleGraph& t) { out.push_back(t); }, opts);
  return out;
}

inline std::uint64_t count_trees(const DegreeSequence& d, EnumerationMode mode,
                                 const EnumerationOptions& opts = {}) {
  if (mode == EnumerationMode::UpToIsomorphism) return iso_classes(d, opts).size();
  require_enumerable(d, opts);
  const auto parts = labeled_partition_count(d);
  auto counts = parallel_map(parts, opts.threads, [&](std::size_t p) {
    std::uint64_t c = 0;
    for_each_labeled_tree_in_partition(d, p, [&](const SimpleGraph&) { ++c; });
    return c;
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace irrtree
