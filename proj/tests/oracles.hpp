#pragma once

// Test-only brute-force oracles. Nothing here calls into the enumeration,
// canonicalization or closed-form code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "irrtree/graph.hpp"

namespace irrtree::oracle {

inline int pair_bit(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  // row-major index of (i, j), i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Isomorphism certificate: the minimum edge bitmask over all n! relabelings.
inline std::uint64_t brute_certificate(const SimpleGraph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (const auto& e : g.edges()) mask |= std::uint64_t{1} << pair_bit(perm[e.u], perm[e.v], n);
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return brute_certificate(a) == brute_certificate(b);
}

// Every simple graph on n vertices (n <= 6 keeps this at 2^15 graphs).
template <typename Fn>
void for_each_graph(int n, Fn&& fn) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  const std::uint64_t limit = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask >> b & 1u) pairs.push_back(all[b]);
    fn(graph_from_edge_list(static_cast<std::size_t>(n), pairs));
  }
}

// Sorted degree multisets realized by at least one simple graph on n vertices.
inline std::set<std::vector<Degree>> graphic_sequences(int n) {
  std::set<std::vector<Degree>> out;
  for_each_graph(n, [&](const SimpleGraph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    out.insert(d);
  });
  return out;
}

// Every labeled tree on n vertices as an edge list, by brute force over all
// (n-1)-edge subsets filtered for connectivity; small n only.
inline std::vector<SimpleGraph> all_labeled_trees_bruteforce(int n) {
  std::vector<SimpleGraph> out;
  if (n == 1) {
    out.push_back(graph_from_edge_list(1, {}));
    return out;
  }
  for_each_graph(n, [&](const SimpleGraph& g) {
    if (static_cast<int>(g.size()) == n - 1 && is_tree(g)) out.push_back(g);
  });
  return out;
}

inline std::int64_t factorial(std::int64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Sum of f(d_u, d_v) over edges, with degrees counted from the edge list.
template <typename Fn>
std::int64_t edge_sum(const SimpleGraph& g, Fn&& f) {
  std::vector<std::int64_t> deg(g.order(), 0);
  for (const auto& e : g.edges()) ++deg[e.u], ++deg[e.v];
  std::int64_t total = 0;
  for (const auto& e : g.edges()) total += f(deg[e.u], deg[e.v]);
  return total;
}

inline std::int64_t edge_irr(const SimpleGraph& g) {
  return edge_sum(g, [](std::int64_t a, std::int64_t b) { return a > b ? a - b : b - a; });
}

inline std::int64_t edge_sigma(const SimpleGraph& g) {
  return edge_sum(g, [](std::int64_t a, std::int64_t b) { return (a - b) * (a - b); });
}

inline SimpleGraph path_edges(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph_from_edge_list(static_cast<std::size_t>(n), e);
}

inline SimpleGraph star_edges(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return graph_from_edge_list(static_cast<std::size_t>(n), e);
}

}  // namespace irrtree::oracle
