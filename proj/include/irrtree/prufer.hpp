#pragma once

#include <vector>

#include "irrtree/error.hpp"
#include "irrtree/graph.hpp"

namespace irrtree {

// Prüfer sequence of a labeled tree on n >= 2 vertices (length n - 2).
struct PruferCode {
  std::vector<Vertex> code;

  friend auto operator<=>(const PruferCode&, const PruferCode&) = default;
};

// Linear-time decode. Vertex i ends up with degree (occurrences of i) + 1.
inline SimpleGraph prufer_decode(const PruferCode& code, std::size_t n) {
  if (n < 2 || code.code.size() + 2 != n) {
    throw Error(ErrorCode::LengthMismatch, "code length " + std::to_string(code.code.size()) +
                                               " for n=" + std::to_string(n));
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : code.code) {
    if (v >= n) throw Error(ErrorCode::VertexOutOfRange, "label " + std::to_string(v));
    ++degree[v];
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex v : code.code) {
    pairs.emplace_back(static_cast<Vertex>(leaf), v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  pairs.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return graph_from_edge_list(n, pairs);
}

inline PruferCode prufer_encode(const SimpleGraph& t) {
  const std::size_t n = t.order();
  if (n < 2 || !is_tree(t)) {
    throw Error(ErrorCode::NotATree, "prufer_encode needs a tree with n >= 2");
  }
  auto adj = t.adjacency();
  // parent pointers toward n-1, which is never removed
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> stack{static_cast<Vertex>(n - 1)};
  std::vector<bool> seen(n, false);
  seen[n - 1] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) degree[i] = adj[i].size();

  PruferCode out;
  out.code.reserve(n - 2);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    Vertex next = parent[leaf];
    out.code.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return out;
}

}  // namespace irrtree
