#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "irrtree/error.hpp"
#include "irrtree/graph.hpp"

namespace irrtree {

// AHU parenthesis encoding of an unlabeled tree, rooted at its center. For
// bicentral trees both roots are tried and the smaller string is kept.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes);
  }
};

// One or two central vertices, found by peeling leaves layer by layer.
inline std::vector<Vertex> tree_centers(const SimpleGraph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "tree_centers");
  const std::size_t n = t.order();
  if (n == 1) return {0};
  auto adj = t.adjacency();
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : adj[leaf]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace detail {

inline std::string ahu_encode(const std::vector<std::vector<Vertex>>& adj, Vertex v,
                              Vertex parent, bool has_parent) {
  std::vector<std::string> children;
  children.reserve(adj[v].size());
  for (Vertex w : adj[v]) {
    if (has_parent && w == parent) continue;
    children.push_back(ahu_encode(adj, w, v, true));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

}  // namespace detail

inline CanonicalForm canonical_form(const SimpleGraph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "canonical_form");
  auto adj = t.adjacency();
  CanonicalForm best;
  bool first = true;
  for (Vertex c : tree_centers(t)) {
    std::string enc = detail::ahu_encode(adj, c, 0, false);
    if (first || enc < best.bytes) best.bytes = std::move(enc);
    first = false;
  }
  return best;
}

// Rebuilds a representative tree; vertices are numbered in preorder of the
// encoding, so the root is vertex 0.
inline SimpleGraph tree_from_canonical(const CanonicalForm& form) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (char ch : form.bytes) {
    if (ch == '(') {
      if (stack.empty() && next != 0) throw Error(ErrorCode::ParseError, "canonical form has two roots");
      if (!stack.empty()) pairs.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else if (ch == ')') {
      if (stack.empty()) throw Error(ErrorCode::ParseError, "unbalanced canonical form");
      stack.pop_back();
    } else {
      throw Error(ErrorCode::ParseError, "unexpected byte in canonical form");
    }
  }
  if (!stack.empty() || next == 0) throw Error(ErrorCode::ParseError, "unbalanced canonical form");
  return graph_from_edge_list(next, pairs);
}

}  // namespace irrtree
