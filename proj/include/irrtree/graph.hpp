#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "irrtree/error.hpp"

namespace irrtree {

using Vertex = std::uint32_t;
using Degree = std::int64_t;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1. Edges are kept sorted and
// unique, so two graphs compare equal iff they have the same labeled edge set.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<Degree> degrees() const {
    std::vector<Degree> deg(n_, 0);
    for (const auto& e : edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    return deg;
  }

  std::vector<std::vector<Vertex>> adjacency() const {
    std::vector<std::vector<Vertex>> adj(n_);
    for (const auto& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    return adj;
  }

  bool has_edge(Vertex a, Vertex b) const {
    Edge e{std::min(a, b), std::max(a, b)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

  friend SimpleGraph graph_from_edge_list(std::size_t n,
                                          const std::vector<std::pair<Vertex, Vertex>>& pairs);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Builds a graph from vertex pairs; duplicates (in either orientation) collapse.
inline SimpleGraph graph_from_edge_list(std::size_t n,
                                        const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  SimpleGraph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
                      std::to_string(n));
    }
    if (a == b) {
      throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(a));
    }
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  return g;
}

inline std::vector<Degree> degrees(const SimpleGraph& g) { return g.degrees(); }

inline bool is_connected(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  // union-find over the edge list
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n;
  for (const auto& e : g.edges()) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

// n = 1 is a tree, n = 0 is not.
inline bool is_tree(const SimpleGraph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

namespace detail {

inline bool parse_uint(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace detail

// Edge-list text: first non-comment line holds n, then one "u v" pair per
// line. Integer labels are taken as 0-indexed vertex ids; if any label is not
// an integer, all labels are treated as names and remapped densely in order
// of first appearance.
inline SimpleGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<std::pair<std::string, std::string>> raw;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(detail::strip_comment(line));
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (!n) {
      std::size_t value = 0;
      if (words.size() != 1 || !detail::parse_uint(words[0], value)) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) +
                                               ": expected vertex count");
      }
      n = value;
      continue;
    }
    if (words.size() != 2) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": expected 'u v'");
    }
    raw.emplace_back(words[0], words[1]);
  }
  if (!n) throw Error(ErrorCode::ParseError, "missing vertex count");

  bool numeric = std::all_of(raw.begin(), raw.end(), [](const auto& p) {
    std::size_t tmp = 0;
    return detail::parse_uint(p.first, tmp) && detail::parse_uint(p.second, tmp);
  });

  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(raw.size());
  if (numeric) {
    for (const auto& [a, b] : raw) {
      std::size_t x = 0, y = 0;
      detail::parse_uint(a, x);
      detail::parse_uint(b, y);
      if (x >= *n || y >= *n) {
        throw Error(ErrorCode::VertexOutOfRange, "edge (" + a + "," + b + ") with n=" +
                                                     std::to_string(*n));
      }
      pairs.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
  } else {
    std::unordered_map<std::string, Vertex> ids;
    auto id_of = [&](const std::string& label) {
      auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(ids.size()));
      if (inserted && ids.size() > *n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "more than " + std::to_string(*n) + " distinct labels");
      }
      return it->second;
    };
    for (const auto& [a, b] : raw) {
      Vertex x = id_of(a);
      Vertex y = id_of(b);
      pairs.emplace_back(x, y);
    }
  }
  return graph_from_edge_list(*n, pairs);
}

inline SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace irrtree
