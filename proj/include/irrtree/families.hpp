#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "irrtree/error.hpp"
#include "irrtree/graph.hpp"

namespace irrtree {

// Ordered spine degrees (d_1, ..., d_k) of a caterpillar.
struct CaterpillarSpec {
  std::vector<Degree> spine;

  // Interior spine vertices need two spine neighbours; ends need one unless
  // the spine is a single vertex.
  bool valid() const {
    const auto k = spine.size();
    if (k == 0) return false;
    for (std::size_t i = 0; i < k; ++i) {
      const bool interior = i > 0 && i + 1 < k;
      if (spine[i] < (interior ? 2 : 1)) return false;
    }
    return true;
  }

  friend bool operator==(const CaterpillarSpec&, const CaterpillarSpec&) = default;
};

inline SimpleGraph build_star(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::OrderTooSmall, "star needs n >= 2");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v) pairs.emplace_back(0, v);
  return graph_from_edge_list(n, pairs);
}

inline SimpleGraph build_path(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::OrderTooSmall, "path needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v) pairs.emplace_back(v - 1, v);
  return graph_from_edge_list(n, pairs);
}

// Adjacent centres 0 (degree k) and 1 (degree r); leaves of 0 first, then of 1.
inline SimpleGraph build_double_star(Degree k, Degree r) {
  if (k < 1 || r < 1) throw Error(ErrorCode::DomainError, "double star needs k, r >= 1");
  const auto n = static_cast<std::size_t>(k + r);
  std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}};
  Vertex next = 2;
  for (Degree i = 0; i < k - 1; ++i) pairs.emplace_back(0, next++);
  for (Degree i = 0; i < r - 1; ++i) pairs.emplace_back(1, next++);
  return graph_from_edge_list(n, pairs);
}

// Sides {0..m-1} and {m..m+n-1}.
inline SimpleGraph build_complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::DomainError, "K_{m,n} needs m, n >= 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = 0; b < n; ++b) pairs.emplace_back(a, static_cast<Vertex>(m + b));
  return graph_from_edge_list(m + n, pairs);
}

// Spine v_1..v_k on vertices 0..k-1; pendants are numbered after the spine in
// spine order. End vertices get d - 1 pendants, interior ones d - 2, so with
// k >= 2 every spine vertex has degree exactly d_i. A one-vertex spine (d)
// gets d - 1 pendants, i.e. the star with d - 1 leaves.
inline SimpleGraph build_caterpillar(const CaterpillarSpec& spec) {
  if (!spec.valid()) throw Error(ErrorCode::SpecInvalid, "caterpillar spine");
  const auto k = spec.spine.size();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 1; i < k; ++i) pairs.emplace_back(i - 1, i);
  auto next = static_cast<Vertex>(k);
  for (std::size_t i = 0; i < k; ++i) {
    const bool interior = i > 0 && i + 1 < k;
    const Degree pendants = spec.spine[i] - (interior ? 2 : 1);
    for (Degree p = 0; p < pendants; ++p) pairs.emplace_back(static_cast<Vertex>(i), next++);
  }
  return graph_from_edge_list(next, pairs);
}

// k spine vertices each carrying m pendants (end degrees m + 1, interior m + 2).
inline SimpleGraph build_uniform_caterpillar(std::size_t k, Degree m) {
  if (k < 1 || m < 0) throw Error(ErrorCode::DomainError, "ucat needs k >= 1, m >= 0");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 1; i < k; ++i) pairs.emplace_back(i - 1, i);
  auto next = static_cast<Vertex>(k);
  for (Vertex i = 0; i < k; ++i)
    for (Degree p = 0; p < m; ++p) pairs.emplace_back(i, next++);
  return graph_from_edge_list(next, pairs);
}

namespace detail {

inline std::vector<Degree> parse_int_list(std::string_view text, char sep,
                                          std::string_view family) {
  std::vector<Degree> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    auto piece = text.substr(start, pos == text.npos ? text.npos : pos - start);
    Degree v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() || v < 0) {
      throw Error(ErrorCode::ParseError,
                  "bad parameter '" + std::string(piece) + "' in " + std::string(family));
    }
    out.push_back(v);
    if (pos == text.npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

// Family grammar: star:n  path:n  dstar:k,r  kmn:m,n  cat:d1-d2-...-dk  ucat:k,m
inline SimpleGraph parse_family(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == spec.npos) throw Error(ErrorCode::ParseError, "family needs 'name:params'");
  auto name = spec.substr(0, colon);
  auto args = spec.substr(colon + 1);
  auto expect = [&](const std::vector<Degree>& v, std::size_t count) {
    if (v.size() != count) {
      throw Error(ErrorCode::ParseError, "wrong parameter count for " + std::string(name));
    }
  };
  if (name == "star") {
    auto v = detail::parse_int_list(args, ',', name);
    expect(v, 1);
    return build_star(static_cast<std::size_t>(v[0]));
  }
  if (name == "path") {
    auto v = detail::parse_int_list(args, ',', name);
    expect(v, 1);
    return build_path(static_cast<std::size_t>(v[0]));
  }
  if (name == "dstar") {
    auto v = detail::parse_int_list(args, ',', name);
    expect(v, 2);
    return build_double_star(v[0], v[1]);
  }
  if (name == "kmn") {
    auto v = detail::parse_int_list(args, ',', name);
    expect(v, 2);
    return build_complete_bipartite(static_cast<std::size_t>(v[0]),
                                    static_cast<std::size_t>(v[1]));
  }
  if (name == "cat") {
    return build_caterpillar(CaterpillarSpec{detail::parse_int_list(args, '-', name)});
  }
  if (name == "ucat") {
    auto v = detail::parse_int_list(args, ',', name);
    expect(v, 2);
    return build_uniform_caterpillar(static_cast<std::size_t>(v[0]), v[1]);
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
}

}  // namespace irrtree
