#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "irrtree/graph.hpp"

namespace irrtree {

enum class IndexKind {
  Irr,         // Albertson: sum over edges |d_u - d_v|
  Sigma,       // sum over edges (d_u - d_v)^2
  M1,          // first Zagreb: sum over vertices d^2
  M2,          // second Zagreb: sum over edges d_u * d_v
  Forgotten,   // sum over vertices d^3
  IrrTotal,    // sum over unordered vertex pairs |d_u - d_v|
  SigmaTotal,  // 1/2 * sum over unordered vertex pairs (d_u - d_v)^2
};

inline constexpr std::array<IndexKind, 7> kAllIndexKinds = {
    IndexKind::Irr,       IndexKind::Sigma,    IndexKind::M1,        IndexKind::M2,
    IndexKind::Forgotten, IndexKind::IrrTotal, IndexKind::SigmaTotal};

// Exact value. SigmaTotal keeps the literal 1/2 factor as a rational.
// Compare against IndexValue(k), not a bare int: with Boost 1.74 under C++20
// the mixed-type operator== overloads recurse into each other.
using IndexValue = boost::rational<std::int64_t>;

constexpr std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::Irr: return "irr";
    case IndexKind::Sigma: return "sigma";
    case IndexKind::M1: return "m1";
    case IndexKind::M2: return "m2";
    case IndexKind::Forgotten: return "forgotten";
    case IndexKind::IrrTotal: return "irr_total";
    case IndexKind::SigmaTotal: return "sigma_total";
  }
  return "?";
}

inline std::optional<IndexKind> parse_index_kind(std::string_view name) {
  for (auto k : kAllIndexKinds) {
    if (to_string(k) == name) return k;
  }
  if (name == "albertson") return IndexKind::Irr;
  if (name == "f") return IndexKind::Forgotten;
  return std::nullopt;
}

inline std::string format_value(const IndexValue& v) {
  if (v.denominator() == 1) return std::to_string(v.numerator());
  return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

// Direct evaluation from the defining sums. Pair sums walk all unordered
// vertex pairs, which keeps this path independent of compute_all.
inline IndexValue compute_index(const SimpleGraph& g, IndexKind kind) {
  const auto deg = g.degrees();
  std::int64_t acc = 0;
  switch (kind) {
    case IndexKind::Irr:
      for (const auto& e : g.edges()) acc += std::abs(deg[e.u] - deg[e.v]);
      return acc;
    case IndexKind::Sigma:
      for (const auto& e : g.edges()) {
        auto diff = deg[e.u] - deg[e.v];
        acc += diff * diff;
      }
      return acc;
    case IndexKind::M1:
      for (auto d : deg) acc += d * d;
      return acc;
    case IndexKind::M2:
      for (const auto& e : g.edges()) acc += deg[e.u] * deg[e.v];
      return acc;
    case IndexKind::Forgotten:
      for (auto d : deg) acc += d * d * d;
      return acc;
    case IndexKind::IrrTotal:
      for (std::size_t i = 0; i < deg.size(); ++i)
        for (std::size_t j = i + 1; j < deg.size(); ++j) acc += std::abs(deg[i] - deg[j]);
      return acc;
    case IndexKind::SigmaTotal:
      for (std::size_t i = 0; i < deg.size(); ++i)
        for (std::size_t j = i + 1; j < deg.size(); ++j) {
          auto diff = deg[i] - deg[j];
          acc += diff * diff;
        }
      return IndexValue(acc, 2);
  }
  return 0;
}

struct IndexTable {
  std::array<IndexValue, kAllIndexKinds.size()> values{};

  const IndexValue& operator[](IndexKind k) const { return values[static_cast<std::size_t>(k)]; }
  IndexValue& operator[](IndexKind k) { return values[static_cast<std::size_t>(k)]; }

  friend bool operator==(const IndexTable&, const IndexTable&) = default;
};

// Single pass over edges plus a sorted-degree pass for the pair sums:
//   sum_{i<j} |d_i - d_j| = sum_j d_(j) * (2j - n + 1)     (d sorted, 0-based)
//   sum_{i<j} (d_i - d_j)^2 = n * sum d^2 - (sum d)^2
inline IndexTable compute_all(const SimpleGraph& g) {
  auto deg = g.degrees();
  std::int64_t irr = 0, sigma = 0, m2 = 0;
  for (const auto& e : g.edges()) {
    auto a = deg[e.u], b = deg[e.v];
    irr += std::abs(a - b);
    sigma += (a - b) * (a - b);
    m2 += a * b;
  }
  std::int64_t m1 = 0, f = 0, sum = 0;
  for (auto d : deg) {
    sum += d;
    m1 += d * d;
    f += d * d * d;
  }
  std::sort(deg.begin(), deg.end());
  const auto n = static_cast<std::int64_t>(deg.size());
  std::int64_t irr_total = 0;
  for (std::int64_t j = 0; j < n; ++j) irr_total += deg[j] * (2 * j - n + 1);
  const std::int64_t pair_squares = n * m1 - sum * sum;

  IndexTable t;
  t[IndexKind::Irr] = irr;
  t[IndexKind::Sigma] = sigma;
  t[IndexKind::M1] = m1;
  t[IndexKind::M2] = m2;
  t[IndexKind::Forgotten] = f;
  t[IndexKind::IrrTotal] = irr_total;
  t[IndexKind::SigmaTotal] = IndexValue(pair_squares, 2);
  return t;
}

}  // namespace irrtree
