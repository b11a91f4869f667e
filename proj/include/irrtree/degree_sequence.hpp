#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "irrtree/error.hpp"
#include "irrtree/graph.hpp"

namespace irrtree {

inline constexpr std::size_t kDefaultEnumerationCap = 9;
inline constexpr std::size_t kHardEnumerationCap = 12;

enum class Orientation { NonIncreasing, NonDecreasing };

// Multiset of degrees. Storage is always ascending; the orientation only
// decides how the sequence is presented (d_1, ..., d_n) to formulas and
// labeled enumeration.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  explicit DegreeSequence(std::vector<Degree> values,
                          Orientation orientation = Orientation::NonIncreasing)
      : values_(std::move(values)), orientation_(orientation) {
    if (values_.empty()) throw Error(ErrorCode::DomainError, "empty degree sequence");
    for (auto d : values_) {
      if (d < 0) throw Error(ErrorCode::DomainError, "negative degree");
    }
    std::sort(values_.begin(), values_.end());
  }

  std::size_t size() const noexcept { return values_.size(); }
  Orientation orientation() const noexcept { return orientation_; }
  const std::vector<Degree>& ascending() const noexcept { return values_; }

  std::vector<Degree> sorted(Orientation o) const {
    std::vector<Degree> out = values_;
    if (o == Orientation::NonIncreasing) std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<Degree> presented() const { return sorted(orientation_); }

  Degree sum() const { return std::accumulate(values_.begin(), values_.end(), Degree{0}); }
  Degree max() const { return values_.back(); }
  Degree min() const { return values_.front(); }

  DegreeSequence with_orientation(Orientation o) const {
    DegreeSequence copy = *this;
    copy.orientation_ = o;
    return copy;
  }

  std::string to_string(char sep = ',') const {
    std::string out;
    for (auto d : presented()) {
      if (!out.empty()) out += sep;
      out += std::to_string(d);
    }
    return out;
  }

  // Equality is on the multiset; orientation is presentation metadata.
  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Degree> values_;
  Orientation orientation_ = Orientation::NonIncreasing;
};

inline DegreeSequence parse_degree_sequence(std::string_view text,
                                            Orientation orientation = Orientation::NonIncreasing) {
  std::vector<Degree> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    Degree d = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), d);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw Error(ErrorCode::ParseError, "bad degree '" + std::string(piece) + "'");
    }
    values.push_back(d);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DegreeSequence(std::move(values), orientation);
}

// Tree condition: n >= 2, every d_i >= 1, sum = 2(n - 1); or the single vertex (0).
inline bool is_tree_realizable(const DegreeSequence& d) {
  if (d.size() == 1) return d.ascending()[0] == 0;
  if (d.min() < 1) return false;
  return d.sum() == 2 * static_cast<Degree>(d.size() - 1);
}

struct ErdosGallaiViolation {
  std::size_t k = 0;  // 0 means the degree sum is odd
  Degree lhs = 0;
  Degree rhs = 0;
};

// First failing prefix of the Erdős–Gallai inequalities, taken over the
// non-increasing arrangement:  sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i).
inline std::optional<ErdosGallaiViolation> erdos_gallai_violation(const DegreeSequence& d) {
  const auto seq = d.sorted(Orientation::NonIncreasing);
  const Degree total = d.sum();
  if (total % 2 != 0) return ErdosGallaiViolation{0, total, total - 1};
  Degree prefix = 0;
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    prefix += seq[k - 1];
    const auto kk = static_cast<Degree>(k);
    Degree rhs = kk * (kk - 1);
    for (std::size_t i = k; i < seq.size(); ++i) rhs += std::min(kk, seq[i]);
    if (prefix > rhs) return ErdosGallaiViolation{k, prefix, rhs};
  }
  return std::nullopt;
}

inline bool erdos_gallai_check(const DegreeSequence& d) { return !erdos_gallai_violation(d); }

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline BigInt ipow(BigInt base, unsigned exp) {
  BigInt result = 1;
  while (exp) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

// floor(x^(1/p)) for x >= 0
inline BigInt iroot(const BigInt& x, unsigned p) {
  if (x < 2 || p == 1) return x;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (static_cast<unsigned>(boost::multiprecision::msb(x)) / p + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) >> 1;
    if (ipow(mid, p) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace detail

struct PowerMeanOutcome {
  bool holds = false;
  bool exact = false;  // decided without interval refinement
  // Both sides raised to the p-th power: lhs = sum d_i^p, and the bound
  // (n-1)^(p-1) * (sum d_i^(1/p))^p rendered as text (exact or bracketed).
  std::string lhs_pow;
  std::string rhs_pow;
};

// Decides (sum d_i^p)^(1/p) <= (n-1)^(1-1/p) * sum d_i^(1/p) exactly.
// Raising to the p-th power gives  S <= (n-1)^(p-1) * T^p  with S an integer
// and T a sum of p-th roots. Each root is split as a * b^(1/p) with b free of
// p-th powers; if only one radicand b survives, T^p = A^p * b is an integer and
// the comparison is exact. Otherwise T^p is irrational and bracketing T with
// dyadic bounds of growing precision terminates.
inline PowerMeanOutcome power_mean_inequality(const DegreeSequence& d, unsigned p) {
  if (p < 1) throw Error(ErrorCode::DomainError, "p must be >= 1");
  const auto n = static_cast<Degree>(d.size());
  for (auto di : d.ascending()) {
    if (di > n - 1) {
      throw Error(ErrorCode::DomainError,
                  "degree " + std::to_string(di) + " exceeds n-1=" + std::to_string(n - 1));
    }
  }
  BigInt lhs = 0;
  for (auto di : d.ascending()) lhs += detail::ipow(BigInt(di), p);
  const BigInt scale = detail::ipow(BigInt(n > 1 ? n - 1 : 0), p - 1);

  // radicand b -> summed coefficient A
  std::map<Degree, Degree> groups;
  for (auto di : d.ascending()) {
    if (di == 0) continue;
    Degree a = 1;
    Degree b = di;
    for (Degree q = 2; detail::ipow(BigInt(q), p) <= b; ++q) {
      const auto qp = static_cast<Degree>(detail::ipow(BigInt(q), p));
      while (b % qp == 0) {
        b /= qp;
        a *= q;
      }
    }
    groups[b] += a;
  }

  PowerMeanOutcome out;
  out.lhs_pow = lhs.str();
  if (groups.size() <= 1) {
    BigInt rhs = 0;
    if (!groups.empty()) {
      rhs = scale * detail::ipow(BigInt(groups.begin()->second), p) * groups.begin()->first;
    }
    out.exact = true;
    out.holds = lhs <= rhs;
    out.rhs_pow = rhs.str();
    return out;
  }

  for (unsigned bits = 16; bits <= 4096; bits *= 2) {
    BigInt t_lo = 0, t_hi = 0;
    for (const auto& [b, a] : groups) {
      BigInt r = detail::iroot(BigInt(b) << (bits * p), p);
      t_lo += a * r;
      t_hi += a * (r + 1);
    }
    const BigInt lhs_scaled = lhs << (bits * p);
    const BigInt rhs_lo = scale * detail::ipow(t_lo, p);
    const BigInt rhs_hi = scale * detail::ipow(t_hi, p);
    if (lhs_scaled <= rhs_lo || lhs_scaled > rhs_hi) {
      out.holds = lhs_scaled <= rhs_lo;
      const BigInt lo_int = rhs_lo >> (bits * p);
      const BigInt hi_int = (rhs_hi >> (bits * p)) + 1;
      out.rhs_pow = "[" + lo_int.str() + ", " + hi_int.str() + "]";
      return out;
    }
  }
  throw Error(ErrorCode::DomainError, "power mean comparison did not separate");
}

inline bool power_mean_inequality_check(const DegreeSequence& d, unsigned p) {
  return power_mean_inequality(d, p).holds;
}

// All tree degree sequences of order n, ascending tuples in lexicographic
// order. Order 1 yields the single sequence (0).
inline std::vector<DegreeSequence> all_tree_sequences(std::size_t n,
                                                      std::size_t cap = kDefaultEnumerationCap) {
  if (n == 0) throw Error(ErrorCode::DomainError, "order must be >= 1");
  if (n > cap || cap > kHardEnumerationCap) {
    throw Error(ErrorCode::CapExceeded,
                "order " + std::to_string(n) + " with cap " + std::to_string(cap));
  }
  std::vector<DegreeSequence> out;
  if (n == 1) {
    out.emplace_back(std::vector<Degree>{0});
    return out;
  }
  const auto nn = static_cast<Degree>(n);
  std::vector<Degree> current;
  // non-decreasing parts in [lo, n-1], exactly n parts, summing to 2(n-1)
  auto rec = [&](auto&& self, Degree lo, Degree remaining, std::size_t slots) -> void {
    if (slots == 0) {
      if (remaining == 0) out.emplace_back(current);
      return;
    }
    const auto s = static_cast<Degree>(slots);
    for (Degree v = lo; v <= nn - 1 && v * s <= remaining; ++v) {
      if (remaining - v > (nn - 1) * (s - 1)) continue;
      current.push_back(v);
      self(self, v, remaining - v, slots - 1);
      current.pop_back();
    }
  };
  rec(rec, 1, 2 * (nn - 1), n);
  return out;
}

}  // namespace irrtree
