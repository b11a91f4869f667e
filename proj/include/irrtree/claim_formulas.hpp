#pragma once

// Closed forms as printed, one function per displayed expression. All take
// the sequence in the order the statement presents it and index it from 1.
// Sums whose upper limit runs past the sequence (d_{n+1}, d_{i+2} with
// i = n - 1, ...) are clamped to the last valid index; callers record that.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <vector>

#include "irrtree/graph.hpp"

namespace irrtree::formula {

using Int = std::int64_t;

// 1-based view; out-of-range access throws.
class Seq {
 public:
  explicit Seq(const std::vector<Degree>& v) : v_(v) {}
  Int operator()(std::size_t i) const { return v_.at(i - 1); }
  std::size_t n() const { return v_.size(); }

 private:
  const std::vector<Degree>& v_;
};

inline Int sq(Int x) { return x * x; }
inline Int cube(Int x) { return x * x * x; }

// sum_{i=lo}^{hi} f(i), hi clamped so that every d index touched is <= n.
template <typename F>
Int clamped_sum(std::size_t lo, std::size_t hi, std::size_t reach, std::size_t n, F&& f) {
  Int s = 0;
  for (std::size_t i = lo; i <= hi && i + reach <= n; ++i) s += f(i);
  return s;
}

// --- families ---------------------------------------------------------------

inline Int star_irr(Int n) { return (n - 2) * (n - 1); }
inline Int tree_sigma_max(Int n) { return (n - 1) * (n - 2); }
inline Int kmn_sigma(Int m, Int n) { return (m * n) * sq(n - m); }
inline Int double_star_sigma(Int k, Int r) {
  return cube(k - 1) + sq(k) + cube(r - 1) + sq(r) - 2 * k * r;
}
inline Int caterpillar_sigma_n2(Int m) { return 2 * cube(m); }
inline Int caterpillar_sigma_general(Int m) { return 2 * cube(m) + m - 2; }

// (d_n - 1)^2 + (d_1 - 1)^2 + sum_{i=2}^{n-1} (d_i - 1)(d_i - 2) + sum_{i=1}^{n-1} |d_i - d_{i+1}|
inline Int caterpillar_irr(const std::vector<Degree>& v) {
  Seq d(v);
  const auto n = d.n();
  Int s = sq(d(n) - 1) + sq(d(1) - 1);
  for (std::size_t i = 2; i + 1 <= n; ++i) s += (d(i) - 1) * (d(i) - 2);
  for (std::size_t i = 1; i + 1 <= n; ++i) s += std::abs(d(i) - d(i + 1));
  return s;
}

// --- three-spine irr (d_1 >= d_2 >= d_3) ---------------------------------------

inline Int three_spine_irr_max(const std::vector<Degree>& v) {
  Seq d(v);
  return sq(d(1) - 1) + sq(d(2) - 1) + (d(3) - 1) * (d(3) - 2) * (d(1) - d(3)) * (d(2) - d(3));
}

inline Int three_spine_irr_min(const std::vector<Degree>& v) {
  Seq d(v);
  return sq(d(1) - 1) + sq(d(3) - 1) + (d(2) - 1) * (d(2) - 2) + (d(1) - d(3));
}

// --- order four, Zagreb form (d_1 >= ... >= d_4) -------------------------------

// Integer part of M1^2 - 2 sqrt(M1) + sum_{i=1}^4 |x_i - x_{i+1}| - (d_2 + d_3) - 1,
// i.e. everything except the -2 sqrt(M1) term.
inline Int zagreb_four_rational_part(Int m1, const std::vector<Degree>& x,
                                     const std::vector<Degree>& v) {
  Seq d(v), xs(x);
  Int s = sq(m1);
  s += clamped_sum(1, 4, 1, xs.n(), [&](std::size_t i) { return std::abs(xs(i) - xs(i + 1)); });
  return s - (d(2) + d(3)) - 1;
}

inline Int sum_sq_minus_one(const std::vector<Degree>& v) {
  Int s = 0;
  for (auto x : v) s += sq(x - 1);
  return s;
}

inline Int zagreb_four_max(const std::vector<Degree>& v) {
  Seq d(v);
  return sum_sq_minus_one(v) + d(1) + d(2) - d(3) - 3 * d(4) + 2;
}

inline Int zagreb_four_min(const std::vector<Degree>& v) {
  Seq d(v);
  return sum_sq_minus_one(v) + d(1) - d(2) - d(3) - d(4) + 2;
}

// --- non-decreasing order four (d_1 <= ... <= d_4) -----------------------------

inline Int alb4_max(const std::vector<Degree>& v) {
  Seq d(v);
  Int s = sq(d(1)) + sq(d(2));
  s += clamped_sum(1, 3, 2, 4, [&](std::size_t i) { return std::abs(d(i) - d(i + 2)); });
  return s + sq(d(3)) + sq(d(4)) + d(3) + d(4) - 6;
}

inline Int alb4_min(const std::vector<Degree>& v) {
  Seq d(v);
  Int s = sq(d(3)) + sq(d(4));
  s += clamped_sum(1, 2, 2, 4, [&](std::size_t i) { return std::abs(d(i) - d(i + 2)); });
  return s + std::abs(d(1) - d(2)) + sq(d(1)) + sq(d(2)) + d(1) + d(2) - 6;
}

// --- non-increasing orders five and six --------------------------------------

// sum_{i=1}^{n} (d_i - 1)(d_i - 2) + sum_{i=1}^{n} |d_i - d_{i+1}| + (d_1 - 1)^2 + (d_n - 1)^2
inline Int five_six_irr(const std::vector<Degree>& v) {
  Seq d(v);
  const auto n = d.n();
  Int s = 0;
  for (std::size_t i = 1; i <= n; ++i) s += (d(i) - 1) * (d(i) - 2);
  s += clamped_sum(1, n, 1, n, [&](std::size_t i) { return std::abs(d(i) - d(i + 1)); });
  return s + sq(d(1) - 1) + sq(d(n) - 1);
}

// --- non-decreasing order five --------------------------------------------------

inline Int alb5_shift(const std::vector<Degree>& v, std::initializer_list<std::size_t> idx) {
  Seq d(v);
  Int s = 0;
  for (auto i : idx) s += (d(i) + 2) * (d(i) - 1);
  return s;
}

// d_1^2 + d_n^2 + sum_{i=2}^{n-1} |d_i - d_{i+1}| + sum_{i=2}^{4} (d_i + 2)(d_i - 1) - 2
inline Int alb5_statement(const std::vector<Degree>& v) {
  Seq d(v);
  const auto n = d.n();
  Int s = sq(d(1)) + sq(d(n));
  for (std::size_t i = 2; i + 1 <= n; ++i) s += std::abs(d(i) - d(i + 1));
  return s + alb5_shift(v, {2, 3, 4}) - 2;
}

inline Int alb5_proof_max(const std::vector<Degree>& v) {
  Seq d(v);
  return sq(d(3)) + sq(d(5)) - 2 * d(1) - 2 * d(2) + d(3) + 2 * d(4) + d(5) +
         alb5_shift(v, {1, 2, 4}) - 2;
}

inline Int alb5_proof_min(const std::vector<Degree>& v) {
  Seq d(v);
  return sq(d(2)) + sq(d(4)) + 2 * d(5) + 2 * d(3) - 2 * d(1) - d(2) - d(4) +
         alb5_shift(v, {1, 3, 5}) - 2;
}

// --- non-decreasing order six ---------------------------------------------------

inline Int alb6_max(const std::vector<Degree>& v) {
  Seq d(v);
  Int s = sq(d(1)) + sq(d(6));
  s += clamped_sum(1, 6, 1, 6, [&](std::size_t i) { return std::abs(d(i) - d(i + 1)); });
  return s + alb5_shift(v, {2, 3, 4, 5}) - 2;
}

inline Int alb6_min(const std::vector<Degree>& v) {
  Seq d(v);
  Int s = sq(d(1)) + sq(d(2));
  s += clamped_sum(1, 6, 1, 6, [&](std::size_t i) { return std::abs(d(i) - d(i + 1)); });
  return s + alb5_shift(v, {3, 4, 5, 6}) - 2;
}

// --- general non-decreasing irr -----------------------------------------------

// d_1^2 + d_n^2 + sum_{i=2}^{n-1} d_i^2 + sum_{i=2}^{n-1} d_i + d_n - d_1 + constant(n)
inline Int main_irr(const std::vector<Degree>& v, Int n_coeff, Int constant) {
  Seq d(v);
  const auto n = d.n();
  Int s = sq(d(1)) + sq(d(n));
  for (std::size_t i = 2; i + 1 <= n; ++i) s += sq(d(i)) + d(i);
  return s + d(n) - d(1) + n_coeff * static_cast<Int>(n) + constant;
}

inline Int main_irr_statement(const std::vector<Degree>& v) { return main_irr(v, -2, -2); }
inline Int main_irr_proof(const std::vector<Degree>& v) { return main_irr(v, -2, 2); }

// --- sigma, non-decreasing orders three and four --------------------------------

inline Int plus_one_term(const std::vector<Degree>& v, std::initializer_list<std::size_t> idx) {
  Seq d(v);
  Int s = 0;
  for (auto i : idx) s += (d(i) + 1) * sq(d(i) - 1);
  return s;
}

inline Int plus_two_term(const std::vector<Degree>& v, std::initializer_list<std::size_t> idx) {
  Seq d(v);
  Int s = 0;
  for (auto i : idx) s += (d(i) + 2) * sq(d(i) - 1);
  return s;
}

inline Int sigma3_max(const std::vector<Degree>& v) {
  Seq d(v);
  return plus_one_term(v, {2, 3}) + sq(d(3) - d(1)) + sq(d(1) - d(2));
}

inline Int sigma3_min(const std::vector<Degree>& v) {
  Seq d(v);
  return plus_one_term(v, {1, 3}) + sq(d(1) - d(3)) + sq(d(3) - d(2));
}

inline Int skip_two_squares(const std::vector<Degree>& v) {
  Seq d(v);
  return clamped_sum(1, 4, 2, d.n(), [&](std::size_t i) { return sq(d(i) - d(i + 2)); });
}

inline Int sigma4_max(const std::vector<Degree>& v) {
  Seq d(v);
  return plus_one_term(v, {2, 3}) + plus_two_term(v, {1, 4}) + skip_two_squares(v) +
         sq(d(4) - d(1));
}

inline Int sigma4_min(const std::vector<Degree>& v) {
  return plus_one_term(v, {1, 4}) + skip_two_squares(v) + plus_two_term(v, {2, 3});
}

// --- sigma, non-decreasing order five ---------------------------------------------

inline Int sigma5_statement(const std::vector<Degree>& v) {
  Seq d(v);
  Int s = 0;
  for (std::size_t i = 1; i <= 3; ++i) s += d(i) * sq(d(i + 1));
  s += cube(d(1) - 1) + cube(d(4));
  for (std::size_t i = 1; i <= 4; ++i) s += sq(d(i) - d(i + 1));
  return s;
}

inline constexpr std::size_t kSigma5Cases = 10;

// Spine orderings of the ten cases, as positions into (d_1, ..., d_5).
inline const std::array<std::array<std::size_t, 5>, kSigma5Cases>& sigma5_case_orderings() {
  static const std::array<std::array<std::size_t, 5>, kSigma5Cases> orderings{{
      {1, 2, 3, 4, 5},
      {1, 2, 3, 5, 4},
      {1, 2, 5, 3, 4},
      {1, 5, 2, 3, 4},
      {1, 3, 4, 5, 2},
      {5, 1, 2, 3, 4},
      {5, 1, 4, 2, 3},
      {1, 5, 2, 4, 3},
      {5, 4, 1, 3, 2},
      {5, 2, 4, 1, 3},
  }};
  return orderings;
}

// Simplified right-hand side of each case.
inline Int sigma5_case(std::size_t c, const std::vector<Degree>& v) {
  Seq d(v);
  const Int d1 = d(1), d2 = d(2), d3 = d(3), d4 = d(4);
  switch (c) {
    case 1: return 3 * cube(d1) - 2 * sq(d1) + 4 * d1 + d2 * sq(d3) + cube(d4) + 3;
    case 2: return 2 * cube(d1) - 4 * sq(d1) + 3 * d1 + d1 * sq(d2) + d3 * sq(d4) + cube(d2) + 3;
    case 3: return 2 * cube(d1) - 4 * sq(d1) + 3 * d1 + d1 * sq(d2) + d3 * sq(d4) + cube(d3) + 14;
    case 4: return 2 * cube(d1) - 4 * sq(d1) + 3 * d1 + d1 * sq(d2) + d3 * sq(d4) + cube(d3) + 19;
    case 5: return 3 * cube(d1) - sq(d1) + 4 * d1 + d2 * sq(d3) + d3 * sq(d4) + 14;
    case 6: return 2 * cube(d1) - 5 * sq(d1) + 5 * d1 + d1 * sq(d2) + sq(d3) + cube(d4) + 10;
    case 7: return 2 * cube(d1) - 5 * sq(d1) + 5 * d1 + d2 * sq(d3) + cube(d2) + cube(d4) + 21;
    case 8: return 2 * cube(d1) - 4 * sq(d1) + 3 * d1 + d2 * sq(d3) + d3 * sq(d4) + cube(d2) + 22;
    case 9: return 2 * cube(d1) - 4 * sq(d1) + 5 * d1 + d1 * sq(d2) + d2 * sq(d3) + cube(d4) + 8;
    case 10: return 2 * cube(d1) - 5 * sq(d1) + 5 * d1 + d2 * sq(d3) + cube(d2) + cube(d4) + 24;
    default: return 0;
  }
}

inline Int sigma5_proof_max(const std::vector<Degree>& v) {
  Seq d(v);
  const Int d1 = d(1), d2 = d(2), d3 = d(3), d4 = d(4);
  return cube(d1) + 2 * sq(d1) + d1 + d2 * sq(d3) - d1 * sq(d2) + cube(d4) - d3 * sq(d4) - cube(d2);
}

inline Int sigma5_proof_min(const std::vector<Degree>& v) {
  Seq d(v);
  const Int d1 = d(1), d3 = d(3), d4 = d(4);
  return -sq(d1) + 2 * d1 - d3 * sq(d4) + cube(d4) - 1;
}

// --- sigma, non-decreasing order six ----------------------------------------------

inline Int sigma6_statement(const std::vector<Degree>& v) {
  Seq d(v);
  const auto n = d.n();
  Int s = 0;
  for (std::size_t i = 1; i + 2 <= n; ++i) s += d(i) * sq(d(i + 1));
  return s + cube(d(1) - 1) + cube(d(6) - 1);
}

// --- sigma, non-increasing general order -------------------------------------------

inline Int sigma_general(const std::vector<Degree>& v) {
  Seq d(v);
  const auto n = d.n();
  Int s = cube(d(n) - 1) + cube(d(1) - 1);
  s += clamped_sum(1, n, 1, n, [&](std::size_t i) { return sq(d(i) - d(i + 1)); });
  for (std::size_t i = 2; i + 1 <= n; ++i) s += sq(d(i) - 1) * (d(i) - 2);
  return s;
}

}  // namespace irrtree::formula
