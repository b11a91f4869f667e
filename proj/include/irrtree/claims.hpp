#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "irrtree/claim_formulas.hpp"
#include "irrtree/claim_types.hpp"
#include "irrtree/enumerate.hpp"
#include "irrtree/extremal.hpp"
#include "irrtree/families.hpp"

namespace irrtree {

namespace claim_detail {

using formula::Int;
using SeqFormula = Int (*)(const std::vector<Degree>&);
using CustomEval =
    std::function<void(ClaimVerdict&, const ClaimInstance&, const SuiteOptions&)>;

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

inline std::string join(const std::vector<Degree>& v, char sep = '-') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

inline Int as_int(const IndexValue& v) {
  if (v.denominator() != 1) throw Error(ErrorCode::DomainError, "value is not an integer");
  return v.numerator();
}

inline Int isqrt(Int x) {
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// rational + coef * sqrt(radicand), collapsed to an integer when exact.
inline std::string surd(Int rational, Int coef, Int radicand) {
  const Int r = isqrt(radicand);
  if (r * r == radicand) return std::to_string(rational + coef * r);
  std::string out = rational ? std::to_string(rational) : "";
  if (coef >= 0 && !out.empty()) out += '+';
  return out + std::to_string(coef) + "*sqrt(" + std::to_string(radicand) + ")";
}

inline bool follows(const std::vector<Degree>& d, Orientation o) {
  return o == Orientation::NonDecreasing ? std::is_sorted(d.begin(), d.end())
                                         : std::is_sorted(d.rbegin(), d.rend());
}

inline EnumerationOptions enum_opts(const SuiteOptions& o) { return {o.cap, 1}; }

inline ClaimVerdict open_verdict(const Claim& c, const ClaimInstance& inst) {
  ClaimVerdict v;
  v.claim_id = c.id;
  v.instance = inst;
  v.oracle = std::string(to_string(c.oracle));
  return v;
}

inline ClaimVerdict& not_applicable(ClaimVerdict& v, std::string why) {
  v.verdict = Verdict::NotApplicable;
  v.note = std::move(why);
  v.witness.reset();
  return v;
}

inline void observe(ClaimVerdict& v, IndexKind kind, const IndexValue& value, const SimpleGraph& g) {
  v.actual = format_value(value);
  v.actual_value = value;
  v.actual_kind = kind;
  v.witness = g;
}

inline void decide(ClaimVerdict& v, bool ok) {
  v.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (ok) {
    v.witness.reset();
    v.witness_canonical.clear();
  } else if (v.witness && is_tree(*v.witness)) {
    v.witness_canonical = canonical_form(*v.witness).bytes;
  }
}

// --- shared oracles -------------------------------------------------------------

inline void equals_on_graph(ClaimVerdict& v, Int expected, const SimpleGraph& g, IndexKind kind) {
  v.expected = std::to_string(expected);
  observe(v, kind, compute_index(g, kind), g);
  decide(v, v.actual_value == IndexValue(expected));
}

inline void equals_on_spine(ClaimVerdict& v, Int expected, const std::vector<Degree>& spine,
                            IndexKind kind) {
  if (!CaterpillarSpec{spine}.valid()) {
    not_applicable(v, "spine " + join(spine) + " has an interior degree below 2");
    return;
  }
  v.oracle = std::string(to_string(OracleKind::DirectIndex));
  equals_on_graph(v, expected, build_caterpillar(CaterpillarSpec{spine}), kind);
}

inline void extreme_against(ClaimVerdict& v, Int expected, const ExtremalResult& r, bool want_max) {
  const auto& value = want_max ? r.max_value : r.min_value;
  const auto& w = (want_max ? r.max_witnesses : r.min_witnesses).front();
  v.expected = std::to_string(expected);
  observe(v, r.kind, value, w.tree);
  decide(v, value == IndexValue(expected));
}

// Every tree realizing the sequence must take the printed value.
inline void equals_over_trees(ClaimVerdict& v, Int expected, const std::vector<Degree>& degrees,
                              IndexKind kind, const SuiteOptions& o) {
  v.oracle = std::string(to_string(OracleKind::ExtremalOverTrees));
  const auto r = extremal_index(DegreeSequence(degrees), kind, enum_opts(o));
  const IndexValue e(expected);
  const bool low = r.min_value != e;
  v.expected = std::to_string(expected);
  observe(v, kind, low ? r.min_value : r.max_value,
          (low ? r.min_witnesses : r.max_witnesses).front().tree);
  if (r.min_value != r.max_value) {
    v.note = std::to_string(r.count_iso) + " trees with values in [" + format_value(r.min_value) +
             ", " + format_value(r.max_value) + "]";
  }
  decide(v, r.min_value == e && r.max_value == e);
}

inline void extreme_over_trees(ClaimVerdict& v, Int expected, const std::vector<Degree>& degrees,
                               IndexKind kind, bool want_max, const SuiteOptions& o) {
  v.oracle = std::string(to_string(OracleKind::ExtremalOverTrees));
  const auto r = extremal_index(DegreeSequence(degrees), kind, enum_opts(o));
  extreme_against(v, expected, r, want_max);
  v.note = "over " + std::to_string(r.count_iso) + " trees";
}

inline void extreme_over_spines(ClaimVerdict& v, Int expected, const std::vector<Degree>& multiset,
                                IndexKind kind, bool want_max) {
  SpineExtremalResult r;
  try {
    r = spine_permutation_extremal(DegreeSequence(multiset), kind);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoValidSpec) throw;
    not_applicable(v, "no ordering of " + join(multiset) + " is a valid spine");
    return;
  }
  v.oracle = std::string(to_string(OracleKind::ExtremalOverSpinePermutations));
  extreme_against(v, expected, r.extremal, want_max);
  v.note = "attained by ordering " + join(want_max ? r.argmax.front() : r.argmin.front()) +
           " of " + std::to_string(r.valid_orderings) + " valid orderings";
}

// --- instance grids ----------------------------------------------------------------

// Ascending multisets of length len over [1, max_value].
inline std::vector<std::vector<Degree>> spine_multisets(std::size_t len, Degree max_value,
                                                        bool distinct = false) {
  std::vector<std::vector<Degree>> out;
  std::vector<Degree> cur;
  auto rec = [&](auto&& self, Degree lo) -> void {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (Degree x = lo; x <= max_value; ++x) {
      cur.push_back(x);
      self(self, distinct ? x + 1 : x);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline std::pair<std::size_t, std::size_t> order_window(const SuiteOptions& o, std::size_t lo,
                                                        std::size_t hi = kUnbounded) {
  return {std::max(lo, o.n_min), std::min(hi, o.n_max)};
}

// One instance per tree (up to isomorphism) of each order in the window.
inline std::vector<ClaimInstance> tree_instances(const SuiteOptions& o, std::size_t lo,
                                                 std::size_t hi,
                                                 const std::vector<std::string>& forms) {
  std::vector<ClaimInstance> out;
  const auto [a, b] = order_window(o, lo, hi);
  for (std::size_t n = a; n <= b; ++n) {
    for (const auto& d : all_tree_sequences(n, o.cap)) {
      for (const auto& cls : iso_classes(d, enum_opts(o))) {
        for (const auto& f : forms) {
          out.push_back({f, Interpretation::Graph, {{"n", static_cast<std::int64_t>(n)}},
                         d.presented(), cls.tree});
        }
      }
    }
  }
  return out;
}

// --- sequence claims ----------------------------------------------------------------

struct SequenceForm {
  SequenceForm(std::string n, ClaimMode m, IndexKind k, SeqFormula f, std::string expr,
               std::size_t len = 0)
      : name(std::move(n)), mode(m), kind(k), expected(f), expression(std::move(expr)), length(len) {}

  std::string name;
  ClaimMode mode;
  IndexKind kind;
  SeqFormula expected = nullptr;
  std::string expression;
  std::size_t length = 0;  // 0: any length the claim admits
  bool spine = true;
  bool tree = true;
  CustomEval custom;
};

struct SequenceClaim {
  Orientation orientation;
  std::size_t min_length;
  std::size_t max_length;
  std::vector<SequenceForm> forms;
};

inline ClaimVerdict evaluate_sequence(const SequenceClaim& s, const Claim& c,
                                      const ClaimInstance& inst, const SuiteOptions& o) {
  auto v = open_verdict(c, inst);
  const auto it = std::find_if(s.forms.begin(), s.forms.end(),
                               [&](const SequenceForm& f) { return f.name == inst.form; });
  if (it == s.forms.end()) return not_applicable(v, "unknown form '" + inst.form + "'");
  const auto& f = *it;
  const auto& d = inst.degrees;
  const auto n = d.size();
  if (n < s.min_length || n > s.max_length || (f.length && n != f.length)) {
    return not_applicable(v, "length " + std::to_string(n) + " outside the statement");
  }
  if (!follows(d, s.orientation)) return not_applicable(v, "sequence not in the stated order");
  if (inst.interpretation == Interpretation::Spine) {
    if (!f.spine) return not_applicable(v, "form not stated for caterpillar spines");
    if (std::any_of(d.begin(), d.end(), [](Degree x) { return x < 1; })) {
      return not_applicable(v, "spine degrees must be positive");
    }
  } else if (inst.interpretation == Interpretation::Tree) {
    if (!f.tree) return not_applicable(v, "form not stated for full tree sequences");
    if (!is_tree_realizable(DegreeSequence(d))) {
      return not_applicable(v, "not the degree sequence of a tree");
    }
  } else {
    return not_applicable(v, "expects a spine or a tree degree sequence");
  }
  if (f.custom) {
    f.custom(v, inst, o);
    return v;
  }
  const Int e = f.expected(d);
  const bool spine = inst.interpretation == Interpretation::Spine;
  switch (f.mode) {
    case ClaimMode::Equals:
      if (spine)
        equals_on_spine(v, e, d, f.kind);
      else
        equals_over_trees(v, e, d, f.kind, o);
      break;
    case ClaimMode::EqualsMax:
    case ClaimMode::EqualsMin: {
      const bool want_max = f.mode == ClaimMode::EqualsMax;
      if (spine)
        extreme_over_spines(v, e, d, f.kind, want_max);
      else
        extreme_over_trees(v, e, d, f.kind, want_max, o);
      break;
    }
    default:
      throw Error(ErrorCode::DomainError, "unsupported mode for a sequence form");
  }
  return v;
}

inline std::vector<ClaimInstance> sequence_instances(const SequenceClaim& s,
                                                     const SuiteOptions& o) {
  std::vector<ClaimInstance> out;
  const auto [a, b] = order_window(o, s.min_length, s.max_length);
  for (std::size_t len = a; len <= b; ++len) {
    const auto fits = [&](const SequenceForm& f) { return f.length == 0 || f.length == len; };
    const auto n = static_cast<std::int64_t>(len);
    if (len <= o.spine_max_len) {
      for (const auto& m : spine_multisets(len, o.spine_max_deg)) {
        const auto presented = DegreeSequence(m, s.orientation).presented();
        for (const auto& f : s.forms)
          if (f.spine && fits(f)) out.push_back({f.name, Interpretation::Spine, {{"k", n}}, presented, std::nullopt});
      }
    }
    if (len <= o.cap) {
      for (const auto& d : all_tree_sequences(len, o.cap)) {
        const auto presented = d.with_orientation(s.orientation).presented();
        for (const auto& f : s.forms)
          if (f.tree && fits(f)) out.push_back({f.name, Interpretation::Tree, {{"n", n}}, presented, std::nullopt});
      }
    }
  }
  return out;
}

inline void attach(Claim& c, SequenceClaim s) {
  for (const auto& f : s.forms) c.forms.push_back({f.name, f.mode, f.expression});
  auto shared = std::make_shared<const SequenceClaim>(std::move(s));
  c.evaluate = [shared](const Claim& cl, const ClaimInstance& inst, const SuiteOptions& o) {
    return evaluate_sequence(*shared, cl, inst, o);
  };
  c.instances = [shared](const SuiteOptions& o) { return sequence_instances(*shared, o); };
}

// --- claim-specific evaluators --------------------------------------------------------

inline ClaimVerdict eval_star(const Claim& c, const ClaimInstance& inst, const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  const auto n = inst.param("n");
  if (n < 2) return not_applicable(v, "star needs n >= 2");
  equals_on_graph(v, formula::star_irr(n), build_star(static_cast<std::size_t>(n)), IndexKind::Irr);
  return v;
}

inline ClaimVerdict eval_tree_sigma_extremes(const Claim& c, const ClaimInstance& inst,
                                             const SuiteOptions& o) {
  auto v = open_verdict(c, inst);
  const auto n = inst.param("n");
  const bool max_form = inst.form == "max";
  if (max_form ? n < 3 : n != 2) return not_applicable(v, "order outside the branch");
  const auto r = extremal_over_order(static_cast<std::size_t>(n), IndexKind::Sigma, enum_opts(o));
  extreme_against(v, max_form ? formula::tree_sigma_max(n) : 0, r, max_form);
  v.note = "over all " + std::to_string(r.count_iso) + " trees of order " + std::to_string(n);
  return v;
}

inline ClaimVerdict eval_kmn(const Claim& c, const ClaimInstance& inst, const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  const auto m = inst.param("m");
  const auto n = inst.param("n");
  if (m < 1 || n < 1) return not_applicable(v, "parts must be non-empty");
  equals_on_graph(v, formula::kmn_sigma(m, n),
                  build_complete_bipartite(static_cast<std::size_t>(m), static_cast<std::size_t>(n)),
                  IndexKind::Sigma);
  return v;
}

inline ClaimVerdict eval_double_star(const Claim& c, const ClaimInstance& inst,
                                     const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  const auto k = inst.param("k");
  const auto r = inst.param("r");
  if (k < 1 || r < 1) return not_applicable(v, "center degrees must be >= 1");
  equals_on_graph(v, formula::double_star_sigma(k, r), build_double_star(k, r), IndexKind::Sigma);
  return v;
}

inline ClaimVerdict eval_sigma_identity(const Claim& c, const ClaimInstance& inst,
                                        const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  if (!inst.graph) return not_applicable(v, "needs a graph");
  const auto& g = *inst.graph;
  const auto sigma = compute_index(g, IndexKind::Sigma);
  if (inst.form == "identity") {
    const Int f = as_int(compute_index(g, IndexKind::Forgotten));
    const Int m2 = as_int(compute_index(g, IndexKind::M2));
    equals_on_graph(v, f - 2 * m2, g, IndexKind::Sigma);
  } else if (inst.form == "parity") {
    v.expected = "even";
    observe(v, IndexKind::Sigma, sigma, g);
    decide(v, sigma.denominator() == 1 && sigma.numerator() % 2 == 0);
  } else {
    return not_applicable(v, "unknown form '" + inst.form + "'");
  }
  return v;
}

// Every valid ordering of the spine multiset is checked.
inline ClaimVerdict eval_caterpillar_irr(const Claim& c, const ClaimInstance& inst,
                                         const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  auto order = inst.degrees;
  if (order.size() < 2) return not_applicable(v, "spine length must be >= 2");
  if (std::any_of(order.begin(), order.end(), [](Degree x) { return x < 1; })) {
    return not_applicable(v, "spine degrees must be positive");
  }
  std::sort(order.begin(), order.end());
  std::set<Int> expected_values;
  std::set<Int> actual_values;
  std::size_t valid = 0;
  do {
    if (!CaterpillarSpec{order}.valid()) continue;
    ++valid;
    const auto t = build_caterpillar(CaterpillarSpec{order});
    const Int e = formula::caterpillar_irr(order);
    const auto a = compute_index(t, IndexKind::Irr);
    if (a != IndexValue(e)) {
      v.expected = std::to_string(e);
      observe(v, IndexKind::Irr, a, t);
      v.note = "ordering " + join(order);
      decide(v, false);
      return v;
    }
    expected_values.insert(e);
    actual_values.insert(as_int(a));
  } while (std::next_permutation(order.begin(), order.end()));
  if (!valid) return not_applicable(v, "no ordering is a valid spine");
  const auto braces = [](const std::set<Int>& s) {
    std::vector<Degree> items(s.begin(), s.end());
    return "{" + join(items, ',') + "}";
  };
  v.expected = braces(expected_values);
  v.actual = braces(actual_values);
  v.note = std::to_string(valid) + " valid orderings";
  v.verdict = Verdict::Pass;
  return v;
}

inline ClaimVerdict eval_uniform_caterpillar(const Claim& c, const ClaimInstance& inst,
                                             const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  const auto n = inst.param("n");
  const auto m = inst.param("m");
  if (m < 1) return not_applicable(v, "needs m >= 1 pendants");
  Int expected = 0;
  if (inst.form == "n_eq_2") {
    if (n != 2) return not_applicable(v, "branch requires n = 2");
    expected = formula::caterpillar_sigma_n2(m);
  } else if (inst.form == "n_ge_2") {
    if (n < 2) return not_applicable(v, "branch requires n >= 2");
    expected = formula::caterpillar_sigma_general(m);
  } else {
    return not_applicable(v, "unknown form '" + inst.form + "'");
  }
  equals_on_graph(v, expected, build_uniform_caterpillar(static_cast<std::size_t>(n), m),
                  IndexKind::Sigma);
  return v;
}

// The stated ordering against the best ordering of the same spine values.
inline ClaimVerdict eval_ordering(const Claim& c, const ClaimInstance& inst, bool want_max) {
  auto v = open_verdict(c, inst);
  auto values = inst.degrees;
  std::sort(values.begin(), values.end());
  if (values.size() < 3) return not_applicable(v, "needs n >= 3");
  if (values.front() < 1) return not_applicable(v, "spine degrees must be positive");
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    return not_applicable(v, "strict order needs distinct values");
  }
  SpineExtremalResult r;
  try {
    r = spine_permutation_extremal(DegreeSequence(values), IndexKind::Irr);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoValidSpec) throw;
    return not_applicable(v, "no ordering is a valid spine");
  }
  const auto& stated = want_max ? r.zigzag : r.ascending;
  const auto& stated_value = want_max ? r.zigzag_value : r.ascending_value;
  if (!stated_value) {
    return not_applicable(v, "stated ordering " + join(stated) + " has an interior degree below 2");
  }
  v.oracle = std::string(to_string(OracleKind::ExtremalOverSpinePermutations));
  v.expected = format_value(*stated_value);
  const auto& best = want_max ? r.extremal.max_value : r.extremal.min_value;
  const auto& w = (want_max ? r.extremal.max_witnesses : r.extremal.min_witnesses).front();
  observe(v, IndexKind::Irr, best, w.tree);
  v.note = "stated ordering " + join(stated) + ", best ordering " +
           join(want_max ? r.argmax.front() : r.argmin.front());
  decide(v, *stated_value == best);
  return v;
}

inline void zagreb_four_statement(ClaimVerdict& v, const ClaimInstance& inst,
                                  const SuiteOptions& o) {
  const auto& d = inst.degrees;
  const auto check = [&](const SimpleGraph& t, const std::vector<Degree>& x) {
    const Int m1 = as_int(compute_index(t, IndexKind::M1));
    const Int rational = formula::zagreb_four_rational_part(m1, x, d);
    v.expected = surd(rational, -2, m1);
    observe(v, IndexKind::Irr, compute_index(t, IndexKind::Irr), t);
    // irr = rational - 2 sqrt(M1)  <=>  rational - irr >= 0 and (rational - irr)^2 = 4 M1
    const Int gap = rational - as_int(v.actual_value);
    return gap >= 0 && gap * gap == 4 * m1;
  };
  if (inst.interpretation == Interpretation::Spine) {
    if (!CaterpillarSpec{d}.valid()) {
      not_applicable(v, "spine " + join(d) + " has an interior degree below 2");
      return;
    }
    v.oracle = std::string(to_string(OracleKind::DirectIndex));
    decide(v, check(build_caterpillar(CaterpillarSpec{d}), d));
    return;
  }
  v.oracle = std::string(to_string(OracleKind::ExtremalOverTrees));
  for (const auto& cls : iso_classes(DegreeSequence(d), enum_opts(o))) {
    auto x = cls.tree.degrees();
    std::sort(x.rbegin(), x.rend());
    if (!check(cls.tree, x)) {
      decide(v, false);
      return;
    }
  }
  decide(v, true);
}

inline CustomEval sigma5_case_eval(std::size_t c) {
  return [c](ClaimVerdict& v, const ClaimInstance& inst, const SuiteOptions&) {
    const auto& d = inst.degrees;
    std::vector<Degree> spine;
    std::vector<Degree> positions;
    for (auto p : formula::sigma5_case_orderings()[c - 1]) {
      spine.push_back(d[p - 1]);
      positions.push_back(static_cast<Degree>(p));
    }
    equals_on_spine(v, formula::sigma5_case(c, d), spine, IndexKind::Sigma);
    if (v.verdict != Verdict::NotApplicable) v.note = "positions " + join(positions);
  };
}

inline ClaimVerdict eval_order_four_bound(const Claim& c, const ClaimInstance& inst,
                                          const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  if (!inst.graph || !is_tree(*inst.graph) || inst.graph->order() != 4) {
    return not_applicable(v, "needs a tree of order 4");
  }
  const auto& t = *inst.graph;
  const auto deg = t.degrees();
  const Int big = *std::max_element(deg.begin(), deg.end());
  const Int small = *std::min_element(deg.begin(), deg.end());
  const Int m1 = as_int(compute_index(t, IndexKind::M1));
  v.expected = "< " + surd(small, 2, big * m1);
  observe(v, IndexKind::Irr, compute_index(t, IndexKind::Irr), t);
  // irr < 2 sqrt(Delta M1) + delta  <=>  irr - delta < 0 or (irr - delta)^2 < 4 Delta M1
  const Int gap = as_int(v.actual_value) - small;
  decide(v, gap < 0 || gap * gap < 4 * big * m1);
  return v;
}

inline ClaimVerdict eval_degree_lower_bound(const Claim& c, const ClaimInstance& inst,
                                            const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  if (!inst.graph || inst.graph->order() == 0) return not_applicable(v, "needs a graph");
  const auto& g = *inst.graph;
  const auto deg = g.degrees();
  const Int big = *std::max_element(deg.begin(), deg.end());
  const Int small = *std::min_element(deg.begin(), deg.end());
  if (big == small) return not_applicable(v, "regular graph");
  const Int n = static_cast<Int>(g.order());
  const Int numerator = small * formula::sq(big - small) * n;
  v.expected = "> " + format_value(IndexValue(numerator, big + 1));
  observe(v, IndexKind::Irr, compute_index(g, IndexKind::Irr), g);
  decide(v, as_int(v.actual_value) * (big + 1) > numerator);
  return v;
}

inline ClaimVerdict eval_total_irr_bound(const Claim& c, const ClaimInstance& inst,
                                         const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  if (!inst.graph || !is_tree(*inst.graph)) return not_applicable(v, "needs a tree");
  const auto& t = *inst.graph;
  const Int n = static_cast<Int>(t.order());
  const Int irr = as_int(compute_index(t, IndexKind::Irr));
  v.expected = "<= " + format_value(IndexValue(n * n * irr, 4));
  observe(v, IndexKind::IrrTotal, compute_index(t, IndexKind::IrrTotal), t);
  decide(v, 4 * as_int(v.actual_value) <= n * n * irr);
  return v;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline ClaimVerdict eval_power_mean(const Claim& c, const ClaimInstance& inst,
                                    const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  const auto p = inst.param("p");
  const auto& d = inst.degrees;
  if (p < 1) return not_applicable(v, "needs p >= 1");
  if (d.empty()) return not_applicable(v, "empty sequence");
  const auto n = static_cast<Degree>(d.size());
  if (std::any_of(d.begin(), d.end(), [&](Degree x) { return x < 0 || x > n - 1; })) {
    return not_applicable(v, "needs 0 <= d_i <= n-1");
  }
  const auto out = power_mean_inequality(DegreeSequence(d), static_cast<unsigned>(p));
  v.expected = "<= " + out.rhs_pow;
  v.actual = out.lhs_pow;
  v.note = std::string("both sides raised to the power p") + (out.exact ? "" : "; interval bound");
  v.verdict = out.holds ? Verdict::Pass : Verdict::Fail;
  return v;
}

inline ClaimVerdict eval_prefix_inequality(const Claim& c, const ClaimInstance& inst,
                                           const SuiteOptions&) {
  auto v = open_verdict(c, inst);
  const auto& d = inst.degrees;
  if (d.empty()) return not_applicable(v, "empty sequence");
  if (!follows(d, Orientation::NonIncreasing)) return not_applicable(v, "sequence not non-increasing");
  const auto violation = erdos_gallai_violation(DegreeSequence(d));
  if (!violation) {
    v.expected = "prefix bounds k=1.." + std::to_string(d.size());
    v.actual = "all hold";
    v.verdict = Verdict::Pass;
    return v;
  }
  v.expected = "<= " + std::to_string(violation->rhs);
  v.actual = std::to_string(violation->lhs);
  v.note = violation->k ? "prefix k=" + std::to_string(violation->k) : "odd degree sum";
  v.verdict = Verdict::Fail;
  return v;
}

// --- family grids ----------------------------------------------------------------------

inline std::vector<ClaimInstance> star_grid(const SuiteOptions& o) {
  std::vector<ClaimInstance> out;
  const auto [a, b] = order_window(o, 2);
  for (auto n = a; n <= b; ++n)
    out.push_back({"statement", Interpretation::Family, {{"n", static_cast<std::int64_t>(n)}}, {}, std::nullopt});
  return out;
}

inline std::vector<ClaimInstance> tree_order_grid(const SuiteOptions& o) {
  std::vector<ClaimInstance> out;
  const auto [a, b] = order_window(o, 2);
  for (auto n = a; n <= b; ++n) {
    out.push_back({n == 2 ? "min" : "max", Interpretation::Family,
                   {{"n", static_cast<std::int64_t>(n)}}, {}, std::nullopt});
  }
  return out;
}

inline std::vector<ClaimInstance> kmn_grid(const SuiteOptions& o) {
  std::vector<ClaimInstance> out;
  for (std::int64_t n = 1; n <= static_cast<std::int64_t>(o.n_max); ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      const auto order = static_cast<std::size_t>(m + n);
      if (order >= o.n_min && order <= o.n_max)
        out.push_back({"statement", Interpretation::Family, {{"m", m}, {"n", n}}, {}, {}});
    }
  }
  return out;
}

inline std::vector<ClaimInstance> double_star_grid(const SuiteOptions& o) {
  std::vector<ClaimInstance> out;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(o.n_max); ++k) {
    for (std::int64_t r = 1; r <= k; ++r) {
      const auto order = static_cast<std::size_t>(k + r);
      if (order >= o.n_min && order <= o.n_max)
        out.push_back({"statement", Interpretation::Family, {{"k", k}, {"r", r}}, {}, {}});
    }
  }
  return out;
}

inline std::vector<ClaimInstance> uniform_caterpillar_grid(const SuiteOptions& o) {
  std::vector<ClaimInstance> out;
  for (std::int64_t n = 2; n <= static_cast<std::int64_t>(o.n_max); ++n) {
    for (std::int64_t m = 1; n * (m + 1) <= static_cast<std::int64_t>(o.n_max); ++m) {
      if (static_cast<std::size_t>(n * (m + 1)) < o.n_min) continue;
      if (n == 2) out.push_back({"n_eq_2", Interpretation::Family, {{"n", n}, {"m", m}}, {}, {}});
      out.push_back({"n_ge_2", Interpretation::Family, {{"n", n}, {"m", m}}, {}, {}});
    }
  }
  return out;
}

inline std::vector<ClaimInstance> spine_grid(const SuiteOptions& o, std::size_t min_len,
                                             bool distinct) {
  std::vector<ClaimInstance> out;
  const auto [a, b] = order_window(o, min_len, o.spine_max_len);
  for (auto len = a; len <= b; ++len) {
    for (const auto& m : spine_multisets(len, o.spine_max_deg, distinct))
      out.push_back({"statement", Interpretation::Spine, {{"k", static_cast<std::int64_t>(len)}}, m, {}});
  }
  return out;
}

inline std::vector<ClaimInstance> tree_sequence_grid(const SuiteOptions& o, Orientation orient,
                                                     std::size_t min_len) {
  std::vector<ClaimInstance> out;
  const auto [a, b] = order_window(o, min_len);
  for (auto n = a; n <= b; ++n) {
    for (const auto& d : all_tree_sequences(n, o.cap)) {
      out.push_back({"statement", Interpretation::Tree, {{"n", static_cast<std::int64_t>(n)}},
                     d.with_orientation(orient).presented(), {}});
    }
  }
  return out;
}

inline std::vector<ClaimInstance> power_mean_grid(const SuiteOptions& o) {
  std::vector<ClaimInstance> out;
  for (auto base : tree_sequence_grid(o, Orientation::NonIncreasing, 2)) {
    for (std::int64_t p = 1; p <= 5; ++p) {
      auto inst = base;
      inst.params.emplace_back("p", p);
      inst.params.emplace_back("prime", is_prime(p) ? 1 : 0);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

// --- registry --------------------------------------------------------------------------

inline Claim base(std::string id, std::string citation, std::string quote,
                  std::string applicability, OracleKind oracle, std::string notes = {}) {
  Claim c;
  c.id = std::move(id);
  c.citation = std::move(citation);
  c.quote = std::move(quote);
  c.applicability = std::move(applicability);
  c.oracle = oracle;
  c.interpretation_notes = std::move(notes);
  return c;
}

inline Claim out_of_scope(std::string id, std::string citation, std::string quote,
                          std::string reason) {
  Claim c;
  c.id = std::move(id);
  c.citation = std::move(citation);
  c.quote = std::move(quote);
  c.status = ClaimStatus::OutOfScope;
  c.applicability = "none";
  c.out_of_scope_reason = std::move(reason);
  return c;
}

inline SequenceForm max_form(IndexKind kind, SeqFormula f, std::string expr) {
  return {"max", ClaimMode::EqualsMax, kind, f, std::move(expr)};
}
inline SequenceForm min_form(IndexKind kind, SeqFormula f, std::string expr) {
  return {"min", ClaimMode::EqualsMin, kind, f, std::move(expr)};
}

inline const char* const kTwoInterpretations =
    "Evaluated twice: as the spine of a caterpillar in the stated order (spine), and as the full "
    "degree sequence of a tree, where every tree realizing it is checked (tree). ";

inline std::vector<Claim> build_registry() {
  using formula::Int;
  std::vector<Claim> r;
  const auto irr = IndexKind::Irr;
  const auto sigma = IndexKind::Sigma;
  const auto inc = Orientation::NonDecreasing;
  const auto dec = Orientation::NonIncreasing;

  {
    auto c = base("C1", "Lemma lem1",
                  R"q(The star $S_n$  is the only tree of order n that has a great deal of irregularity, satisfying:
\[\operatorname{irr}\left( {{S_n}} \right) = \left( {n - 2} \right)\left( {n - 1} \right).\])q",
                  "stars S_n, n >= 2", OracleKind::DirectIndex);
    c.forms = {{"statement", ClaimMode::Equals, "irr(S_n) = (n-2)(n-1)"}};
    c.evaluate = eval_star;
    c.instances = star_grid;
    r.push_back(std::move(c));
  }
  {
    auto c = base("C2", "Lemma lem2",
                  R"q(Let $\mathcal{T}$ be a classes of trees, then $\sigma_{max}, \sigma_{min}$ in trees with $n$ vertices by:
{\sigma _{\max }(\mathcal{T})} = \left( {n - 1} \right)\left( {n - 2} \right){\rm{        }};n \ge 3\\
{\sigma _{\min }(\mathcal{T})} = 0{\rm{                             ; n = 2}}.)q",
                  "all trees of order n; max branch n >= 3, min branch n = 2",
                  OracleKind::ExtremalOverTrees);
    c.forms = {{"max", ClaimMode::EqualsMax, "max sigma over trees of order n = (n-1)(n-2)"},
               {"min", ClaimMode::EqualsMin, "min sigma over trees of order 2 = 0"}};
    c.evaluate = eval_tree_sigma_extremes;
    c.instances = tree_order_grid;
    r.push_back(std::move(c));
  }
  {
    auto c = base("C3", "Theorem [Sekar]",
                  R"q(Let $ K_{m, n}$ be a complete bipartite graph, then sigma index of  $ K_{m, n}$ given by $\sigma(K_{m, n})=(m n)(n-m)^{2}$.)q",
                  "complete bipartite K_{m,n}, 1 <= m <= n", OracleKind::DirectIndex);
    c.forms = {{"statement", ClaimMode::Equals, "sigma(K_{m,n}) = mn(n-m)^2"}};
    c.evaluate = eval_kmn;
    c.instances = kmn_grid;
    r.push_back(std::move(c));
  }
  {
    auto c = base("C4", "Theorem (double star)",
                  R"q(Let $S_{r, k}$ be a double star graph , the degrees of two adjacent central vertices $u,v$ defined as   $d_{u}=k \geq 3, d_{v}=r \geq 1$. Then the sigma index of $S_{r, k}$ is given by
\sigma\left(S_{r, k}\right)=(k-1)^{3}+k^{2}+(r-1)^{3}+r^{2}-2 k r .)q",
                  "double stars with center degrees 1 <= r <= k", OracleKind::DirectIndex,
                  "Checked on the wider domain k >= 1; the statement asks k >= 3.");
    c.forms = {{"statement", ClaimMode::Equals, "(k-1)^3 + k^2 + (r-1)^3 + r^2 - 2kr"}};
    c.evaluate = eval_double_star;
    c.instances = double_star_grid;
    r.push_back(std::move(c));
  }
  {
    auto c = base("C5", "Theorem sigmathm",
                  R"q(For every simple graph $G$, then Sigma index $\sigma(G)$ is an even integer, so that we have:
\sigma(G)=F(G)-2 M_2(G)=\sum_{uv\in E(G)}\left[\left(d_u\right)^2+\left(d_v\right)^2\right]-2 \sum_{uv \in \in(G)} d_u d_v .)q",
                  "all simple graphs", OracleKind::DirectIndex,
                  "The suite runs it on every tree of each order in range.");
    c.forms = {{"identity", ClaimMode::Equals, "sigma = F - 2 M2"},
               {"parity", ClaimMode::Equals, "sigma is even"}};
    c.evaluate = eval_sigma_identity;
    c.instances = [](const SuiteOptions& o) {
      return tree_instances(o, 1, kUnbounded, {"identity", "parity"});
    };
    r.push_back(std::move(c));
  }
  {
    auto c = base("C6", "Proposition caterpillar",
                  R"q(Let $T$ be a tree, let $C(n,m)$  be a caterpillar tree with path vertices, let $\mathscr{D}=(d_1,\dots,d_n)$ be a degree sequence, then Albertson index among caterpillar tree given by:
\[\operatorname{irr}(T)=\left( {{d_n} - 1} \right)^2 + \left( {d_1 - 1} \right)^2 + \sum\limits_{i = 2}^{n - 1} {\left( {{d_i} - 1} \right)\left( {{d_i} - 2} \right)} +\sum_{i=1}^{n-1}|d_i-d_{i+1}|.\])q",
                  "caterpillars with spine length >= 2", OracleKind::DirectIndex,
                  "One instance per spine multiset; every valid ordering of it is checked. A "
                  "one-vertex spine is excluded: its two end terms would count the same vertex.");
    c.forms = {{"statement", ClaimMode::Equals,
                "(d_n-1)^2 + (d_1-1)^2 + sum_{i=2}^{n-1} (d_i-1)(d_i-2) + sum_{i=1}^{n-1} |d_i-d_{i+1}|"}};
    c.evaluate = eval_caterpillar_irr;
    c.instances = [](const SuiteOptions& o) { return spine_grid(o, 2, false); };
    r.push_back(std::move(c));
  }
  {
    auto c = base("C7", "Proposition (caterpillar sigma)",
                  R"q(Sigma index for caterpillar tree of order $(n,m)$ given by:
2m^3, & \quad \text{if } n=2 \\
2m^3+m-2,  & \quad \text{if } n\geqslant 2. \\
Where $(n,m)$ is mean $n$ vertices, $m$ pendent vertices.)q",
                  "caterpillars with n backbone vertices and m >= 1 pendants on each",
                  OracleKind::DirectIndex,
                  "The two branches overlap at n = 2 and are reported as separate forms.");
    c.forms = {{"n_eq_2", ClaimMode::Equals, "2m^3"}, {"n_ge_2", ClaimMode::Equals, "2m^3 + m - 2"}};
    c.evaluate = eval_uniform_caterpillar;
    c.instances = uniform_caterpillar_grid;
    r.push_back(std::move(c));
  }
  {
    auto c = base("C8", "Theorem hy.1",
                  R"q(Let $\mathscr{D}=(d_1,\dots,d_n)$ be a degree sequence with $n\geq 3$ and  let be order as: $d_n > d_1>\dots > d_2 > d_{n-1}$, the caterpillar tree with such order has the  maximum value  of $\operatorname{irr}$ among all caterpillar trees with such degrees sequence of path vertices.)q",
                  "spines of n >= 3 distinct positive degrees whose stated ordering is valid",
                  OracleKind::ExtremalOverSpinePermutations,
                  "The chain d_n > d_1 > ... > d_2 > d_{n-1} is read as a zigzag: positions at even "
                  "distance from an end carry the large values, the rest the small ones, with the "
                  "largest at the far end and the smallest next to it.");
    c.forms = {{"statement", ClaimMode::OrderingAttainsMax, "zigzag ordering attains max irr"}};
    c.evaluate = [](const Claim& cl, const ClaimInstance& i, const SuiteOptions&) {
      return eval_ordering(cl, i, true);
    };
    c.instances = [](const SuiteOptions& o) { return spine_grid(o, 3, true); };
    r.push_back(std::move(c));
  }
  {
    auto c = base("C9", "Hypothesize hy.2",
                  R"q(Let $\mathscr{D}=(d_1,\dots,d_n)$ be a degree sequence with $n\geq 3$ and  let be order as: ${d_n} > d_{n-1}> \dots> d_2>  d_1$, the caterpillar tree with such order has the  minimum  value  of $\operatorname{irr}$ among all caterpillar trees with such degrees sequence of path vertices.)q",
                  "spines of n >= 3 distinct positive degrees",
                  OracleKind::ExtremalOverSpinePermutations);
    c.forms = {{"statement", ClaimMode::OrderingAttainsMin, "ascending ordering attains min irr"}};
    c.evaluate = [](const Claim& cl, const ClaimInstance& i, const SuiteOptions&) {
      return eval_ordering(cl, i, false);
    };
    c.instances = [](const SuiteOptions& o) { return spine_grid(o, 3, true); };
    r.push_back(std::move(c));
  }
  {
    auto c = base("C10", "Proposition three.c",
                  R"q(Let $T$ be a tree, let  $\mathscr{D}=(d_1,d_2,d_3)$ be a degree sequence of positive integers where $d_1\geqslant d_2 \geqslant d_3$. The Albertson index among $\mathscr{D}$ given by:
& \operatorname{irr}_{max}=(d_1-1)^2+(d_2-1)^2 +(d_3-1)(d_3-2)(d_1-d_3)(d_2-d_3) \\
& \operatorname{irr}_{min}=(d_1-1)^2+(d_3-1)^2+(d_2-1)(d_2-2)+(d_1-d_3).)q",
                  "non-increasing sequences of length 3", OracleKind::ExtremalOverSpinePermutations,
                  std::string(kTwoInterpretations) +
                      "The max branch multiplies its last four factors as printed.");
    attach(c, {dec, 3, 3,
               {max_form(irr, formula::three_spine_irr_max,
                         "(d_1-1)^2 + (d_2-1)^2 + (d_3-1)(d_3-2)(d_1-d_3)(d_2-d_3)"),
                min_form(irr, formula::three_spine_irr_min,
                         "(d_1-1)^2 + (d_3-1)^2 + (d_2-1)(d_2-2) + (d_1-d_3)")}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C11", "Lemma four.c",
                  R"q(Let $T$ be a tree, let $\mathscr{D}=(d_1,\dots,d_4)$ be a degree sequence  where $d_1 \geq d_2 \geq d_3 \geq d_4$, then we have:
\operatorname{irr}(T)=M_1(T)^2-2\sqrt{M_1(T)}+\sum_{i=1}^4\left|x_i-x_{i+1}\right|-(d_2+d_3)-1.)q",
                  "non-increasing sequences of length 4", OracleKind::DirectIndex,
                  std::string(kTwoInterpretations) +
                      "x_i is undefined in the statement: x_i := d_i on spines, x_i := the "
                      "non-increasing degrees of T on trees. The term |x_4 - x_5| is dropped "
                      "(sum clamped to i <= 3). M1 is the first Zagreb index of the whole tree. "
                      "The square root is decided exactly by squaring. The max/min forms are the "
                      "closing expressions of the proof.");
    SequenceForm statement{"statement", ClaimMode::Equals, irr, nullptr,
                           "M1^2 - 2 sqrt(M1) + sum_{i=1}^4 |x_i - x_{i+1}| - (d_2+d_3) - 1"};
    statement.custom = zagreb_four_statement;
    SequenceForm proof_max{"proof_max", ClaimMode::EqualsMax, irr, formula::zagreb_four_max,
                           "sum (d_i-1)^2 + d_1 + d_2 - d_3 - 3 d_4 + 2"};
    SequenceForm proof_min{"proof_min", ClaimMode::EqualsMin, irr, formula::zagreb_four_min,
                           "sum (d_i-1)^2 + d_1 - d_2 - d_3 - d_4 + 2"};
    attach(c, {dec, 4, 4, {statement, proof_max, proof_min}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C12", "Proposition tes.1",
                  R"q(Let $T$ be a tree of order $n=4$, let $\mathscr{D}=(d_1,\dots,d_4)$ be a degree sequence  where $d_1 \geq d_2 \geq d_3 \geq d_4$, then we have:
\operatorname{irr}(T)< 2 \sqrt{\Delta M_1(T)}+\delta.)q",
                  "trees with exactly 4 vertices", OracleKind::DirectIndex,
                  "Decided exactly: irr - delta < 0, or (irr - delta)^2 < 4 Delta M1.");
    c.forms = {{"statement", ClaimMode::UpperBoundStrict, "irr < 2 sqrt(Delta M1) + delta"}};
    c.evaluate = eval_order_four_bound;
    c.instances = [](const SuiteOptions& o) { return tree_instances(o, 4, 4, {"statement"}); };
    r.push_back(std::move(c));
  }
  {
    auto c = base("C13", "Lemma le.alb4",
                  R"q(Let $T$ be a tree of order $n\geqslant4$, let $\mathscr{D}=(d_1,\dots,d_4)$ be a non-decreasing degree sequence where $d_4\geqslant d_3 \geqslant d_2 \geqslant d_1$, then Albertson index among tree $T$ is:
\operatorname{irr}_{\max}(T)=d_1^2+d_2^2+\sum_{i=1}^{3}\lvert d_i-d_{i+2}\rvert+d_3^2+d_4^2+d_3+d_4-6 \\
\operatorname{irr}_{\min}(T)=d_3^2+d_4^2+\sum_{i=1}^{2}\lvert d_i-d_{i+2}\rvert+\lvert d_1-d_2\rvert+d_1^2+d_2^2+d_1+d_2-6.)q",
                  "non-decreasing sequences of length 4", OracleKind::ExtremalOverSpinePermutations,
                  std::string(kTwoInterpretations) +
                      "sum_{i=1}^{3} |d_i - d_{i+2}| is clamped to i <= 2.");
    attach(c, {inc, 4, 4,
               {max_form(irr, formula::alb4_max,
                         "d_1^2 + d_2^2 + sum_{i=1}^3 |d_i-d_{i+2}| + d_3^2 + d_4^2 + d_3 + d_4 - 6"),
                min_form(irr, formula::alb4_min,
                         "d_3^2 + d_4^2 + sum_{i=1}^2 |d_i-d_{i+2}| + |d_1-d_2| + d_1^2 + d_2^2 + d_1 + d_2 - 6")}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C14", "Lemma five.c",
                  R"q(Let $T$ be a tree,  let $\mathscr{D}_i=(d_1,\dots,d_5)$ be a non-increasing degree sequence  where $d_1\geqslant d_2 \geqslant \dots \geqslant d_5$ and let $\mathscr{D}_j=(d_1,\dots,d_6)$ be a non-increasing degree sequence where $d_1\geqslant \dots \geqslant d_6$ where $i,j>0$, Albertson index among tree $T$ is:
\operatorname{irr}(T_{\mathscr{D}_i})=\sum_{i=1}^{5} (d_i-1)(d_i-2)+\sum_{i=1}^{5} |d_i-d_{i+1}|+(d_1-1)^2 +(d_5-1)^2.
\operatorname{irr}(T_{\mathscr{D}_j})=\sum_{i=1}^{6} (d_i-1)(d_i-2)+\sum_{i=1}^{6} |d_i-d_{i+1}|+(d_1-1)^2 +(d_6-1)^2.)q",
                  "non-increasing sequences of length 5 or 6", OracleKind::DirectIndex,
                  std::string(kTwoInterpretations) +
                      "sum_{i=1}^{n} |d_i - d_{i+1}| is clamped to i <= n-1.");
    const auto expr = [](int n) {
      const auto s = std::to_string(n);
      return "sum_{i=1}^" + s + " (d_i-1)(d_i-2) + sum_{i=1}^" + s + " |d_i-d_{i+1}| + (d_1-1)^2 + (d_" +
             s + "-1)^2";
    };
    SequenceForm five{"n5", ClaimMode::Equals, irr, formula::five_six_irr, expr(5), 5};
    SequenceForm six{"n6", ClaimMode::Equals, irr, formula::five_six_irr, expr(6), 6};
    attach(c, {dec, 5, 6, {five, six}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C15", "Lemma le.alb5",
                  R"q(Let $T$ be tree of order $n\geqslant5$, let $\mathscr{D}=(d_1,\dots,d_5)$ be a non-decreasing degree sequence where $d_5\geqslant d_4\geqslant d_3 \geqslant d_2 \geqslant d_1$, then Albertson index among tree $T$ is:
\operatorname{irr}(T)=d_1^2+d_n^2+\sum_{i=2}^{n-1}\lvert d_i-d_{i+1}\rvert+\sum_{i=2}^{4}(d_i+2)(d_i-1)-2.)q",
                  "non-decreasing sequences of length 5", OracleKind::DirectIndex,
                  std::string(kTwoInterpretations) +
                      "The proof_max and proof_min forms are the extremes the proof arrives at.");
    attach(c, {inc, 5, 5,
               {{"statement", ClaimMode::Equals, irr, formula::alb5_statement,
                 "d_1^2 + d_n^2 + sum_{i=2}^{n-1} |d_i-d_{i+1}| + sum_{i=2}^4 (d_i+2)(d_i-1) - 2"},
                {"proof_max", ClaimMode::EqualsMax, irr, formula::alb5_proof_max,
                 "d_3^2 + d_5^2 - 2d_1 - 2d_2 + d_3 + 2d_4 + d_5 + sum_{i in {1,2,4}} (d_i+2)(d_i-1) - 2"},
                {"proof_min", ClaimMode::EqualsMin, irr, formula::alb5_proof_min,
                 "d_2^2 + d_4^2 + 2d_5 + 2d_3 - 2d_1 - d_2 - d_4 + sum_{i in {1,3,5}} (d_i+2)(d_i-1) - 2"}}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C16", "Lemma le.alb6",
                  R"q(Let $T$ be is a tree of order $n$, let $\mathscr{D}=(d_1,\dots,d_6)$ be a non-decreasing degree sequence where $d_6\geqslant \dots \geqslant d_1$, then Albertson index over tree $T$ is given by:
\operatorname{irr}_{\max}(T)= d_1^2+d_6^2+\sum_{i=1}^{6}\lvert d_i-d_{i+1}\rvert+\sum_{i=2}^{5}( d_i+2)( d_i-1)-2  \\
\operatorname{irr}_{\min}(T)=d_1^2+d_2^2+\sum_{i=1}^{6}\lvert d_i-d_{i+1}\rvert+\sum_{i\in \{3,4,5,6\}}^{ }( d_i+2)( d_i-1)-2.)q",
                  "non-decreasing sequences of length 6", OracleKind::ExtremalOverSpinePermutations,
                  std::string(kTwoInterpretations) +
                      "sum_{i=1}^{6} |d_i - d_{i+1}| is clamped to i <= 5.");
    attach(c, {inc, 6, 6,
               {max_form(irr, formula::alb6_max,
                         "d_1^2 + d_6^2 + sum_{i=1}^6 |d_i-d_{i+1}| + sum_{i=2}^5 (d_i+2)(d_i-1) - 2"),
                min_form(irr, formula::alb6_min,
                         "d_1^2 + d_2^2 + sum_{i=1}^6 |d_i-d_{i+1}| + sum_{i in {3,4,5,6}} (d_i+2)(d_i-1) - 2")}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C17", "Theorem mainthm",
                  R"q(Let $T$ be tree of order $n$, let $\mathscr{D}=(d_1,\dots,d_n)$ be a non-decreasing degree sequence where $d_n\geqslant \dots \geqslant d_1$, then Albertson index of tree $T$ is:
\operatorname{irr}(T)=d_1^2+d_n^2+\sum_{i=2}^{n-1} d_i^2+\sum_{i=2}^{n-1} d_i+d_n - d_1-2n-2.)q",
                  "non-decreasing sequences of length n >= 3", OracleKind::ExtremalOverTrees,
                  std::string(kTwoInterpretations) +
                      "a_statement keeps the printed constant -2n-2; b_proof_constant uses the "
                      "-2n+2 that the proof derives.");
    const std::string body = "d_1^2 + d_n^2 + sum_{i=2}^{n-1} d_i^2 + sum_{i=2}^{n-1} d_i + d_n - d_1";
    attach(c, {inc, 3, kUnbounded,
               {{"a_statement", ClaimMode::Equals, irr, formula::main_irr_statement, body + " - 2n - 2"},
                {"b_proof_constant", ClaimMode::Equals, irr, formula::main_irr_proof,
                 body + " - 2n + 2"}}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C18", "Lemma le.segma3",
                  R"q(Let $T$ be tree of order $n\leqslant3$, let $\mathscr{D}=(d_1,d_2,d_3)$  be a degree sequence  where $d_3\geqslant d_2 \geqslant d_1$, then Sigma index is:
\sigma_{\max}(T)= \sum_{i\in\{2,3\}}(d_i+1)(d_i-1)^2+(d_3-d_1)^2+(d_1-d_2)^2\\
\sigma_{\min}(T)=\sum_{i\in\{1,3\}}(d_i+1)(d_i-1)^2+(d_1-d_3)^2+(d_3-d_2)^2.)q",
                  "non-decreasing sequences of length 3", OracleKind::ExtremalOverSpinePermutations,
                  kTwoInterpretations);
    attach(c, {inc, 3, 3,
               {max_form(sigma, formula::sigma3_max,
                         "sum_{i in {2,3}} (d_i+1)(d_i-1)^2 + (d_3-d_1)^2 + (d_1-d_2)^2"),
                min_form(sigma, formula::sigma3_min,
                         "sum_{i in {1,3}} (d_i+1)(d_i-1)^2 + (d_1-d_3)^2 + (d_3-d_2)^2")}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C19", "Lemma le.sigma2",
                  R"q(Let $T$ be a tree of order $n>0$ and let $\mathscr{D}=(d_1,d_2,d_3,d_4)$  be a degree sequence where $d_4\geqslant d_3\geqslant d_2\geqslant d_1$, then Sigma index is:
\sigma_{\max}(T)= \sum_{i\in \{2,3\}}(d_i+1)(d_i-1)^2+\sum_{i\in \{1,4\}}(d_i+2)(d_i-1)^2+\sum_{i=1}^{4}(d_i-d_{i+2})^2+(d_4-d_1)^2\\
\sigma_{\min}(T)=\sum_{i\in \{1,4\}}(d_i+1)(d_i-1)^2+\sum_{i=1}^{4}(d_i-d_{i+2})^2+\sum_{i\in \{2,3\}}(d_i+2)(d_i-1)^2.)q",
                  "non-decreasing sequences of length 4", OracleKind::ExtremalOverSpinePermutations,
                  std::string(kTwoInterpretations) +
                      "sum_{i=1}^{4} (d_i - d_{i+2})^2 is clamped to i <= 2.");
    attach(c, {inc, 4, 4,
               {max_form(sigma, formula::sigma4_max,
                         "sum_{i in {2,3}} (d_i+1)(d_i-1)^2 + sum_{i in {1,4}} (d_i+2)(d_i-1)^2 + "
                         "sum_{i=1}^4 (d_i-d_{i+2})^2 + (d_4-d_1)^2"),
                min_form(sigma, formula::sigma4_min,
                         "sum_{i in {1,4}} (d_i+1)(d_i-1)^2 + sum_{i=1}^4 (d_i-d_{i+2})^2 + "
                         "sum_{i in {2,3}} (d_i+2)(d_i-1)^2")}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C20", "Hypothesize hy.sigma5",
                  R"q(Let $T$ be a tree of order $n>0$, and let $\mathscr{D}=(d_1,\dots,d_5)$  be a degree sequence where $d_5\geqslant d_4 \geqslant d_3 \geqslant d_2 \geq d_1$, then Sigma index of $T$ given by:
\sigma(T)=\sum_{i=1}^{3}d_i(d_{i+1})^2+(d_1-1)^3+(d_4)^3 +\sum_{i=1}^{4}(d_i-d_{i+1})^2.)q",
                  "non-decreasing sequences of length 5", OracleKind::DirectIndex,
                  std::string(kTwoInterpretations) +
                      "case1..case10 evaluate the simplified right-hand side of each case of the "
                      "proof on the caterpillar whose spine takes the listed positions of "
                      "(d_1, ..., d_5); spine only. proof_max/proof_min are the final pair.");
    std::vector<SequenceForm> forms;
    forms.push_back({"statement", ClaimMode::Equals, sigma, formula::sigma5_statement,
                     "sum_{i=1}^3 d_i d_{i+1}^2 + (d_1-1)^3 + d_4^3 + sum_{i=1}^4 (d_i-d_{i+1})^2"});
    for (std::size_t k = 1; k <= formula::kSigma5Cases; ++k) {
      std::vector<Degree> pos;
      for (auto p : formula::sigma5_case_orderings()[k - 1]) pos.push_back(static_cast<Degree>(p));
      SequenceForm f{"case" + std::to_string(k), ClaimMode::Equals, sigma, nullptr,
                     "case " + std::to_string(k) + " on spine positions " + join(pos)};
      f.tree = false;
      f.custom = sigma5_case_eval(k);
      forms.push_back(std::move(f));
    }
    forms.push_back({"proof_max", ClaimMode::EqualsMax, sigma, formula::sigma5_proof_max,
                     "d_1^3 + 2d_1^2 + d_1 + d_2 d_3^2 - d_1 d_2^2 + d_4^3 - d_3 d_4^2 - d_2^3"});
    forms.push_back({"proof_min", ClaimMode::EqualsMin, sigma, formula::sigma5_proof_min,
                     "-d_1^2 + 2d_1 - d_3 d_4^2 + d_4^3 - 1"});
    attach(c, {inc, 5, 5, std::move(forms)});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C21", "Hypothesize hy.sigma6",
                  R"q(let $\mathscr{D}=(d_1,\dots,d_5)$  be a degree sequence where $d_6\geqslant d_5 \geqslant d_4 \geqslant d_3 \geqslant d_2 \geqslant d_1$, then Sigma index of $T$ is:
\sigma(T)=\sum_{i=1}^{n-2}d_i(d_{i+1})^2+(d_1-1)^3+(d_6-1)^3.)q",
                  "non-decreasing sequences of length 6", OracleKind::DirectIndex,
                  std::string(kTwoInterpretations) +
                      "The statement names (d_1, ..., d_5) but orders and uses d_6; read as "
                      "length 6.");
    attach(c, {inc, 6, 6,
               {{"statement", ClaimMode::Equals, sigma, formula::sigma6_statement,
                 "sum_{i=1}^{n-2} d_i d_{i+1}^2 + (d_1-1)^3 + (d_6-1)^3"}}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C22", "Theorem thm.sigma.hy",
                  R"q(Let $T$ be a tree of order $n$, let $\mathscr{D}=(d_1,\dots,d_n)$  be a degree sequence where $d_1\geqslant d_2\geqslant \dots \geqslant d_n$, then Albertson index among tree $T$ is:
\sigma(T)=(d_n-1)^3+(d_1-1)^3+\sum_{i=1}^{n}(d_i-d_{i+1})^2+\sum_{i=2}^{n-1}(d_i-1)^2(d_i-2).)q",
                  "non-increasing sequences of length n >= 2", OracleKind::ExtremalOverTrees,
                  std::string(kTwoInterpretations) +
                      "sum_{i=1}^{n} (d_i - d_{i+1})^2 is clamped to i <= n-1.");
    attach(c, {dec, 2, kUnbounded,
               {{"statement", ClaimMode::Equals, sigma, formula::sigma_general,
                 "(d_n-1)^3 + (d_1-1)^3 + sum_{i=1}^n (d_i-d_{i+1})^2 + sum_{i=2}^{n-1} (d_i-1)^2 (d_i-2)"}}});
    r.push_back(std::move(c));
  }
  {
    auto c = base("C23", "Dorjsembe et al. [Dorjsembe]",
                  R"q(The relationship given by: $\operatorname{irr} (G)> \frac{\delta(\Delta-\delta)^2.|V|}{\Delta+1}$)q",
                  "non-regular graphs", OracleKind::DirectIndex,
                  "Regular graphs make both sides zero and are not applicable. The suite runs it "
                  "on every tree of each order in range.");
    c.forms = {{"statement", ClaimMode::LowerBoundStrict, "irr > delta (Delta-delta)^2 |V| / (Delta+1)"}};
    c.evaluate = eval_degree_lower_bound;
    c.instances = [](const SuiteOptions& o) { return tree_instances(o, 1, kUnbounded, {"statement"}); };
    r.push_back(std::move(c));
  }
  {
    auto c = base("C24", "Ghalavand et al. [Ghalavand]",
                  R"q(proved  $\operatorname{irr}_T(G) \leq \frac{n^2}{4} \operatorname{irr}(G)$ when the bound is sharp for infinitely many graphs.)q",
                  "trees", OracleKind::DirectIndex);
    c.forms = {{"statement", ClaimMode::UpperBound, "irr_T <= n^2/4 irr"}};
    c.evaluate = eval_total_irr_bound;
    c.instances = [](const SuiteOptions& o) { return tree_instances(o, 1, kUnbounded, {"statement"}); };
    r.push_back(std::move(c));
  }
  {
    auto c = base("C25", "Lemma [ZhouLin, Clark22]",
                  R"q(Let $p$ be a prime number where $p \geq 1$, let  $\mathscr{D}=(d_1, d_2, \ldots, d_n)$ be a degree sequence where $0\leq d_i\leq n-1$ when $i\in \mathbb{N}$, then the inequality satisfying:
\left(\sum_{i=1}^n d_i^p\right)^{\frac{1}{p}} \leq(n-1)^{1-\frac{1}{p}} \sum_{i=1}^n d_i^{\frac{1}{p}},
if and only if $\left (\sum_{i=1}^{n}\sqrt[p]{d_i}\right)^p \geqslant c\sum_{i=1}^{n}d_i^p$.)q",
                  "sequences with 0 <= d_i <= n-1, integer p >= 1", OracleKind::InequalityCheck,
                  "Run for p = 1..5 on tree degree sequences; the prime parameter records whether "
                  "p is prime (p = 1 is admitted by the statement's own p >= 1). The 'if and only "
                  "if' clause names an undefined constant c and is not checked.");
    c.forms = {{"statement", ClaimMode::UpperBound,
                "(sum d_i^p)^(1/p) <= (n-1)^(1-1/p) sum d_i^(1/p)"}};
    c.evaluate = eval_power_mean;
    c.instances = power_mean_grid;
    r.push_back(std::move(c));
  }
  {
    auto c = base("C26", "Proposition proedo",
                  R"q(Let $\mathscr{D}=(d_1,\dots,d_n)$ be a degree sequence  where $d_1\geqslant d_2\geqslant \dots \geqslant d_n$, then the inequality satisfying:
\sum_{i=1}^{n}d_i\leq n(n-1)+\sum_{i=n+1}^{k} \min(n,d_i).)q",
                  "non-increasing degree sequences", OracleKind::InequalityCheck,
                  "Read as the prefix form: for every k, sum_{i<=k} d_i <= k(k-1) + sum_{i>k} "
                  "min(k, d_i); the printed indices n and k are swapped.");
    c.forms = {{"statement", ClaimMode::UpperBound,
                "sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i) for all k"}};
    c.evaluate = eval_prefix_inequality;
    c.instances = [](const SuiteOptions& o) { return tree_sequence_grid(o, Orientation::NonIncreasing, 1); };
    r.push_back(std::move(c));
  }

  r.push_back(out_of_scope(
      "X1", "Proposition proe1",
      R"q(Let $\mathscr{G}(n)$ be is the  set of  all $n$ vertex on graph $G$,  $\lambda(G)$ the index  of the largest eigenvalue in graph, and let  $\bar{d}(G)$ be the mean of the vertex degrees, then
\max \{\operatorname{irr}(G): G \in \mathscr{G}(n)\}=\left\{\begin{array}{ll}\frac{1}{4} n-\frac{1}{2} & (n \text { even }) \\ \frac{1}{4} n-\frac{1}{2}+\frac{1}{4 n} & (n \text { odd }).\end{array}\right.)q",
      "ranges over all graphs of order n; the oracle enumerates trees only"));
  r.push_back(out_of_scope(
      "X2", "Wai-Kai Chen [Wai]",
      R"q(Wai-Kai Chen in~\cite{Wai} established that the maximum number of edges is $\Delta(E) = \frac{1}{2}(n^2+n+p^2-3p)$.)q",
      "an edge-count bound for graphs with pendant vertices; involves no index on trees"));
  r.push_back(out_of_scope(
      "X3", "Lemma le2.1",
      R"q(Let $G$ has the maximal Sigma index among all connected graphs with $n$ vertices and $p$ pendant vertices, where $n, p$ are positive integers such that $1\leq p \leq n-3$. Then: $\Delta(G)=n-1$.)q",
      "quantifies over connected graphs with p pendant vertices; the oracle enumerates trees only"));
  return r;
}

}  // namespace claim_detail

// All registered claims, active ones first, each in id order.
inline const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = claim_detail::build_registry();
  return claims;
}

inline const Claim& find_claim(std::string_view id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownClaim, "no claim '" + std::string(id) + "'");
}

// Instances the suite runs for one claim under the given options.
inline std::vector<ClaimInstance> claim_instances(const Claim& c, const SuiteOptions& opts) {
  if (c.status != ClaimStatus::Active) {
    throw Error(ErrorCode::OutOfScopeClaim, c.id + ": " + c.out_of_scope_reason);
  }
  return c.instances(opts);
}

inline ClaimVerdict evaluate_claim(std::string_view id, const ClaimInstance& instance,
                                   const SuiteOptions& opts = {}) {
  const auto& c = find_claim(id);
  if (c.status != ClaimStatus::Active) {
    throw Error(ErrorCode::OutOfScopeClaim, c.id + ": " + c.out_of_scope_reason);
  }
  try {
    return c.evaluate(c, instance, opts);
  } catch (const Error& e) {
    auto v = claim_detail::open_verdict(c, instance);
    if (e.code() == ErrorCode::CapExceeded) {
      v.verdict = Verdict::Skipped;
      v.note = e.what();
      return v;
    }
    if (e.code() == ErrorCode::NotRealizable || e.code() == ErrorCode::SpecInvalid ||
        e.code() == ErrorCode::OrderTooSmall) {
      return claim_detail::not_applicable(v, e.what());
    }
    throw;
  }
}

}  // namespace irrtree
