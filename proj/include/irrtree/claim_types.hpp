#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irrtree/degree_sequence.hpp"
#include "irrtree/graph.hpp"
#include "irrtree/indices.hpp"

namespace irrtree {

enum class ClaimMode {
  Equals,
  EqualsMax,
  EqualsMin,
  UpperBoundStrict,
  UpperBound,
  LowerBoundStrict,
  OrderingAttainsMax,
  OrderingAttainsMin,
};

enum class OracleKind { DirectIndex, ExtremalOverTrees, ExtremalOverSpinePermutations, InequalityCheck };

enum class ClaimStatus { Active, OutOfScope };

enum class Verdict { Pass, Fail, NotApplicable, Skipped };

// What the degree data of an instance stands for: family parameters, the
// spine of a caterpillar, the full degree sequence of a tree, or one graph.
enum class Interpretation { Family, Spine, Tree, Graph };

constexpr std::string_view to_string(ClaimMode m) {
  switch (m) {
    case ClaimMode::Equals: return "Equals";
    case ClaimMode::EqualsMax: return "EqualsMax";
    case ClaimMode::EqualsMin: return "EqualsMin";
    case ClaimMode::UpperBoundStrict: return "UpperBoundStrict";
    case ClaimMode::UpperBound: return "UpperBound";
    case ClaimMode::LowerBoundStrict: return "LowerBoundStrict";
    case ClaimMode::OrderingAttainsMax: return "OrderingAttainsMax";
    case ClaimMode::OrderingAttainsMin: return "OrderingAttainsMin";
  }
  return "Unknown";
}

constexpr std::string_view to_string(OracleKind o) {
  switch (o) {
    case OracleKind::DirectIndex: return "DirectIndex";
    case OracleKind::ExtremalOverTrees: return "ExtremalOverTrees";
    case OracleKind::ExtremalOverSpinePermutations: return "ExtremalOverSpinePermutations";
    case OracleKind::InequalityCheck: return "InequalityCheck";
  }
  return "Unknown";
}

constexpr std::string_view to_string(ClaimStatus s) {
  return s == ClaimStatus::Active ? "active" : "out-of-scope";
}

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "Unknown";
}

constexpr std::string_view to_string(Interpretation i) {
  switch (i) {
    case Interpretation::Family: return "family";
    case Interpretation::Spine: return "spine";
    case Interpretation::Tree: return "tree";
    case Interpretation::Graph: return "graph";
  }
  return "unknown";
}

struct ClaimInstance {
  std::string form;
  Interpretation interpretation = Interpretation::Family;
  std::vector<std::pair<std::string, std::int64_t>> params;  // in declaration order
  std::vector<Degree> degrees;                               // as the statement orders them
  std::optional<SimpleGraph> graph;

  bool has(std::string_view key) const {
    for (const auto& [k, v] : params)
      if (k == key) return true;
    return false;
  }

  std::int64_t param(std::string_view key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw Error(ErrorCode::DomainError, "instance has no parameter '" + std::string(key) + "'");
  }
};

struct ClaimVerdict {
  std::string claim_id;
  ClaimInstance instance;
  std::string expected;  // from the printed formula
  std::string actual;    // from the oracle
  IndexValue actual_value = 0;
  std::optional<IndexKind> actual_kind;  // set when actual_value is an index of witness
  Verdict verdict = Verdict::NotApplicable;
  std::optional<SimpleGraph> witness;  // kept on FAIL only
  std::string witness_canonical;       // empty for non-trees
  std::string oracle;
  std::string note;
};

struct SuiteOptions {
  std::size_t n_min = 3;
  std::size_t n_max = 7;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t spine_max_len = 6;
  Degree spine_max_deg = 5;
  unsigned threads = 1;
};

struct ClaimForm {
  std::string name;
  ClaimMode mode;
  std::string expression;
};

struct Claim;

using ClaimEvaluator =
    std::function<ClaimVerdict(const Claim&, const ClaimInstance&, const SuiteOptions&)>;
using InstanceGenerator = std::function<std::vector<ClaimInstance>(const SuiteOptions&)>;

struct Claim {
  std::string id;
  std::string citation;  // label of the displayed result
  std::string quote;     // verbatim text anchoring it
  std::string applicability;
  OracleKind oracle = OracleKind::DirectIndex;
  std::vector<ClaimForm> forms;
  ClaimStatus status = ClaimStatus::Active;
  std::string interpretation_notes;
  std::string out_of_scope_reason;
  ClaimEvaluator evaluate;      // empty when out of scope
  InstanceGenerator instances;  // empty when out of scope

  const ClaimForm* form(std::string_view name) const {
    for (const auto& f : forms)
      if (f.name == name) return &f;
    return nullptr;
  }
};

}  // namespace irrtree
