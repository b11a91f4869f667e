#pragma once

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "irrtree/claims.hpp"
#include "irrtree/parallel.hpp"

namespace irrtree {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct VerdictCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::size_t skipped = 0;

  std::size_t total() const { return pass + fail + not_applicable + skipped; }

  void add(Verdict v) {
    switch (v) {
      case Verdict::Pass: ++pass; break;
      case Verdict::Fail: ++fail; break;
      case Verdict::NotApplicable: ++not_applicable; break;
      case Verdict::Skipped: ++skipped; break;
    }
  }
};

struct ClaimReport {
  const Claim* claim = nullptr;
  std::vector<ClaimVerdict> verdicts;
  VerdictCounts counts;
};

struct VerificationReport {
  SuiteOptions options;
  std::optional<std::vector<std::string>> filter;
  std::vector<ClaimReport> claims;
  VerdictCounts totals;
  std::string generated_at;

  const ClaimReport* find(std::string_view id) const {
    for (const auto& c : claims)
      if (c.claim->id == id) return &c;
    return nullptr;
  }
};

inline std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::IoError, "SHA-256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// Evaluates every instance of the selected claims (all when filter is empty).
// Out-of-scope claims are listed with their reason and no instances.
inline VerificationReport run_suite(const SuiteOptions& opts,
                                    const std::optional<std::vector<std::string>>& filter = {}) {
  if (opts.n_min > opts.n_max) throw Error(ErrorCode::DomainError, "n_min exceeds n_max");
  if (opts.cap > kHardEnumerationCap) {
    throw Error(ErrorCode::CapExceeded, "cap " + std::to_string(opts.cap) + " above hard cap " +
                                            std::to_string(kHardEnumerationCap));
  }
  if (opts.n_max > opts.cap) {
    throw Error(ErrorCode::CapExceeded, "n_max " + std::to_string(opts.n_max) + " above cap " +
                                            std::to_string(opts.cap));
  }
  VerificationReport report;
  report.options = opts;
  report.filter = filter;

  std::vector<const Claim*> selected;
  if (filter) {
    for (const auto& id : *filter) selected.push_back(&find_claim(id));
  } else {
    for (const auto& c : registry()) selected.push_back(&c);
  }

  struct Task {
    std::size_t claim;
    ClaimInstance instance;
  };
  std::vector<Task> tasks;
  report.claims.resize(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    report.claims[i].claim = selected[i];
    if (selected[i]->status != ClaimStatus::Active) continue;
    for (auto& inst : claim_instances(*selected[i], opts)) tasks.push_back({i, std::move(inst)});
  }
  auto verdicts = parallel_map(tasks.size(), opts.threads, [&](std::size_t t) {
    return evaluate_claim(selected[tasks[t].claim]->id, tasks[t].instance, opts);
  });
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto& cr = report.claims[tasks[t].claim];
    cr.counts.add(verdicts[t].verdict);
    report.totals.add(verdicts[t].verdict);
    cr.verdicts.push_back(std::move(verdicts[t]));
  }
  report.generated_at = utc_timestamp();
  return report;
}

// --- serialization -----------------------------------------------------------------

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson edges_json(const SimpleGraph& g) {
  auto out = OrderedJson::array();
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

inline OrderedJson counts_json(const VerdictCounts& c) {
  OrderedJson j;
  j["pass"] = c.pass;
  j["fail"] = c.fail;
  j["not_applicable"] = c.not_applicable;
  j["skipped"] = c.skipped;
  return j;
}

inline OrderedJson instance_json(const ClaimInstance& inst) {
  OrderedJson p = OrderedJson::object();
  for (const auto& [k, v] : inst.params) p[k] = v;
  if (!inst.degrees.empty()) p["degrees"] = inst.degrees;
  if (inst.graph) {
    if (is_tree(*inst.graph))
      p["tree"] = canonical_form(*inst.graph).bytes;
    else
      p["edges"] = edges_json(*inst.graph);
  }
  return p;
}

inline OrderedJson verdict_json(const ClaimVerdict& v) {
  OrderedJson j;
  j["params"] = instance_json(v.instance);
  j["form"] = v.instance.form;
  j["interpretation"] = std::string(to_string(v.instance.interpretation));
  j["expected"] = v.expected;
  j["actual"] = v.actual;
  j["verdict"] = std::string(to_string(v.verdict));
  j["witness_edges"] = v.witness ? edges_json(*v.witness) : OrderedJson(nullptr);
  j["witness_canonical"] =
      v.witness_canonical.empty() ? OrderedJson(nullptr) : OrderedJson(v.witness_canonical);
  j["oracle"] = v.oracle;
  j["note"] = v.note;
  return j;
}

inline OrderedJson claim_json(const ClaimReport& cr) {
  const auto& c = *cr.claim;
  OrderedJson j;
  j["id"] = c.id;
  j["paper_ref"] = {{"citation", c.citation}, {"quote", c.quote}};
  j["status"] = std::string(to_string(c.status));
  j["applicability"] = c.applicability;
  if (c.status == ClaimStatus::Active) {
    j["oracle"] = std::string(to_string(c.oracle));
    auto forms = OrderedJson::array();
    for (const auto& f : c.forms) {
      forms.push_back(
          {{"name", f.name}, {"mode", std::string(to_string(f.mode))}, {"expression", f.expression}});
    }
    j["forms"] = forms;
  } else {
    j["out_of_scope_reason"] = c.out_of_scope_reason;
  }
  j["interpretation_notes"] = c.interpretation_notes;
  j["counts"] = counts_json(cr.counts);
  auto instances = OrderedJson::array();
  for (const auto& v : cr.verdicts) instances.push_back(verdict_json(v));
  j["instances"] = std::move(instances);
  return j;
}

// Everything except digest and timestamp; the digest is taken over this.
inline OrderedJson report_body_json(const VerificationReport& r) {
  OrderedJson j;
  OrderedJson suite;
  suite["n_min"] = r.options.n_min;
  suite["n_max"] = r.options.n_max;
  suite["cap"] = r.options.cap;
  suite["spine_max_len"] = r.options.spine_max_len;
  suite["spine_max_deg"] = r.options.spine_max_deg;
  suite["filter"] = r.filter ? OrderedJson(*r.filter) : OrderedJson("all");
  j["suite"] = suite;
  j["tool_version"] = std::string(kToolVersion);
  auto claims = OrderedJson::array();
  for (const auto& cr : r.claims) claims.push_back(claim_json(cr));
  j["claims"] = std::move(claims);
  auto summary = counts_json(r.totals);
  summary["instances"] = r.totals.total();
  j["summary"] = summary;
  return j;
}

inline std::string report_digest(const VerificationReport& r) {
  return sha256_hex(report_body_json(r).dump());
}

inline OrderedJson report_json(const VerificationReport& r) {
  auto j = report_body_json(r);
  j["digest"] = sha256_hex(j.dump());
  j["generated_at"] = r.generated_at;
  return j;
}

// One row per claim: id, status, pass/fail/NA/skipped counts.
inline std::string summary_table(const VerificationReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "claim" << std::setw(14) << "status" << std::right
      << std::setw(7) << "pass" << std::setw(7) << "fail" << std::setw(7) << "n/a" << std::setw(9)
      << "skipped" << '\n';
  for (const auto& cr : r.claims) {
    out << std::left << std::setw(6) << cr.claim->id << std::setw(14)
        << to_string(cr.claim->status) << std::right << std::setw(7) << cr.counts.pass
        << std::setw(7) << cr.counts.fail << std::setw(7) << cr.counts.not_applicable
        << std::setw(9) << cr.counts.skipped << '\n';
  }
  out << std::left << std::setw(20) << "total" << std::right << std::setw(7) << r.totals.pass
      << std::setw(7) << r.totals.fail << std::setw(7) << r.totals.not_applicable << std::setw(9)
      << r.totals.skipped << '\n';
  return out.str();
}

inline std::string summary_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "claim,status,pass,fail,not_applicable,skipped\n";
  for (const auto& cr : r.claims) {
    out << cr.claim->id << ',' << to_string(cr.claim->status) << ',' << cr.counts.pass << ','
        << cr.counts.fail << ',' << cr.counts.not_applicable << ',' << cr.counts.skipped << '\n';
  }
  return out.str();
}

}  // namespace irrtree
