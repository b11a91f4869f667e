#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "irrtree/report.hpp"

namespace {

using namespace irrtree;
using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStrict = 3;
constexpr int kExitCap = 4;

struct Common {
  Format format = Format::Table;
  unsigned threads = default_thread_count();
  std::optional<std::size_t> cap;
  bool unsafe_cap = false;

  std::size_t effective_cap() const {
    const std::size_t limit = unsafe_cap ? kHardEnumerationCap : kDefaultEnumerationCap;
    const std::size_t c = cap.value_or(limit);
    if (c < 1) throw Error(ErrorCode::DomainError, "cap must be >= 1");
    if (c > limit) {
      throw Error(ErrorCode::CapExceeded, "cap " + std::to_string(c) + " above " + std::to_string(limit) +
                                              (unsafe_cap ? "" : " (use --unsafe-cap)"));
    }
    return c;
  }

  EnumerationOptions enumeration() const { return {effective_cap(), threads}; }
};

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<IndexKind> parse_kinds(const std::string& text) {
  if (text.empty() || text == "all") return {kAllIndexKinds.begin(), kAllIndexKinds.end()};
  std::vector<IndexKind> out;
  for (const auto& name : split(text)) {
    auto k = parse_index_kind(name);
    if (!k) throw Error(ErrorCode::ParseError, "unknown index '" + name + "'");
    out.push_back(*k);
  }
  return out;
}

Json value_json(const IndexValue& v) {
  if (v.denominator() == 1) return v.numerator();
  return format_value(v);
}

std::string edge_text(const SimpleGraph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

std::string join_degrees(const std::vector<Degree>& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out;
}

void print_row(std::ostream& out, std::string_view key, const std::string& value) {
  out << std::left << std::setw(18) << key << value << '\n';
}

// --- compute -----------------------------------------------------------------------------

struct ComputeArgs {
  std::string file;
  std::string family;
  std::string index = "all";
};

SimpleGraph load_graph(const ComputeArgs& a) {
  if (!a.family.empty()) return parse_family(a.family);
  if (a.file == "-") return read_edge_list(std::cin);
  std::ifstream in(a.file);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + a.file);
  return read_edge_list(in);
}

int run_compute(const ComputeArgs& a, const Common& c) {
  const auto g = load_graph(a);
  const auto kinds = parse_kinds(a.index);
  switch (c.format) {
    case Format::Table:
      for (auto k : kinds) print_row(std::cout, to_string(k), format_value(compute_index(g, k)));
      break;
    case Format::Csv:
      std::cout << "index,value\n";
      for (auto k : kinds) std::cout << to_string(k) << ',' << format_value(compute_index(g, k)) << '\n';
      break;
    case Format::Json: {
      Json j;
      j["order"] = g.order();
      j["size"] = g.size();
      Json values = Json::object();
      for (auto k : kinds) values[std::string(to_string(k))] = value_json(compute_index(g, k));
      j["indices"] = values;
      std::cout << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// --- extremal ----------------------------------------------------------------------------

struct ExtremalArgs {
  std::string degseq;
  std::string index = "sigma";
  std::string order = "dec";
  bool spine = false;
  std::size_t witnesses = kDefaultWitnessCap;
};

Json witnesses_json(const std::vector<Witness>& ws) {
  auto out = Json::array();
  for (const auto& w : ws) out.push_back({{"canonical", w.form.bytes}, {"edges", edges_json(w.tree)}});
  return out;
}

int run_extremal(const ExtremalArgs& a, const Common& c) {
  const auto orient = a.order == "inc" ? Orientation::NonDecreasing : Orientation::NonIncreasing;
  const auto d = parse_degree_sequence(a.degseq, orient);
  const auto kinds = parse_kinds(a.index);
  if (kinds.size() != 1) throw Error(ErrorCode::ParseError, "extremal takes exactly one index");
  const auto kind = kinds.front();

  ExtremalResult r;
  std::optional<SpineExtremalResult> spine;
  if (a.spine) {
    spine = spine_permutation_extremal(d, kind, kDefaultSpineCap, a.witnesses);
    r = spine->extremal;
  } else {
    r = extremal_index(d, kind, c.enumeration(), a.witnesses);
  }

  if (c.format == Format::Json) {
    Json j;
    j["degrees"] = d.presented();
    j["index"] = std::string(to_string(kind));
    j["space"] = a.spine ? "spine orderings" : "trees";
    j["min"] = value_json(r.min_value);
    j["max"] = value_json(r.max_value);
    j["count_labeled"] = r.count_labeled;
    j["count_iso"] = r.count_iso;
    j["min_witnesses"] = witnesses_json(r.min_witnesses);
    j["max_witnesses"] = witnesses_json(r.max_witnesses);
    if (spine) {
      auto orderings = [](const std::vector<std::vector<Degree>>& v) {
        auto out = Json::array();
        for (const auto& o : v) out.push_back(o);
        return out;
      };
      j["argmin"] = orderings(spine->argmin);
      j["argmax"] = orderings(spine->argmax);
      j["zigzag"] = spine->zigzag;
      j["zigzag_attains_max"] = spine->zigzag_attains_max;
      j["ascending_attains_min"] = spine->ascending_attains_min;
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  if (c.format == Format::Csv) {
    std::cout << "degrees,index,min,max,count_labeled,count_iso\n"
              << '"' << join_degrees(d.presented()) << "\"," << to_string(kind) << ','
              << format_value(r.min_value) << ',' << format_value(r.max_value) << ','
              << r.count_labeled << ',' << r.count_iso << '\n';
    return kExitOk;
  }
  print_row(std::cout, "degrees", join_degrees(d.presented()));
  print_row(std::cout, "index", std::string(to_string(kind)));
  print_row(std::cout, "min", format_value(r.min_value));
  print_row(std::cout, "max", format_value(r.max_value));
  if (a.spine) {
    print_row(std::cout, "orderings", std::to_string(spine->valid_orderings) + " valid, " +
                                          std::to_string(spine->skipped_orderings) + " skipped");
  } else {
    print_row(std::cout, "trees", "labeled " + std::to_string(r.count_labeled) + ", iso " +
                                      std::to_string(r.count_iso));
  }
  for (const auto& w : r.min_witnesses) print_row(std::cout, "min witness", edge_text(w.tree));
  for (const auto& w : r.max_witnesses) print_row(std::cout, "max witness", edge_text(w.tree));
  return kExitOk;
}

// --- enumerate ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::string degseq;
  std::string mode = "iso";
  bool count_only = false;
};

int run_enumerate(const EnumerateArgs& a, const Common& c) {
  const auto d = parse_degree_sequence(a.degseq);
  const auto mode = a.mode == "labeled" ? EnumerationMode::Labeled : EnumerationMode::UpToIsomorphism;
  const auto opts = c.enumeration();
  if (a.count_only) {
    const auto n = count_trees(d, mode, opts);
    if (c.format == Format::Json) {
      std::cout << Json{{"degrees", d.presented()}, {"mode", a.mode}, {"count", n}}.dump(2) << '\n';
    } else if (c.format == Format::Csv) {
      std::cout << "count\n" << n << '\n';
    } else {
      std::cout << n << '\n';
    }
    return kExitOk;
  }
  std::size_t index = 0;
  auto all = Json::array();
  if (c.format == Format::Csv) std::cout << "tree,u,v\n";
  for_each_tree(
      d, mode,
      [&](const SimpleGraph& t) {
        switch (c.format) {
          case Format::Table:
            if (index) std::cout << '\n';
            write_edge_list(std::cout, t);
            break;
          case Format::Csv:
            for (const auto& e : t.edges()) std::cout << index << ',' << e.u << ',' << e.v << '\n';
            break;
          case Format::Json:
            all.push_back(edges_json(t));
            break;
        }
        ++index;
      },
      opts);
  if (c.format == Format::Json) std::cout << all.dump() << '\n';
  return kExitOk;
}

// --- verify ------------------------------------------------------------------------------

struct VerifyArgs {
  std::string claims = "all";
  std::size_t n_min = 3;
  std::size_t n_max = 7;
  std::string out;
  std::optional<std::string> strict;
  std::size_t spine_max_len = 6;
  Degree spine_max_deg = 5;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  SuiteOptions o;
  o.n_min = a.n_min;
  o.n_max = a.n_max;
  o.cap = c.effective_cap();
  o.spine_max_len = a.spine_max_len;
  o.spine_max_deg = a.spine_max_deg;
  o.threads = c.threads;
  std::optional<std::vector<std::string>> filter;
  if (a.claims != "all") filter = split(a.claims);
  const auto report = run_suite(o, filter);
  const auto json = report_json(report);

  if (!a.out.empty()) {
    std::ofstream file(a.out);
    if (!file) throw Error(ErrorCode::IoError, "cannot write " + a.out);
    file << json.dump(2) << '\n';
    if (!file) throw Error(ErrorCode::IoError, "write failed for " + a.out);
  }
  switch (c.format) {
    case Format::Table:
      std::cout << summary_table(report) << "digest " << json["digest"].get<std::string>() << '\n';
      break;
    case Format::Csv:
      std::cout << summary_csv(report);
      break;
    case Format::Json:
      std::cout << json.dump(2) << '\n';
      break;
  }

  if (!a.strict) return kExitOk;
  std::set<std::string> watched;
  for (const auto& id : split(*a.strict)) watched.insert(find_claim(id).id);
  int code = kExitOk;
  for (const auto& cr : report.claims) {
    if ((watched.empty() || watched.count(cr.claim->id)) && cr.counts.fail > 0) {
      std::cerr << "strict: " << cr.claim->id << " has " << cr.counts.fail << " FAIL verdicts\n";
      code = kExitStrict;
    }
  }
  return code;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::CapExceeded: return kExitCap;
    case ErrorCode::IoError: return kExitIo;
    default: return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-based topological indices of trees and checks of published claims"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  const std::map<std::string, Format> formats{
      {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", common.format, "Output format: table, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("table|json|csv");
  app.add_option("--threads", common.threads, "Worker threads (default: DEGSEQ_THREADS or all cores)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--cap", common.cap, "Largest tree order to enumerate (default 9, or 12 with --unsafe-cap)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--unsafe-cap", common.unsafe_cap, "Allow enumeration up to order 12");

  ComputeArgs compute;
  auto* cmd_compute = app.add_subcommand("compute", "Evaluate indices on one graph");
  auto* file_opt = cmd_compute->add_option("--file", compute.file, "Edge-list file ('-' for stdin)");
  auto* family_opt =
      cmd_compute->add_option("--family", compute.family, "star:n path:n dstar:k,r kmn:m,n cat:d1-..-dk ucat:k,m");
  file_opt->excludes(family_opt);
  cmd_compute->add_option("--index", compute.index, "Comma list of indices or 'all'");

  ExtremalArgs extremal;
  auto* cmd_extremal = app.add_subcommand("extremal", "Min and max of an index over all trees with a degree sequence");
  cmd_extremal->add_option("--degseq", extremal.degseq, "Comma-separated degrees")->required();
  cmd_extremal->add_option("--index", extremal.index, "Index name");
  cmd_extremal->add_option("--order", extremal.order, "Presentation order: inc or dec")
      ->check(CLI::IsMember({"inc", "dec"}));
  cmd_extremal->add_flag("--spine", extremal.spine, "Treat the degrees as a caterpillar spine multiset");
  cmd_extremal->add_option("--witnesses", extremal.witnesses, "Witnesses kept per extreme")
      ->check(CLI::PositiveNumber);

  EnumerateArgs enumerate;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "List or count trees with a degree sequence");
  cmd_enumerate->add_option("--degseq", enumerate.degseq, "Comma-separated degrees")->required();
  cmd_enumerate->add_option("--mode", enumerate.mode, "labeled or iso")
      ->check(CLI::IsMember({"labeled", "iso"}));
  cmd_enumerate->add_flag("--count-only", enumerate.count_only, "Print only the count");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run the claim suite");
  cmd_verify->add_option("--claims", verify.claims, "Comma list of claim ids or 'all'");
  cmd_verify->add_option("--nmin", verify.n_min, "Smallest order")->check(CLI::PositiveNumber);
  cmd_verify->add_option("--nmax", verify.n_max, "Largest order")->check(CLI::PositiveNumber);
  cmd_verify->add_option("--out", verify.out, "Write the JSON report here");
  cmd_verify->add_option("--strict", verify.strict,
                         "Exit 3 if any listed claim (default: every selected claim) has a FAIL")
      ->expected(0, 1)
      ->default_str("");
  cmd_verify->add_option("--spine-max-len", verify.spine_max_len, "Longest spine in spine grids")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--spine-max-deg", verify.spine_max_deg, "Largest spine degree in spine grids")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_compute) {
      if (compute.file.empty() && compute.family.empty()) {
        std::cerr << "compute: one of --file or --family is required\n";
        return kExitUsage;
      }
      return run_compute(compute, common);
    }
    if (*cmd_extremal) return run_extremal(extremal, common);
    if (*cmd_enumerate) return run_enumerate(enumerate, common);
    if (*cmd_verify) return run_verify(verify, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}
