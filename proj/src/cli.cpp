#include "grm/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "grm/canonical.hpp"
#include "grm/census_algebra.hpp"
#include "grm/enumeration.hpp"
#include "grm/error.hpp"
#include "grm/families.hpp"
#include "grm/indices.hpp"
#include "grm/report.hpp"
#include "grm/transforms.hpp"
#include "grm/verify.hpp"

namespace grm::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string default_out_dir() {
  const char* env = std::getenv(kOutDirVariable);
  return env && *env ? env : ".";
}

Rational parse_lambda(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError("--lambda: " + std::string(e.what()));
  }
}

Tree read_tree(const std::string& path) { return build_tree(parse_edge_list_file(path)); }

void check_choice(const std::string& flag, const std::string& value, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (value == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : "|") + a;
  throw UsageError(flag + ": expected one of " + list + ", got '" + value + "'");
}

ordered_json census_json(const DegreeCensus& c) {
  ordered_json j = ordered_json::object();
  for (const auto& [d, count] : c.vertex_counts()) j["n" + std::to_string(d)] = count;
  for (const auto& [ij, count] : c.edge_counts()) {
    j["m" + std::to_string(ij.first) + std::to_string(ij.second)] = count;
  }
  return j;
}

std::string family_stem(const FamilySpec& s) {
  std::string stem(to_string(s.kind));
  switch (s.kind) {
    case FamilyKind::Path:
    case FamilyKind::Star: return stem + "_n" + std::to_string(s.n);
    case FamilyKind::Spider: return stem + "_n" + std::to_string(s.n) + "_d" + std::to_string(s.delta);
    case FamilyKind::Broom:
      return stem + "_n" + std::to_string(s.n) + "_d" + std::to_string(s.delta) + "_" + std::to_string(s.delta2);
    default: return stem + "_k" + std::to_string(s.k);
  }
}

// ---- subcommands -----------------------------------------------------------

struct IndexArgs {
  std::string tree;
  std::string lambda = "-2";
  std::string format = "table";
};

int cmd_index(const IndexArgs& a, std::ostream& out) {
  check_choice("--format", a.format, {"table", "json", "csv"});
  const Rational lambda = parse_lambda(a.lambda);
  const Tree t = read_tree(a.tree);
  const Rational value = grm(t, lambda);
  if (a.format == "json") {
    ordered_json j;
    j["n"] = t.order();
    j["lambda"] = lambda.to_string();
    j["grm"] = value.to_string();
    j["first_zagreb"] = first_zagreb(t).to_string();
    j["second_zagreb"] = second_zagreb(t).to_string();
    out << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    out << "n,lambda,grm,first_zagreb,second_zagreb\n"
        << t.order() << ',' << lambda << ',' << value << ',' << first_zagreb(t) << ',' << second_zagreb(t) << "\n";
  } else {
    out << value << "\n";
  }
  return kExitOk;
}

struct FamilyArgs {
  std::string kind;
  int k = 0;
  std::size_t n = 0;
  int delta = 0;
  int delta2 = 0;
  std::string emit = "edgelist";
  std::string out;
  std::string format = "table";
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
  check_choice("--emit", a.emit, {"edgelist", "code", "census"});
  check_choice("--format", a.format, {"table", "json"});
  const auto kind = parse_family_kind(a.kind);
  if (!kind) throw UsageError("--kind: unknown family '" + a.kind + "'");
  FamilySpec spec{*kind, a.n, a.k, a.delta, a.delta2};
  const std::vector<Tree> members = make_family(spec);
  const std::string stem = family_stem(spec);

  ordered_json summary;
  summary["family"] = stem;
  summary["members"] = ordered_json::array();
  std::vector<std::string> lines;
  if (a.emit == "edgelist") {
    const fs::path dir = a.out.empty() ? fs::path(default_out_dir()) : fs::path(a.out);
    fs::create_directories(dir);
    ordered_json sidecar;
    sidecar["family"] = stem;
    sidecar["members"] = ordered_json::array();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const fs::path file = dir / (stem + "_" + std::to_string(i) + ".edges");
      write_file_atomic(file.string(), format_edge_list(members[i]));
      ordered_json m;
      m["file"] = file.filename().string();
      m["n"] = members[i].order();
      m["code"] = canonical_code(members[i]).text;
      m["census"] = census_json(census(members[i]));
      sidecar["members"].push_back(m);
      summary["members"].push_back({{"file", file.string()}, {"n", members[i].order()}});
      lines.push_back(file.string() + "  n=" + std::to_string(members[i].order()));
    }
    write_file_atomic((dir / (stem + ".census.json")).string(), sidecar.dump(2) + "\n");
  } else {
    for (const auto& t : members) {
      const std::string text = a.emit == "code" ? canonical_code(t).text : census(t).to_string();
      summary["members"].push_back(text);
      lines.push_back(text);
    }
  }
  if (a.format == "json") {
    out << summary.dump(2) << "\n";
  } else {
    out << stem << ": " << members.size() << (members.size() == 1 ? " member" : " members") << "\n";
    for (const auto& l : lines) out << "  " << l << "\n";
  }
  return kExitOk;
}

struct EnumerateArgs {
  std::size_t n = 0;
  int max_deg = 0;
  bool exact_deg = false;
  bool override_guard = false;
  std::string emit = "code";
  std::string out;
  bool count_only = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  check_choice("--emit", a.emit, {"edgelist", "code", "census", "json", "csv"});
  if (a.exact_deg && a.max_deg == 0) throw UsageError("--exact-deg requires --max-deg");
  EnumSpec spec;
  spec.n = a.n;
  if (a.max_deg > 0) spec.max_degree = a.max_deg;
  spec.exact_degree = a.exact_deg;
  spec.override_guard = a.override_guard;
  if (a.count_only) {
    out << count_trees(spec) << "\n";
    return kExitOk;
  }
  const std::vector<Tree> trees = enumerate_trees(spec);
  std::ostringstream body;
  if (a.emit == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& t : trees) {
      ordered_json j;
      j["code"] = canonical_code(t).text;
      j["census"] = census_json(census(t));
      j["edges"] = ordered_json::array();
      for (const auto& e : t.edges()) j["edges"].push_back({e.u, e.v});
      arr.push_back(j);
    }
    body << arr.dump(2) << "\n";
  } else if (a.emit == "csv") {
    body << "index,code,max_degree,census\n";
    for (std::size_t i = 0; i < trees.size(); ++i) {
      body << i << ',' << canonical_code(trees[i]).text << ',' << max_degree(trees[i]) << ",\""
           << census(trees[i]).to_string() << "\"\n";
    }
  } else {
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (a.emit == "code") {
        body << canonical_code(trees[i]).text << "\n";
      } else if (a.emit == "census") {
        body << census(trees[i]).to_string() << "\n";
      } else {
        body << "# tree " << i << "\n" << format_edge_list(trees[i]) << "\n";
      }
    }
  }
  if (a.out.empty()) {
    out << body.str();
  } else {
    fs::path target(a.out);
    if (fs::is_directory(target)) target /= "trees_n" + std::to_string(a.n) + "." + a.emit;
    write_file_atomic(target.string(), body.str());
    out << trees.size() << " trees written to " << target.string() << "\n";
  }
  return kExitOk;
}

struct CensusArgs {
  int delta = 3;
  std::int64_t n = 0, n3 = 0, m12 = 0, m13 = 0, m22 = 0, m23 = 0, m34 = 0, m44 = 0;
  bool m12_set = false, m13_set = false, m34_set = false, m44_set = false;
  std::string format = "table";
};

int cmd_census(const CensusArgs& a, std::ostream& out) {
  check_choice("--format", a.format, {"table", "json"});
  CensusSolution s;
  if (a.delta == 3) {
    if (a.m12_set || a.m13_set || a.m34_set || a.m44_set) {
      throw UsageError("--m12/--m13/--m34/--m44 are dependent for --delta 3; give --n --n3 --m22 --m23");
    }
    s = solve_census_d3({a.n, a.n3, a.m22, a.m23});
  } else if (a.delta == 4) {
    s = solve_census_d4({a.n, a.n3, a.m12, a.m13, a.m22, a.m23, a.m34, a.m44});
  } else {
    throw UsageError("--delta: census systems exist for 3 and 4 only");
  }
  const EliminationCheck check = a.delta == 3 ? cross_check_d3() : cross_check_d4();
  std::optional<Rational> value;
  if (s.census) value = a.delta == 3 ? grm2_census_d3(*s.census) : grm2_census_d4(*s.census);

  if (a.format == "json") {
    ordered_json j;
    j["delta"] = a.delta;
    ordered_json derived = ordered_json::object();
    for (const auto& [name, v] : s.derived) derived[name] = v.to_string();
    j["derived"] = derived;
    j["realizable"] = s.realizable;
    j["census"] = s.census ? census_json(*s.census) : ordered_json(nullptr);
    j["grm_minus_2"] = value ? ordered_json(value->to_string()) : ordered_json(nullptr);
    j["elimination_check"] = check.agrees;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [name, v] : s.derived) out << name << " = " << v << "\n";
    out << "realizable: " << (s.realizable ? "yes" : "no") << "\n";
    if (s.census) out << "census: " << s.census->to_string() << "\n";
    if (value) out << "GRM_-2 = " << *value << "\n";
    if (!check.agrees) out << "warning: solved forms disagree with elimination\n";
  }
  return check.agrees ? kExitOk : kExitVerificationFailed;
}

struct NormalizeArgs {
  std::string tree;
  std::string format = "jsonl";
};

int cmd_normalize(const NormalizeArgs& a, std::ostream& out) {
  check_choice("--format", a.format, {"jsonl", "table"});
  const Tree input = read_tree(a.tree);
  const NormalizeResult r = normalize(input);
  Tree current = input;
  if (a.format == "table") out << "step  rule  n  ->  n'  claimed  GRM_-2 before  after\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& s = r.trace[i];
    const Rational before = grm(current, Rational(-2));
    const Rational after = grm(s.result, Rational(-2));
    if (a.format == "jsonl") {
      ordered_json j;
      j["step"] = i;
      j["rewrite"] = label(s.rewrite);
      j["n_before"] = current.order();
      j["n_after"] = s.result.order();
      j["removed"] = s.removed;
      j["claimed_delta"] = s.claimed_delta.to_string();
      j["grm_before"] = before.to_string();
      j["grm_after"] = after.to_string();
      out << j.dump() << "\n";
    } else {
      out << i << "  " << label(s.rewrite) << "  " << current.order() << " -> " << s.result.order() << "  "
          << s.claimed_delta << "  " << before << "  " << after << "\n";
    }
    current = s.result;
  }
  if (a.format == "jsonl") {
    ordered_json j;
    j["final_n"] = r.final_tree.order();
    j["final_code"] = canonical_code(r.final_tree).text;
    j["total_claimed_delta"] = r.total_claimed_delta.to_string();
    j["final_edges"] = ordered_json::array();
    for (const auto& e : r.final_tree.edges()) j["final_edges"].push_back({e.u, e.v});
    out << j.dump() << "\n";
  } else {
    out << "final n=" << r.final_tree.order() << " code=" << canonical_code(r.final_tree).text
        << " total claimed delta=" << r.total_claimed_delta << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::vector<std::string> lambdas;
  std::string format = "md";
  std::string out;
  unsigned jobs = 0;
  bool at_most_degree = false;
  bool timings = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto format = parse_report_format(a.format);
  if (!format) throw UsageError("--format: expected json|csv|md, got '" + a.format + "'");
  std::vector<Claim> claims;
  if (a.theorem == "all") {
    claims = {Claim::SpiderMinimum, Claim::CubicMinimum, Claim::CubicCensus, Claim::QuarticMinimum};
  } else if (auto c = parse_claim(a.theorem)) {
    claims = {*c};
  } else {
    throw UsageError("--theorem: expected 2.1|3.2|3.3|sec4|all, got '" + a.theorem + "'");
  }
  VerifyOptions opts;
  opts.n_min = a.n_min;
  opts.n_max = a.n_max;
  for (const auto& l : a.lambdas) opts.lambdas.push_back(parse_lambda(l));
  opts.exact_degree = !a.at_most_degree;
  opts.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  opts.timings = a.timings;

  ReportConfig config{{"format", a.format}};
  std::string body;
  bool ok = true;
  ordered_json combined = ordered_json::array();
  for (Claim c : claims) {
    const VerificationReport report = verify(c, opts);
    ok = ok && report.all_pass();
    const std::string rendered = render_report(report, *format, config);
    if (claims.size() > 1 && *format == ReportFormat::Json) {
      combined.push_back(ordered_json::parse(rendered));
    } else {
      body += (body.empty() ? "" : "\n") + rendered;
    }
  }
  if (claims.size() > 1 && *format == ReportFormat::Json) body = combined.dump(2) + "\n";

  if (a.out.empty()) {
    out << body;
  } else {
    write_file_atomic(a.out, body);
    out << "report written to " << a.out << (ok ? "" : " (failures present)") << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto " + target.string() + ": " + ec.message());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact general reduced second Zagreb index tools for trees", "grmtool"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "GRM_lambda of a tree given as an edge list");
  index->add_option("--tree", index_args.tree, "edge-list file")->required();
  index->add_option("--lambda", index_args.lambda, "rational lambda, p/q or integer");
  index->add_option("--format", index_args.format, "table|json|csv");

  FamilyArgs family_args;
  auto* family = app.add_subcommand("family", "construct a named tree family");
  family->add_option("--kind", family_args.kind, "path|star|spider|broom|T1|T2|T3|TT1|TT2|TT3|TT4")->required();
  family->add_option("--k", family_args.k, "family index for the T and TT kinds");
  family->add_option("--n", family_args.n, "order for path, star, spider, broom");
  family->add_option("--delta", family_args.delta, "max degree for spider and broom");
  family->add_option("--delta2", family_args.delta2, "second hub degree for broom");
  family->add_option("--emit", family_args.emit, "edgelist|code|census");
  family->add_option("--out", family_args.out, "output directory for edge-list files");
  family->add_option("--format", family_args.format, "table|json");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "all unlabeled trees of order n");
  enumerate->add_option("--n", enum_args.n, "order")->required();
  enumerate->add_option("--max-deg", enum_args.max_deg, "degree cap");
  enumerate->add_flag("--exact-deg", enum_args.exact_deg, "require max degree equal to the cap");
  enumerate->add_option("--emit", enum_args.emit, "edgelist|code|census|json|csv");
  enumerate->add_option("--out", enum_args.out, "output file or directory");
  enumerate->add_flag("--count", enum_args.count_only, "print only the number of trees");
  enumerate->add_flag("--override-guard", enum_args.override_guard, "allow n above the default guard");

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "solve a census system from its free variables");
  census_cmd->add_option("--delta", census_args.delta, "3 or 4");
  census_cmd->add_option("--n", census_args.n, "order")->required();
  census_cmd->add_option("--n3", census_args.n3);
  census_cmd->add_option("--m22", census_args.m22);
  census_cmd->add_option("--m23", census_args.m23);
  auto* m12 = census_cmd->add_option("--m12", census_args.m12);
  auto* m13 = census_cmd->add_option("--m13", census_args.m13);
  auto* m34 = census_cmd->add_option("--m34", census_args.m34);
  auto* m44 = census_cmd->add_option("--m44", census_args.m44);
  census_cmd->add_option("--format", census_args.format, "table|json");

  NormalizeArgs normalize_args;
  auto* normalize_cmd = app.add_subcommand("normalize", "apply the four reductions until none applies");
  normalize_cmd->add_option("--tree", normalize_args.tree, "edge-list file")->required();
  normalize_cmd->add_option("--format", normalize_args.format, "jsonl|table");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustively check a claim");
  verify_cmd->add_option("--theorem", verify_args.theorem, "2.1|3.2|3.3|sec4|all")->required();
  verify_cmd->add_option("--n-min", verify_args.n_min);
  verify_cmd->add_option("--n-max", verify_args.n_max);
  verify_cmd->add_option("--lambda", verify_args.lambdas, "repeatable rational lambda");
  verify_cmd->add_option("--format", verify_args.format, "json|csv|md");
  verify_cmd->add_option("--out", verify_args.out, "report file");
  verify_cmd->add_option("--jobs", verify_args.jobs, "worker threads (default: all cores)");
  verify_cmd->add_flag("--at-most-degree", verify_args.at_most_degree, "class uses max degree <= delta");
  verify_cmd->add_flag("--timings", verify_args.timings, "include wall time per cell");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  census_args.m12_set = m12->count() > 0;
  census_args.m13_set = m13->count() > 0;
  census_args.m34_set = m34->count() > 0;
  census_args.m44_set = m44->count() > 0;

  try {
    if (index->parsed()) return cmd_index(index_args, out);
    if (family->parsed()) return cmd_family(family_args, out);
    if (enumerate->parsed()) return cmd_enumerate(enum_args, out);
    if (census_cmd->parsed()) return cmd_census(census_args, out);
    if (normalize_cmd->parsed()) return cmd_normalize(normalize_args, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace grm::cli
