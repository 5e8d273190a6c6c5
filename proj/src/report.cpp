#include "grm/report.hpp"

#include <sstream>

#include <json.hpp>

namespace grm {
namespace {

using nlohmann::ordered_json;

std::string opt(const std::optional<Rational>& r) { return r ? r->to_string() : ""; }

ordered_json header(const VerificationReport& report, const ReportConfig& config) {
  ordered_json j;
  j["tool"] = "grmtool";
  j["version"] = kToolVersion;
  j["theorem"] = claim_id(report.claim);
  ordered_json cfg;
  cfg["n_min"] = report.options.n_min;
  cfg["n_max"] = report.options.n_max;
  ordered_json lambdas = ordered_json::array();
  for (const auto& l : report.options.lambdas) lambdas.push_back(l.to_string());
  cfg["lambdas"] = lambdas;
  cfg["degree_mode"] = report.options.exact_degree ? "exact" : "at-most";
  cfg["timings"] = report.options.timings;
  for (const auto& [k, v] : config) cfg[k] = v;
  j["config"] = cfg;
  return j;
}

ordered_json cell_json(const Cell& c) {
  ordered_json j;
  j["n"] = c.n;
  j["delta"] = c.delta;
  j["lambda"] = c.lambda.to_string();
  j["class_size"] = c.class_size;
  j["minimum"] = c.minimum ? ordered_json(c.minimum->to_string()) : ordered_json(nullptr);
  j["bound"] = c.bound ? ordered_json(c.bound->to_string()) : ordered_json(nullptr);
  j["verdict"] = to_string(c.verdict);
  j["pass"] = c.pass;
  j["argmin_codes"] = c.argmin_codes;
  ordered_json comps = ordered_json::array();
  for (const auto& s : c.comparisons) {
    ordered_json cj;
    cj["label"] = s.label;
    cj["expected"] = s.expected;
    cj["actual"] = s.actual;
    cj["actual_within_expected"] = s.actual_within_expected;
    cj["expected_within_actual"] = s.expected_within_actual;
    comps.push_back(cj);
  }
  j["comparisons"] = comps;
  j["counterexamples"] = c.counterexamples;
  j["notes"] = c.notes;
  if (c.wall_ms) j["wall_ms"] = *c.wall_ms;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string joined(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string inclusion_flags(const Cell& c) {
  if (c.comparisons.empty()) return "";
  const auto& s = c.comparisons.front();
  return std::string(s.actual_within_expected ? "1" : "0") + "/" + (s.expected_within_actual ? "1" : "0");
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "md" || text == "markdown" || text == "table") return ReportFormat::Markdown;
  return std::nullopt;
}

std::string render_report(const VerificationReport& report, ReportFormat format, const ReportConfig& config) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json: {
      ordered_json j = header(report, config);
      ordered_json cells = ordered_json::array();
      for (const auto& c : report.cells) cells.push_back(cell_json(c));
      j["cells"] = cells;
      j["summary"] = {{"cells", report.cells.size()}, {"failures", report.failures()}, {"pass", report.all_pass()}};
      out << j.dump(2) << "\n";
      break;
    }
    case ReportFormat::Csv: {
      out << "# " << header(report, config).dump() << "\n";
      out << "n,delta,lambda,class_size,minimum,bound,verdict,argmin_count,family_inclusions,pass,notes";
      if (report.options.timings) out << ",wall_ms";
      out << "\n";
      for (const auto& c : report.cells) {
        out << c.n << ',' << c.delta << ',' << c.lambda << ',' << c.class_size << ',' << opt(c.minimum) << ','
            << opt(c.bound) << ',' << to_string(c.verdict) << ',' << c.argmin_codes.size() << ','
            << inclusion_flags(c) << ',' << (c.pass ? "pass" : "FAIL") << ',' << csv_field(joined(c.notes, "; "));
        if (report.options.timings) out << ',' << (c.wall_ms ? *c.wall_ms : 0.0);
        out << "\n";
      }
      break;
    }
    case ReportFormat::Markdown: {
      out << "# grmtool " << kToolVersion << " verify " << claim_id(report.claim) << "\n\n";
      out << "config: `" << header(report, config)["config"].dump() << "`\n\n";
      out << "| n | Δ | λ | trees | min | bound | verdict | argmin | ⊆ / ⊇ family | result | notes |\n";
      out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& c : report.cells) {
        out << "| " << c.n << " | " << c.delta << " | " << c.lambda << " | " << c.class_size << " | "
            << opt(c.minimum) << " | " << opt(c.bound) << " | " << to_string(c.verdict) << " | "
            << c.argmin_codes.size() << " | " << inclusion_flags(c) << " | " << (c.pass ? "pass" : "FAIL") << " | "
            << joined(c.notes, "; ") << " |\n";
      }
      out << "\n" << report.cells.size() - report.failures() << "/" << report.cells.size() << " cells pass\n";
      break;
    }
  }
  return out.str();
}

}  // namespace grm
