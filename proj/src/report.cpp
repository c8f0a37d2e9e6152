#include "bondlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace bondlab {

using ojson = nlohmann::ordered_json;

std::optional<ReportFormat> parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  return std::nullopt;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_number(double value) {
  if (std::isfinite(value) && value == std::trunc(value) && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

template <typename T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return format_number(*v);
  } else {
    return std::to_string(*v);
  }
}

std::string join_rows(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += "\r\n";
  }
  return out;
}

std::string failed_names(const VerificationRecord& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.status != CheckStatus::Fail) continue;
    if (!out.empty()) out += ';';
    out += c.subject == "b" ? c.name : c.name + ":" + c.subject;
  }
  return out;
}

int count_status(const VerificationRecord& r, CheckStatus s) {
  int k = 0;
  for (const auto& c : r.checks) k += c.status == s;
  return k;
}

template <typename T>
ojson json_opt(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson record_json(const VerificationRecord& r) {
  ojson j;
  j["index"] = r.index;
  j["graph6"] = r.graph6;
  if (!r.error.empty()) {
    j["error"] = r.error;
    j["malformed"] = r.malformed;
    return j;
  }
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.max_degree;
  j["min_degree"] = r.min_degree;
  j["girth"] = json_opt(r.girth);
  j["connected"] = r.connected;
  j["gamma"] = r.gamma;
  j["b"] = r.bondage ? ojson(r.bondage->b) : ojson(nullptr);
  j["b_above_cap"] = r.bondage && r.bondage->above_cap;
  if (r.bondage) {
    auto edges = ojson::array();
    for (const auto& e : r.bondage->witness_edges) edges.push_back({e.u, e.v});
    j["bondage_witness"] = std::move(edges);
  }
  j["hartnell_rall"] = r.hartnell_rall;
  j["bprime"] = json_opt(r.b_prime);
  j["bprime_unfloored"] = json_opt(r.b_prime_unfloored);
  j["component_bprime"] = r.component_b_prime;
  j["chi"] = json_opt(r.chi);
  j["chi_exhaustive"] = r.chi_exhaustive;
  j["chi_orientable"] = json_opt(r.chi_orientable);
  j["chi_nonorientable"] = json_opt(r.chi_nonorientable);
  j["orientable_genus"] = json_opt(r.orientable_genus);
  j["nonorientable_genus"] = json_opt(r.nonorientable_genus);
  j["curvature_total"] = json_opt(r.curvature_total);
  j["search_steps"] = r.search_steps;
  auto checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson cj;
    cj["name"] = c.name;
    cj["subject"] = c.subject;
    cj["kind"] = c.kind == CheckKind::Upper ? "upper" : "lower";
    cj["hypothesis_met"] = c.hypothesis_met;
    cj["bound"] = json_opt(c.bound);
    cj["value"] = json_opt(c.subject_value);
    cj["satisfied"] = c.satisfied;
    cj["slack"] = json_opt(c.slack);
    cj["status"] = to_string(c.status);
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

ojson summary_json(const CorpusSummary& s) {
  ojson j;
  j["graphs"] = s.graphs;
  j["malformed"] = s.malformed;
  j["errors"] = s.errors;
  j["failures"] = s.failures;
  auto tallies = ojson::array();
  for (const auto& [name, t] : s.tallies) {
    tallies.push_back(
        ojson{{"check", name}, {"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}, {"n/a", t.not_applicable}});
  }
  j["checks"] = std::move(tallies);
  auto slack = ojson::array();
  for (auto it = s.min_slack_cubic_t.rbegin(); it != s.min_slack_cubic_t.rend(); ++it) {
    slack.push_back(ojson{{"chi", it->first}, {"min_slack", it->second}});
  }
  j["min_slack_cubic_t"] = std::move(slack);
  j["above_floored_average"] = s.above_floored_average;
  return j;
}

}  // namespace

const std::vector<std::string>& record_csv_columns() {
  static const std::vector<std::string> columns = {
      "graph6",         "n",           "m",
      "delta",          "min_degree",  "girth",
      "connected",      "gamma",       "b",
      "b_above_cap",    "hartnell_rall", "bprime",
      "bprime_unfloored", "chi",       "chi_exhaustive",
      "chi_orientable", "chi_nonorientable", "orientable_genus",
      "nonorientable_genus", "curvature_total", "checks_pass",
      "checks_fail",    "checks_skip", "failed_checks",
      "error"};
  return columns;
}

std::string records_csv(const std::vector<VerificationRecord>& records) {
  std::vector<std::vector<std::string>> rows{record_csv_columns()};
  for (const auto& r : records) {
    if (!r.error.empty()) {
      std::vector<std::string> row(record_csv_columns().size());
      row.front() = r.graph6;
      row.back() = r.error;
      rows.push_back(std::move(row));
      continue;
    }
    rows.push_back({r.graph6,
                    std::to_string(r.n),
                    std::to_string(r.m),
                    std::to_string(r.max_degree),
                    std::to_string(r.min_degree),
                    r.girth ? std::to_string(*r.girth) : "inf",
                    r.connected ? "1" : "0",
                    std::to_string(r.gamma),
                    r.bondage ? std::to_string(r.bondage->b) : "",
                    r.bondage && r.bondage->above_cap ? "1" : "0",
                    std::to_string(r.hartnell_rall),
                    opt(r.b_prime),
                    opt(r.b_prime_unfloored),
                    opt(r.chi),
                    r.chi_exhaustive ? "1" : "0",
                    opt(r.chi_orientable),
                    opt(r.chi_nonorientable),
                    opt(r.orientable_genus),
                    opt(r.nonorientable_genus),
                    opt(r.curvature_total),
                    std::to_string(count_status(r, CheckStatus::Pass)),
                    std::to_string(count_status(r, CheckStatus::Fail)),
                    std::to_string(count_status(r, CheckStatus::Skip)),
                    failed_names(r),
                    ""});
  }
  return join_rows(rows);
}

std::string checks_csv(const std::vector<VerificationRecord>& records) {
  std::vector<std::vector<std::string>> rows{
      {"graph6", "check", "subject", "kind", "status", "bound", "value", "slack", "note"}};
  for (const auto& r : records) {
    for (const auto& c : r.checks) {
      rows.push_back({r.graph6, c.name, c.subject, c.kind == CheckKind::Upper ? "upper" : "lower",
                      to_string(c.status), opt(c.bound), opt(c.subject_value), opt(c.slack), c.note});
    }
  }
  return join_rows(rows);
}

std::string corpus_json(const CorpusReport& report, int indent) {
  ojson j;
  auto records = ojson::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  j["records"] = std::move(records);
  j["summary"] = summary_json(report.summary);
  return j.dump(indent) + "\n";
}

std::string corpus_text(const CorpusReport& report) {
  std::ostringstream out;
  for (const auto& r : report.records) {
    if (!r.error.empty()) {
      out << r.graph6 << "  error: " << r.error << "\n";
      continue;
    }
    out << r.graph6 << "  n=" << r.n << " m=" << r.m << " delta=" << r.max_degree << " gamma=" << r.gamma
        << " b=" << (r.bondage ? std::to_string(r.bondage->b) : "?");
    if (r.b_prime) out << " b'=" << *r.b_prime;
    if (r.chi) out << " chi=" << *r.chi << (r.chi_exhaustive ? "" : " (not certified)");
    const auto failed = failed_names(r);
    out << "  " << (failed.empty() ? "ok" : "FAIL " + failed) << "\n";
  }
  const auto& s = report.summary;
  out << "\ngraphs " << s.graphs << ", malformed " << s.malformed << ", errors " << s.errors << ", failing graphs "
      << s.failures << "\n\n";
  out << "check                          pass  fail  skip   n/a\n";
  for (const auto& [name, t] : s.tallies) {
    char line[128];
    std::snprintf(line, sizeof line, "%-30s %5d %5d %5d %5d\n", name.c_str(), t.pass, t.fail, t.skip,
                  t.not_applicable);
    out << line;
  }
  if (!s.min_slack_cubic_t.empty()) {
    out << "\nminimum slack of delta + floor(t) - b by chi:\n";
    for (auto it = s.min_slack_cubic_t.rbegin(); it != s.min_slack_cubic_t.rend(); ++it) {
      out << "  chi " << it->first << ": " << format_number(it->second) << "\n";
    }
  }
  if (!s.above_floored_average.empty()) {
    out << "\nb exceeds 2*floor(ad) - 1 on:";
    for (const auto& g : s.above_floored_average) out << ' ' << g;
    out << "\n";
  }
  return out.str();
}

std::string emit_corpus(const CorpusReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv:
      return records_csv(report.records);
    case ReportFormat::Json:
      return corpus_json(report);
    case ReportFormat::Text:
      return corpus_text(report);
  }
  return {};
}

std::string table_text(const std::vector<bounds::TableRow>& rows) {
  std::string out = "  chi  floor(r)  floor(t)\n";
  for (const auto& row : rows) {
    char line[64];
    std::snprintf(line, sizeof line, "%5lld  %8lld  %8lld\n", static_cast<long long>(row.chi),
                  static_cast<long long>(row.floor_r), static_cast<long long>(row.floor_t));
    out += line;
  }
  return out;
}

std::string table_csv(const std::vector<bounds::TableRow>& rows) {
  std::vector<std::vector<std::string>> out{{"chi", "floor_r", "floor_t"}};
  for (const auto& row : rows) {
    out.push_back({std::to_string(row.chi), std::to_string(row.floor_r), std::to_string(row.floor_t)});
  }
  return join_rows(out);
}

std::string table_json(const std::vector<bounds::TableRow>& rows, int indent) {
  auto j = ojson::array();
  for (const auto& row : rows) j.push_back(ojson{{"chi", row.chi}, {"floor_r", row.floor_r}, {"floor_t", row.floor_t}});
  return j.dump(indent) + "\n";
}

std::string bound_report_text(const bounds::BoundReport& report) {
  std::ostringstream out;
  out << "delta " << report.delta << ", chi " << report.chi << "\n";
  const auto& d = report.details;
  if (d.t) out << "t = " << format_number(*d.t) << "\n";
  if (d.r) out << "r = " << format_number(*d.r) << "\n";
  if (d.s) out << "s = " << format_number(*d.s) << "\n";
  if (d.c_order) out << "c(order) = " << format_number(*d.c_order) << "\n";
  if (d.c_size) out << "c(size) = " << format_number(*d.c_size) << "\n";
  out << "\n";
  for (const auto& e : report.entries) {
    char head[64];
    std::snprintf(head, sizeof head, "%-18s ", e.name.c_str());
    out << head;
    if (e.applicable) {
      out << "b <= " << *e.value << "  (delta + " << *e.additive_term << ")";
    } else {
      out << "n/a: " << e.reason;
    }
    out << "\n";
  }
  return out.str();
}

std::string bound_report_csv(const bounds::BoundReport& report) {
  std::vector<std::vector<std::string>> rows{{"name", "applicable", "additive_term", "value", "formula", "reason"}};
  for (const auto& e : report.entries) {
    rows.push_back({e.name, e.applicable ? "1" : "0", opt(e.additive_term), opt(e.value), e.formula, e.reason});
  }
  return join_rows(rows);
}

std::string bound_report_json(const bounds::BoundReport& report, int indent) {
  ojson j;
  j["delta"] = report.delta;
  j["chi"] = report.chi;
  ojson details;
  details["t"] = json_opt(report.details.t);
  details["r"] = json_opt(report.details.r);
  details["s"] = json_opt(report.details.s);
  details["c_order"] = json_opt(report.details.c_order);
  details["c_size"] = json_opt(report.details.c_size);
  j["details"] = std::move(details);
  auto entries = ojson::array();
  for (const auto& e : report.entries) {
    ojson ej;
    ej["name"] = e.name;
    ej["formula"] = e.formula;
    ej["applicable"] = e.applicable;
    ej["additive_term"] = json_opt(e.additive_term);
    ej["value"] = json_opt(e.value);
    if (!e.applicable) ej["reason"] = e.reason;
    entries.push_back(std::move(ej));
  }
  j["entries"] = std::move(entries);
  return j.dump(indent) + "\n";
}

}  // namespace bondlab
