#include "bondlab/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bondlab/bondage.hpp"
#include "bondlab/bounds.hpp"
#include "bondlab/domination.hpp"
#include "bondlab/embedding.hpp"
#include "bondlab/enumerate.hpp"
#include "bondlab/families.hpp"
#include "bondlab/graph6.hpp"
#include "bondlab/harness.hpp"
#include "bondlab/report.hpp"

namespace bondlab::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Failure with an exit code and an error kind for the stderr prefix.
struct Failure {
  int code;
  std::string kind;
  std::string message;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::vector<std::string> graph6;
  std::vector<std::string> families;
  std::string format = "text";
  int threads = 1;
  std::uint64_t budget = kDefaultSearchBudget;
  bool strict = false;
  int domination_max_order = kDefaultDominationMaxOrder;
  int bondage_cap = 0;  // 0 = default Δ + δ - 1
};

ReportFormat format_of(const RunConfig& cfg) {
  auto f = parse_report_format(cfg.format);
  if (!f) throw Failure{kUsage, "usage", "unknown format '" + cfg.format + "' (csv, json, text)"};
  return *f;
}

Graph family_from_spec(const std::string& spec) {
  std::istringstream in(spec);
  std::string name;
  in >> name;
  std::vector<int> params;
  std::string tok;
  while (in >> tok) {
    try {
      params.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Failure{kUsage, "usage", "family parameter '" + tok + "' is not an integer"};
    }
  }
  try {
    return make_family(name, params);
  } catch (const GraphError& e) {
    throw Failure{kUsage, "usage", e.what()};
  }
}

std::vector<Graph6Line> gather(const RunConfig& cfg, std::istream& in) {
  std::vector<Graph6Line> lines;
  for (const auto& path : cfg.inputs) {
    std::vector<Graph6Line> chunk;
    if (path == "-") {
      chunk = read_graph6_stream(in);
    } else {
      std::ifstream file(path);
      if (!file) throw Failure{kUsage, "input", "cannot open '" + path + "'"};
      chunk = read_graph6_stream(file);
    }
    for (auto& l : chunk) lines.push_back(std::move(l));
  }
  for (const auto& text : cfg.graph6) {
    Graph6Line line{lines.size() + 1, text, std::string{}};
    try {
      line.parsed = parse_graph6(text);
    } catch (const std::exception& e) {
      line.parsed = std::string(e.what());
    }
    lines.push_back(std::move(line));
  }
  for (const auto& spec : cfg.families) {
    Graph g = family_from_spec(spec);
    lines.push_back(Graph6Line{lines.size() + 1, emit_graph6(g), g});
  }
  return lines;
}

// Graphs for commands that need every input to be valid.
std::vector<Graph> strict_graphs(const RunConfig& cfg, std::istream& in) {
  std::vector<Graph> out;
  for (auto& line : gather(cfg, in)) {
    if (const auto* err = std::get_if<std::string>(&line.parsed)) {
      throw Failure{kUsage, "input", "line " + std::to_string(line.line_number) + ": " + *err};
    }
    out.push_back(std::get<Graph>(line.parsed));
  }
  if (out.empty()) throw Failure{kUsage, "usage", "no input graphs (give FILE, -, --graph6 or --family)"};
  return out;
}

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions o;
  o.budget = cfg.budget;
  o.strict = cfg.strict;
  o.threads = cfg.threads;
  return o;
}

BondageOptions bondage_options(const RunConfig& cfg) {
  BondageOptions o;
  if (cfg.bondage_cap > 0) o.cap = cfg.bondage_cap;
  o.threads = cfg.threads;
  o.domination_max_order = cfg.domination_max_order;
  return o;
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

std::string ints_text(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

// Ordered key/value rows rendered as text, CSV or JSON.
struct Row {
  std::vector<std::pair<std::string, ojson>> fields;
  void add(std::string key, ojson value) { fields.emplace_back(std::move(key), std::move(value)); }
};

std::string cell(const ojson& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) {
      if (!out.empty()) out += ' ';
      out += cell(x);
    }
    return out;
  }
  return v.dump();
}

void emit_rows(const std::vector<Row>& rows, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::Json: {
      auto arr = ojson::array();
      for (const auto& r : rows) {
        ojson j = ojson::object();
        for (const auto& [k, v] : r.fields) j[k] = v;
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case ReportFormat::Csv: {
      if (rows.empty()) break;
      std::string line;
      for (const auto& [k, v] : rows.front().fields) line += (line.empty() ? "" : ",") + csv_field(k);
      out << line << "\r\n";
      for (const auto& r : rows) {
        line.clear();
        bool first = true;
        for (const auto& [k, v] : r.fields) {
          if (!first) line += ',';
          first = false;
          line += csv_field(cell(v));
        }
        out << line << "\r\n";
      }
      break;
    }
    case ReportFormat::Text: {
      bool first = true;
      for (const auto& r : rows) {
        if (!first) out << "\n";
        first = false;
        std::size_t width = 0;
        for (const auto& [k, v] : r.fields) width = std::max(width, k.size());
        for (const auto& [k, v] : r.fields) {
          out << k << std::string(width - k.size() + 2, ' ') << (v.is_null() ? "-" : cell(v)) << "\n";
        }
      }
      break;
    }
  }
}

template <typename T>
ojson maybe(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

int cmd_invariants(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto format = format_of(cfg);
  std::vector<Row> rows;
  for (const auto& g : strict_graphs(cfg, in)) {
    Row r;
    r.add("graph6", emit_graph6(g));
    r.add("n", g.order());
    r.add("m", g.size());
    if (g.order() == 0) {
      rows.push_back(std::move(r));
      continue;
    }
    const auto stats = degree_stats(g);
    r.add("delta", stats.max_degree);
    r.add("min_degree", stats.min_degree);
    r.add("average_degree", std::to_string(stats.average_degree.num) + "/" + std::to_string(stats.average_degree.den));
    const auto gi = girth(g);
    r.add("girth", gi ? ojson(*gi) : ojson("inf"));
    r.add("connected", is_connected(g));
    r.add("components", static_cast<int>(components(g).size()));
    const auto dom = domination_number(g, cfg.domination_max_order);
    r.add("gamma", dom.gamma);
    r.add("gamma_witness", ints_text(dom.witness));
    if (g.size() == 0) {
      rows.push_back(std::move(r));
      continue;
    }
    const auto bond = bondage_number(g, bondage_options(cfg));
    r.add("b", bond.above_cap ? ojson(">" + std::to_string(bond.b - 1)) : ojson(bond.b));
    r.add("bondage_witness", edges_text(bond.witness_edges));
    const auto hr = hartnell_rall_bound(g);
    r.add("hartnell_rall", hr.edge_term);
    r.add("hartnell_rall_degree", hr.degree_term);
    if (is_connected(g)) {
      const auto bp = compute_b_prime(g);
      r.add("bprime", bp.b_prime);
      r.add("bprime_edge_term", bp.edge_term);
      r.add("bprime_ad_term", bp.ad_term);
      r.add("bprime_unfloored", compute_b_prime(g, AverageDegreeTerm::Unfloored).b_prime);
    } else {
      r.add("bprime", nullptr);
    }
    rows.push_back(std::move(r));
  }
  emit_rows(rows, format, out);
  return kOk;
}

int cmd_chi(const RunConfig& cfg, bool witness, bool orientable_only, std::istream& in, std::ostream& out) {
  const auto format = format_of(cfg);
  auto opts = search_options(cfg);
  opts.orientable_only = orientable_only;
  std::vector<Row> rows;
  for (const auto& g : strict_graphs(cfg, in)) {
    if (!is_connected(g)) throw Failure{kUsage, "input", emit_graph6(g) + ": embedding search needs a connected graph"};
    const auto res = max_euler_characteristic(g, opts);
    Row r;
    r.add("graph6", emit_graph6(g));
    r.add("chi", res.chi);
    r.add("exhaustive", res.exhaustive);
    r.add("chi_orientable", maybe(res.orientable.chi));
    r.add("orientable_exhaustive", res.orientable.exhaustive);
    r.add("chi_nonorientable", res.nonorientable_searched ? maybe(res.nonorientable.chi) : ojson(nullptr));
    r.add("nonorientable_exhaustive", res.nonorientable_searched && res.nonorientable.exhaustive);
    const bool both = res.orientable.exhaustive && res.nonorientable_searched && res.nonorientable.exhaustive;
    r.add("orientable_genus", res.orientable.exhaustive ? maybe(res.orientable_genus()) : ojson(nullptr));
    r.add("nonorientable_genus", both ? maybe(res.nonorientable_genus()) : ojson(nullptr));
    r.add("steps", res.steps);
    if (witness && g.size() > 0) {
      if (format == ReportFormat::Json) {
        r.add("witness", ojson::parse(witness_json(g, res.witness)));
      } else {
        r.add("witness", witness_json(g, res.witness));
      }
    }
    rows.push_back(std::move(r));
  }
  emit_rows(rows, format, out);
  return kOk;
}

struct BoundArgs {
  std::optional<std::int64_t> delta, chi, girth, n, m, h, k;
};

int cmd_bounds(const RunConfig& cfg, const BoundArgs& a, std::istream& in, std::ostream& out) {
  const auto format = format_of(cfg);
  std::vector<bounds::BoundInputs> inputs;
  const bool from_graph = !cfg.inputs.empty() || !cfg.graph6.empty() || !cfg.families.empty();
  if (from_graph) {
    for (const auto& g : strict_graphs(cfg, in)) {
      if (!is_connected(g) || g.size() == 0) {
        throw Failure{kUsage, "input", emit_graph6(g) + ": bounds from a graph need a connected graph with edges"};
      }
      auto res = max_euler_characteristic(g, search_options(cfg));
      if (!res.exhaustive) {
        throw Failure{kBudgetExhausted, "budget", emit_graph6(g) + ": chi not certified within the search budget"};
      }
      bounds::BoundInputs bi;
      bi.delta = degree_stats(g).max_degree;
      bi.chi = res.chi;
      if (auto gi = girth(g)) bi.girth = *gi;
      bi.n = g.order();
      bi.m = g.size();
      bi.h = res.orientable_genus();
      bi.k = res.nonorientable_genus();
      inputs.push_back(bi);
    }
  } else {
    if (!a.delta || !a.chi) throw Failure{kUsage, "usage", "bounds needs --delta and --chi, or a graph"};
    bounds::BoundInputs bi;
    bi.delta = *a.delta;
    bi.chi = *a.chi;
    bi.girth = a.girth;
    bi.n = a.n;
    bi.m = a.m;
    bi.h = a.h;
    bi.k = a.k;
    inputs.push_back(bi);
  }
  bool first = true;
  for (const auto& bi : inputs) {
    const auto report = bounds::bound_report(bi);
    if (!first && format == ReportFormat::Text) out << "\n";
    first = false;
    switch (format) {
      case ReportFormat::Text:
        out << bound_report_text(report);
        break;
      case ReportFormat::Csv:
        out << bound_report_csv(report);
        break;
      case ReportFormat::Json:
        out << bound_report_json(report);
        break;
    }
  }
  return kOk;
}

int cmd_table(const RunConfig& cfg, std::int64_t from, std::int64_t to, std::ostream& out) {
  const auto format = format_of(cfg);
  if (from > to || to > 0) throw Failure{kUsage, "usage", "table needs --chi-from <= --chi-to <= 0"};
  const auto rows = bounds::comparison_table(from, to);
  switch (format) {
    case ReportFormat::Text:
      out << table_text(rows);
      break;
    case ReportFormat::Csv:
      out << table_csv(rows);
      break;
    case ReportFormat::Json:
      out << table_json(rows);
      break;
  }
  return kOk;
}

std::vector<Graph> family_corpus() {
  std::vector<Graph> out;
  for (int n : {4, 5, 6}) out.push_back(make_family("K", {n}));
  out.push_back(make_family("Kmn", {3, 3}));
  out.push_back(make_family("Kmn", {4, 4}));
  out.push_back(make_family("petersen"));
  for (int n = 3; n <= 8; ++n) out.push_back(make_family("C", {n}));
  for (int n = 2; n <= 8; ++n) out.push_back(make_family("P", {n}));
  out.push_back(make_family("Q", {3}));
  return out;
}

int cmd_verify(const RunConfig& cfg, int enumerate_n, bool families, bool long_checks, std::istream& in,
               std::ostream& out) {
  const auto format = format_of(cfg);
  VerifyOptions opts;
  opts.search = search_options(cfg);
  opts.bondage = bondage_options(cfg);
  opts.threads = cfg.threads;

  std::vector<Graph6Line> lines = gather(cfg, in);
  auto add_graph = [&](const Graph& g) { lines.push_back(Graph6Line{lines.size() + 1, emit_graph6(g), g}); };
  if (enumerate_n > 0) {
    if (enumerate_n > kMaxEnumerationOrder) {
      throw Failure{kUsage, "usage", "--enumerate is limited to n <= " + std::to_string(kMaxEnumerationOrder)};
    }
    enumerate_connected_graphs(enumerate_n, [&](const Graph& g) {
      if (g.size() > 0) add_graph(g);
    });
  }
  if (families)
    for (const auto& g : family_corpus()) add_graph(g);

  const auto report = verify_corpus(lines, opts);
  if (long_checks && format == ReportFormat::Csv) {
    out << checks_csv(report.records);
  } else {
    out << emit_corpus(report, format);
  }
  return report.summary.failures > 0 ? kVerificationFailed : kOk;
}

int cmd_enumerate(int max_n, std::ostream& out) {
  if (max_n < 1 || max_n > kMaxEnumerationOrder) {
    throw Failure{kUsage, "usage", "--max-n must be in 1.." + std::to_string(kMaxEnumerationOrder)};
  }
  enumerate_connected_graphs(max_n, [&](const Graph& g) { out << emit_graph6(g) << "\n"; });
  return kOk;
}

int cmd_families(const std::string& name, const std::vector<int>& params, bool list, std::ostream& out) {
  if (list || name.empty()) {
    for (const auto& f : family_names()) out << f << "\n";
    return kOk;
  }
  try {
    out << emit_graph6(make_family(name, params)) << "\n";
  } catch (const GraphError& e) {
    throw Failure{kUsage, "usage", e.what()};
  }
  return kOk;
}

std::string bounds_footer() {
  std::string out = "\nBound entries (D = maximum degree):\n";
  for (const auto& d : bounds::bound_catalog()) {
    out += "  " + d.name + ": b <= " + d.formula + "  [" + d.hypothesis + "]\n";
  }
  return out;
}

std::string verify_footer() {
  return bounds_footer() +
         "\nAdditional checks:\n"
         "  hartnell_rall_edge: b <= min over edges of d(u) + d(v) - 1 - |N(u) & N(v)|\n"
         "  hartnell_rall_degree: b <= D + min degree - 1  [no isolated vertices]\n"
         "  average_degree: m >= n(b + 1)/4  [connected]\n"
         "  bprime: b <= min(edge term, 2 floor(2m/n) - 1)  [connected]\n"
         "  bprime_unfloored: b <= min(edge term, floor(4m/n) - 1)  [connected]\n"
         "  acyclic: b <= 2  [forests]\n"
         "  order_lower: n >= (3 + sqrt(17 - 8chi))/2  [connected, n >= 2]\n"
         "  size_lower: m >= 5/2 - chi + sqrt(17 - 8chi)/2  [connected, n >= 2]\n"
         "  curvature_sum: |sum of edge curvatures| <= 1e-12 on the witness embedding\n"
         "Checks with subject b' apply the same bound to b'. Checks needing chi are\n"
         "skipped when the embedding search does not certify chi within budget.\n"
         "Exit status 1 when any check fails.\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"bondlab: domination, bondage, embeddings and bondage-number bounds for small graphs"};
  app.name("bondlab");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the long flags (flags win)");

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  auto* threads_opt = app.add_option("--threads", cfg.threads, "Worker threads (default: BONDLAB_THREADS, else 1)")
                          ->check(CLI::Range(1, 1024));
  app.add_option("--budget", cfg.budget, "Face-tracing steps per surface class in the embedding search")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", cfg.strict, "Fail (exit 3) instead of reporting an uncertified chi");
  app.add_option("--domination-max-order", cfg.domination_max_order, "Largest order accepted by the domination solver")
      ->check(CLI::Range(1, kMaxVertices));
  app.add_option("--bondage-cap", cfg.bondage_cap, "Largest edge-subset size tried for b (default D + min degree - 1)")
      ->check(CLI::PositiveNumber);

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("inputs", cfg.inputs, "graph6 files, one graph per line; - reads standard input");
    sub->add_option("-g,--graph6", cfg.graph6, "graph6 string (repeatable)");
    sub->add_option("-F,--family", cfg.families, "family spec such as \"Kmn 3 3\" (repeatable)");
  };

  auto* invariants = app.add_subcommand("invariants", "Degrees, girth, gamma, b, b' and the Hartnell-Rall term");
  add_inputs(invariants);

  bool witness = false;
  bool orientable_only = false;
  auto* chi = app.add_subcommand("chi", "Maximum Euler characteristic over cellular embeddings");
  add_inputs(chi);
  chi->add_flag("--witness", witness, "Include a witness rotation system as JSON");
  chi->add_flag("--orientable-only", orientable_only, "Search orientable embeddings only");

  BoundArgs bargs;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every bondage-number bound");
  add_inputs(bounds_cmd);
  bounds_cmd->add_option("--delta", bargs.delta, "Maximum degree");
  bounds_cmd->add_option("--chi", bargs.chi, "Euler characteristic");
  bounds_cmd->add_option("--girth", bargs.girth, "Girth (omit for forests)");
  bounds_cmd->add_option("--n", bargs.n, "Order");
  bounds_cmd->add_option("--m", bargs.m, "Size");
  bounds_cmd->add_option("--orientable-genus", bargs.h, "Orientable genus h");
  bounds_cmd->add_option("--nonorientable-genus", bargs.k, "Non-orientable genus k");
  bounds_cmd->footer(bounds_footer());

  std::int64_t chi_from = -21;
  std::int64_t chi_to = 0;
  auto* table = app.add_subcommand("table", "floor(r) and floor(t) for a range of Euler characteristics");
  table->add_option("--chi-from", chi_from, "Lowest chi")->capture_default_str();
  table->add_option("--chi-to", chi_to, "Highest chi (<= 0)")->capture_default_str();
  table->footer(
      "\nr: largest root of z^3 + 2z^2 + (6chi - 7)z + 18chi - 24 (bound D + floor(r))\n"
      "t: largest root of z^3 + z^2 + (3chi - 8)z + 9chi - 12 (bound D + floor(t))\n");

  int enumerate_n = 0;
  bool families = false;
  bool long_checks = false;
  auto* verify = app.add_subcommand("verify", "Check every applicable bound on a corpus");
  add_inputs(verify);
  verify->add_option("--enumerate", enumerate_n, "Add all connected graphs with 2..N vertices (N <= 6)");
  verify->add_flag("--families", families, "Add K4-K6, K3,3, K4,4, Petersen, C3-C8, P2-P8, Q3");
  verify->add_flag("--checks", long_checks, "With --format csv, one row per check");
  verify->footer(verify_footer());

  int max_n = 6;
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism as graph6");
  enumerate->add_option("--max-n", max_n, "Largest order (<= 6)")->capture_default_str();

  std::string family_name;
  std::vector<int> family_params;
  bool list = false;
  auto* fam = app.add_subcommand("families", "Emit a named family member as graph6");
  fam->add_option("name", family_name, "K, Kmn, C, P, petersen, Q or W");
  fam->add_option("params", family_params, "Integer parameters");
  fam->add_flag("--list", list, "List family ids");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "bondlab: error[usage]: " << e.what() << "\n";
    return kUsage;
  }
  if (threads_opt->count() == 0) {
    if (const char* env = std::getenv("BONDLAB_THREADS"); env != nullptr && *env != '\0') {
      const std::string text = env;
      int value = 0;
      auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || end != text.data() + text.size() || value < 1 || value > 1024) {
        err << "bondlab: error[usage]: BONDLAB_THREADS must be an integer in 1..1024, got '" << text << "'\n";
        return kUsage;
      }
      cfg.threads = value;
    }
  }

  try {
    if (*invariants) return cmd_invariants(cfg, in, out);
    if (*chi) return cmd_chi(cfg, witness, orientable_only, in, out);
    if (*bounds_cmd) return cmd_bounds(cfg, bargs, in, out);
    if (*table) return cmd_table(cfg, chi_from, chi_to, out);
    if (*verify) return cmd_verify(cfg, enumerate_n, families, long_checks, in, out);
    if (*enumerate) return cmd_enumerate(max_n, out);
    if (*fam) return cmd_families(family_name, family_params, list, out);
  } catch (const Failure& f) {
    err << "bondlab: error[" << f.kind << "]: " << f.message << "\n";
    return f.code;
  } catch (const BudgetExceeded& e) {
    err << "bondlab: error[budget]: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const std::invalid_argument& e) {
    err << "bondlab: error[input]: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "bondlab: error[internal]: " << e.what() << "\n";
    return kUsage;
  }
  err << "bondlab: error[usage]: no subcommand\n";
  return kUsage;
}

}  // namespace bondlab::cli
