#include "bondlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "bondlab/bounds.hpp"
#include "bondlab/domination.hpp"

namespace bondlab {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skip:
      return "skip";
    case CheckStatus::NotApplicable:
      return "n/a";
  }
  return "?";
}

bool VerificationRecord::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
}

const TheoremCheck* VerificationRecord::find(const std::string& name, const std::string& subject) const {
  for (const auto& c : checks)
    if (c.name == name && c.subject == subject) return &c;
  return nullptr;
}

namespace {

constexpr double kTolerance = 1e-9;

class CheckList {
 public:
  explicit CheckList(std::vector<TheoremCheck>& out) : out_(out) {}

  void evaluate(std::string name, std::string subject, CheckKind kind, double bound, double value) {
    TheoremCheck c = base(std::move(name), std::move(subject), kind);
    c.hypothesis_met = true;
    c.bound = bound;
    c.subject_value = value;
    c.slack = kind == CheckKind::Upper ? bound - value : value - bound;
    c.satisfied = *c.slack >= -kTolerance;
    c.status = c.satisfied ? CheckStatus::Pass : CheckStatus::Fail;
    out_.push_back(std::move(c));
  }

  void not_applicable(std::string name, std::string subject, CheckKind kind, std::string why) {
    TheoremCheck c = base(std::move(name), std::move(subject), kind);
    c.status = CheckStatus::NotApplicable;
    c.note = std::move(why);
    out_.push_back(std::move(c));
  }

  void skip(std::string name, std::string subject, CheckKind kind, std::string why) {
    TheoremCheck c = base(std::move(name), std::move(subject), kind);
    c.hypothesis_met = true;
    c.status = CheckStatus::Skip;
    c.note = std::move(why);
    out_.push_back(std::move(c));
  }

 private:
  static TheoremCheck base(std::string name, std::string subject, CheckKind kind) {
    TheoremCheck c;
    c.name = std::move(name);
    c.subject = std::move(subject);
    c.kind = kind;
    return c;
  }

  std::vector<TheoremCheck>& out_;
};

// Bounds that also hold for b' on connected graphs.
bool also_bounds_b_prime(const std::string& name) {
  return name == "cubic_t" || name == "sqrt_t" || name == "girth_s" || name == "triangle_free" ||
         name.starts_with("order_") || name.starts_with("size_");
}

}  // namespace

VerificationRecord verify_graph(const Graph& g, const VerifyOptions& options) {
  if (g.size() == 0) throw GraphError("verify_graph: graph has no edges");
  VerificationRecord r;
  r.graph6 = emit_graph6(g);
  r.n = g.order();
  r.m = g.size();
  const auto stats = degree_stats(g);
  r.max_degree = stats.max_degree;
  r.min_degree = stats.min_degree;
  r.girth = girth(g);
  r.connected = is_connected(g);
  r.gamma = domination_number(g, options.bondage.domination_max_order).gamma;
  r.bondage = bondage_number(g, options.bondage);
  const auto hr = hartnell_rall_bound(g);
  r.hartnell_rall = hr.edge_term;

  if (r.connected) {
    r.b_prime = compute_b_prime(g).b_prime;
    r.b_prime_unfloored = compute_b_prime(g, AverageDegreeTerm::Unfloored).b_prime;
    const auto search = max_euler_characteristic(g, options.search);
    r.chi = search.chi;
    r.chi_exhaustive = search.exhaustive;
    r.chi_orientable = search.orientable.chi;
    r.chi_nonorientable = search.nonorientable.chi;
    r.search_steps = search.steps;
    if (search.orientable.exhaustive && search.nonorientable.exhaustive) {
      r.orientable_genus = search.orientable_genus();
      r.nonorientable_genus = search.nonorientable_genus();
    }
    r.curvature_total = curvature(g, trace_faces(g, search.witness)).total;
  } else {
    for (const auto& part : components(g))
      if (part.size() > 0) r.component_b_prime.push_back(compute_b_prime(part).b_prime);
  }

  CheckList checks(r.checks);
  const auto up = CheckKind::Upper;
  const auto low = CheckKind::Lower;
  const bool b_known = !r.bondage->above_cap;
  const double b = r.bondage->b;

  auto on_b = [&](const std::string& name, double bound) {
    if (b_known) {
      checks.evaluate(name, "b", up, bound, b);
    } else {
      checks.skip(name, "b", up, "b above the search cap");
    }
  };

  on_b("hartnell_rall_edge", hr.edge_term);
  if (r.min_degree >= 1) {
    on_b("hartnell_rall_degree", hr.degree_term);
  } else {
    checks.not_applicable("hartnell_rall_degree", "b", up, "isolated vertex");
  }

  if (!r.connected) {
    checks.not_applicable("average_degree", "m", low, "disconnected");
    checks.not_applicable("bprime", "b", up, "disconnected");
    checks.not_applicable("bprime_unfloored", "b", up, "disconnected");
  } else {
    if (b_known) {
      checks.evaluate("average_degree", "m", low, r.n * (b + 1) / 4.0, r.m);
    } else {
      checks.skip("average_degree", "m", low, "b above the search cap");
    }
    on_b("bprime", *r.b_prime);
    on_b("bprime_unfloored", *r.b_prime_unfloored);
  }

  if (!r.girth) {
    on_b("acyclic", 2);
  } else {
    checks.not_applicable("acyclic", "b", up, "graph has a cycle");
  }

  // Everything below needs the exact maximum Euler characteristic.
  const std::string not_connected = "disconnected";
  if (!r.connected || !r.chi_exhaustive) {
    const std::string why = r.connected ? "chi not certified within budget" : not_connected;
    auto mark = [&](const std::string& name, const std::string& subject, CheckKind kind) {
      if (r.connected) {
        checks.skip(name, subject, kind, why);
      } else {
        checks.not_applicable(name, subject, kind, why);
      }
    };
    for (const auto& d : bounds::bound_catalog()) {
      mark(d.name, "b", up);
      if (also_bounds_b_prime(d.name)) mark(d.name, "b'", up);
    }
    mark("order_lower", "n", low);
    mark("size_lower", "m", low);
    mark("curvature_sum", "|curvature sum|", up);
    return r;
  }

  bounds::BoundInputs in;
  in.delta = r.max_degree;
  in.chi = *r.chi;
  if (r.girth) in.girth = *r.girth;
  in.n = r.n;
  in.m = r.m;
  if (r.orientable_genus) in.h = *r.orientable_genus;
  if (r.nonorientable_genus) in.k = *r.nonorientable_genus;
  const auto report = bounds::bound_report(in);
  for (const auto& e : report.entries) {
    if (e.applicable) {
      on_b(e.name, static_cast<double>(*e.value));
      if (also_bounds_b_prime(e.name)) checks.evaluate(e.name, "b'", up, static_cast<double>(*e.value), *r.b_prime);
    } else {
      checks.not_applicable(e.name, "b", up, e.reason);
      if (also_bounds_b_prime(e.name)) checks.not_applicable(e.name, "b'", up, e.reason);
    }
  }

  if (r.n >= 2) {
    checks.evaluate("order_lower", "n", low, bounds::order_lower_bound(*r.chi), r.n);
    checks.evaluate("size_lower", "m", low, bounds::size_lower_bound(*r.chi), r.m);
  } else {
    checks.not_applicable("order_lower", "n", low, "needs n >= 2");
    checks.not_applicable("size_lower", "m", low, "needs n >= 2");
  }
  checks.evaluate("curvature_sum", "|curvature sum|", up, 1e-12, std::abs(*r.curvature_total));
  return r;
}

CorpusSummary summarize(const std::vector<VerificationRecord>& records) {
  CorpusSummary s;
  s.graphs = records.size();
  auto tally_for = [&](const std::string& key) -> CheckTally& {
    for (auto& [k, t] : s.tallies)
      if (k == key) return t;
    s.tallies.emplace_back(key, CheckTally{});
    return s.tallies.back().second;
  };
  for (const auto& r : records) {
    if (r.malformed) ++s.malformed;
    if (!r.error.empty()) {
      ++s.errors;
      continue;
    }
    if (r.failed()) ++s.failures;
    for (const auto& c : r.checks) {
      auto& t = tally_for(c.subject == "b" ? c.name : c.name + ":" + c.subject);
      switch (c.status) {
        case CheckStatus::Pass:
          ++t.pass;
          break;
        case CheckStatus::Fail:
          ++t.fail;
          break;
        case CheckStatus::Skip:
          ++t.skip;
          break;
        case CheckStatus::NotApplicable:
          ++t.not_applicable;
          break;
      }
      if (c.name == "cubic_t" && c.subject == "b" && c.slack && r.chi) {
        auto [it, fresh] = s.min_slack_cubic_t.emplace(*r.chi, *c.slack);
        if (!fresh) it->second = std::min(it->second, *c.slack);
      }
    }
    if (r.connected && r.bondage && !r.bondage->above_cap) {
      const auto ad_floor = (2 * static_cast<std::int64_t>(r.m)) / r.n;
      if (r.bondage->b > 2 * ad_floor - 1) s.above_floored_average.push_back(r.graph6);
    }
  }
  return s;
}

namespace {

template <typename Item, typename Fn>
std::vector<VerificationRecord> run_ordered(const std::vector<Item>& items, int threads, Fn verify_one) {
  std::vector<VerificationRecord> out(items.size());
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::exception_ptr first_error;
  std::size_t first_error_at = items.size();
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = verify_one(items[i]);
        out[i].index = i;
      } catch (...) {
        std::lock_guard lock(mutex);
        if (i < first_error_at) {
          first_error_at = i;
          first_error = std::current_exception();
        }
      }
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(items.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

VerificationRecord verify_or_record(const Graph& g, const VerifyOptions& inner) {
  try {
    return verify_graph(g, inner);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::exception& e) {
    VerificationRecord r;
    r.graph6 = g.order() <= kMaxVertices ? emit_graph6(g) : std::string{};
    r.n = g.order();
    r.m = g.size();
    r.error = e.what();
    return r;
  }
}

VerifyOptions inner_options(const VerifyOptions& options) {
  VerifyOptions inner = options;
  // Parallelism goes to the corpus level; inner searches run single-threaded.
  if (options.threads > 1) {
    inner.search.threads = 1;
    inner.bondage.threads = 1;
  }
  return inner;
}

}  // namespace

CorpusReport verify_corpus(const std::vector<Graph6Line>& lines, const VerifyOptions& options) {
  const auto inner = inner_options(options);
  CorpusReport report;
  report.records = run_ordered(lines, options.threads, [&](const Graph6Line& line) {
    if (const auto* err = std::get_if<std::string>(&line.parsed)) {
      VerificationRecord r;
      r.graph6 = line.text;
      r.malformed = true;
      r.error = "line " + std::to_string(line.line_number) + ": " + *err;
      return r;
    }
    auto r = verify_or_record(std::get<Graph>(line.parsed), inner);
    if (!r.error.empty()) r.error = "line " + std::to_string(line.line_number) + ": " + r.error;
    return r;
  });
  report.summary = summarize(report.records);
  return report;
}

CorpusReport verify_corpus(const std::vector<Graph>& graphs, const VerifyOptions& options) {
  const auto inner = inner_options(options);
  CorpusReport report;
  report.records = run_ordered(graphs, options.threads, [&](const Graph& g) { return verify_or_record(g, inner); });
  report.summary = summarize(report.records);
  return report;
}

}  // namespace bondlab
