#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bondlab/bondage.hpp"
#include "bondlab/embedding.hpp"
#include "bondlab/graph.hpp"
#include "bondlab/graph6.hpp"

namespace bondlab {

enum class CheckStatus { Pass, Fail, Skip, NotApplicable };
std::string to_string(CheckStatus status);

enum class CheckKind { Upper, Lower };

/// One inequality evaluated on one graph: subject <= bound (Upper) or
/// subject >= bound (Lower).
struct TheoremCheck {
  std::string name;
  std::string subject;  // "b", "b'", "n", "m", "|curvature sum|"
  CheckKind kind = CheckKind::Upper;
  bool hypothesis_met = false;
  std::optional<double> bound;
  std::optional<double> subject_value;
  bool satisfied = false;
  std::optional<double> slack;  // distance to the bound, >= 0 when satisfied
  CheckStatus status = CheckStatus::NotApplicable;
  std::string note;
};

struct VerificationRecord {
  std::size_t index = 0;  // position in the input
  std::string graph6;
  /// Set when the graph could not be verified (malformed line, no edges,
  /// too large); nothing else is filled in then.
  std::string error;
  bool malformed = false;

  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  std::optional<int> girth;
  bool connected = false;
  int gamma = 0;
  std::optional<BondageResult> bondage;
  int hartnell_rall = 0;
  std::optional<int> b_prime;            // connected graphs
  std::optional<int> b_prime_unfloored;  // ⌊4m/n⌋ - 1 variant
  std::vector<int> component_b_prime;    // disconnected graphs, per component with edges

  // Embedding data, connected graphs only.
  std::optional<int> chi;
  bool chi_exhaustive = false;
  std::optional<int> chi_orientable;
  std::optional<int> chi_nonorientable;
  std::optional<int> orientable_genus;
  std::optional<int> nonorientable_genus;
  std::optional<double> curvature_total;
  std::uint64_t search_steps = 0;

  std::vector<TheoremCheck> checks;

  bool failed() const;
  const TheoremCheck* find(const std::string& name, const std::string& subject = "b") const;
};

struct VerifyOptions {
  SearchOptions search;
  BondageOptions bondage;
  /// Graphs verified concurrently by verify_corpus.
  int threads = 1;
};

/// Runs invariants, embedding search, bondage and every bound on g. Graphs
/// without edges are rejected with GraphError.
VerificationRecord verify_graph(const Graph& g, const VerifyOptions& options = {});

struct CheckTally {
  int pass = 0;
  int fail = 0;
  int skip = 0;
  int not_applicable = 0;
};

struct CorpusSummary {
  std::size_t graphs = 0;
  std::size_t malformed = 0;  // unparseable input lines
  std::size_t errors = 0;     // records with `error` set, malformed included
  std::size_t failures = 0;
  /// Keyed by "name" for subject b, "name:subject" otherwise; in first-seen order.
  std::vector<std::pair<std::string, CheckTally>> tallies;
  /// Smallest Δ + ⌊t⌋ - b observed for each χ <= 0 (exploratory).
  std::map<int, double> min_slack_cubic_t;
  /// Connected graphs with b > 2⌊ad⌋ - 1.
  std::vector<std::string> above_floored_average;
};

struct CorpusReport {
  std::vector<VerificationRecord> records;
  CorpusSummary summary;
};

/// Verifies every line; malformed lines and graphs that cannot be verified
/// become records with `error` set. Output order follows input order for any
/// thread count. BudgetExceeded from a strict search propagates.
CorpusReport verify_corpus(const std::vector<Graph6Line>& lines, const VerifyOptions& options = {});
CorpusReport verify_corpus(const std::vector<Graph>& graphs, const VerifyOptions& options = {});

CorpusSummary summarize(const std::vector<VerificationRecord>& records);

}  // namespace bondlab
