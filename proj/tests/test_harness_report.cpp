#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "bondlab/enumerate.hpp"
#include "bondlab/families.hpp"
#include "bondlab/graph6.hpp"
#include "bondlab/harness.hpp"
#include "bondlab/report.hpp"
#include "oracles.hpp"

using namespace bondlab;

namespace {

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

// Graphs where b exceeds 2 floor(ad) - 1; each is confirmed against the
// brute-force oracle in the test below.
const std::set<std::string> kFlooredAverageExceptions = {"Ck", "EpQ?"};

}  // namespace

TEST(Harness, CompleteBipartiteK44) {
  auto r = verify_graph(make_family("Kmn", {4, 4}));
  EXPECT_EQ(r.chi, 0);
  EXPECT_TRUE(r.chi_exhaustive);
  EXPECT_EQ(r.max_degree, 4);
  ASSERT_TRUE(r.bondage);
  EXPECT_EQ(r.bondage->b, 4);
  EXPECT_EQ(r.b_prime, 7);
  const auto* t = r.find("cubic_t");
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->bound, 7);
  EXPECT_EQ(t->status, CheckStatus::Pass);
  const auto* tf = r.find("triangle_free", "b'");
  ASSERT_NE(tf, nullptr);
  EXPECT_EQ(tf->bound, 7);
  EXPECT_EQ(tf->slack, 0);
  EXPECT_EQ(tf->status, CheckStatus::Pass);
  EXPECT_FALSE(r.failed());
}

TEST(Harness, CompleteGraphK6) {
  auto r = verify_graph(make_family("K", {6}));
  EXPECT_EQ(r.bondage->b, 3);
  EXPECT_EQ(r.orientable_genus, 1);
  const auto* gp = r.find("genus_pair");
  ASSERT_NE(gp, nullptr);
  EXPECT_EQ(gp->status, CheckStatus::Pass);
  EXPECT_LE(*gp->bound, 8);
}

TEST(Harness, TreesUseTheAcyclicRule) {
  for (int n = 2; n <= 8; ++n) {
    auto r = verify_graph(make_family("P", {n}));
    const auto* c = r.find("acyclic");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, CheckStatus::Pass);
    EXPECT_EQ(r.bondage->b, oracle::bondage(make_family("P", {n})));
    EXPECT_LE(r.bondage->b, 2);
  }
}

TEST(Harness, EdgelessGraphIsRejected) {
  EXPECT_THROW(verify_graph(Graph(3)), GraphError);
  auto report = verify_corpus(std::vector<Graph>{Graph(3), make_family("K", {3})});
  ASSERT_EQ(report.records.size(), 2u);
  EXPECT_FALSE(report.records[0].error.empty());
  EXPECT_EQ(report.summary.errors, 1u);
}

TEST(Harness, DisconnectedGraphs) {
  auto r = verify_graph(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}));
  EXPECT_FALSE(r.connected);
  EXPECT_FALSE(r.b_prime.has_value());
  EXPECT_EQ(r.component_b_prime.size(), 2u);
  EXPECT_EQ(r.bondage->b, 1);
  EXPECT_EQ(r.find("cubic_t")->status, CheckStatus::NotApplicable);
}

TEST(Harness, SkipsWhenChiIsNotCertified) {
  VerifyOptions o;
  o.search.budget = 100;
  auto r = verify_graph(make_family("K", {6}), o);
  EXPECT_FALSE(r.chi_exhaustive);
  EXPECT_EQ(r.find("cubic_t")->status, CheckStatus::Skip);
  EXPECT_EQ(r.find("hartnell_rall_edge")->status, CheckStatus::Pass);
}

TEST(Harness, SmallCorpusHasNoFailuresOutsideKnownExceptions) {
  std::vector<Graph> corpus;
  for (const auto& g : enumerate_connected_graphs(6))
    if (g.size() > 0) corpus.push_back(g);
  VerifyOptions o;
  o.threads = 4;
  auto report = verify_corpus(corpus, o);
  EXPECT_EQ(report.summary.errors, 0u);
  std::set<std::string> failed;
  for (const auto& r : report.records) {
    EXPECT_TRUE(r.chi_exhaustive) << r.graph6;
    for (const auto& c : r.checks) {
      EXPECT_GE(c.slack.value_or(0), c.status == CheckStatus::Pass ? 0 : -1e300);
      if (c.status != CheckStatus::Fail) continue;
      EXPECT_EQ(c.name, "bprime") << r.graph6 << " " << c.name << ":" << c.subject;
      failed.insert(r.graph6);
    }
  }
  EXPECT_EQ(failed, kFlooredAverageExceptions);
  for (const auto& text : kFlooredAverageExceptions) {
    Graph g = parse_graph6(text);
    auto stats = degree_stats(g);
    EXPECT_GT(oracle::bondage(g), 2 * stats.average_degree.floor() - 1) << text;
    EXPECT_LE(oracle::bondage(g), 4 * g.size() / g.order() - 1) << text;
  }
}

TEST(Harness, FamilyCorpus) {
  VerifyOptions o;
  o.threads = 4;
  auto report = verify_corpus(family_corpus(), o);
  std::set<std::string> failed;
  for (const auto& r : report.records) {
    EXPECT_TRUE(r.chi_exhaustive) << r.graph6;
    for (const auto& c : r.checks) {
      if (c.status != CheckStatus::Fail) continue;
      EXPECT_EQ(c.name, "bprime") << r.graph6 << " " << c.name << ":" << c.subject;
      failed.insert(r.graph6);
    }
  }
  // Paths on 3k + 1 vertices have b = 2 and 2 floor(ad) - 1 = 1.
  const std::set<std::string> paths = {emit_graph6(make_family("P", {4})), emit_graph6(make_family("P", {7}))};
  EXPECT_EQ(failed, paths);
  for (int n : {4, 7}) EXPECT_EQ(oracle::bondage(make_family("P", {n})), 2);
}

TEST(Harness, OutputOrderAndSlackAreThreadIndependent) {
  auto corpus = family_corpus();
  VerifyOptions one;
  VerifyOptions four;
  four.threads = 4;
  auto a = verify_corpus(corpus, one);
  auto b = verify_corpus(corpus, four);
  EXPECT_EQ(corpus_json(a), corpus_json(b));
  EXPECT_EQ(a.summary.min_slack_cubic_t, b.summary.min_slack_cubic_t);
}

TEST(Harness, MalformedLinesAreRecorded) {
  std::istringstream in("A_\nnot graph6\nBw\n");
  auto report = verify_corpus(read_graph6_stream(in));
  ASSERT_EQ(report.records.size(), 3u);
  EXPECT_TRUE(report.records[1].malformed);
  EXPECT_EQ(report.summary.malformed, 1u);
  EXPECT_EQ(report.records[2].graph6, "Bw");
}

TEST(Harness, EmptyInput) {
  std::istringstream in("");
  auto report = verify_corpus(read_graph6_stream(in));
  EXPECT_TRUE(report.records.empty());
  EXPECT_EQ(report.summary.failures, 0u);
}

TEST(Report, CsvHeader) {
  auto report = verify_corpus(std::vector<Graph>{make_family("K", {4})});
  std::string csv = records_csv(report.records);
  std::string header = csv.substr(0, csv.find("\r\n"));
  EXPECT_EQ(header,
            "graph6,n,m,delta,min_degree,girth,connected,gamma,b,b_above_cap,hartnell_rall,bprime,"
            "bprime_unfloored,chi,chi_exhaustive,chi_orientable,chi_nonorientable,orientable_genus,"
            "nonorientable_genus,curvature_total,checks_pass,checks_fail,checks_skip,failed_checks,error");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(Report, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(format_number(7.0), "7");
  EXPECT_EQ(format_number(-0.5), "-0.5");
}

TEST(Report, JsonSchema) {
  auto report = verify_corpus(std::vector<Graph>{make_family("C", {5}), make_family("P", {3})});
  auto j = nlohmann::json::parse(corpus_json(report));
  ASSERT_TRUE(j.contains("records"));
  ASSERT_TRUE(j.contains("summary"));
  ASSERT_EQ(j["records"].size(), 2u);
  const auto& rec = j["records"][0];
  for (const char* key : {"graph6", "n", "m", "delta", "gamma", "b", "bprime", "chi", "checks"})
    EXPECT_TRUE(rec.contains(key)) << key;
  EXPECT_EQ(rec["graph6"], "Dhc");
  EXPECT_EQ(rec["b"], oracle::bondage(make_family("C", {5})));
  for (const auto& c : rec["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("status"));
  }
  EXPECT_EQ(j["summary"]["graphs"], 2);
}

TEST(Report, TableMatchesGoldenFile) {
  std::ifstream in(std::string(BONDLAB_GOLDEN_DIR) + "/comparison_table.txt", std::ios::binary);
  ASSERT_TRUE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(table_text(bounds::comparison_table(-21, 0)), golden.str());
}

TEST(Report, TableCsvAndJson) {
  auto rows = bounds::comparison_table(-2, 0);
  EXPECT_EQ(table_csv(rows), "chi,floor_r,floor_t\r\n0,3,3\r\n-1,3,3\r\n-2,4,4\r\n");
  auto j = nlohmann::json::parse(table_json(rows));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[2]["floor_t"], 4);
}

TEST(Report, Formats) {
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::Csv);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
  EXPECT_EQ(parse_report_format("text"), ReportFormat::Text);
  EXPECT_FALSE(parse_report_format("xml").has_value());
}
