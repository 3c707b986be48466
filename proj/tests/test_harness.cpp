#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "eigmult/errors.hpp"
#include "eigmult/families.hpp"
#include "eigmult/graph6.hpp"
#include "eigmult/harness.hpp"
#include "eigmult/report_io.hpp"
#include "oracles.hpp"

using namespace eigmult;

namespace {

bool contains(const std::vector<std::string>& list, const std::string& item) {
  return std::find(list.begin(), list.end(), item) != list.end();
}

void check_integers_equal(const ParameterReport& a, const ParameterReport& b) {
  CHECK(a.graph6 == b.graph6);
  CHECK(a.n == b.n);
  CHECK(a.m == b.m);
  CHECK(a.is_forest == b.is_forest);
  CHECK(a.t_minus == b.t_minus);
  CHECK(a.delta == b.delta);
  CHECK(a.p_bruteforce == b.p_bruteforce);
  CHECK(a.z == b.z);
  CHECK(a.t_plus == b.t_plus);
  CHECK(a.delta_plus == b.delta_plus);
  CHECK(a.m_lower_numeric == b.m_lower_numeric);
  CHECK(a.m_exact == b.m_exact);
  CHECK(a.chain_ok == b.chain_ok);
  CHECK(a.witnesses.t_minus.removed == b.witnesses.t_minus.removed);
  CHECK(a.witnesses.t_plus.removed == b.witnesses.t_plus.removed);
  CHECK(a.witnesses.delta.removed == b.witnesses.delta.removed);
  CHECK(a.witnesses.delta_plus.removed == b.witnesses.delta_plus.removed);
  CHECK(a.witnesses.z == b.witnesses.z);
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_small_graphs(1, false).size() == 1);
  CHECK(enumerate_small_graphs(3, false).size() == 8);
  CHECK(enumerate_small_graphs(3, true).size() == 4);
  CHECK(enumerate_small_graphs(4, true).size() == 38);
  for (int n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for_each_small_graph(n, true, [&](const Graph&) { return ++count, true; });
    CHECK(count == oracle::kConnectedLabeled[n]);
  }
  CHECK_THROWS_AS(enumerate_small_graphs(8, false), DomainError);
  CHECK_THROWS_AS(enumerate_small_graphs(0, false), DomainError);

  const auto three = enumerate_small_graphs(3, false);
  CHECK(three[1] == Graph(3, {{0, 1}}));
  CHECK(three[2] == Graph(3, {{0, 2}}));
  CHECK(three[4] == Graph(3, {{1, 2}}));
  CHECK(graph_from_pair_mask(4, 0b100000) == Graph(4, {{2, 3}}));
}

TEST_CASE("reports") {
  const ParameterReport fig1 = compute_report(generate_family(Family::kFig1, 0));
  CHECK(fig1.t_minus == 2);
  CHECK(fig1.delta == 2);
  CHECK(fig1.t_plus == 2);
  CHECK(fig1.m_exact == 2);
  CHECK(fig1.chain_ok);
  CHECK_FALSE(fig1.is_forest);

  const ParameterReport fig3 = compute_report(generate_family(Family::kFig3, 0));
  CHECK(fig3.t_plus == 2);
  CHECK(fig3.delta_plus == 3);
  CHECK(fig3.p_bruteforce == 2);
  CHECK(fig3.is_forest);

  const ParameterReport h4 = compute_report(generate_family(Family::kSun, 4));
  CHECK(h4.t_minus == 2);
  CHECK(h4.t_plus == 4);
  CHECK(h4.m_exact == 2);

  ReportOptions numeric;
  numeric.with_numeric = true;
  const ParameterReport w6 = compute_report(generate_family(Family::kWheel, 6), numeric);
  CHECK(w6.m_lower_numeric == 3);
  CHECK(w6.m_exact == 3);
  CHECK_FALSE(compute_report(generate_family(Family::kWheel, 6)).m_exact);
}

TEST_CASE("chain checker") {
  CHECK(verify_chain_corpus(4).violations.empty());
  CHECK(verify_chain_corpus(4, {.connected_only = true}).graphs == 1 + 1 + 4 + 38);
  CHECK_THROWS_AS(verify_chain_corpus(7), DomainError);

  std::vector<ParameterReport> corpus = corpus_reports(4);
  CHECK(check_reports(corpus).empty());
  auto victim = std::find_if(corpus.begin(), corpus.end(), [](const auto& r) { return r.m == 4 && !r.is_forest; });
  REQUIRE(victim != corpus.end());
  --victim->t_plus;
  const auto found = check_reports(corpus);
  REQUIRE(found.size() == 1);
  CHECK(found[0].graph6 == victim->graph6);
  CHECK(found[0].left == "z");
  CHECK(found[0].right == "t_plus");
  CHECK(to_string(found[0]).find(victim->graph6) == 0);
}

TEST_CASE("checker catches each relation") {
  const ParameterReport good = compute_report(generate_family(Family::kCycle, 5));
  REQUIRE_FALSE(check_report(good));
  auto broken = [&](auto mutate) {
    ParameterReport r = good;
    mutate(r);
    const auto v = check_report(r);
    return v ? v->left + v->relation + v->right : std::string();
  };
  CHECK(broken([](auto& r) { r.delta = 1; }) == "t_minus==delta");
  CHECK(broken([](auto& r) { r.delta_plus = 1; }) == "t_plus<=delta_plus");
  CHECK(broken([](auto& r) { r.n = 1; }) == "delta_plus<=n");
  CHECK(broken([](auto& r) { r.p_bruteforce = 3; }) == "p_bruteforce<=t_plus");

  ParameterReport forest = compute_report(generate_family(Family::kFig3, 0));
  forest.m_exact = 3;
  REQUIRE(check_report(forest));
  CHECK(check_report(forest)->left == "m_exact");
}

TEST_CASE("survey") {
  const Survey s = survey_open_questions(4);
  REQUIRE(s.classes.size() == 4);
  const auto& tt = s.classes[0];
  for (int n = 1; n <= 4; ++n) {
    for_each_small_graph(n, false, [&](const Graph& g) {
      if (is_forest(g, g.vertices())) CHECK(contains(tt.holds, emit_graph6(g)));
      return true;
    });
  }
  CHECK(contains(tt.holds, emit_graph6(generate_family(Family::kFig1, 0))));
  CHECK(contains(s.classes[1].fails, emit_graph6(generate_family(Family::kFig4, 0))));
  CHECK(contains(s.classes[1].holds, emit_graph6(generate_family(Family::kCycle, 5))));

  const auto j = survey_to_json(s);
  CHECK(j.at("classes").size() == 4);
  CHECK(j.at("reference").size() == 5);
}

TEST_CASE("report io") {
  std::ostringstream empty;
  write_reports(empty, {}, ReportFormat::kJson);
  CHECK(empty.str() == "[]\n");

  const std::vector<ParameterReport> one{compute_report(generate_family(Family::kFig1, 0))};
  std::ostringstream csv;
  write_csv(csv, one);
  const std::string text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.rfind(kCsvHeader, 0) == 0);
  CHECK(text.find("EhDO,6,6,0,2,2,2,2,2,2,,2,1,1,2,1;3,2,") != std::string::npos);

  std::vector<ParameterReport> reports = corpus_reports(4);
  ReportOptions numeric;
  numeric.with_numeric = true;
  reports.push_back(compute_report(generate_family(Family::kWheel, 5), numeric));
  reports.push_back(compute_report(generate_family(Family::kSun, 5)));

  const auto from_json = reports_from_json(nlohmann::json::parse(reports_to_json(reports).dump()));
  std::ostringstream out;
  write_csv(out, from_json);
  std::istringstream in(out.str());
  const auto from_csv = read_csv(in);
  REQUIRE(from_csv.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) check_integers_equal(reports[i], from_csv[i]);

  std::istringstream bad("graph6,n\n");
  CHECK_THROWS_AS(read_csv(bad), DomainError);
}

TEST_CASE("report files") {
  const auto dir = std::filesystem::temp_directory_path() / "eigmult_report_test";
  std::filesystem::create_directories(dir);
  const std::vector<ParameterReport> reports{compute_report(generate_family(Family::kCycle, 4))};
  std::ostringstream unused;
  for (auto format : {ReportFormat::kJson, ReportFormat::kCsv}) {
    const std::string path = (dir / (format == ReportFormat::kJson ? "r.json" : "r.csv")).string();
    emit_report(reports, format, path, unused);
    const auto back = load_reports(path, format);
    REQUIRE(back.size() == 1);
    check_integers_equal(back[0], reports[0]);
  }
  CHECK(unused.str().empty());

  const std::string missing = (dir / "no" / "such" / "file.json").string();
  try {
    emit_report(reports, ReportFormat::kJson, missing, unused);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(missing) != std::string::npos);
  }
  CHECK_THROWS_AS(load_reports(missing, ReportFormat::kCsv), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports are deterministic") {
  SweepOptions one;
  one.threads = 1;
  SweepOptions many;
  many.threads = 3;
  std::ostringstream a, b;
  write_reports(a, corpus_reports(5, one), ReportFormat::kJson);
  write_reports(b, corpus_reports(5, many), ReportFormat::kJson);
  CHECK(a.str() == b.str());
}
