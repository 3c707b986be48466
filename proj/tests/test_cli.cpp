#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eigmult/cli.hpp"
#include "eigmult/families.hpp"
#include "eigmult/graph6.hpp"
#include "eigmult/report_io.hpp"

using namespace eigmult;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "eigmult");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("family") {
  const Run r = run({"family", "--kind", "sun", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(parse_graph6(r.out) == generate_family(Family::kSun, 4));

  const Run extra = run({"family", "--kind", "genstar", "--n", "3", "--extra", "leg_length=3"});
  CHECK(extra.code == 0);
  CHECK(parse_graph6(extra.out).order() == 10);

  CHECK(run({"family", "--kind", "petersen", "--n", "10"}).code == 2);
  CHECK(run({"family", "--kind", "cycle", "--n", "2"}).code == 2);
  CHECK(run({"family", "--kind", "genstar", "--n", "3", "--extra", "leg_length"}).code == 2);
  CHECK(run({"family", "--kind", "cycle"}).code == 2);
}

TEST_CASE("compute") {
  const std::string fig1 = emit_graph6(generate_family(Family::kFig1, 0));
  const Run r = run({"compute", "--graph6", fig1});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0].at("t_minus") == 2);
  CHECK(j[0].at("m_exact") == 2);
  CHECK(j[0].at("chain_ok") == true);

  const Run csv = run({"compute", "--graph6", fig1, "--format", "csv"});
  CHECK(csv.out.rfind(kCsvHeader, 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "eigmult_cli_test";
  std::filesystem::create_directories(dir);
  const std::string list = (dir / "graphs.g6").string();
  std::ofstream(list) << "Bg\n\nCF\n";
  const std::string dest = (dir / "out.json").string();
  const Run many = run({"compute", "--file", list, "--numeric", "--out", dest});
  CHECK(many.code == 0);
  CHECK(many.out.empty());
  CHECK(load_reports(dest, ReportFormat::kJson).size() == 2);
  std::filesystem::remove_all(dir);

  CHECK(run({"compute"}).code == 2);
  CHECK(run({"compute", "--graph6", "Bh"}).code == 2);
  CHECK(run({"compute", "--graph6", fig1, "--format", "xml"}).code == 2);
  CHECK(run({"compute", "--file", "/nonexistent/graphs.g6"}).err.find("/nonexistent/graphs.g6") != std::string::npos);
}

TEST_CASE("verify-chain") {
  const Run r = run({"verify-chain", "--max-n", "4", "--connected-only"});
  CHECK(r.code == 0);
  CHECK(r.out.find("44 graphs, 0 violations") != std::string::npos);
  CHECK(run({"verify-chain", "--max-n", "7"}).code == 2);
}

TEST_CASE("survey") {
  const Run r = run({"survey", "--max-n", "3"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("classes").size() == 4);
}

TEST_CASE("certify") {
  const std::string c5 = emit_graph6(generate_family(Family::kCycle, 5));
  const Run ok = run({"certify", "--graph6", c5, "--rank", "3"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("verified") == true);
  CHECK(j.at("m_lower") == 2);

  const std::string p4 = emit_graph6(generate_family(Family::kPath, 4));
  const Run fail = run({"certify", "--graph6", p4, "--rank", "2", "--tol", "1e-6", "--restarts", "3"});
  CHECK(fail.code == 1);
  CHECK(run({"certify", "--graph6", c5}).code == 2);
}

TEST_CASE("zf") {
  const Run r = run({"zf", "--graph6", emit_graph6(generate_family(Family::kFig4, 0))});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("z") == 2);
  CHECK(j.at("witness").size() == 2);
}

TEST_CASE("help and unknown subcommands") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
