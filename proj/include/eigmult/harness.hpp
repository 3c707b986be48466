#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eigmult/deletion.hpp"
#include "eigmult/graph.hpp"
#include "eigmult/minrank.hpp"

namespace eigmult {

inline constexpr int kMaxEnumerationOrder = 7;

// Graph whose bit i selects the i-th vertex pair in graph6 column order
// ({0,1}, {0,2}, {1,2}, {0,3}, ...).
Graph graph_from_pair_mask(int n, std::uint64_t mask);

// Every labeled graph on n vertices by ascending pair mask, optionally only the connected
// ones. Return false from `visit` to stop. n > 7 is refused.
void for_each_small_graph(int n, bool connected_only, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate_small_graphs(int n, bool connected_only);

struct ReportWitnesses {
  DeletionWitness t_minus;
  DeletionWitness delta;
  DeletionWitness t_plus;
  DeletionWitness delta_plus;
  VertexSet z;
};

struct ParameterReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  bool is_forest = false;
  int t_minus = 0;
  int delta = 0;
  std::optional<int> p_bruteforce;
  int z = 0;
  int t_plus = 0;
  int delta_plus = 0;
  ReportWitnesses witnesses;
  std::optional<int> m_lower_numeric;
  std::optional<int> m_exact;
  bool chain_ok = false;
};

struct ReportOptions {
  bool with_numeric = false;
  CertificateParams certificate;
};

// Delta is the brute-force oracle; p_bruteforce is filled when n is within the induced
// path cover cap. m_exact is set whenever the sandwich closes.
ParameterReport compute_report(const Graph& g, const ReportOptions& options = {});

// t_minus = delta <= z <= t_plus <= delta_plus <= n.
bool chain_holds(const ParameterReport& r);

struct Violation {
  std::string graph6;
  std::string left;
  int left_value = 0;
  std::string relation;  // the relation that should have held
  std::string right;
  int right_value = 0;
};

std::string to_string(const Violation& v);

// First broken relation, checked in chain order, then P <= t_plus and the forest clause
// t_minus = t_plus = m_exact. The stored chain_ok flag is not trusted.
std::optional<Violation> check_report(const ParameterReport& r);

// One record per report that fails check_report, in input order.
std::vector<Violation> check_reports(const std::vector<ParameterReport>& reports);

struct SweepOptions {
  bool connected_only = false;
  bool allow_order_seven = false;
  int threads = 0;  // 0: hardware concurrency
  // Called after each finished order with (n, graphs checked so far).
  std::function<void(int, std::uint64_t)> progress;
};

struct ChainSweep {
  std::uint64_t graphs = 0;
  std::vector<Violation> violations;  // in enumeration order
};

// Reports every graph of order 1..max_n and checks it. max_n <= 6 unless allowed.
ChainSweep verify_chain_corpus(int max_n, const SweepOptions& options = {});

// Reports for every graph of order 1..max_n, in enumeration order.
std::vector<ParameterReport> corpus_reports(int max_n, const SweepOptions& options = {});

struct SurveyClass {
  std::string question;    // e.g. "t_minus == t_plus"
  std::string complement;  // e.g. "t_minus < t_plus"
  std::vector<std::string> holds;
  std::vector<std::string> fails;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct Survey {
  int max_n = 0;
  std::uint64_t graphs = 0;
  std::vector<NamedGraph> reference;
  std::vector<SurveyClass> classes;
};

// fig1, the three-legged generalized star, fig3, fig4 and C_5.
std::vector<NamedGraph> reference_graphs();

// Empirical membership lists over all labeled graphs of order 1..max_n (max_n <= 6) and
// the reference graphs. Lists hold graph6 strings; no characterization is implied.
Survey survey_open_questions(int max_n, const SweepOptions& options = {});

nlohmann::json survey_to_json(const Survey& s);

}  // namespace eigmult
