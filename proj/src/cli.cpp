#include "eigmult/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "eigmult/errors.hpp"
#include "eigmult/families.hpp"
#include "eigmult/graph6.hpp"
#include "eigmult/harness.hpp"
#include "eigmult/minrank.hpp"
#include "eigmult/report_io.hpp"
#include "eigmult/zero_forcing.hpp"

namespace eigmult {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::vector<Graph> graphs;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

FamilyParams parse_extra(const std::vector<std::string>& items) {
  FamilyParams params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Usage("--extra expects key=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      params[item.substr(0, eq)] = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw Usage("--extra value must be an integer in '" + item + "'");
    }
  }
  return params;
}

// Writes to `path` or to `out` when no path was given.
void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw IoError("write to '" + path + "' failed");
}

nlohmann::json set_json(VertexSet s) { return s.members(); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deletion parameters, zero forcing and maximum multiplicity bounds for small graphs", "eigmult"};
  app.require_subcommand(1);

  std::string graph6;
  std::string file;
  std::string out_path;
  std::string format = "json";
  bool numeric = false;
  auto* compute = app.add_subcommand("compute", "Full parameter report for one or more graphs");
  auto* g6_opt = compute->add_option("--graph6", graph6, "Graph in graph6 format");
  auto* file_opt = compute->add_option("--file", file, "File with one graph6 string per line");
  g6_opt->excludes(file_opt);
  compute->add_flag("--numeric", numeric, "Run the rank certificate search when the bounds differ");
  compute->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--out", out_path, "Output file (default: standard output)");

  std::string kind;
  int order = 0;
  std::vector<std::string> extra;
  auto* family = app.add_subcommand("family", "Print a family member in graph6 format");
  family->add_option("--kind", kind, "Family name")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "star", "wheel", "sun", "complete", "genstar", "unicyclic", "fig1",
                             "fig3", "fig4"}));
  family->add_option("--n", order, "Order parameter")->required();
  family->add_option("--extra", extra, "Family parameter as key=value (repeatable)");

  int max_n = 0;
  bool connected_only = false;
  bool long_run = false;
  int threads = 0;
  auto* verify = app.add_subcommand("verify-chain", "Check the parameter chain on every small graph");
  verify->add_option("--max-n", max_n, "Largest order")->required();
  verify->add_flag("--connected-only", connected_only, "Skip disconnected graphs");
  verify->add_flag("--long-run", long_run, "Allow order 7");
  verify->add_option("--threads", threads, "Worker threads (default: all cores)");

  auto* survey = app.add_subcommand("survey", "Membership lists for the equality questions");
  survey->add_option("--max-n", max_n, "Largest order")->required();
  survey->add_option("--out", out_path, "Output file (default: standard output)");

  int rank = 0;
  CertificateParams cert_params;
  auto* certify = app.add_subcommand("certify", "Search for a matrix of rank <= r with the graph's pattern");
  certify->add_option("--graph6", graph6, "Graph in graph6 format")->required();
  certify->add_option("--rank", rank, "Target rank r")->required();
  certify->add_option("--delta", cert_params.delta, "Minimum edge entry magnitude")->capture_default_str();
  certify->add_option("--tol", cert_params.tol, "Relative singular value tolerance")->capture_default_str();
  certify->add_option("--restarts", cert_params.restarts, "Random restarts")->capture_default_str();
  certify->add_option("--seed", cert_params.seed, "Base seed")->capture_default_str();
  certify->add_option("--max-iter", cert_params.max_iter, "Iterations per restart")->capture_default_str();
  certify->add_option("--out", out_path, "Output file (default: standard output)");

  auto* zf = app.add_subcommand("zf", "Zero forcing number and a minimum forcing set");
  zf->add_option("--graph6", graph6, "Graph in graph6 format")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) {
      if (graph6.empty() && file.empty()) throw Usage("compute needs --graph6 or --file");
      const std::vector<Graph> graphs = file.empty() ? std::vector<Graph>{parse_graph6(graph6)} : read_graph_file(file);
      ReportOptions options;
      options.with_numeric = numeric;
      std::vector<ParameterReport> reports;
      for (const auto& g : graphs) reports.push_back(compute_report(g, options));
      emit_report(reports, format == "csv" ? ReportFormat::kCsv : ReportFormat::kJson, out_path, out);
      const auto violations = check_reports(reports);
      for (const auto& v : violations) err << "violation: " << to_string(v) << '\n';
      return violations.empty() ? kExitOk : kExitViolation;
    }

    if (*family) {
      const auto which = family_from_name(kind);
      if (!which) throw Usage("unknown family '" + kind + "'");
      out << emit_graph6(generate_family(*which, order, parse_extra(extra))) << '\n';
      return kExitOk;
    }

    if (*verify) {
      SweepOptions options;
      options.connected_only = connected_only;
      options.allow_order_seven = long_run;
      options.threads = threads;
      options.progress = [&](int n, std::uint64_t seen) {
        err << "order " << n << " done, " << seen << " graphs checked\n";
        err.flush();
      };
      const ChainSweep sweep = verify_chain_corpus(max_n, options);
      for (const auto& v : sweep.violations) out << "violation: " << to_string(v) << '\n';
      out << sweep.graphs << " graphs, " << sweep.violations.size() << " violations\n";
      return sweep.violations.empty() ? kExitOk : kExitViolation;
    }

    if (*survey) {
      write_text(out_path, survey_to_json(survey_open_questions(max_n)).dump(2) + "\n", out);
      return kExitOk;
    }

    if (*certify) {
      const Graph g = parse_graph6(graph6);
      const RankCertificate cert = certificate_search(g, rank, cert_params);
      const bool verified = cert.converged && verify_certificate(cert);
      nlohmann::json j = certificate_to_json(cert);
      j["verified"] = verified;
      j["m_lower"] = verified ? nlohmann::json(cert.m_lower) : nlohmann::json();
      write_text(out_path, j.dump(2) + "\n", out);
      if (!verified) err << "no certificate of rank <= " << rank << " found (residual " << cert.residual() << ")\n";
      return verified ? kExitOk : kExitViolation;
    }

    if (*zf) {
      const Graph g = parse_graph6(graph6);
      const ZeroForcingResult result = zero_forcing_number(g);
      nlohmann::json forces = nlohmann::json::array();
      for (const auto& f : forcing_closure(g, result.witness).forces) forces.push_back({f.from, f.to});
      out << nlohmann::json{{"graph6", emit_graph6(g)}, {"z", result.z}, {"witness", set_json(result.witness)},
                            {"forces", forces}}
                 .dump(2)
          << '\n';
      return kExitOk;
    }
  } catch (const SoundnessError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eigmult
