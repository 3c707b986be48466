#include "eigmult/report_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "eigmult/errors.hpp"
#include "eigmult/graph6.hpp"

namespace eigmult {

namespace {

nlohmann::json optional_json(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

std::optional<int> optional_from(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<int>();
}

nlohmann::json witness_json(const DeletionWitness& w) {
  return {{"removed", w.removed.members()}, {"value", w.value}, {"paths", w.p_or_P}};
}

// The witness is rebuilt from its deletion set so the decomposition is filled in.
DeletionWitness witness_from(const Graph& g, Parameter p, VertexSet removed) {
  if (!removed.subset_of(VertexSet(g.vertices()))) {
    throw DomainError(to_string(p) + " witness " + to_string(removed) + " outside graph");
  }
  if (!deletion_objective(g, p, removed)) {
    DeletionWitness w;
    w.parameter = p;
    w.removed = removed;
    return w;
  }
  return make_witness(g, p, removed);
}

VertexSet set_from_json(const nlohmann::json& j) { return VertexSet::from_list(j.get<std::vector<int>>()); }

std::string join_set(VertexSet s) {
  std::string out;
  for (int v : s.members()) {
    if (!out.empty()) out += ';';
    out += std::to_string(v);
  }
  return out;
}

int parse_int(const std::string& field, const char* name) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) throw DomainError(std::string("csv: bad integer in ") + name + ": '" + field + "'");
  return value;
}

std::optional<int> parse_optional(const std::string& field, const char* name) {
  if (field.empty()) return std::nullopt;
  return parse_int(field, name);
}

bool parse_flag(const std::string& field, const char* name) {
  if (field == "0") return false;
  if (field == "1") return true;
  throw DomainError(std::string("csv: bad flag in ") + name + ": '" + field + "'");
}

VertexSet parse_set(const std::string& field) {
  std::vector<int> members;
  std::stringstream ss(field);
  for (std::string item; std::getline(ss, item, ';');) members.push_back(parse_int(item, "witness"));
  return VertexSet::from_list(members);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

nlohmann::json report_to_json(const ParameterReport& r) {
  return {
      {"graph6", r.graph6},
      {"n", r.n},
      {"m", r.m},
      {"is_forest", r.is_forest},
      {"t_minus", r.t_minus},
      {"delta", r.delta},
      {"p_bruteforce", optional_json(r.p_bruteforce)},
      {"z", r.z},
      {"t_plus", r.t_plus},
      {"delta_plus", r.delta_plus},
      {"witnesses",
       {
           {"t_minus", witness_json(r.witnesses.t_minus)},
           {"delta", witness_json(r.witnesses.delta)},
           {"t_plus", witness_json(r.witnesses.t_plus)},
           {"delta_plus", witness_json(r.witnesses.delta_plus)},
           {"z", r.witnesses.z.members()},
       }},
      {"m_lower_numeric", optional_json(r.m_lower_numeric)},
      {"m_exact", optional_json(r.m_exact)},
      {"chain_ok", r.chain_ok},
  };
}

ParameterReport report_from_json(const nlohmann::json& j) {
  ParameterReport r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.is_forest = j.at("is_forest").get<bool>();
  r.t_minus = j.at("t_minus").get<int>();
  r.delta = j.at("delta").get<int>();
  r.p_bruteforce = optional_from(j, "p_bruteforce");
  r.z = j.at("z").get<int>();
  r.t_plus = j.at("t_plus").get<int>();
  r.delta_plus = j.at("delta_plus").get<int>();
  r.m_lower_numeric = optional_from(j, "m_lower_numeric");
  r.m_exact = optional_from(j, "m_exact");
  r.chain_ok = j.at("chain_ok").get<bool>();

  const Graph g = parse_graph6(r.graph6);
  const auto& w = j.at("witnesses");
  r.witnesses.t_minus = witness_from(g, Parameter::kTMinus, set_from_json(w.at("t_minus").at("removed")));
  r.witnesses.delta = witness_from(g, Parameter::kDelta, set_from_json(w.at("delta").at("removed")));
  r.witnesses.t_plus = witness_from(g, Parameter::kTPlus, set_from_json(w.at("t_plus").at("removed")));
  r.witnesses.delta_plus = witness_from(g, Parameter::kDeltaPlus, set_from_json(w.at("delta_plus").at("removed")));
  r.witnesses.z = set_from_json(w.at("z"));
  return r;
}

nlohmann::json reports_to_json(const std::vector<ParameterReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

std::vector<ParameterReport> reports_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("reports: expected a JSON array");
  std::vector<ParameterReport> out;
  for (const auto& item : j) out.push_back(report_from_json(item));
  return out;
}

void write_csv(std::ostream& out, const std::vector<ParameterReport>& reports) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  out << kCsvHeader << '\n';
  for (const auto& r : reports) {
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << int(r.is_forest) << ',' << r.t_minus << ',' << r.delta
        << ',' << opt(r.p_bruteforce) << ',' << r.z << ',' << r.t_plus << ',' << r.delta_plus << ','
        << opt(r.m_lower_numeric) << ',' << opt(r.m_exact) << ',' << int(r.chain_ok) << ','
        << join_set(r.witnesses.t_minus.removed) << ',' << join_set(r.witnesses.t_plus.removed) << ','
        << join_set(r.witnesses.delta.removed) << ',' << join_set(r.witnesses.delta_plus.removed) << ','
        << join_set(r.witnesses.z) << '\n';
  }
}

std::vector<ParameterReport> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw DomainError("csv: missing or unexpected header");
  std::vector<ParameterReport> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_row(line);
    if (f.size() != 18) throw DomainError("csv: expected 18 fields, got " + std::to_string(f.size()));
    ParameterReport r;
    r.graph6 = f[0];
    r.n = parse_int(f[1], "n");
    r.m = parse_int(f[2], "m");
    r.is_forest = parse_flag(f[3], "is_forest");
    r.t_minus = parse_int(f[4], "t_minus");
    r.delta = parse_int(f[5], "delta");
    r.p_bruteforce = parse_optional(f[6], "p_bruteforce");
    r.z = parse_int(f[7], "z");
    r.t_plus = parse_int(f[8], "t_plus");
    r.delta_plus = parse_int(f[9], "delta_plus");
    r.m_lower_numeric = parse_optional(f[10], "m_lower_numeric");
    r.m_exact = parse_optional(f[11], "m_exact");
    r.chain_ok = parse_flag(f[12], "chain_ok");
    const Graph g = parse_graph6(r.graph6);
    r.witnesses.t_minus = witness_from(g, Parameter::kTMinus, parse_set(f[13]));
    r.witnesses.t_plus = witness_from(g, Parameter::kTPlus, parse_set(f[14]));
    r.witnesses.delta = witness_from(g, Parameter::kDelta, parse_set(f[15]));
    r.witnesses.delta_plus = witness_from(g, Parameter::kDeltaPlus, parse_set(f[16]));
    r.witnesses.z = parse_set(f[17]);
    out.push_back(std::move(r));
  }
  return out;
}

void write_reports(std::ostream& out, const std::vector<ParameterReport>& reports, ReportFormat format) {
  if (format == ReportFormat::kCsv) {
    write_csv(out, reports);
  } else {
    out << reports_to_json(reports).dump(2) << '\n';
  }
}

void emit_report(const std::vector<ParameterReport>& reports, ReportFormat format, const std::string& path,
                 std::ostream& fallback) {
  if (path.empty() || path == "-") {
    write_reports(fallback, reports, format);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_reports(file, reports, format);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

std::vector<ParameterReport> load_reports(const std::string& path, ReportFormat format) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for reading");
  if (format == ReportFormat::kCsv) return read_csv(file);
  try {
    return reports_from_json(nlohmann::json::parse(file));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("'" + path + "': " + e.what());
  }
}

}  // namespace eigmult
