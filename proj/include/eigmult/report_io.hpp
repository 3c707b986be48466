#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eigmult/harness.hpp"

namespace eigmult {

enum class ReportFormat { kJson, kCsv };

// Fields: graph6 n m is_forest t_minus delta p_bruteforce z t_plus delta_plus witnesses
// m_lower_numeric m_exact chain_ok. Absent optionals are null. Each deletion witness is
// {"removed": [...], "value": v, "paths": p}; the z witness is a vertex list.
nlohmann::json report_to_json(const ParameterReport& r);
ParameterReport report_from_json(const nlohmann::json& j);

nlohmann::json reports_to_json(const std::vector<ParameterReport>& reports);
std::vector<ParameterReport> reports_from_json(const nlohmann::json& j);

inline constexpr const char* kCsvHeader =
    "graph6,n,m,is_forest,t_minus,delta,p_bruteforce,z,t_plus,delta_plus,m_lower_numeric,m_exact,chain_ok,"
    "w_t_minus,w_t_plus,w_delta,w_delta_plus,w_z";

// One row per report under kCsvHeader. Flags are 0/1, absent optionals are empty and
// witnesses are the removed vertices joined by ';'. Witness values and path counts are
// recomputed on parse.
void write_csv(std::ostream& out, const std::vector<ParameterReport>& reports);
std::vector<ParameterReport> read_csv(std::istream& in);

void write_reports(std::ostream& out, const std::vector<ParameterReport>& reports, ReportFormat format);

// Writes to `path`, or to `fallback` when path is empty or "-". Throws IoError naming the path.
void emit_report(const std::vector<ParameterReport>& reports, ReportFormat format, const std::string& path,
                 std::ostream& fallback);

std::vector<ParameterReport> load_reports(const std::string& path, ReportFormat format);

}  // namespace eigmult
