#include "report.hpp"

#include <string>

#include "fermatci/errors.hpp"

#ifndef FERMATCI_VERSION
#define FERMATCI_VERSION "0.1.0"
#endif

namespace fermatci::cli {

std::string join_residues(const ResidueVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

nlohmann::json json_int(const Int& v) { return v.get_str(); }

nlohmann::json json_int_vec(const std::vector<Int>& v) {
  auto arr = nlohmann::json::array();
  for (const Int& x : v) arr.push_back(x.get_str());
  return arr;
}

nlohmann::json json_residue_vec(const ResidueVec& v) {
  auto arr = nlohmann::json::array();
  for (std::int64_t x : v) arr.push_back(x);
  return arr;
}

nlohmann::json json_rat_vec(const RatVec& v) {
  auto arr = nlohmann::json::array();
  for (const Rat& x : v) arr.push_back(rat_to_string(x));
  return arr;
}

std::string emit(const Report& report, const std::string& format,
                 std::optional<std::int64_t> timing_ms) {
  if (format == "text") {
    std::string out = "subcommand: " + report.subcommand + "\n";
    for (const std::string& line : report.text_lines) out += line + "\n";
    if (timing_ms) out += "timing_ms: " + std::to_string(*timing_ms) + "\n";
    out += "verdict: " + report.verdict + "\n";
    return out;
  }
  if (format == "json") {
    nlohmann::json j;
    j["version"] = FERMATCI_VERSION;
    j["subcommand"] = report.subcommand;
    j["verdict"] = report.verdict;
    j["inputs"] = report.inputs;
    j["results"] = report.results;
    j["notes"] = report.notes;
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    if (!report.csv)
      throw UsageError("csv output is only available for tabular subcommands "
                       "(decomp, involution, scan-hodge)");
    return *report.csv;
  }
  throw UsageError("unknown output format: " + format);
}

int exit_code_for(const Report& report) {
  const std::string& v = report.verdict;
  if (v == "not_faithful" || v == "not_diagonal" || v == "non_generic" ||
      v == "interpolation_exists" || v == "not_positive")
    return 1;
  return 0;
}

}  // namespace fermatci::cli
