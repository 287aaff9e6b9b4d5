#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermatci/numeric.hpp"

namespace fermatci::cli {

/// Everything a subcommand handler produces. The same report can be rendered
/// as human-readable text, as a canonical json document, or (for tabular
/// subcommands only) as csv.
struct Report {
  std::string subcommand;
  /// One of: ok, faithful, not_faithful, diagonal, not_diagonal, generic,
  /// non_generic, no_interpolation, interpolation_exists, positive,
  /// not_positive, or a classification kind. Drives the process exit code.
  std::string verdict = "ok";
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  /// Self-contained descriptions of what the subcommand checked.
  std::vector<std::string> notes;
  /// Body lines for the text format ("key: value"); emit() adds the leading
  /// subcommand line and the trailing verdict line.
  std::vector<std::string> text_lines;
  /// Full csv payload (header + rows); only tabular subcommands set this.
  std::optional<std::string> csv;
};

/// Serializes the report. Formats: "text", "json", "csv". The json document
/// has sorted keys and a trailing newline, so identical reports are
/// byte-identical. Requesting csv for a report without a csv payload throws
/// UsageError. timing_ms is included only when present (text and json).
std::string emit(const Report& report, const std::string& format,
                 std::optional<std::int64_t> timing_ms = std::nullopt);

/// 1 for the failing verdicts (not_faithful, not_diagonal, non_generic,
/// interpolation_exists, not_positive), 0 otherwise.
int exit_code_for(const Report& report);

// --- rendering helpers shared by the subcommand handlers ---

/// "0 1 1 2" (space-joined).
std::string join_residues(const ResidueVec& v);

/// ["2", "-20", "2"]: exact integers as decimal strings (json numbers would
/// silently lose precision past 2^53).
nlohmann::json json_int(const Int& v);
nlohmann::json json_int_vec(const std::vector<Int>& v);
nlohmann::json json_residue_vec(const ResidueVec& v);
nlohmann::json json_rat_vec(const RatVec& v);

}  // namespace fermatci::cli
