#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ifm/serialization.hpp"

namespace ifm {

// One experiment description = one JSON document; no hidden knobs, so the
// manifest plus the config reproduce every row.
struct ExperimentConfig {
  std::string scenario;  // kwiat-sweep | audit | optimize | reduce |
                         // discriminate | qpe-demo
  // kwiat-sweep / optimize
  std::vector<std::size_t> t_list;
  std::string model = "default";  // "default" or a file path
  std::size_t full_max_t = 10;
  double eps = 0.05;
  // audit
  std::string schedule_path;
  // reduce / discriminate
  std::string family_path;
  std::string hidden;  // empty = cycle through the labels
  std::vector<double> delta_list;
  std::size_t runs = 1;
  // qpe-demo
  double phase = 0.25;
  std::size_t ancillas = 3;
  // shared
  std::vector<std::uint64_t> seeds;
  std::string out_csv;       // empty = stdout
  std::string out_manifest;  // empty = skip
  std::string out_program;   // reduce only

  static ExperimentConfig from_json(const json& j);
  json to_json() const;
};

struct Diagnostic {
  std::string where;  // JSON pointer-ish location or file path
  std::string message;
};

// Schema and filesystem checks; parse errors come back as diagnostics too.
std::vector<Diagnostic> validate_config(const json& j);
std::vector<Diagnostic> validate_config_file(const std::string& path);

// A CSV cell: empty, integer, real, or text.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double,
                          std::string>;

struct ResultRow {
  std::vector<std::pair<std::string, Cell>> cells;
  bool ok = true;
  std::optional<std::uint64_t> seed;

  void put(const std::string& column, Cell value) {
    cells.emplace_back(column, std::move(value));
  }
};

std::string format_cell(const Cell& cell);

// Header + rows, ',' delimiter, '.' decimal point, shortest round-trip
// doubles. Identical inputs give identical bytes.
std::string rows_to_csv(const std::vector<ResultRow>& rows);

struct RunOutcome {
  std::vector<ResultRow> rows;
  std::string csv;
  json manifest;
  int exit_code = 0;  // 0 ok, 1 failed rows, 2 config error
};

// Executes every sweep point of the config. Verification failures become
// failed rows with a status message; only configuration and I/O problems
// throw.
RunOutcome run_config(const ExperimentConfig& cfg);

// run_config + file emission (CSV, manifest, program output).
int run_and_emit(const ExperimentConfig& cfg, std::string* csv_out = nullptr);

std::uint64_t fnv1a_hash(const std::string& bytes);

extern const char* kToolVersion;

}  // namespace ifm
