#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "dzero/cli/problem.hpp"

namespace dzero::cli {

struct RunOptions {
  std::optional<long> cutoff;
  bool json = false;
  std::optional<std::string> then;
  unsigned threads = 0;
};

/// Executes the task of `problem`. The returned report carries task, status
/// and the task payload; version, digest and timing are added by `run`.
nlohmann::json execute(const Problem& problem, const RunOptions& options);

/// Table rendering of a report; carries the same data as the JSON form.
std::string render_human(const nlohmann::json& report);

/// 0 for PASS/INFO, 1 for FAIL.
int exit_code(const nlohmann::json& report);

/// Reads, parses and executes a problem file, writing the report to `out`
/// and diagnostics to `err`. Returns 0, 1 or 2 (input error).
int run(const std::string& path, const RunOptions& options, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& bytes);

}  // namespace dzero::cli
