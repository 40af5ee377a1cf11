#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dzero/dzero.hpp"

namespace dzero::cli {

/// Problem-file error with a 1-based line and column.
class ProblemError : public Error {
 public:
  ProblemError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline const std::vector<std::string>& task_kinds() {
  static const std::vector<std::string> kinds = {
      "homology",       "gclass",        "virtual-class", "verify-excess", "verify-lefschetz",
      "verify-sym-ga",  "verify-strong", "vpull",         "crit"};
  return kinds;
}

/// Operand complex: the free module ⊕ R(−twist) placed in `degree`,
/// tensored with the Koszul complex of `koszul`.
struct ModuleSpec {
  int degree = 0;
  std::vector<int> twists{0};
  std::vector<SectionEntry> koszul;

  Complex complex(const RingPtr& ring) const;
};

struct TaskSpec {
  std::string kind;
  std::optional<long> cutoff;
  std::optional<unsigned> sym;
  std::optional<KClass> kappa;
  std::optional<Polynomial> potential;
};

struct Problem {
  RingPtr ring;
  std::vector<SectionEntry> ambient;
  std::vector<SectionEntry> section;
  TaskSpec task;
  std::optional<ModuleSpec> module;

  ZeroLocusPresentation presentation() const { return {ring, ambient, section}; }
};

/// Parses the problem-file format:
///
///   # comment
///   [ring]
///   variables = x, y
///   degrees = 1, 1          (optional, default all 1)
///   [ambient]
///   entry = x*y : 2         (repeatable; ": degree" optional unless zero)
///   [section]
///   entry = x^2
///   [task]
///   kind = verify-excess
///   cutoff = 8              (optional)
///   sym = 2                 (optional, Sym power for verify-sym-ga)
///   kappa = 1 - t           (optional, class for vpull)
///   potential = x^2*y       (required for crit)
///   [module]
///   degree = 0
///   twists = 0
///   koszul = x : 1          (repeatable)
///
/// Unknown tables and keys, duplicates of non-repeatable keys and invalid
/// entries are rejected with a ProblemError.
Problem parse_problem(std::string_view text);

}  // namespace dzero::cli
