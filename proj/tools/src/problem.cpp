#include "dzero/cli/problem.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace dzero::cli {

namespace {

struct Field {
  std::string key;
  std::string value;
  std::size_t line;
  std::size_t key_column;
  std::size_t value_column;
};

struct Table {
  std::size_t line = 0;
  std::vector<Field> fields;
};

struct Token {
  std::string text;
  std::size_t column;
};

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"ring", {"variables", "degrees"}},
      {"ambient", {"entry"}},
      {"section", {"entry"}},
      {"task", {"kind", "cutoff", "sym", "kappa", "potential"}},
      {"module", {"degree", "twists", "koszul"}},
  };
  return keys;
}

bool repeatable(const std::string& key) { return key == "entry" || key == "koszul"; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Trims [begin, end) of `line`; returns the 0-based start offset.
std::size_t trim(std::string_view line, std::size_t begin, std::size_t end, std::string& out) {
  while (begin < end && is_space(line[begin])) ++begin;
  while (end > begin && is_space(line[end - 1])) --end;
  out.assign(line.substr(begin, end - begin));
  return begin;
}

std::map<std::string, Table> split_tables(std::string_view text) {
  std::map<std::string, Table> tables;
  std::string current;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++line_no;
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string body;
    const std::size_t body_start = trim(line, 0, line.size(), body);
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') throw ProblemError("unterminated table header", line_no, body_start + 1);
      std::string name;
      trim(body, 1, body.size() - 1, name);
      if (!allowed_keys().count(name)) {
        throw ProblemError("unknown table [" + name + "]", line_no, body_start + 1);
      }
      if (tables.count(name)) {
        throw ProblemError("duplicate table [" + name + "]", line_no, body_start + 1);
      }
      tables[name].line = line_no;
      current = name;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ProblemError("expected 'key = value'", line_no, body_start + 1);
    }
    if (current.empty()) {
      throw ProblemError("key outside of any table", line_no, body_start + 1);
    }
    Field f;
    f.line = line_no;
    f.key_column = trim(line, 0, eq, f.key) + 1;
    f.value_column = trim(line, eq + 1, line.size(), f.value) + 1;
    if (f.key.empty()) throw ProblemError("missing key", line_no, body_start + 1);
    const auto& keys = allowed_keys().at(current);
    if (!keys.count(f.key)) {
      throw ProblemError("unknown key '" + f.key + "' in [" + current + "]", line_no, f.key_column);
    }
    if (!repeatable(f.key)) {
      for (const auto& g : tables[current].fields) {
        if (g.key == f.key) {
          throw ProblemError("duplicate key '" + f.key + "' in [" + current + "]", line_no,
                             f.key_column);
        }
      }
    }
    if (f.value.empty()) throw ProblemError("empty value", line_no, f.value_column);
    tables[current].fields.push_back(std::move(f));
  }
  return tables;
}

std::vector<Token> split_list(const Field& f) {
  std::vector<Token> out;
  const std::string& v = f.value;
  std::size_t i = 0;
  while (i < v.size()) {
    while (i < v.size() && (is_space(v[i]) || v[i] == ',')) ++i;
    const std::size_t begin = i;
    while (i < v.size() && !is_space(v[i]) && v[i] != ',') ++i;
    if (i > begin) out.push_back({v.substr(begin, i - begin), f.value_column + begin});
  }
  return out;
}

long parse_integer(const std::string& text, std::size_t line, std::size_t column) {
  long value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ProblemError("expected an integer, got '" + text + "'", line, column);
  }
  return value;
}

int parse_int(const std::string& text, std::size_t line, std::size_t column) {
  const long v = parse_integer(text, line, column);
  if (v < -1000000 || v > 1000000) throw ProblemError("integer out of range", line, column);
  return static_cast<int>(v);
}

const Field* find(const Table* t, const std::string& key) {
  if (!t) return nullptr;
  for (const auto& f : t->fields) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

Polynomial parse_polynomial(const std::string& text, std::size_t line, std::size_t column,
                            const RingPtr& ring) {
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    std::string what = e.what();
    if (auto at = what.rfind(" at position "); at != std::string::npos) what.resize(at);
    throw ProblemError(what, line, column + e.position());
  }
}

SectionEntry parse_entry(const Field& f, const RingPtr& ring) {
  std::string poly_text = f.value;
  std::optional<int> degree;
  std::size_t degree_column = 0;
  if (auto colon = f.value.rfind(':'); colon != std::string::npos) {
    std::string degree_text;
    degree_column = f.value_column + trim(f.value, colon + 1, f.value.size(), degree_text);
    if (degree_text.empty()) throw ProblemError("missing degree after ':'", f.line, degree_column);
    degree = parse_int(degree_text, f.line, degree_column);
    poly_text = f.value.substr(0, colon);
  }
  Polynomial p = parse_polynomial(poly_text, f.line, f.value_column, ring);
  if (!degree) {
    if (p.is_zero()) {
      throw ProblemError("zero entry needs an explicit degree (write '0 : d')", f.line,
                         f.value_column);
    }
    auto d = p.degree();
    if (!d) throw ProblemError(to_string(p) + " is not homogeneous", f.line, f.value_column);
    degree = static_cast<int>(*d);
    degree_column = f.value_column;
  }
  if (*degree < 1) {
    throw ProblemError("declared degree must be >= 1, got " + std::to_string(*degree), f.line,
                       degree_column);
  }
  if (!p.is_homogeneous_of(*degree)) {
    throw ProblemError(to_string(p) + " is not homogeneous of declared degree " +
                           std::to_string(*degree),
                       f.line, f.value_column);
  }
  return {std::move(p), *degree};
}

std::vector<SectionEntry> parse_entries(const Table* t, const std::string& key,
                                        const RingPtr& ring) {
  std::vector<SectionEntry> out;
  if (!t) return out;
  for (const auto& f : t->fields) {
    if (f.key == key) out.push_back(parse_entry(f, ring));
  }
  return out;
}

RingPtr parse_ring(const Table* t) {
  if (!t) throw ProblemError("missing [ring] table", 1, 1);
  const Field* vars = find(t, "variables");
  if (!vars) throw ProblemError("[ring] needs 'variables'", t->line, 1);
  std::vector<std::string> names;
  for (const auto& tok : split_list(*vars)) names.push_back(tok.text);
  std::vector<int> degrees(names.size(), 1);
  const Field* degs = find(t, "degrees");
  if (degs) {
    const auto toks = split_list(*degs);
    if (toks.size() != names.size()) {
      throw ProblemError("expected " + std::to_string(names.size()) + " degrees, got " +
                             std::to_string(toks.size()),
                         degs->line, degs->value_column);
    }
    for (std::size_t i = 0; i < toks.size(); ++i) {
      degrees[i] = parse_int(toks[i].text, degs->line, toks[i].column);
    }
  }
  try {
    return make_ring(names, degrees);
  } catch (const InvariantError& e) {
    throw ProblemError(e.what(), vars->line, vars->value_column);
  }
}

}  // namespace

Complex ModuleSpec::complex(const RingPtr& ring) const {
  return tensor(Complex::concentrated(GradedFreeModule(ring, twists), degree),
                koszul_complex(ring, koszul));
}

Problem parse_problem(std::string_view text) {
  const auto tables = split_tables(text);
  auto table = [&](const std::string& name) -> const Table* {
    auto it = tables.find(name);
    return it == tables.end() ? nullptr : &it->second;
  };

  Problem out;
  out.ring = parse_ring(table("ring"));
  out.ambient = parse_entries(table("ambient"), "entry", out.ring);
  out.section = parse_entries(table("section"), "entry", out.ring);

  const Table* task = table("task");
  if (!task) throw ProblemError("missing [task] table", 1, 1);
  const Field* kind = find(task, "kind");
  if (!kind) throw ProblemError("[task] needs 'kind'", task->line, 1);
  const auto& kinds = task_kinds();
  if (std::find(kinds.begin(), kinds.end(), kind->value) == kinds.end()) {
    throw ProblemError("unknown task kind '" + kind->value + "'", kind->line, kind->value_column);
  }
  out.task.kind = kind->value;
  if (const Field* f = find(task, "cutoff")) {
    const long c = parse_integer(f->value, f->line, f->value_column);
    if (c < 0) throw ProblemError("cutoff must be >= 0", f->line, f->value_column);
    out.task.cutoff = c;
  }
  if (const Field* f = find(task, "sym")) {
    const int n = parse_int(f->value, f->line, f->value_column);
    if (n < 0) throw ProblemError("sym must be >= 0", f->line, f->value_column);
    out.task.sym = static_cast<unsigned>(n);
  }
  if (const Field* f = find(task, "kappa")) {
    try {
      out.task.kappa = parse_kclass(f->value);
    } catch (const ParseError& e) {
      std::string what = e.what();
      if (auto at = what.rfind(" at position "); at != std::string::npos) what.resize(at);
      throw ProblemError(what, f->line, f->value_column + e.position());
    }
  }
  if (const Field* f = find(task, "potential")) {
    out.task.potential = parse_polynomial(f->value, f->line, f->value_column, out.ring);
  }
  if (out.task.kind == "crit" && !out.task.potential) {
    throw ProblemError("task crit needs 'potential'", task->line, 1);
  }

  if (const Table* m = table("module")) {
    ModuleSpec spec;
    if (const Field* f = find(m, "degree")) spec.degree = parse_int(f->value, f->line, f->value_column);
    if (const Field* f = find(m, "twists")) {
      spec.twists.clear();
      for (const auto& tok : split_list(*f)) spec.twists.push_back(parse_int(tok.text, f->line, tok.column));
    }
    spec.koszul = parse_entries(m, "koszul", out.ring);
    out.module = std::move(spec);
  }
  return out;
}

}  // namespace dzero::cli
