#include "dzero/cli/run.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace dzero::cli {

using nlohmann::json;

namespace {

json table_json(const HilbertTable& t) {
  json rows = json::array();
  for (int i : t.degrees()) {
    json dims = json::array();
    for (const auto& [d, n] : t.row(i)) dims.push_back({d, n});
    rows.push_back({{"degree", i}, {"dims", dims}});
  }
  return {{"cutoff", t.cutoff}, {"rows", rows}};
}

json entries_json(const std::vector<SectionEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"poly", to_string(e.poly)}, {"degree", e.degree}});
  return out;
}

json presentation_json(const ZeroLocusPresentation& p) {
  return {{"ring",
           {{"variables", p.ring()->variable_names()}, {"degrees", p.ring()->variable_degrees()}}},
          {"ambient", entries_json(p.ambient())},
          {"section", entries_json(p.section())}};
}

json table_witness(const TableComparison& c) {
  if (!c.witness) return nullptr;
  return {{"degree", c.witness->degree},
          {"internal_degree", c.witness->internal_degree},
          {"dim_a", c.witness->dim_a},
          {"dim_b", c.witness->dim_b}};
}

json class_witness(const KClass& lhs, const KClass& rhs) {
  return {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

long resolve_cutoff(const TaskSpec& task, const RunOptions& options,
                    const ZeroLocusPresentation& p) {
  if (options.cutoff) return *options.cutoff;
  if (task.cutoff) return *task.cutoff;
  return default_cutoff(p);
}

Complex module_complex(const Problem& problem) {
  return problem.module ? problem.module->complex(problem.ring) : Complex::unit(problem.ring);
}

json run_task(const Problem& problem, const TaskSpec& task, const ZeroLocusPresentation& p,
              const RunOptions& options) {
  json r;
  r["task"] = task.kind;
  const unsigned threads = options.threads;
  const std::string& kind = task.kind;

  if (kind == "crit") {
    ZeroLocusPresentation crit = critical_locus(*task.potential);
    r["status"] = "INFO";
    r["potential"] = to_string(*task.potential);
    r["presentation"] = presentation_json(crit);
    if (options.then) {
      if (*options.then == "crit") throw UnsupportedError("--then crit would not terminate");
      TaskSpec next = task;
      next.kind = *options.then;
      json sub = run_task(problem, next, crit, options);
      r["status"] = sub["status"];
      r["then"] = std::move(sub);
    }
    return r;
  }

  const long cutoff = resolve_cutoff(task, options, p);
  r["presentation"] = presentation_json(p);

  if (kind == "homology") {
    RegularityVerdict v = is_regular_up_to(p, cutoff, threads);
    r["status"] = "INFO";
    r["cutoff"] = cutoff;
    r["tables"] = {{"koszul", table_json(v.table)}};
    r["regular_up_to_cutoff"] = v.regular_up_to_cutoff;
    if (v.witness) {
      r["regularity_witness"] = {{"degree", v.witness->degree},
                                 {"internal_degree", v.witness->internal_degree},
                                 {"dim", v.witness->dim}};
    }
  } else if (kind == "gclass") {
    r["status"] = "INFO";
    r["kclass"] = {{"koszul", to_string(virtual_class(p))}};
  } else if (kind == "virtual-class") {
    VirtualClassReport v = virtual_class_checked(p, cutoff, threads);
    r["status"] = verdict(v.routes_agree);
    r["cutoff"] = cutoff;
    r["kclass"] = {{"direct", to_string(v.direct)}, {"via_homology", to_string(v.via_homology)}};
    r["tables"] = {{"koszul", table_json(v.table)}};
    if (!v.routes_agree) r["witness"] = class_witness(v.direct.truncated(cutoff), v.via_homology);
  } else if (kind == "verify-excess") {
    TableComparison c = verify_excess(p, cutoff, threads);
    r["status"] = verdict(c.pass);
    r["cutoff"] = cutoff;
    r["tables"] = {{"pullback_pushforward", table_json(c.table_a)},
                   {"exterior_twist", table_json(c.table_b)}};
    if (!c.pass) r["witness"] = table_witness(c);
  } else if (kind == "verify-lefschetz") {
    KIdentityVerdict v = verify_quantum_lefschetz(p, module_complex(problem));
    r["status"] = verdict(v.pass);
    r["kclass"] = {{"lhs", to_string(v.lhs)}, {"rhs", to_string(v.rhs)}};
    r["note"] = v.note;
    if (!v.pass) r["witness"] = class_witness(v.lhs, v.rhs);
  } else if (kind == "verify-sym-ga") {
    const unsigned n = task.sym.value_or(static_cast<unsigned>(p.section_rank()));
    SymCofibResult sym = sym_cofib_invariants(p, n);
    TableComparison c = compare_tables(homology_dimensions(sym.complex, cutoff, threads),
                                       homology_dimensions(koszul_complex(p), cutoff, threads));
    r["status"] = verdict(c.pass);
    r["cutoff"] = cutoff;
    r["sym_power"] = n;
    r["truncated"] = sym.truncated;
    r["tables"] = {{"sym_invariants", table_json(c.table_a)}, {"koszul", table_json(c.table_b)}};
    if (!c.pass) r["witness"] = table_witness(c);
  } else if (kind == "verify-strong") {
    StrongFactorizationVerdict v = verify_strong_factorization(p, threads);
    r["status"] = verdict(v.pass);
    r["cutoff"] = v.cutoff;
    r["kclass"] = {{"total_direct", to_string(v.total_direct)},
                   {"total_homology", to_string(v.total_homology)},
                   {"ambient_homology", to_string(v.ambient_homology)},
                   {"euler", to_string(v.euler)},
                   {"product", to_string(v.product)}};
    if (!v.pass) {
      r["witness"] = v.total_direct != v.total_homology
                         ? class_witness(v.total_direct, v.total_homology)
                         : class_witness(v.total_homology, v.product);
    }
  } else if (kind == "vpull") {
    KClass kappa = task.kappa.value_or(KClass::one());
    std::optional<Complex> rep;
    if (problem.module) {
      if (task.kappa) throw InvariantError("vpull: give either 'kappa' or a [module], not both");
      rep = module_complex(problem);
      kappa = kclass_of_complex(*rep);
    }
    const KClass pulled = vpull(p, kappa);
    r["kclass"] = {{"kappa", to_string(kappa)}, {"pullback", to_string(pulled)}};
    bool checkable = rep.has_value();
    if (rep) {
      for (const auto& [i, m] : rep->terms()) {
        for (int a : m.twists()) checkable = checkable && a >= 0;
      }
    }
    if (checkable) {
      const KClass via = vpull_via_homology(p, *rep, cutoff, threads);
      const bool pass = via == pulled.truncated(cutoff);
      r["status"] = verdict(pass);
      r["cutoff"] = cutoff;
      r["kclass"]["via_homology"] = to_string(via);
      if (!pass) r["witness"] = class_witness(pulled.truncated(cutoff), via);
    } else {
      r["status"] = "INFO";
    }
  }
  return r;
}

void render_value(std::ostringstream& os, const json& v, int indent);

void render_table(std::ostringstream& os, const json& t, int indent) {
  const std::string pad(indent, ' ');
  os << pad << "cutoff " << t["cutoff"].get<long>() << '\n';
  if (t["rows"].empty()) os << pad << "(all homology vanishes)\n";
  for (const auto& row : t["rows"]) {
    std::ostringstream label;
    label << "H^" << row["degree"].get<int>();
    os << pad << std::left << std::setw(6) << label.str() << "|";
    for (const auto& cell : row["dims"]) os << ' ' << cell[0].get<long>() << ':' << cell[1].get<long>();
    os << '\n';
  }
}

bool is_table(const json& v) { return v.is_object() && v.contains("rows") && v.contains("cutoff"); }

void render_value(std::ostringstream& os, const json& v, int indent) {
  const std::string pad(indent, ' ');
  if (is_table(v)) {
    render_table(os, v, indent);
    return;
  }
  for (const auto& [key, item] : v.items()) {
    if (item.is_object()) {
      os << pad << key << ":\n";
      render_value(os, item, indent + 2);
    } else if (item.is_array() && !item.empty() && item.front().is_object()) {
      os << pad << key << ":\n";
      for (const auto& e : item) {
        if (e.contains("poly") && e.contains("degree") && e.size() == 2) {
          os << pad << "  " << e["poly"].get<std::string>() << " : " << e["degree"].get<int>() << '\n';
        } else {
          render_value(os, e, indent + 2);
        }
      }
    } else if (item.is_array()) {
      os << pad << key << ":";
      if (item.empty()) os << " (none)";
      for (const auto& e : item) os << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
      os << '\n';
    } else {
      os << pad << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
    }
  }
}

}  // namespace

json execute(const Problem& problem, const RunOptions& options) {
  if (options.then && problem.task.kind != "crit") {
    throw UnsupportedError("--then applies only to task crit");
  }
  if (options.then) {
    const auto& kinds = task_kinds();
    if (std::find(kinds.begin(), kinds.end(), *options.then) == kinds.end()) {
      throw UnsupportedError("unknown task '" + *options.then + "' for --then");
    }
  }
  if (options.cutoff && *options.cutoff < 0) throw InvariantError("cutoff must be >= 0");
  std::optional<ZeroLocusPresentation> p;
  if (problem.task.kind != "crit") p = problem.presentation();
  return run_task(problem, problem.task, p ? *p : ZeroLocusPresentation(problem.ring, {}, {}),
                  options);
}

std::string render_human(const json& report) {
  std::ostringstream os;
  json rest = report;
  for (const char* key : {"task", "status"}) {
    if (report.contains(key)) {
      os << key << ": " << report[key].get<std::string>() << '\n';
      rest.erase(key);
    }
  }
  json tail;
  for (const char* key : {"version", "input_sha256", "timing"}) {
    if (rest.contains(key)) {
      tail[key] = rest[key];
      rest.erase(key);
    }
  }
  render_value(os, rest, 0);
  if (!tail.is_null()) render_value(os, tail, 0);
  return os.str();
}

int exit_code(const json& report) { return report.at("status") == "FAIL" ? 1 : 0; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

int run(const std::string& path, const RunOptions& options, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open " << path << '\n';
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto start = std::chrono::steady_clock::now();
  json report;
  try {
    report = execute(parse_problem(text), options);
  } catch (const ProblemError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return 2;
  } catch (const RingMismatch& e) {
    err << "error: ring mismatch: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    err << "error: invariant violated: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report["version"] = kVersion;
  report["input_sha256"] = sha256_hex(text);
  report["timing"] = {{"seconds", seconds}};
  if (options.json) {
    out << report.dump(2) << '\n';
  } else {
    out << render_human(report);
  }
  return exit_code(report);
}

}  // namespace dzero::cli
