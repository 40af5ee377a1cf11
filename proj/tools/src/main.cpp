#include <iostream>

#include "CLI11.hpp"
#include "dzero/cli/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Derived zero loci: Koszul homology, G-theory classes and identity checks"};
  app.set_version_flag("--version", std::string(dzero::kVersion));
  app.require_subcommand(1);

  dzero::cli::RunOptions options;
  std::string path;
  long cutoff = -1;
  std::string then;

  CLI::App* run = app.add_subcommand("run", "Run the task of a problem file");
  run->add_option("file", path, "Problem file")->required();
  run->add_option("--cutoff", cutoff, "Internal-degree cutoff (default 2 x sum of declared degrees)")
      ->check(CLI::NonNegativeNumber);
  run->add_flag("--json", options.json, "Emit a JSON report");
  run->add_option("--then", then, "Run this task on the presentation produced by crit");
  run->add_option("--threads", options.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (cutoff >= 0) options.cutoff = cutoff;
  if (!then.empty()) options.then = then;
  return dzero::cli::run(path, options, std::cout, std::cerr);
}
