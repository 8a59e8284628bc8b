#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "trotterlab/errors.hpp"
#include "trotterlab/experiments.hpp"
#include "trotterlab/report.hpp"

// Exit codes: 0 every check passed, 1 the run finished but some check
// failed, 2 bad invocation or config, 3 a numeric precondition failed.
int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for operator product-splitting bounds"};
  bool list = false;
  app.add_flag("--list-experiments", list,
               "print the registered experiment names and exit");

  auto* run = app.add_subcommand("run", "run one experiment from a JSON config");
  std::string config_path;
  std::string output_path;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  run->add_option("config", config_path, "path to the JSON config file")
      ->required();
  run->add_option("-o,--output", output_path,
                  "write the report to this file instead of stdout");
  run->add_option("-f,--format", format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--seed", seed, "override the config seed");

  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& name : trotterlab::experiment_names())
      std::cout << name << "\n";
    return 0;
  }
  if (!run->parsed()) {
    std::cerr << app.help();
    return 2;
  }

  try {
    trotterlab::RunReport report =
        trotterlab::run_experiment_file(config_path, seed);
    trotterlab::ReportFormat fmt = trotterlab::parse_format(format);
    if (output_path.empty())
      std::cout << trotterlab::report_to_string(report, fmt);
    else
      trotterlab::write_report_file(report, output_path, fmt);
    std::cerr << report.experiment << ": "
              << (report.pass ? "all checks passed" : "CHECK FAILURES")
              << "\n";
    return report.pass ? 0 : 1;
  } catch (const trotterlab::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const trotterlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
