#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "casimir/experiment.hpp"

namespace {

int run(const std::string& experiment, const std::string& config_path,
        const std::string& format_override, const std::string& out_override) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open config file '" << config_path << "'\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  casimir::ExperimentConfig cfg;
  try {
    cfg = casimir::parse_config(buf.str());
  } catch (const casimir::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.experiment = experiment;
  if (!format_override.empty()) cfg.format = format_override;
  if (!out_override.empty()) cfg.out = out_override;

  casimir::RunResult result = casimir::run_experiment(cfg);
  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot open output file '" << cfg.out << "'\n";
      return 2;
    }
    os << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"casimir-lab: exact central-operator experiments on evaluation modules"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"verify-centrality", "hwv-dims",        "orbit",
                                          "cg-table",          "anti-diagonal",   "gelfand-spectrum",
                                          "t-decompose"};
  struct Args {
    std::string config, format, out;
  };
  std::map<std::string, Args> args;
  for (const auto& kind : kinds) {
    auto* sub = app.add_subcommand(kind);
    sub->add_option("--config", args[kind].config, "experiment config file")->required();
    sub->add_option("--format", args[kind].format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", args[kind].out, "write the report to a file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& kind : kinds)
    if (app.got_subcommand(kind))
      return run(kind, args[kind].config, args[kind].format, args[kind].out);
  return 2;
}
