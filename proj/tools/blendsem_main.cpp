#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blendsem/config.hpp"
#include "blendsem/driver.hpp"
#include "blendsem/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"blended DGSEM/FV compressible Euler solver"};
  app.require_subcommand(1);

  CLI::App* run_cmd = app.add_subcommand("run", "run a simulation from a config file");
  std::string config_path;
  std::vector<std::string> sets;
  std::string out_dir;
  run_cmd->add_option("config", config_path, "config file (section.key = value lines)")
      ->required();
  run_cmd->add_option("--set", sets, "override a config entry: section.key=value");
  run_cmd->add_option("--out-dir", out_dir, "override output.dir");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!out_dir.empty()) sets.push_back("output.dir=" + out_dir);
    const blendsem::RunConfig cfg = blendsem::load_config(config_path, sets);

    const blendsem::RunResult result = blendsem::run(cfg);
    if (result.success) {
      std::cout << "completed: t = " << result.t << ", steps = " << result.steps
                << ", S = " << result.final_entropy << "\n";
      return 0;
    }
    std::cerr << "abort after " << result.steps << " steps at t = " << result.t << ": "
              << result.abort_reason << "\n";
    if (result.abort_element >= 0) {
      std::cerr << "  element " << result.abort_element << ", node ("
                << result.abort_node_i << ", " << result.abort_node_j << ")";
      if (result.abort_stage >= 0) std::cerr << ", stage " << result.abort_stage;
      if (!result.abort_quantity.empty()) std::cerr << ", " << result.abort_quantity;
      std::cerr << "\n";
    }
    return result.exit_code;
  } catch (const blendsem::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
