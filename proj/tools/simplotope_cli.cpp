#include "simplotope/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact smoothness conditions between Bernstein-Bezier patches on "
               "facet-sharing products of simplices"};
  app.require_subcommand(1);

  spt::CommandOptions options;
  int which = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("grid", options.grid_path, "grid file (JSON)")->required();
    cmd->add_option("--out", options.out_path, "output path (default: stdout)");
    cmd->add_option("--order", options.order_override, "override the grid file's order");
  };

  auto* conditions = app.add_subcommand("conditions", "generate continuity conditions");
  add_common(conditions);
  conditions->callback([&] { which = 1; });

  auto* verify = app.add_subcommand("verify", "generate, instantiate and check conditions");
  add_common(verify);
  verify->add_option("--samples", options.samples, "facet sample count")->check(CLI::PositiveNumber);
  verify->add_option("--seed", options.seed, "random seed");
  verify->add_option("--replay", options.replay_path, "check an existing conditions document");
  verify->callback([&] { which = 2; });

  auto* bnet = app.add_subcommand("bnet", "export patch B-nets");
  add_common(bnet);
  bnet->add_flag("--render-float", options.render_float, "add float-rendered points");
  bnet->callback([&] { which = 3; });

  auto* circumscribe = app.add_subcommand("circumscribe", "export circumscribed simplices");
  add_common(circumscribe);
  circumscribe->add_flag("--render-float", options.render_float, "add float-rendered points");
  circumscribe->callback([&] { which = 4; });

  CLI11_PARSE(app, argc, argv);

  switch (which) {
    case 1: return spt::run_conditions(options, std::cerr);
    case 2: return spt::run_verify(options, std::cerr);
    case 3: return spt::run_bnet(options, std::cerr);
    case 4: return spt::run_circumscribe(options, std::cerr);
  }
  return spt::exit_parse_error;
}
