// Copyright 2026 The oec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// oec: command line front end.
//
//   oec chi    --group S_3 --space regular -k 2
//   oec series --k 0 --euler 2 --degree 4
//   oec verify --group Z_2 --space samples/z2_swap.json -k 1 --degree 5
//   oec wreath --group Z_2 -n 3
//   oec lie S1/Z_4 -k 3
//   oec lie --check-paper -k 4

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "oec/cli.hpp"

int main(int argc, char** argv) {
  oec::RunConfig config;
  try {
    oec::apply_budget_env(config, std::getenv("OEC_BUDGET"));
  } catch (const oec::Error& e) {
    std::cerr << "oec: " << e.what() << "\n";
    return oec::kExitError;
  }

  CLI::App app{"Higher order orbifold Euler characteristics"};
  app.require_subcommand(1);
  std::string format = "json";
  const std::map<std::string, oec::OutputFormat> formats{{"json", oec::OutputFormat::json},
                                                          {"csv", oec::OutputFormat::csv}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--max-order", config.max_order, "largest accepted k");
    sub->add_option("--tuple-budget", config.tuple_budget, "commuting tuple visits")
        ->check(CLI::PositiveNumber);
    sub->add_option("--explicit-budget", config.explicit_budget, "explicit wreath group size")
        ->check(CLI::PositiveNumber);
  };
  auto finite_inputs = [&](CLI::App* sub) {
    sub->add_option("--group,-g", config.group, "group name, JSON file or inline JSON")->required();
    sub->add_option("--space,-x", config.space,
                    "action JSON (file or inline), 'regular' or 'trivial:m'");
    sub->add_option("--random-orbits", config.random_orbits, "use a random G-set with this many orbits");
    sub->add_option("--seed", config.seed, "seed for --random-orbits");
  };

  CLI::App* chi = app.add_subcommand("chi", "chi^(k)(X,G) by every applicable engine");
  finite_inputs(chi);
  chi->add_option("--k,-k", config.k, "order");
  common(chi);

  CLI::App* series = app.add_subcommand("series", "product side of the generating series");
  series->add_option("--k,-k", config.k, "order");
  series->add_option("--euler,-e", config.euler, "chi^(k)(X,G)")->required();
  series->add_option("--degree,-N", config.degree, "truncation degree");
  common(series);

  CLI::App* verify = app.add_subcommand("verify", "compare both sides of the generating series");
  finite_inputs(verify);
  verify->add_option("--k,-k", config.k, "order");
  verify->add_option("--degree,-N", config.degree, "truncation degree");
  verify->add_flag("--use-lemma3-shortcut", config.use_lemma3_shortcut,
                   "evaluate wreath coefficients through root-extension indices");
  common(verify);

  CLI::App* wreath = app.add_subcommand("wreath", "conjugacy types of G wr S_n");
  wreath->add_option("--group,-g", config.group, "group name, JSON file or inline JSON")->required();
  wreath->add_option("-n", config.n, "degree of S_n");
  common(wreath);

  CLI::App* lie = app.add_subcommand("lie", "chi^(k) of S1 and O(2) models");
  lie->add_option("model", config.model, "e.g. S1/Z_4, O2/SO2, 'S1/Z_2 + S1/S1'");
  lie->add_option("--k,-k", config.k, "order (the largest order with --check-paper)");
  lie->add_flag("--check-paper", config.check_paper, "compare with the closed forms m^k, 0, 2^k");
  lie->add_option("--m-max", config.m_max, "largest m for --check-paper");
  common(lie);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : oec::kExitError;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.format = formats.at(format);
  return oec::run(config, std::cout, std::cerr);
}
