// Copyright 2026 The posdep Authors. All Rights Reserved.
//
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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace posdep;

// Concatenates the named files, or reads standard input when none (or "-")
// is given.
std::string read_input(const std::vector<std::string>& files) {
  if (files.empty() || (files.size() == 1 && files[0] == "-"))
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::string text;
  for (const std::string& name : files) {
    std::ifstream in(name, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + name + "'");
    text.append(std::istreambuf_iterator<char>(in), {});
    text += '\n';
  }
  return text;
}

GraphKind graph_kind(const std::string& s) {
  auto k = parse_graph_kind(s);
  if (!k) throw InvalidArgument("--graph must be sp or pnn, got '" + s + "'");
  return *k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posdep: positive dependency graphs and stable models of propositional theories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "posdep 1.0.0");

  cli::Common common;
  std::vector<std::string> files;
  std::string graph = "pnn";
  std::string interp_text;
  std::size_t cap = kDefaultEnumerationCap;

  auto add_common = [&](CLI::App* sub, bool with_files) {
    sub->add_flag("--json", common.json, "Structured JSON output");
    sub->add_option("--cap", cap, "Largest atom count for exhaustive enumeration")
        ->check(CLI::Range(1, static_cast<int>(kMaxEnumerationCap)));
    if (with_files) sub->add_option("files", files, "Theory files (standard input if none)");
  };

  auto* models = app.add_subcommand("models", "Classical, stable, supported and pointwise stable models");
  add_common(models, true);
  models->add_option("--interp", interp_text, "Also print the reduct w.r.t. this atom list");

  auto* graph_cmd = app.add_subcommand("graph", "Print the SP or PNN dependency graph");
  add_common(graph_cmd, true);
  std::string format = "edges";
  graph_cmd->add_option("--graph", graph, "sp or pnn")->capture_default_str();
  graph_cmd->add_option("--format", format, "dot or edges")
      ->check(CLI::IsMember({"dot", "edges"}))
      ->capture_default_str();

  auto* tight = app.add_subcommand("tight", "Check acyclicity and verify model coincidences");
  add_common(tight, true);
  std::string tight_graph = "sp";
  tight->add_option("--graph", tight_graph, "sp or pnn")->capture_default_str();

  auto* loops = app.add_subcommand("loops", "Loops, loop formulas and the loop-based stability check");
  add_common(loops, true);
  loops->add_option("--graph", graph, "sp or pnn")->capture_default_str();
  loops->add_option("--interp", interp_text, "Interpretation to check, e.g. p,q");

  auto* nes_cmd = app.add_subcommand("nes", "NES formula and loop formula of an atom set");
  add_common(nes_cmd, true);
  std::string set_text;
  nes_cmd->add_option("--set", set_text, "Atom set Y, e.g. p,q")->required();

  auto* split = app.add_subcommand("split", "Check the splitting conditions for F & G");
  add_common(split, false);
  std::string f_text, g_text, p_text;
  split->add_option("f", f_text, "Formula F")->required();
  split->add_option("g", g_text, "Formula G")->required();
  split->add_option("--p", p_text, "Atoms of P; Q is the complement")->required();
  split->add_option("--graph", graph, "sp or pnn")->capture_default_str();

  auto* fuzz = app.add_subcommand("fuzz", "Seeded refutation search for a named property");
  add_common(fuzz, false);
  cli::FuzzArgs fuzz_args;
  std::string fuzz_graph;
  fuzz->add_option("property", fuzz_args.property,
                   "theorem1, theorem2, loop-oracle, splitting, reduct-lemma, lemma1, "
                   "sp-subgraph or chain")
      ->required();
  fuzz->add_option("--seed", fuzz_args.options.seed)->capture_default_str();
  fuzz->add_option("--count", fuzz_args.options.count)->capture_default_str();
  fuzz->add_option("--max-atoms", fuzz_args.options.max_atoms)->capture_default_str();
  fuzz->add_option("--max-depth", fuzz_args.options.max_depth)->capture_default_str();
  fuzz->add_option("--graph", fuzz_graph, "Override the property's graph (sp or pnn)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }
  common.cap = cap;

  return cli::run_guarded(
      [&]() -> int {
        std::optional<AtomSet> interp;
        if (!interp_text.empty() || (loops->parsed() && loops->count("--interp")) ||
            (models->parsed() && models->count("--interp")))
          interp = cli::parse_atom_list(interp_text);

        if (models->parsed()) return cli::cmd_models(read_input(files), common, interp, std::cout);
        if (graph_cmd->parsed())
          return cli::cmd_graph(read_input(files), graph_kind(graph),
                                format == "dot" ? cli::GraphFormat::Dot : cli::GraphFormat::Edges,
                                common, std::cout);
        if (tight->parsed())
          return cli::cmd_tight(read_input(files), graph_kind(tight_graph), common, std::cout);
        if (loops->parsed())
          return cli::cmd_loops(read_input(files), graph_kind(graph), interp, common, std::cout);
        if (nes_cmd->parsed())
          return cli::cmd_nes(read_input(files), cli::parse_atom_list(set_text), common,
                              std::cout);
        if (split->parsed())
          return cli::cmd_split(f_text, g_text, cli::parse_atom_list(p_text), graph_kind(graph),
                                common, std::cout);
        if (!fuzz_graph.empty()) fuzz_args.options.graph = graph_kind(fuzz_graph);
        return cli::cmd_fuzz(fuzz_args, common, std::cout);
      },
      std::cerr);
}
