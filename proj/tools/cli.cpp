#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "ucover/errors.hpp"
#include "ucover/io.hpp"
#include "ucover/oracle.hpp"
#include "ucover/realize.hpp"
#include "ucover/sequence_check.hpp"
#include "ucover/typing.hpp"
#include "ucover/unfold.hpp"

namespace ucover::cli {

namespace {

struct LoadedTrees {
  std::vector<RootedTree> trees;
  std::vector<std::size_t> lines;
  int h = 0;
};

// Reads a tree file and resolves the working depth: the maximum depth present
// unless overridden, in which case no tree may be deeper than the override.
LoadedTrees load_trees(const std::string& path, std::optional<int> depth_override) {
  LoadedTrees loaded;
  loaded.trees = read_trees_file(path, &loaded.lines);

  int max_depth = 0;
  for (const auto& t : loaded.trees) max_depth = std::max(max_depth, depth(t));
  if (!depth_override) {
    loaded.h = max_depth;
    return loaded;
  }
  if (*depth_override < 0) throw std::invalid_argument("--depth must be non-negative");
  loaded.h = *depth_override;

  std::vector<std::size_t> bad;
  std::string msg;
  for (std::size_t i = 0; i < loaded.trees.size(); ++i) {
    if (const int d = depth(loaded.trees[i]); d > loaded.h) {
      bad.push_back(i);
      msg += "\n  " + path + ":" + std::to_string(loaded.lines[i]) + ": tree of depth " +
             std::to_string(d);
    }
  }
  if (!bad.empty())
    throw DepthError("trees deeper than --depth " + std::to_string(loaded.h) + ":" + msg,
                     std::move(bad));
  return loaded;
}

// Writes through a buffer so that nothing is created on failure.
void emit(const Config& config, std::ostream& out, const std::string& payload) {
  if (config.output.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw std::runtime_error("cannot write '" + config.output + "'");
  file << payload;
}

int cmd_check(const Config& config, std::ostream& out) {
  const auto loaded = load_trees(config.input, config.depth_override);
  const auto table = build_table(loaded.trees, loaded.h);
  const auto verdict = check_neighborhood(table);

  auto doc = to_json(verdict, loaded.h);
  if (config.explain) doc["table"] = to_json(table);
  out << doc.dump(2) << '\n';
  return verdict.graphical ? kExitOk : kExitNotGraphical;
}

int cmd_realize(const Config& config, std::ostream& out, std::ostream& err) {
  const auto loaded = load_trees(config.input, config.depth_override);
  Realization g;
  try {
    g = realize_neighborhood(loaded.trees, loaded.h);
  } catch (const NotGraphical& e) {
    err << "not graphical: no realization exists\n";
    out << to_json(e.verdict(), loaded.h).dump(2) << '\n';
    return kExitNotGraphical;
  }

  if (config.verify) {
    if (const auto bad = first_mismatch(g.graph, loaded.trees, loaded.h))
      throw InternalError("realization does not reproduce the tree of vertex " +
                          std::to_string(*bad));
  }

  std::ostringstream payload;
  switch (config.format) {
    case Format::Text: write_graph(payload, g.graph); break;
    case Format::Dot: write_dot(payload, g.graph); break;
    case Format::Json: payload << graph_to_json(g.graph).dump(2) << '\n'; break;
  }
  emit(config, out, payload.str());
  return kExitOk;
}

int cmd_neighborhoods(const Config& config, std::ostream& out) {
  if (!config.depth_override) throw std::invalid_argument("--depth is required");
  if (*config.depth_override < 0) throw std::invalid_argument("--depth must be non-negative");
  const auto g = read_graph_file(config.input);
  std::ostringstream payload;
  write_codes(payload, neighborhood_codes(g, *config.depth_override));
  emit(config, out, payload.str());
  return kExitOk;
}

int cmd_verify(const Config& config, std::ostream& out, std::ostream& err) {
  const auto g = read_graph_file(config.input);
  const auto loaded = load_trees(config.second_input, config.depth_override);
  if (loaded.trees.size() != g.n())
    throw std::invalid_argument("graph has " + std::to_string(g.n()) + " vertices but " +
                                std::to_string(loaded.trees.size()) + " trees were given");

  const auto bad = first_mismatch(g, loaded.trees, loaded.h);
  nlohmann::json doc{{"match", !bad}, {"h", loaded.h}};
  doc["first_mismatch"] = bad ? nlohmann::json(*bad) : nlohmann::json(nullptr);
  out << doc.dump(2) << '\n';
  if (!bad) return kExitOk;

  err << "vertex " << *bad << ": cover ball " << cover_ball_code(g, static_cast<int>(*bad), loaded.h).str()
      << " differs from " << serialize(loaded.trees[*bad]) << '\n';
  return kExitNotGraphical;
}

int cmd_selftest(const Config& config, std::ostream& out) {
  if (config.max_n > kMaxEnumeratedGraphOrder)
    throw SizeError("--max-n is limited to " + std::to_string(kMaxEnumeratedGraphOrder));
  const int h = config.depth_override.value_or(2);
  if (h < 0) throw std::invalid_argument("--depth must be non-negative");

  auto reports = nlohmann::json::array();
  std::size_t cases = 0, disagreements = 0, internal = 0;
  for (std::size_t n = 0; n <= config.max_n; ++n) {
    const auto report = cross_validate(n, h, config.mutants_per_case, config.seed);
    cases += report.cases_total;
    disagreements += report.disagreements.size();
    internal += report.internal_errors;
    reports.push_back(to_json(report));
  }
  nlohmann::json doc{{"depth", h},
                     {"seed", config.seed},
                     {"cases_total", cases},
                     {"disagreements", disagreements},
                     {"internal_errors", internal},
                     {"reports", std::move(reports)}};
  out << doc.dump(2) << '\n';
  return disagreements == 0 ? kExitOk : kExitNotGraphical;
}

}  // namespace

int execute(const Config& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Check: return cmd_check(config, out);
      case Command::Realize: return cmd_realize(config, out, err);
      case Command::Neighborhoods: return cmd_neighborhoods(config, out);
      case Command::Verify: return cmd_verify(config, out, err);
      case Command::Selftest: return cmd_selftest(config, out);
    }
  } catch (const InternalError& e) {
    err << "internal error (please report): " << e.what() << '\n';
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInternalError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide and construct graphs from universal-cover neighborhoods"};
  app.require_subcommand(1);
  Config config;

  auto add_depth = [&](CLI::App* sub, const std::string& help) {
    sub->add_option_function<int>(
        "--depth,-d", [&](int h) { config.depth_override = h; }, help);
  };

  auto* check = app.add_subcommand("check", "Decide whether a tree collection is graphical");
  check->add_option("trees", config.input, "Tree collection file")->required();
  add_depth(check, "Neighborhood depth h (default: maximum tree depth)");
  check->add_flag("--explain", config.explain, "Include the typed degree table");

  auto* realize = app.add_subcommand("realize", "Construct a realizing graph");
  realize->add_option("trees", config.input, "Tree collection file")->required();
  realize->add_option("-o,--output", config.output, "Graph output file (default: stdout)");
  add_depth(realize, "Neighborhood depth h (default: maximum tree depth)");
  realize->add_flag("--verify", config.verify, "Check the result by unfolding its cover balls");
  std::map<std::string, Format> formats{{"text", Format::Text}, {"dot", Format::Dot}, {"json", Format::Json}};
  realize->add_option("--format", config.format, "Output format: text, dot or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* nbhd = app.add_subcommand("neighborhoods", "Print the cover balls of every vertex");
  nbhd->add_option("graph", config.input, "Graph file")->required();
  nbhd->add_option("-o,--output", config.output, "Tree output file (default: stdout)");
  add_depth(nbhd, "Ball radius h");

  auto* verify = app.add_subcommand("verify", "Check a graph against a tree collection");
  verify->add_option("graph", config.input, "Graph file")->required();
  verify->add_option("trees", config.second_input, "Tree collection file")->required();
  add_depth(verify, "Neighborhood depth h (default: maximum tree depth)");

  auto* selftest = app.add_subcommand("selftest", "Cross-validate against exhaustive enumeration");
  selftest->add_option("--max-n", config.max_n, "Largest vertex count")->capture_default_str();
  add_depth(selftest, "Neighborhood depth h (default: 2)");
  selftest->add_option("--mutants-per-case", config.mutants_per_case, "Mutants per graph")
      ->capture_default_str();
  selftest->add_option("--seed", config.seed, "Mutation seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (check->parsed()) config.command = Command::Check;
  if (realize->parsed()) config.command = Command::Realize;
  if (nbhd->parsed()) config.command = Command::Neighborhoods;
  if (verify->parsed()) config.command = Command::Verify;
  if (selftest->parsed()) config.command = Command::Selftest;
  return execute(config, out, err);
}

}  // namespace ucover::cli
