#include "heterotree/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "heterotree/colourings.hpp"
#include "heterotree/constructions.hpp"
#include "heterotree/io.hpp"
#include "heterotree/matroid.hpp"
#include "heterotree/oracle.hpp"

namespace heterotree::cli {

namespace {

using io::Json;

struct RunConfig {
  std::string target;
  std::optional<int> n;
  std::optional<int> m;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::size_t keep = 0;
  std::string input;
  std::string tree;
  std::string output;
};

struct Outcome {
  std::string text;
  int code = kSuccess;
};

std::string read_source(const std::string& path) {
  if (path.empty()) throw InvalidInput("missing input file");
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int require_param(const std::optional<int>& value, const std::string& flag, const std::string& target) {
  if (!value) throw InvalidInput(target + " requires " + flag);
  return *value;
}

std::uint64_t resolve_budget(const RunConfig& config) {
  if (config.budget) return *config.budget;
  if (const char* env = std::getenv("HETEROTREE_BUDGET")) {
    std::uint64_t value = 0;
    const std::string text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InvalidInput("HETEROTREE_BUDGET is not a non-negative integer: " + text);
    }
    return value;
  }
  return kDefaultEnumerationBudget;
}

Outcome verdict(Json body, bool holds) {
  body["verdict"] = holds;
  return {io::dump(body), holds ? kSuccess : kVerifiedNegative};
}

Outcome generate(const RunConfig& c) {
  const std::string& t = c.target;
  if (t == "graceful") return {io::dump(io::graph_to_json(graceful_colouring(require_param(c.n, "--n", t))))};
  if (t == "stellar") return {io::dump(io::graph_to_json(stellar_colouring(require_param(c.n, "--n", t))))};
  if (t == "nice") return {io::dump(io::graph_to_json(random_nice_colouring(require_param(c.n, "--n", t), c.seed)))};
  if (t == "cute") return {io::dump(io::graph_to_json(random_cute_colouring(require_param(c.n, "--n", t), c.seed)))};
  if (t == "bipartite-nice") {
    return {io::dump(io::graph_to_json(bipartite_nice_colouring(require_param(c.m, "--m", t), c.seed)))};
  }
  return {io::dump(io::graph_to_json(unique_tree_graph(io::parse_tree(read_source(c.tree)))))};
}

Outcome check(const RunConfig& c) {
  const auto g = io::parse_graph(read_source(c.input));
  Json body{{"property", c.target}};
  if (c.target == "nice" || c.target == "cute") {
    const auto cls = classify_colouring(g);
    body["classes"] = cls.verdicts();
    body["class_sizes"] = cls.class_sizes;
    return verdict(std::move(body), c.target == "nice" ? cls.nice : cls.cute);
  }
  if (c.target == "beautiful") {
    if (!classify_colouring(g).nice) {
      body["reason"] = "colouring is not nice";
      return verdict(std::move(body), false);
    }
    const auto witness = verify_beautiful(g);
    if (witness) body["witness"] = io::bipartition_to_json(*witness);
    return verdict(std::move(body), witness.has_value());
  }
  if (c.target == "suzuki") return verdict(std::move(body), suzuki_check(g));
  if (c.target == "akbari") return verdict(std::move(body), akbari_alipour_check(g));
  const auto lemma = lemma1_condition_holds(g);
  if (lemma.violating) body["violating"] = io::edge_set_to_json(*lemma.violating);
  return verdict(std::move(body), lemma.holds);
}

Outcome find(const RunConfig& c) {
  const auto g = io::parse_graph(read_source(c.input));
  const auto tree = find_heterochromatic_spanning_tree(g);
  if (!tree) return {io::dump(Json("absent")), kVerifiedNegative};
  Json edges = Json::array();
  for (EdgeId id : *tree) edges.push_back({g.edge(id).u, g.edge(id).v, g.edge(id).colour});
  return {io::dump(Json{{"tree", io::edge_set_to_json(*tree)}, {"edges", std::move(edges)}})};
}

Outcome family(const RunConfig& c) {
  const auto g = io::parse_graph(read_source(c.input));
  return {io::dump(io::family_to_json(c.target == "nice" ? nice_tree_family(g) : beautiful_tree_family(g)))};
}

Outcome count(const RunConfig& c, std::ostream& err) {
  const auto g = io::parse_graph(read_source(c.input));
  EnumerationOptions options{resolve_budget(c), c.keep};
  const auto report = enumerate_heterochromatic_spanning_trees(g, options);
  if (report.colour_subsets) {
    err << io::dump(Json{{"warning", "more colours than |V| - 1; enumerating colour subsets as well"}});
  }
  return {io::dump(io::report_to_json(report))};
}

Outcome embed(const RunConfig& c) {
  const auto g = io::parse_graph(read_source(c.input));
  const auto t = io::parse_tree(read_source(c.tree));
  const auto mapping = heterochromatic_embedding(g, t);
  if (!mapping) return {io::dump(Json("absent")), kVerifiedNegative};
  return {io::dump(Json{{"mapping", *mapping}})};
}

int fail(std::ostream& err, const std::string& kind, const std::string& message, int code,
         std::optional<std::uint64_t> search_space = std::nullopt) {
  Json body{{"error", kind}, {"message", message}};
  if (search_space) body["search_space"] = *search_space;
  err << io::dump(body);
  return code;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Heterochromatic spanning trees in edge-coloured graphs", "heterotree"};
  app.require_subcommand(1);
  app.add_option("-o,--output", config.output, "Write the result to this file instead of stdout");

  auto* gen = app.add_subcommand("generate", "Generate a coloured graph");
  gen->add_option("family", config.target)
      ->required()
      ->check(CLI::IsMember({"graceful", "stellar", "nice", "cute", "bipartite-nice", "unique-tree"}));
  gen->add_option("--n", config.n, "n, for K_{n+1}");
  gen->add_option("--m", config.m, "m, for K_{m,m}");
  gen->add_option("--seed", config.seed, "RNG seed");
  gen->add_option("--tree", config.tree, "Tree JSON file (unique-tree)");

  auto* chk = app.add_subcommand("check", "Check a colouring property");
  chk->add_option("property", config.target)
      ->required()
      ->check(CLI::IsMember({"nice", "cute", "beautiful", "suzuki", "akbari", "lemma1"}));
  chk->add_option("--input", config.input, "Graph JSON file")->required();

  auto* fnd = app.add_subcommand("find", "Find a heterochromatic spanning tree");
  fnd->add_option("--input", config.input, "Graph JSON file")->required();

  auto* fam = app.add_subcommand("family", "Build a certified family of trees");
  fam->add_option("kind", config.target)->required()->check(CLI::IsMember({"nice", "beautiful"}));
  fam->add_option("--input", config.input, "Graph JSON file")->required();

  auto* cnt = app.add_subcommand("count", "Count heterochromatic spanning trees exactly");
  cnt->add_option("--input", config.input, "Graph JSON file")->required();
  cnt->add_option("--budget", config.budget, "Maximum search space");
  cnt->add_option("--keep", config.keep, "Number of trees to list");

  auto* emb = app.add_subcommand("embed", "Find a heterochromatic copy of a tree");
  emb->add_option("--input", config.input, "Complete coloured graph JSON file")->required();
  emb->add_option("--tree", config.tree, "Tree JSON file")->required();

  auto* dot = app.add_subcommand("export-dot", "Export a graph as DOT");
  dot->add_option("--input", config.input, "Graph JSON file")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(err, "invalid_arguments", e.what(), kInvalidInput);
  }

  try {
    Outcome outcome;
    if (gen->parsed()) {
      if (config.target == "unique-tree" && config.tree.empty()) throw InvalidInput("unique-tree requires --tree");
      outcome = generate(config);
    } else if (chk->parsed()) {
      outcome = check(config);
    } else if (fnd->parsed()) {
      outcome = find(config);
    } else if (fam->parsed()) {
      outcome = family(config);
    } else if (cnt->parsed()) {
      outcome = count(config, err);
    } else if (emb->parsed()) {
      outcome = embed(config);
    } else {
      outcome = {io::graph_to_dot(io::parse_graph(read_source(config.input)))};
    }

    if (config.output.empty()) {
      out << outcome.text;
    } else {
      std::ofstream file(config.output);
      if (!file) throw InvalidInput("cannot write " + config.output);
      file << outcome.text;
    }
    return outcome.code;
  } catch (const BudgetExceeded& e) {
    return fail(err, "budget_exceeded", e.what(), kBudgetExceeded, e.search_space());
  } catch (const InvalidInput& e) {
    return fail(err, "invalid_input", e.what(), kInvalidInput);
  } catch (const nlohmann::json::exception& e) {
    return fail(err, "invalid_input", e.what(), kInvalidInput);
  } catch (const InternalError& e) {
    return fail(err, "internal_error", e.what(), kInternalError);
  }
}

}  // namespace heterotree::cli
