#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

using namespace kegraph::cli;

int main(int argc, char** argv) {
  CLI::App app{"König-Egerváry graph analysis: matchings, independence, critical sets and heredity numbers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "kegraph 0.1.0");

  RunConfig config;
  std::string format = "text";
  std::uint64_t budget = config.budget.max_nodes;
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

  const auto common = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "Work budget per exact computation (default: KEGRAPH_BUDGET or 50000000)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs,-j", config.jobs, "Worker threads")->check(CLI::Range(1, 1024));
    cmd->add_flag("--strict", config.strict, "Stop with exit code 3 when a budget runs out");
  };
  const auto with_format = [&](CLI::App* cmd) {
    cmd->add_option("--format,-f", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Report invariants for every graph in the input");
  analyze->add_option("input", config.input, "graph6 / edge list / DIMACS file, or - for stdin")->required();
  common(analyze);
  with_format(analyze);

  CLI::App* verify = app.add_subcommand("verify", "Run the structural identity checks over a population");
  bool gallery_source = false;
  std::string census_file;
  int census_order = -1;
  std::vector<std::string> random;
  auto* g_opt = verify->add_flag("--gallery", gallery_source, "Every gallery fixture");
  auto* c_opt = verify->add_option("--census", census_file, "File of graph6 lines")->check(CLI::ExistingFile);
  auto* o_opt = verify->add_option("--census-order", census_order, "Every graph with at most this many vertices");
  auto* r_opt = verify->add_option("--random", random, "Random König-Egerváry graphs: ke <s> <a> <p>")->expected(4);
  g_opt->excludes(c_opt, o_opt, r_opt);
  c_opt->excludes(o_opt, r_opt);
  o_opt->excludes(r_opt);
  verify->add_option("--count", config.count, "Number of random graphs")->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "Seed for random graphs and sampled matchings");
  common(verify);
  with_format(verify);

  CLI::App* gen = app.add_subcommand("gen", "Write generated graphs as graph6 lines");
  std::string family;
  std::vector<std::string> params;
  gen->add_option("family", family, "cycle, path, complete, ke, gpq, hk, census or gallery:<name>")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--count", config.count, "Number of graphs (ke)")->check(CLI::PositiveNumber);
  gen->add_option("--seed", config.seed, "Seed of the first graph (ke)");

  CLI::App* gallery = app.add_subcommand("gallery", "Compare gallery fixtures against computed values");
  gallery->add_option("--budget", budget, "Work budget per exact computation")->check(CLI::PositiveNumber);
  with_format(gallery);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.budget.max_nodes = budget;
  config.format = formats.at(format);

  if (analyze->parsed()) return cmd_analyze(config, std::cout, std::cerr);
  if (gen->parsed()) return cmd_gen(config, family, params, std::cout, std::cerr);
  if (gallery->parsed()) return cmd_gallery(config, std::cout, std::cerr);

  VerifySource source;
  if (gallery_source) {
    source.kind = VerifySource::Kind::Gallery;
  } else if (!census_file.empty()) {
    source.kind = VerifySource::Kind::CensusFile;
    source.path = census_file;
  } else if (census_order >= 0) {
    source.kind = VerifySource::Kind::CensusOrder;
    source.max_order = census_order;
  } else if (!random.empty()) {
    if (random[0] != "ke") {
      std::cerr << "kegraph: --random supports only the ke family\n";
      return kExitUsage;
    }
    source.kind = VerifySource::Kind::RandomKE;
    try {
      source.s = std::stoi(random[1]);
      source.a = std::stoi(random[2]);
      source.p = std::stod(random[3]);
    } catch (const std::exception&) {
      std::cerr << "kegraph: --random ke expects <s> <a> <p>\n";
      return kExitUsage;
    }
  } else {
    std::cerr << "kegraph: verify needs one of --gallery, --census, --census-order, --random\n";
    return kExitUsage;
  }
  return cmd_verify(config, source, std::cout, std::cerr);
}
