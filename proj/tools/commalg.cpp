#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commalg/cli.hpp"
#include "commalg/errors.hpp"

namespace {

struct Options {
  std::string field = "rat";
  std::optional<std::size_t> trunc;
  std::string format = "json";
  bool pretty = false;
  bool dot = false;
  std::optional<std::string> out;
  std::string input = "-";
  std::optional<std::string> dsl;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting algebras of quivers"};
  app.require_subcommand(1);

  Options opt;
  commalg::cli::RunConfiguration config;

  auto add_common = [&](CLI::App* sub, bool takes_input) {
    sub->add_option("--field", opt.field, "rat or fp:<p>");
    sub->add_option("--format", opt.format, "json, pretty or dot")
        ->check(CLI::IsMember({"json", "pretty", "dot"}));
    sub->add_flag("--pretty", opt.pretty, "same as --format pretty");
    sub->add_flag("--dot", opt.dot, "same as --format dot");
    sub->add_option("--out", opt.out, "write the report to a file");
    if (takes_input) {
      sub->add_option("input", opt.input, "quiver file, or - for stdin");
      sub->add_option("--dsl", opt.dsl, "inline quiver text");
    }
  };

  const char* commands[][2] = {
      {"parse", "validate and echo a quiver"},
      {"components", "path-connected components and their order"},
      {"blockform", "block matrix pattern of the commuting algebra"},
      {"skeleton", "skeleton poset and its Hasse diagram"},
      {"incidence", "incidence algebra isomorphism witness"},
      {"gldim", "projective and global dimensions"},
      {"verify", "run the full invariant suite"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, true);
    if (std::string(name) == "verify") {
      sub->add_option("--trunc", opt.trunc, "oracle truncation length");
    }
  }
  CLI::App* random = app.add_subcommand("random", "emit a random quiver");
  add_common(random, false);
  random->add_option("--seed", config.seed, "generator seed");
  random->add_option("--vertices", config.vertices, "vertex count")
      ->check(CLI::PositiveNumber);
  random->add_option("--arrows", config.arrows, "arrow count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : commalg::cli::kExitValidation;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.input = opt.input;
  config.inline_dsl = opt.dsl;
  config.truncation = opt.trunc;
  config.out_path = opt.out;
  try {
    config.field = commalg::Field::parse(opt.field);
    config.format = commalg::cli::parse_format(opt.format);
  } catch (const commalg::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return commalg::cli::kExitValidation;
  }
  if (opt.pretty) config.format = commalg::cli::OutputFormat::Pretty;
  if (opt.dot) config.format = commalg::cli::OutputFormat::Dot;

  return commalg::cli::run(config, std::cin, std::cout, std::cerr);
}
