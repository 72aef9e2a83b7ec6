#include "vsllt/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <thread>

int main(int argc, char** argv) {
  using namespace vsllt;
  CLI::App app{"Exact e-expansions of vertical strip LLT polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool json = false;
  std::string word, strips;

  auto* expand = app.add_subcommand("expand", "e-expansion of a path word or strip tuple");
  auto* word_opt = expand->add_option("--word", word, "path word, e.g. \"-0-0++\" or \"-,0,+\"");
  auto* strips_opt = expand->add_option("--strips", strips, "strip tuple, e.g. \"0:2;-2:2\"");
  word_opt->excludes(strips_opt);
  expand->add_flag("--json", json, "emit JSON");

  auto* path = app.add_subcommand("path", "path word, area sequence and crosses of a strip tuple");
  path->add_option("--strips", strips, "strip tuple")->required();
  path->add_flag("--json", json, "emit JSON");

  auto* oracle = app.add_subcommand("oracle", "compare against the tableau generating function");
  oracle->add_option("--strips", strips, "strip tuple")->required();
  oracle->add_option("--nvars", cfg.nvars, "number of variables (default: cell count)")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--json", json, "emit JSON");

  auto* verify = app.add_subcommand("verify", "check every path up to a semilength");
  verify->add_option("--max-semilength", cfg.max_semilength, "largest semilength")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", cfg.jobs, "worker threads")
      ->default_val(std::max(1u, std::thread::hardware_concurrency()))
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  if (*expand) {
    cfg.command = Command::Expand;
    if (!*word_opt && !*strips_opt) {
      std::cerr << "error: expand needs --word or --strips\n";
      return 2;
    }
  } else if (*path) {
    cfg.command = Command::Path;
  } else if (*oracle) {
    cfg.command = Command::Oracle;
  } else {
    cfg.command = Command::Verify;
  }
  if (*word_opt) cfg.word = word;
  if (*strips_opt || *path || *oracle) cfg.strips = strips;
  cfg.format = json ? OutputFormat::Json : OutputFormat::Text;

  try {
    const CommandOutput out = run_command(cfg);
    std::cout << out.text;
    return out.ok ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
