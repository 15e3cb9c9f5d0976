#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "vermalab/cli/run.hpp"

#ifndef VERMALAB_FIXTURE_DIR
#define VERMALAB_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

std::string command_list() {
  std::string s;
  for (const auto& c : vermalab::cli::commands()) s += (s.empty() ? "" : " | ") + c;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace vermalab::cli;
  RunConfig cfg;
  cfg.fixtureDir = VERMALAB_FIXTURE_DIR;

  CLI::App app{"Exact verification suites for sl2 tensor decompositions, Hecke, Heisenberg and Adelman checks"};
  app.add_option("command", cfg.command, command_list())->required();
  app.add_option("--n", cfg.n, "rank n (decompose, hwv, projgen, verify-pseudoadjoint), size n (verify-hecke), "
                               "generator order (verify-heisenberg), or maximum object dimension (verify-adelman)");
  app.add_option("--lambda", cfg.lambda, "Verma highest weight; only decompose accepts a nonzero value");
  app.add_option("--s", cfg.s, "highest weight index s");
  app.add_option("--depth", cfg.depth, "truncation depth in f-powers of the Verma factor");
  app.add_option("--margin", cfg.margin, "interior margin for verify-pseudoadjoint (at least 8)");
  std::map<std::string, QMode> qmodes{{"generic", QMode::Generic}, {"one", QMode::One}, {"both", QMode::Both}};
  app.add_option("--q-mode", cfg.qMode, "Hecke models: generic q, q = 1, or both")
      ->transform(CLI::CheckedTransformer(qmodes, CLI::ignore_case))
      ->option_text("generic|one|both (default both)");
  app.add_option("--trials", cfg.trials, "number of random trials for fuzz suites");
  app.add_option("--seed", cfg.seed, "master seed for random suites");
  app.add_option("--output", cfg.outputPath, "write the report here instead of stdout");
  std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", cfg.format, "json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("json|csv (default json)");
  app.add_option("--n-max", cfg.nMax, "largest n swept by report");
  app.add_flag("--refreeze", cfg.refreeze, "regenerate the checked-in fixture before comparing against it");
  app.add_option("--fixture-dir", cfg.fixtureDir, "directory holding the regression fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const int code = run(cfg, std::cout, std::cerr);
  if (code == 2) std::cerr << app.help();
  return code;
}
