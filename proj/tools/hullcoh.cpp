// hullcoh — exact cohomology toolkit for lattice hull presentations.
//
// Exit codes: 0 success / verdict positive; 1 betti DISAGREE or psi-test
// counterexample; 2 parse error, invalid presentation, or precondition
// failure; 3 lefschetz found no form; 4 lefschetz found a form but hard
// Lefschetz fails.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hullcoh/hullcoh.hpp"

namespace {

struct options {
  std::string input;
  size_t max_degree = 3;
  size_t samples = 100;
  unsigned long long seed = 12345;
  size_t height = 8;
  size_t draws = 1000;
  std::string format = "json";
};

void add_common(CLI::App* sub, options& opt) {
  sub->add_option("--input", opt.input, "presentation file (JSON)")->required();
  sub->add_option("--max-degree", opt.max_degree, "largest cochain degree to test");
  sub->add_option("--samples", opt.samples, "random tuples per degree");
  sub->add_option("--seed", opt.seed, "RNG seed");
  sub->add_option("--height", opt.height, "coefficient height bound for the form search");
  sub->add_option("--draws", opt.draws, "random draws for the form search");
  sub->add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"json", "markdown"}));
}

template <typename R>
void emit(const R& rep, const std::string& format) {
  if (format == "json")
    std::cout << hullcoh::render(hullcoh::to_json(rep));
  else
    std::cout << hullcoh::to_markdown(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology of lattice hull presentations"};
  app.require_subcommand(1);
  options opt;
  CLI::App* cmd_check = app.add_subcommand("check", "validate a presentation file");
  CLI::App* cmd_betti = app.add_subcommand("betti", "Betti numbers, with oracle cross-check");
  CLI::App* cmd_mm = app.add_subcommand("minimal-model", "adapted generators and differential");
  CLI::App* cmd_psi = app.add_subcommand("psi-test", "randomized cochain-map verification");
  CLI::App* cmd_lef = app.add_subcommand("lefschetz", "symplectic form search and hard Lefschetz");
  for (CLI::App* sub : {cmd_check, cmd_betti, cmd_mm, cmd_psi, cmd_lef}) add_common(sub, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    hullcoh::hull_presentation pres = hullcoh::load_presentation(opt.input);

    if (cmd_check->parsed()) {
      hullcoh::check_run rep = hullcoh::run_check(pres);
      emit(rep, opt.format);
      return rep.ok ? 0 : 2;
    }

    hullcoh::hull h(pres);

    if (cmd_betti->parsed()) {
      hullcoh::betti_run rep = hullcoh::run_betti(h);
      emit(rep, opt.format);
      return rep.verdict == "DISAGREE" ? 1 : 0;
    }
    if (cmd_mm->parsed()) {
      hullcoh::minimal_model_run rep = hullcoh::run_minimal_model(h);
      emit(rep, opt.format);
      return 0;
    }
    if (cmd_psi->parsed()) {
      hullcoh::require(opt.samples >= 1, hullcoh::errc::inconsistent, "--samples must be >= 1");
      hullcoh::require(opt.max_degree <= h.n_u() + 1, hullcoh::errc::inconsistent,
                       "--max-degree must be at most dim(u) + 1");
      hullcoh::psi_run rep = hullcoh::run_psi_test(h, opt.max_degree, opt.samples, opt.seed);
      emit(rep, opt.format);
      return rep.rep.ok ? 0 : 1;
    }
    if (cmd_lef->parsed()) {
      hullcoh::require(opt.height >= 1, hullcoh::errc::inconsistent, "--height must be >= 1");
      hullcoh::require(opt.draws >= 1, hullcoh::errc::inconsistent, "--draws must be >= 1");
      hullcoh::lefschetz_run rep = hullcoh::run_lefschetz(h, opt.seed, opt.height, opt.draws);
      emit(rep, opt.format);
      if (!rep.cert.found) return 3;
      return rep.cert.hlp ? 0 : 4;
    }
  } catch (const hullcoh::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
