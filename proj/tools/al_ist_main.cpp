// al_ist: command-line front end.
//
//   al_ist --cmd solve --in q0.json --t 1 --n0 0 --eps 1e-6
//   al_ist --cmd compare --seed 7 --t 0.5
//
// Exit codes: 0 success, 1 compare deviation above tolerance,
// 2 validation error, 3 numerical guard tripped.

#include <iostream>

#include "CLI11.hpp"
#include "al_ist/cli.hpp"
#include "al_ist/kernels.hpp"

int main(int argc, char** argv) {
  using namespace al_ist;
  CLI::App app{"Ablowitz-Ladik lattice solver by inverse scattering and Schur's algorithm"};
  app.option_defaults()->always_capture_default();
  // --h is the reference step, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");

  cli::JobSpec job;
  std::string command = "solve";
  std::string boundary = "zero";
  std::string input, output;
  double eta = 0.0;
  int radius = 0;

  app.add_option("--cmd", command, "solve | reference | compare | nlft | multiplier | bench")
      ->check(CLI::IsMember({"solve", "reference", "compare", "nlft", "multiplier", "bench"}));
  auto* in_opt = app.add_option("--in", input, "input sequence (JSON); random datum from --seed when absent");
  auto* out_opt = app.add_option("--out", output, "output file; stdout when absent");
  app.add_option("--t", job.t, "evolution time");
  app.add_option("--n0", job.n0, "query site");
  app.add_option("--eps", job.eps, "target absolute error, in (0, 1)");
  auto* eta_opt = app.add_option("--eta", eta, "lower bound for prod(1 - |q0|^2); computed when absent");
  app.add_option("--h", job.h, "reference RK4 step");
  auto* radius_opt = app.add_option("--radius", radius, "reference lattice half-width");
  app.add_option("--grid", job.grid, "grid size (power of two) or largest bench N");
  app.add_option("--seed", job.seed, "seed for the random datum");
  app.add_option("--boundary", boundary, "reference boundary")->check(CLI::IsMember({"zero", "periodic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kValidationError;
  }

  kernels::configure_threads_from_env();
  job.command = cli::parse_command(command);
  job.boundary = cli::parse_boundary(boundary);
  if (*in_opt) job.input = input;
  if (*out_opt) job.output = output;
  if (*eta_opt) job.eta = eta;
  if (*radius_opt) job.radius = radius;
  return cli::run(job, std::cout, std::cerr);
}
