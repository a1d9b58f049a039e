#include "al_ist/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>

#include "al_ist/al_fast.hpp"
#include "al_ist/io.hpp"
#include "al_ist/multiplier.hpp"
#include "al_ist/nlft.hpp"

namespace al_ist::cli {
namespace {

using io::format_double;

Sequence load_datum(const JobSpec& job) {
  if (job.input) return io::read_sequence(*job.input);
  return io::random_sequence(job.seed, kRandomSites, kRandomOffset, kRandomModulus);
}

std::string budget_table(const WindowSolution& w) {
  std::ostringstream os;
  os << "n,re,im,budget\n";
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    os << w.first_site + static_cast<int>(i) << ',' << format_double(w.values[i].real()) << ','
       << format_double(w.values[i].imag()) << ',' << format_double(w.budgets[i].total) << '\n';
  }
  return os.str();
}

std::string run_solve(const JobSpec& job, const Sequence& q0) {
  return budget_table(solve_window(q0, job.t, job.n0, job.eps, job.eta));
}

std::string run_reference(const JobSpec& job, const Sequence& q0) {
  const int radius = job.radius.value_or(default_radius(q0, job.t));
  return io::sequence_to_json(rk4_integrate(q0, job.t, job.h, radius, job.boundary).q);
}

struct CompareResult {
  std::string table;
  bool pass;
  std::string summary;
};

CompareResult run_compare(const JobSpec& job, const Sequence& q0) {
  const double eta = job.eta.value_or(std::exp(q0.log_szego_product()));
  const SolveParams p = select_params(job.t, job.eps, eta, job.n0);
  const int half = p.N / 2;
  const int radius = std::max(job.radius.value_or(default_radius(q0, job.t)), std::abs(job.n0) + half + 10);

  auto fast = std::async(std::launch::async, [&] { return solve_window(q0, job.t, job.n0, job.eps, job.eta); });
  auto coarse = std::async(std::launch::async, [&] { return rk4_integrate(q0, job.t, job.h, radius, job.boundary); });
  const LatticeState fine = rk4_integrate(q0, job.t, job.h / 2, radius, job.boundary);
  const WindowSolution w = fast.get();
  const LatticeState ref = coarse.get();

  std::ostringstream os;
  os << "n,re,im,budget,ref_re,ref_im,deviation\n";
  double worst = 0.0, ref_error = 0.0;
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const int site = w.first_site + static_cast<int>(i);
    const cplx r = ref.q[site];
    ref_error = std::max(ref_error, std::abs(r - fine.q[site]));
    const double dev = std::abs(w.values[i] - r);
    worst = std::max(worst, dev);
    os << site << ',' << format_double(w.values[i].real()) << ',' << format_double(w.values[i].imag()) << ','
       << format_double(w.budgets[i].total) << ',' << format_double(r.real()) << ',' << format_double(r.imag())
       << ',' << format_double(dev) << '\n';
  }
  const bool pass = worst <= job.eps + ref_error;
  std::ostringstream summary;
  summary << "compare: max deviation " << format_double(worst) << ", eps " << format_double(job.eps)
          << ", reference error " << format_double(ref_error) << (pass ? " PASS" : " FAIL") << '\n';
  return {os.str(), pass, summary.str()};
}

std::string run_nlft(const JobSpec& job, const Sequence& q0) {
  const Transfer2x2 tr = nlft_forward(q0);
  const CircleGrid grid = job.grid ? CircleGrid(job.grid) : tr.default_grid();
  const SzegoIdentity sz = szego_identity_check(q0, grid);
  std::ostringstream os;
  os << "{\"a\": " << io::laurent_to_json(tr.a) << ",\n \"b\": " << io::laurent_to_json(tr.b)
     << ",\n \"grid\": " << grid.size() << ",\n \"unitarity_residual\": " << format_double(tr.unitarity_residual(grid))
     << ",\n \"szego\": {\"lhs\": " << format_double(sz.lhs) << ", \"rhs\": " << format_double(sz.rhs)
     << ", \"minus_2_log_a0\": " << format_double(sz.minus_2_log_a0) << "}}\n";
  return os.str();
}

std::string run_multiplier(const JobSpec& job) {
  const SolveParams p = select_params(job.t, job.eps, job.eta.value_or(1.0));
  const MultiplierBundle bundle = g_bundle(p.n, job.t);
  const CircleGrid grid = job.grid ? CircleGrid(job.grid) : CircleGrid::at_least(4 * static_cast<std::size_t>(p.n));
  const auto gv = evaluate_on_grid(bundle.g, grid);
  const auto pv = evaluate_on_grid(p_poly(p.n, job.t), grid);
  double max_g = 0.0, fidelity = 0.0;
  for (std::size_t m = 0; m < grid.size(); ++m) {
    max_g = std::max(max_g, std::abs(gv[m]));
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(grid.size());
    fidelity = std::max(fidelity, std::abs(pv[m] - std::polar(1.0, 2.0 * job.t * std::cos(angle))));
  }
  std::ostringstream os;
  os << "{\"n\": " << p.n << ", \"t\": " << format_double(job.t) << ", \"delta\": " << format_double(bundle.delta)
     << ",\n \"g\": " << io::laurent_to_json(bundle.g) << ",\n \"checks\": {\"grid\": " << grid.size()
     << ", \"max_abs_g\": " << format_double(max_g) << ", \"generating_function_error\": " << format_double(fidelity)
     << ", \"s_bound_half\": " << format_double(s_bound(p.n, job.t, 0.5))
     << ", \"tail_bound_half\": " << format_double(tail_bound(p.n, job.t, 0.5)) << "}}\n";
  return os.str();
}

template <class F>
double best_seconds(F&& f, int repeats) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    best = std::min(best, d.count());
  }
  return best;
}

std::string run_bench(const JobSpec& job) {
  const std::size_t largest = job.grid ? job.grid : 4096;
  std::ostringstream os;
  os << "N,sites,dyadic_seconds,naive_seconds\n";
  for (std::size_t N = 16; N <= largest; N *= 2) {
    const int sites = 2 * static_cast<int>(N) + 1;
    const Sequence q = io::random_sequence(job.seed, sites, 0, kRandomModulus);
    const double dyadic = best_seconds([&] { (void)nlft_forward(q); }, 3);
    const double naive = best_seconds([&] { (void)nlft_forward_naive(q); }, 1);
    os << N << ',' << sites << ',' << format_double(dyadic) << ',' << format_double(naive) << '\n';
  }
  return os.str();
}

void emit(const JobSpec& job, std::ostream& out, const std::string& text) {
  if (!job.output) {
    out << text;
    return;
  }
  std::ofstream file(*job.output, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file '" + *job.output + "'");
  file << text;
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "solve") return Command::solve;
  if (name == "reference") return Command::reference;
  if (name == "compare") return Command::compare;
  if (name == "nlft") return Command::nlft;
  if (name == "multiplier") return Command::multiplier;
  if (name == "bench") return Command::bench;
  throw ValidationError("unknown command '" + name + "'");
}

Boundary parse_boundary(const std::string& name) {
  if (name == "zero") return Boundary::zero;
  if (name == "periodic") return Boundary::periodic;
  throw ValidationError("unknown boundary '" + name + "'");
}

void validate(const JobSpec& job) {
  if (!std::isfinite(job.t)) throw ValidationError("--t must be finite");
  if (!(job.eps > 0.0 && job.eps < 1.0)) throw ValidationError("--eps must lie in (0, 1)");
  if (job.eta && !(*job.eta > 0.0 && *job.eta <= 1.0)) throw ValidationError("--eta must lie in (0, 1]");
  if (!(job.h > 0.0 && job.h <= 1.0)) throw ValidationError("--h must lie in (0, 1]");
  if (job.radius && *job.radius < 0) throw ValidationError("--radius must be nonnegative");
  if (job.grid != 0 && (job.grid & (job.grid - 1)) != 0) throw ValidationError("--grid must be a power of two");
  if (job.command == Command::multiplier && job.t < 0.0) throw ValidationError("multiplier requires --t >= 0");
  if (job.boundary == Boundary::periodic && job.command != Command::reference) {
    throw ValidationError("--boundary periodic is only meaningful for the reference command");
  }
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    validate(job);
    switch (job.command) {
      case Command::solve:
        emit(job, out, run_solve(job, load_datum(job)));
        return kSuccess;
      case Command::reference:
        emit(job, out, run_reference(job, load_datum(job)));
        return kSuccess;
      case Command::compare: {
        const CompareResult r = run_compare(job, load_datum(job));
        emit(job, out, r.table);
        err << r.summary;
        return r.pass ? kSuccess : kCompareFailed;
      }
      case Command::nlft:
        emit(job, out, run_nlft(job, load_datum(job)));
        return kSuccess;
      case Command::multiplier:
        emit(job, out, run_multiplier(job));
        return kSuccess;
      case Command::bench:
        emit(job, out, run_bench(job));
        return kSuccess;
    }
  } catch (const NumericalGuardError& e) {
    err << "numerical guard: " << e.what() << '\n';
    return kNumericalGuard;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::domain_error& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace al_ist::cli
