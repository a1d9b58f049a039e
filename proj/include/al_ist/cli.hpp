// Batch front end shared by the al_ist executable and the tests.

#ifndef AL_IST_CLI_HPP
#define AL_IST_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "al_ist/al_reference.hpp"

namespace al_ist::cli {

enum class Command { solve, reference, compare, nlft, multiplier, bench };

enum ExitCode : int {
  kSuccess = 0,
  kCompareFailed = 1,
  kValidationError = 2,
  kNumericalGuard = 3,
};

/// Without --in the datum is io::random_sequence(seed, kRandomSites,
/// kRandomOffset, kRandomModulus).
inline constexpr int kRandomSites = 5;
inline constexpr int kRandomOffset = -2;
inline constexpr double kRandomModulus = 0.5;

struct JobSpec {
  Command command = Command::solve;
  std::optional<std::string> input;
  std::optional<std::string> output;  // stdout when absent
  double t = 1.0;
  int n0 = 0;
  double eps = 1e-6;
  std::optional<double> eta;
  double h = 1e-3;
  std::optional<int> radius;
  std::size_t grid = 0;  // 0: command default
  std::uint64_t seed = 0;
  Boundary boundary = Boundary::zero;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Command parse_command(const std::string& name);
Boundary parse_boundary(const std::string& name);

/// Throws ValidationError on out-of-range values.
void validate(const JobSpec& job);

/// Runs one job. Results go to job.output (or `out`); diagnostics to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace al_ist::cli

#endif  // AL_IST_CLI_HPP
