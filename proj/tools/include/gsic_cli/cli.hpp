#pragma once

// Command-line front end. `run` is what main() calls; the scan and reproduce
// drivers are exposed so tests can call them in-process.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsic/criteria.hpp"
#include "gsic/states.hpp"

namespace gsic::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFailure = 2 };

/// Bad flags or flag combinations (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { kIsotropic, kWerner, kHorodecki, kHorodeckiNoise };

Family parse_family(std::string_view name);
std::string_view family_name(Family family);

/// Parameters a family takes, in scan order (outermost first).
std::vector<std::string> family_parameters(Family family);

DensityMatrix make_state(Family family, std::size_t d,
                         const std::map<std::string, double>& params);

/// Uniform grid including both ends; count == 1 yields {start}.
std::vector<double> linspace(double start, double stop, std::size_t count);

struct Grid {
  std::string name;
  std::vector<double> values;
};

/// Parses "name=start:stop:count".
Grid parse_grid(std::string_view spec);

/// Criteria names: theorem1, ja, ppt, realignment, sic.
bool criterion_uses_t(std::string_view criterion);
void check_criterion_name(std::string_view criterion);

/// Evaluates one named criterion. theorem1 and ja measure with
/// (P(t), conj P(t)); sic uses the built-in rank-one SIC and its conjugate.
CriterionReport evaluate_criterion(std::string_view criterion,
                                   const DensityMatrix& rho,
                                   std::optional<double> t);

struct ScanSpec {
  Family family = Family::kHorodecki;
  std::size_t d = 3;
  std::vector<Grid> grids;  // family parameters then t, outermost first
  std::vector<std::string> criteria{"theorem1"};
  std::string output_path;
};

/// Fills in default grids for missing parameters and orders the grids.
/// Explicit grids win over scalars, scalars over defaults. The default t grid
/// is 25 points on the computed feasible interval.
ScanSpec resolve_scan_spec(Family family, std::size_t d,
                           const std::map<std::string, double>& scalars,
                           const std::vector<Grid>& explicit_grids,
                           std::vector<std::string> criteria,
                           std::string output_path);

/// CSV text for a scan: header row, then one row per grid point and
/// criterion in lexicographic grid order. Numbers use 17 significant digits.
std::string scan_csv(const ScanSpec& spec);

struct ReproduceCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string worst_point;
  bool passed = false;
};

struct ReproduceSummary {
  int example = 0;
  std::vector<ReproduceCheck> checks;
  std::vector<std::string> notes;
  bool passed() const;
};

/// Re-runs worked example 1 (isotropic), 2 (Werner) or 3 (3x3 PPT entangled
/// family) on its grid and compares the numeric margins with their closed
/// forms.
ReproduceSummary reproduce(int example);

/// Formats a double with 17 significant digits.
std::string format_double(double v);

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gsic::cli
