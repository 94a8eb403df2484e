#pragma once

#include "qfactor/family.hpp"

#include <iosfwd>
#include <optional>

namespace qfactor {

inline constexpr const char* tool_version = "qfactor 1.0.0";

struct RunConfig {
  std::string command; // list info spectrum pearson eigencheck factorize
                       // ladder shiftops gram algebra report
  std::string family;
  std::map<std::string, double> params;
  double q = 0.5;
  double tol = 1e-8;
  int n_max = 8;
  int dim = 12;
  int grid_points = 24;
  std::string format = "text"; // text | json | csv
  std::string family_file;
  unsigned seed = 12345;
  std::optional<double> alpha; // ladder / adjointness override
  bool param_shift = false;    // ladder: use the parameter-shifting pair
};

// Executes one command; returns the process exit status (0 pass, 1 a check
// failed its tolerance, 2 usage/config error).  Reports go to `out`,
// diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// The serialized JSON document of the full `report` battery (stable across
// runs for a fixed config).
std::string report_json(const RunConfig& cfg);

FamilySpec resolve_family(const RunConfig& cfg);

} // namespace qfactor
