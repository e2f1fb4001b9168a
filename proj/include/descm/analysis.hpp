#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "descm/maps.hpp"
#include "descm/potential.hpp"

namespace descm {

struct ConvergenceRecord {
  int N = 0;
  double h = 0.0;
  bool failed = false;
  std::string failure;                   // diagnostic when failed
  std::vector<double> eigenvalues;       // unscaled, E = Etilde/tau^2, ascending
  std::vector<std::optional<double>> relative_errors;  // vs exact where known
  std::vector<std::optional<double>> relative_error_approximations;  // vs previous N
  double condition_number = 0.0;
};

struct StudyConfig {
  Potential potential;
  ConformalMap map = ConformalMap::generalized(1.05, 1.30, 1.20, 0.94);
  double tau = 1.0;
  std::vector<int> N_grid = {};  // strictly ascending
  RateMode rate_mode = RateMode::PaperRates;
  double threshold = 5e-12;
  std::vector<double> exact_eigenvalues = {};  // lowest indices first; may be empty
  std::optional<double> gamma_override = {};   // replaces gamma (d_strip follows)
  std::optional<double> B_override = {};       // replaces B
};

double relative_error(double exact, double approx);
double relative_error_approximation(double prev, double next);

// Decay profile for the scaled problem, with any config overrides applied.
DecayProfile study_profile(const StudyConfig& cfg);

// One solve per N: scale by tau, assemble, solve, unscale, attach metrics.
// Solver failures are recorded per N and the study continues.
std::vector<ConvergenceRecord> run_study(const StudyConfig& cfg);

// Number of eigenvalue indices convergent at the final grid point: indices
// with a known exact value are judged by relative_error, the rest by
// relative_error_approximation against the preceding successful record.
int count_convergent(const std::vector<ConvergenceRecord>& records, double threshold);

// columns: N,index,eigenvalue,rel_error,rel_error_approx,condition_number
// One row per (N, index), 15 significant digits, header included.
void emit_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out);
void emit_csv(const std::vector<ConvergenceRecord>& records, const std::string& path);

// Smallest N at which the study's solve would fail (D underflow or a
// non-finite Vtilde/H entry), located by probing the mesh extremes where the
// tails are monotone; avoids assembling the full matrix. 0 if none <= limit.
int first_failure_N(const StudyConfig& cfg, int limit = 1 << 30);

}  // namespace descm
