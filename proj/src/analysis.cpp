#include "descm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "descm/solver.hpp"

namespace descm {

double relative_error(double exact, double approx) {
  if (exact == 0.0) throw std::domain_error("relative_error: exact value is zero");
  return std::abs(exact - approx) / std::abs(exact);
}

double relative_error_approximation(double prev, double next) {
  if (next == 0.0) throw std::domain_error("relative_error_approximation: next value is zero");
  return std::abs(next - prev) / std::abs(next);
}

DecayProfile study_profile(const StudyConfig& cfg) {
  const Potential scaled = scale(cfg.potential, cfg.tau).scaled;
  DecayProfile profile = decay_profile(cfg.map, scaled, cfg.rate_mode);
  if (cfg.gamma_override) {
    profile.gamma = *cfg.gamma_override;
    profile.d_strip = M_PI / (2.0 * profile.gamma);
  }
  if (cfg.B_override) profile.B = *cfg.B_override;
  return profile;
}

std::vector<ConvergenceRecord> run_study(const StudyConfig& cfg) {
  for (size_t i = 1; i < cfg.N_grid.size(); ++i)
    if (cfg.N_grid[i] <= cfg.N_grid[i - 1])
      throw std::invalid_argument("run_study: N_grid must be strictly ascending");
  if (!(cfg.threshold > 0.0)) throw std::invalid_argument("run_study: threshold must be positive");

  const DecayProfile profile = study_profile(cfg);
  std::vector<ConvergenceRecord> records;
  records.reserve(cfg.N_grid.size());
  const ConvergenceRecord* last_ok = nullptr;

  for (const int N : cfg.N_grid) {
    ConvergenceRecord rec;
    rec.N = N;
    try {
      const CollocationSystem sys = assemble(cfg.potential, cfg.map, cfg.tau, N, profile);
      rec.h = sys.h;
      const SpectrumResult res = solve(sys);
      rec.condition_number = res.condition_number;
      rec.eigenvalues.resize(res.eigenvalues.size());
      for (size_t i = 0; i < res.eigenvalues.size(); ++i)
        rec.eigenvalues[i] = unscale_eigenvalue(res.eigenvalues[i], cfg.tau);
    } catch (const std::exception& e) {
      rec.failed = true;
      rec.failure = e.what();
      records.push_back(std::move(rec));
      continue;
    }

    const size_t dim = rec.eigenvalues.size();
    rec.relative_errors.assign(dim, std::nullopt);
    rec.relative_error_approximations.assign(dim, std::nullopt);
    for (size_t i = 0; i < dim && i < cfg.exact_eigenvalues.size(); ++i)
      if (cfg.exact_eigenvalues[i] != 0.0)
        rec.relative_errors[i] = relative_error(cfg.exact_eigenvalues[i], rec.eigenvalues[i]);
    if (last_ok) {
      const size_t common = std::min(dim, last_ok->eigenvalues.size());
      for (size_t i = 0; i < common; ++i)
        if (rec.eigenvalues[i] != 0.0)
          rec.relative_error_approximations[i] =
              relative_error_approximation(last_ok->eigenvalues[i], rec.eigenvalues[i]);
    }
    records.push_back(std::move(rec));
    last_ok = &records.back();
  }
  return records;
}

int count_convergent(const std::vector<ConvergenceRecord>& records, double threshold) {
  if (records.size() < 2)
    throw std::invalid_argument("count_convergent: need at least two records");
  const auto final_it = std::find_if(records.rbegin(), records.rend(),
                                     [](const ConvergenceRecord& r) { return !r.failed; });
  if (final_it == records.rend())
    throw std::invalid_argument("count_convergent: no successful record");
  const ConvergenceRecord& rec = *final_it;
  int count = 0;
  for (size_t i = 0; i < rec.eigenvalues.size(); ++i) {
    std::optional<double> metric;
    if (i < rec.relative_errors.size() && rec.relative_errors[i])
      metric = rec.relative_errors[i];
    else if (i < rec.relative_error_approximations.size() &&
             rec.relative_error_approximations[i])
      metric = rec.relative_error_approximations[i];
    if (metric && *metric < threshold) ++count;
  }
  return count;
}

namespace {

std::string sig15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

void emit_csv(const std::vector<ConvergenceRecord>& records, std::ostream& out) {
  if (records.empty()) throw std::invalid_argument("emit_csv: no records");
  out << "N,index,eigenvalue,rel_error,rel_error_approx,condition_number\n";
  for (const auto& rec : records) {
    if (rec.failed) continue;  // a failed N contributes no (N, index) rows
    for (size_t i = 0; i < rec.eigenvalues.size(); ++i) {
      out << rec.N << ',' << i << ',' << sig15(rec.eigenvalues[i]) << ',';
      if (i < rec.relative_errors.size() && rec.relative_errors[i])
        out << sig15(*rec.relative_errors[i]);
      out << ',';
      if (i < rec.relative_error_approximations.size() && rec.relative_error_approximations[i])
        out << sig15(*rec.relative_error_approximations[i]);
      out << ',' << sig15(rec.condition_number) << '\n';
    }
  }
}

void emit_csv(const std::vector<ConvergenceRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
  emit_csv(records, out);
  if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

int first_failure_N(const StudyConfig& cfg, int limit) {
  const DecayProfile profile = study_profile(cfg);
  const Potential scaled = scale(cfg.potential, cfg.tau).scaled;

  // phi' falls monotonically to 0 on the left tail and Vtilde blow-ups enter
  // from the tails, so checking the two extreme nodes reproduces the checks
  // solve()/assemble() apply across the full mesh.
  const auto bad = [&](int N) {
    const double h = mesh_size(N, profile);
    for (const double t : {-N * h, N * h}) {
      const Jet j = cfg.map.jet(t);
      if (!(j.d1 * j.d1 > 1e-300)) return true;
      if (!std::isfinite(transformed_potential(cfg.map, scaled, t))) return true;
    }
    return false;
  };

  if (bad(1)) return 1;
  int hi = 2;
  while (!bad(hi)) {
    if (hi >= limit) return 0;
    hi = (hi > limit / 2) ? limit : hi * 2;
  }
  int lo = hi / 2;  // bad(lo) known false
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (bad(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace descm
