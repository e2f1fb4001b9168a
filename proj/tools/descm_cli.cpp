#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "descm/analysis.hpp"
#include "descm/config.hpp"

namespace {

using nlohmann::json;

// Every flag edits exactly one config key; the merged JSON goes through the
// same parse_config path as a config file.
struct Options {
  std::string config_path;
  std::string potential;
  std::string coeffs;
  std::string map_variant;
  std::string map_params;
  std::string n_spec;
  std::string rate_mode;
  std::string taus;
  std::string out;
  double tau = 1.0;
  double threshold = 5e-12;
  double gamma = 0.0;
  double big_b = 0.0;
  int k = 5;
};

void add_common_flags(CLI::App* sub, Options& o, const std::string& default_n) {
  sub->add_option("--config", o.config_path, "JSON config file; flags override its keys");
  sub->add_option("--potential", o.potential, "built-in potential name (V1..V6)");
  sub->add_option("--coeffs", o.coeffs,
                  "potential as power:coeff pairs, e.g. -2:2,-1:-16,1:2,2:0.0625");
  sub->add_option("--map", o.map_variant, "conformal map: simple or general")
      ->check(CLI::IsMember({"simple", "general"}));
  sub->add_option("--map-params", o.map_params, "generalized map parameters a,b,c,d");
  sub->add_option("--tau", o.tau, "scaling factor (default 1.0)");
  sub->add_option("--n", o.n_spec, "N or start:stop:step (default " + default_n + ")");
  sub->add_option("--rate-mode", o.rate_mode, "decay-rate mode: paper or carried")
      ->check(CLI::IsMember({"paper", "carried"}));
  sub->add_option("--gamma", o.gamma, "explicit decay-rate override");
  sub->add_option("--big-b", o.big_b, "explicit envelope-constant override");
  sub->add_option("--threshold", o.threshold, "convergence threshold (default 5e-12)");
  sub->add_option("--out", o.out, "output file (default stdout)");
}

descm::StudyConfig build_config(const CLI::App* sub, const Options& o,
                                const std::string& default_n) {
  json j = json::object();
  if (sub->count("--config")) {
    std::ifstream in(o.config_path);
    if (!in) throw std::runtime_error("cannot open config file " + o.config_path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
      j = json::parse(text.str());
    } catch (const json::exception& e) {
      throw std::runtime_error("config: " + std::string(e.what()));
    }
    if (!j.is_object()) throw std::runtime_error("config: top level must be an object");
  }
  if (sub->count("--potential")) j["potential"] = o.potential;
  if (sub->count("--coeffs")) {
    json pairs = json::array();
    for (const auto& [power, coeff] : descm::parse_coeff_list(o.coeffs))
      pairs.push_back({power, coeff});
    j["potential"] = pairs;
  }
  if (sub->count("--map") || sub->count("--map-params")) {
    json m = (j.contains("map") && j["map"].is_object()) ? j["map"] : json::object();
    if (sub->count("--map")) m["variant"] = o.map_variant;
    if (sub->count("--map-params")) {
      std::istringstream ss(o.map_params);
      double vals[4];
      char sep = ',';
      if (!(ss >> vals[0] >> sep >> vals[1] >> sep >> vals[2] >> sep >> vals[3]))
        throw std::runtime_error("--map-params expects four comma-separated numbers");
      m["a"] = vals[0];
      m["b"] = vals[1];
      m["c"] = vals[2];
      m["d"] = vals[3];
      if (!m.contains("variant")) m["variant"] = "general";
    }
    j["map"] = m;
  }
  if (sub->count("--tau")) j["tau"] = o.tau;
  if (sub->count("--n")) j["n_grid"] = o.n_spec;
  if (!j.contains("n_grid")) j["n_grid"] = default_n;
  if (sub->count("--rate-mode")) j["rate_mode"] = o.rate_mode;
  if (sub->count("--gamma")) j["gamma"] = o.gamma;
  if (sub->count("--big-b")) j["big_b"] = o.big_b;
  if (sub->count("--threshold")) j["threshold"] = o.threshold;
  return descm::parse_config(j.dump());
}

void report_failures(const std::vector<descm::ConvergenceRecord>& records) {
  for (const auto& rec : records)
    if (rec.failed) std::fprintf(stderr, "N=%d failed: %s\n", rec.N, rec.failure.c_str());
}

int run_solve(const CLI::App* sub, const Options& o) {
  descm::StudyConfig cfg = build_config(sub, o, "40");
  const auto records = descm::run_study(cfg);
  report_failures(records);
  const auto& rec = records.back();
  if (rec.failed) {
    std::fprintf(stderr, "solve failed at N=%d: %s\n", rec.N, rec.failure.c_str());
    return 1;
  }
  const int k = std::min<int>(o.k, static_cast<int>(rec.eigenvalues.size()));
  for (int i = 0; i < k; ++i) std::printf("%.15g\n", rec.eigenvalues[i]);
  return 0;
}

int run_study_cmd(const CLI::App* sub, const Options& o) {
  descm::StudyConfig cfg = build_config(sub, o, "10:50:5");
  const auto records = descm::run_study(cfg);
  report_failures(records);
  if (o.out.empty())
    descm::emit_csv(records, std::cout);
  else
    descm::emit_csv(records, o.out);
  return 0;
}

int run_tau_sweep(const CLI::App* sub, const Options& o) {
  if (o.taus.empty()) throw std::runtime_error("tau-sweep requires --taus t1,t2,...");
  std::vector<double> taus;
  std::istringstream ss(o.taus);
  std::string item;
  while (std::getline(ss, item, ',')) taus.push_back(std::stod(item));

  std::ostringstream table;
  table << "tau,count\n";
  descm::StudyConfig cfg = build_config(sub, o, "1:100:1");
  for (const double tau : taus) {
    cfg.tau = tau;
    const auto records = descm::run_study(cfg);
    report_failures(records);
    char line[64];
    std::snprintf(line, sizeof line, "%.15g,%d\n", tau,
                  descm::count_convergent(records, cfg.threshold));
    table << line;
  }
  if (o.out.empty()) {
    std::cout << table.str();
  } else {
    std::ofstream out(o.out);
    if (!out) throw std::runtime_error("cannot open " + o.out);
    out << table.str();
  }
  return 0;
}

int run_count(const CLI::App* sub, const Options& o) {
  descm::StudyConfig cfg = build_config(sub, o, "1:100:1");
  const auto records = descm::run_study(cfg);
  report_failures(records);
  std::printf("%d\n", descm::count_convergent(records, cfg.threshold));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sinc collocation eigenvalue experiments for radial Schrodinger problems"};
  app.require_subcommand(1);

  Options o;
  CLI::App* solve = app.add_subcommand("solve", "print the lowest eigenvalues at a single N");
  add_common_flags(solve, o, "40");
  solve->add_option("--k", o.k, "how many eigenvalues to print (default 5)");
  CLI::App* study = app.add_subcommand("study", "convergence study over an N grid, CSV output");
  add_common_flags(study, o, "10:50:5");
  CLI::App* sweep = app.add_subcommand("tau-sweep", "convergent-eigenvalue counts across taus");
  add_common_flags(sweep, o, "1:100:1");
  sweep->add_option("--taus", o.taus, "comma-separated scaling factors");
  CLI::App* count = app.add_subcommand("count", "print the number of convergent eigenvalues");
  add_common_flags(count, o, "1:100:1");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve, o);
    if (study->parsed()) return run_study_cmd(study, o);
    if (sweep->parsed()) return run_tau_sweep(sweep, o);
    if (count->parsed()) return run_count(count, o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
