#include "descm/config.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace descm {

namespace {

using nlohmann::json;

int to_int(const std::string& s, const char* what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error(std::string("config: bad integer in ") + what + ": '" + s + "'");
  return v;
}

double to_double(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("config: bad number in ") + what + ": '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

Potential potential_from_json(const json& j, std::vector<double>& exact) {
  if (j.is_string()) {
    const auto* b = find_builtin(j.get<std::string>());
    if (!b) throw std::runtime_error("config: unknown potential name '" + j.get<std::string>() + "'");
    exact = {b->exact_ground_state};
    return b->potential;
  }
  if (j.is_array()) {
    std::vector<std::pair<int, double>> coeffs;
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::runtime_error("config: potential entries must be [power, coefficient] pairs");
      coeffs.emplace_back(pair.at(0).get<int>(), pair.at(1).get<double>());
    }
    return Potential(std::move(coeffs));
  }
  throw std::runtime_error("config: potential must be a name or a list of pairs");
}

ConformalMap map_from_json(const json& j) {
  double a = 1.05, b = 1.30, c = 1.20, d = 0.94;
  std::string variant;
  if (j.is_string()) {
    variant = j.get<std::string>();
  } else if (j.is_object()) {
    static const std::set<std::string> allowed = {"variant", "a", "b", "c", "d"};
    for (const auto& [key, val] : j.items()) {
      (void)val;
      if (!allowed.count(key)) throw std::runtime_error("config: unknown map key '" + key + "'");
    }
    variant = j.value("variant", "general");
    a = j.value("a", a);
    b = j.value("b", b);
    c = j.value("c", c);
    d = j.value("d", d);
  } else {
    throw std::runtime_error("config: map must be a string or an object");
  }
  if (variant == "simple") return ConformalMap::simple();
  if (variant == "general") return ConformalMap::generalized(a, b, c, d);
  throw std::runtime_error("config: map variant must be 'simple' or 'general'");
}

}  // namespace

std::vector<int> parse_n_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {to_int(parts[0], "n range")};
  if (parts.size() != 3)
    throw std::runtime_error("config: n range must be 'start:stop:step' or a single integer");
  const int start = to_int(parts[0], "n range");
  const int stop = to_int(parts[1], "n range");
  const int step = to_int(parts[2], "n range");
  if (step <= 0 || stop < start)
    throw std::runtime_error("config: n range needs stop >= start and step > 0");
  std::vector<int> grid;
  for (int n = start; n <= stop; n += step) grid.push_back(n);
  return grid;
}

std::vector<std::pair<int, double>> parse_coeff_list(const std::string& text) {
  std::vector<std::pair<int, double>> coeffs;
  for (const auto& item : split(text, ',')) {
    const auto kv = split(item, ':');
    if (kv.size() != 2)
      throw std::runtime_error("config: coefficient entries must be power:value, got '" + item + "'");
    coeffs.emplace_back(to_int(kv[0], "coefficients"), to_double(kv[1], "coefficients"));
  }
  return coeffs;
}

StudyConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config: top level must be an object");

  static const std::set<std::string> allowed = {"potential",  "exact_eigenvalues", "map",
                                                "tau",        "n_grid",            "rate_mode",
                                                "threshold",  "gamma",             "big_b"};
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (!allowed.count(key)) throw std::runtime_error("config: unknown key '" + key + "'");
  }
  if (!j.contains("potential")) throw std::runtime_error("config: missing 'potential'");

  try {
    std::vector<double> exact;
    StudyConfig cfg{.potential = potential_from_json(j.at("potential"), exact)};
    cfg.exact_eigenvalues = std::move(exact);
    if (j.contains("exact_eigenvalues"))
      cfg.exact_eigenvalues = j.at("exact_eigenvalues").get<std::vector<double>>();
    if (j.contains("map")) cfg.map = map_from_json(j.at("map"));
    cfg.tau = j.value("tau", 1.0);
    if (j.contains("n_grid")) {
      if (j.at("n_grid").is_string())
        cfg.N_grid = parse_n_range(j.at("n_grid").get<std::string>());
      else
        cfg.N_grid = j.at("n_grid").get<std::vector<int>>();
    } else {
      cfg.N_grid = parse_n_range("10:50:5");
    }
    const std::string mode = j.value("rate_mode", "paper");
    if (mode == "paper")
      cfg.rate_mode = RateMode::PaperRates;
    else if (mode == "carried")
      cfg.rate_mode = RateMode::ExponentCarried;
    else
      throw std::runtime_error("config: rate_mode must be 'paper' or 'carried'");
    cfg.threshold = j.value("threshold", 5e-12);
    if (j.contains("gamma")) cfg.gamma_override = j.at("gamma").get<double>();
    if (j.contains("big_b")) cfg.B_override = j.at("big_b").get<double>();
    return cfg;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
  }
}

}  // namespace descm
