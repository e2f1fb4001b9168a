#pragma once

#include <string>
#include <utility>
#include <vector>

#include "descm/analysis.hpp"

namespace descm {

// JSON study configuration. Keys: potential (builtin name or [[power, coeff],
// ...]), exact_eigenvalues, map ("simple"/"general" or {variant, a, b, c, d}),
// tau, n_grid ([..] or "start:stop:step"), rate_mode ("paper"/"carried"),
// threshold, gamma, big_b. Unknown keys are rejected. Built-in potentials get
// their exact ground state attached automatically.
StudyConfig parse_config(const std::string& json_text);

// "start:stop:step" (inclusive stop) or a single integer
std::vector<int> parse_n_range(const std::string& text);

// "power:coeff,power:coeff", e.g. "-2:2,-1:-16,1:2,2:0.0625"
std::vector<std::pair<int, double>> parse_coeff_list(const std::string& text);

}  // namespace descm
