#include "descm/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace descm {

Potential::Potential(std::vector<std::pair<int, double>> coefficients)
    : coeffs_(std::move(coefficients)) {
  std::erase_if(coeffs_, [](const auto& c) { return c.second == 0.0; });
  if (coeffs_.empty()) throw std::invalid_argument("potential: no nonzero coefficients");
  std::sort(coeffs_.begin(), coeffs_.end());
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i].first == coeffs_[i - 1].first)
      throw std::invalid_argument("potential: duplicate power " + std::to_string(coeffs_[i].first));
  for (const auto& [j, a] : coeffs_) {
    if (j < -2) throw std::invalid_argument("potential: power below -2");
    if (j == 0) throw std::invalid_argument("potential: a_0 must be zero");
    if (j == -2 && a < 0.0) throw std::invalid_argument("potential: a_{-2} must be >= 0");
    if (!std::isfinite(a)) throw std::invalid_argument("potential: non-finite coefficient");
  }
  n_ = coeffs_.back().first;
  if (n_ < 1) throw std::invalid_argument("potential: highest power must be >= 1");
  if (coeffs_.back().second <= 0.0)
    throw std::invalid_argument("potential: leading coefficient a_n must be > 0");
}

double Potential::coefficient(int power) const {
  for (const auto& [j, a] : coeffs_)
    if (j == power) return a;
  return 0.0;
}

double Potential::leading_coefficient() const { return coeffs_.back().second; }

double Potential::singular_coefficient() const { return coefficient(-2); }

double evaluate(const Potential& p, double x) {
  if (!(x > 0.0)) throw std::domain_error("potential: V(x) evaluated at x <= 0");
  double v = 0.0;
  for (const auto& [j, a] : p.coefficients()) v += a * std::pow(x, j);
  return v;
}

ScaledPotential scale(const Potential& p, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw std::invalid_argument("scale: tau must be positive");
  std::vector<std::pair<int, double>> scaled;
  scaled.reserve(p.coefficients().size());
  for (const auto& [j, a] : p.coefficients())
    scaled.emplace_back(j, std::pow(tau, j + 2) * a);
  return ScaledPotential{p, tau, Potential(std::move(scaled))};
}

double unscale_eigenvalue(double scaled_e, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("unscale_eigenvalue: tau must be positive");
  return scaled_e / (tau * tau);
}

AsymptoticData asymptotics(const Potential& p) {
  const double am2 = p.singular_coefficient();
  const int n = p.degree();
  const double an = p.leading_coefficient();
  AsymptoticData d;
  d.frobenius_root = (1.0 + std::sqrt(1.0 + 4.0 * am2)) / 2.0;
  d.wkb_rate = 2.0 * std::sqrt(an) / (n + 2);
  d.wkb_power = (n + 2) / 2.0;
  d.wkb_prefactor_power = -n / 4.0;
  return d;
}

const std::vector<BuiltinPotential>& builtin_potentials() {
  static const std::vector<BuiltinPotential> table = {
      {"V1", Potential({{-2, 2.0}, {-1, -16.0}, {1, 2.0}, {2, 1.0 / 16}}), -59.0 / 4},
      {"V2", Potential({{-2, 6.0}, {-1, -24.0}, {1, 2.0}, {2, 1.0 / 16}}), -57.0 / 4},
      {"V3", Potential({{-2, 15.0 / 4}, {-1, -20.0}, {1, 2.0}, {2, 1.0 / 16}}), -58.0 / 4},
      {"V4", Potential({{-2, 35.0 / 4}, {-1, -28.0}, {1, 2.0}, {2, 1.0 / 16}}), -14.0},
      {"V5", Potential({{-2, 2.0}, {2, 1.0}}), 5.0},
      {"V6", Potential({{-2, 3.0 / 4}, {2, 1.0}}), 4.0},
  };
  return table;
}

const BuiltinPotential* find_builtin(std::string_view name) {
  for (const auto& b : builtin_potentials())
    if (b.name == name) return &b;
  return nullptr;
}

}  // namespace descm
