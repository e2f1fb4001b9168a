#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace descm {

// Anharmonic Coulombic potential V(x) = sum_j a_j x^j on (0, inf),
// powers j in [-2, n] with a_{-2} >= 0, a_0 = 0, a_n > 0, n >= 1.
// Coefficients are stored sparsely, sorted by power.
class Potential {
 public:
  explicit Potential(std::vector<std::pair<int, double>> coefficients);

  const std::vector<std::pair<int, double>>& coefficients() const { return coeffs_; }
  double coefficient(int power) const;  // 0 when the power is absent
  int degree() const { return n_; }     // n, the highest power
  double leading_coefficient() const;   // a_n
  double singular_coefficient() const;  // a_{-2}

 private:
  std::vector<std::pair<int, double>> coeffs_;
  int n_;
};

// Domain dilation x = tau*y: coefficient at power j becomes tau^(j+2) * a_j.
struct ScaledPotential {
  Potential base;
  double tau;
  Potential scaled;
};

// Boundary behaviour of the wavefunction: Frobenius exponent at the origin,
// WKB envelope psi ~ x^(-n/4) exp(-2 sqrt(a_n) x^((n+2)/2) / (n+2)) at infinity.
struct AsymptoticData {
  double frobenius_root;       // r = (1 + sqrt(1 + 4 a_{-2})) / 2
  double wkb_rate;             // 2 sqrt(a_n) / (n+2)
  double wkb_power;            // (n+2)/2
  double wkb_prefactor_power;  // -n/4
};

double evaluate(const Potential& p, double x);
ScaledPotential scale(const Potential& p, double tau);
double unscale_eigenvalue(double scaled_e, double tau);
AsymptoticData asymptotics(const Potential& p);

struct BuiltinPotential {
  std::string name;
  Potential potential;
  double exact_ground_state;
};

// V1..V6: radial potentials with known analytic ground states.
const std::vector<BuiltinPotential>& builtin_potentials();
const BuiltinPotential* find_builtin(std::string_view name);

}  // namespace descm
