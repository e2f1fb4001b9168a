#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "descm/maps.hpp"
#include "descm/potential.hpp"

namespace descm {

// Sinc collocation system on the mesh kh, k = -N..N:
//   H[j,k] = -delta2(j,k)/h^2 + Vtilde(kh) delta0(j,k),   D[k] = (phi'(kh))^2
struct CollocationSystem {
  int N;
  double h;
  double tau;
  Eigen::MatrixXd H;  // (2N+1) x (2N+1), exactly symmetric
  Eigen::VectorXd D;  // diagonal of D, strictly positive
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // pencil (H, D) eigenvalues, ascending
  double condition_number;          // max|lambda| / min|lambda| of the reduced matrix
  int N;
  double h;
  double tau;
};

class solve_error : public std::runtime_error {
 public:
  enum class Kind { NonFinite, Underflow };
  solve_error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

// second Sinc differentiation weights: -pi^2/3 on the diagonal,
// -2(-1)^(j-k)/(j-k)^2 off it
double delta2(int j, int k);

// S(j,h)(x) = sinc(x/h - j), limiting value 1 at x = jh
double sinc_basis(int j, double h, double x);

// principal-branch Lambert W on x >= 0, residual |W e^W - x| < 1e-14 max(1,x)
double lambert_w(double x);

// h = W(pi * d_strip * gamma * N / B) / (gamma * N)
double mesh_size(int N, double gamma, double d_strip, double B);
double mesh_size(int N, const DecayProfile& profile);

// Scales p by tau, then collocates on the mesh from the profile.
// The profile should be computed from the scaled potential.
CollocationSystem assemble(const Potential& p, const ConformalMap& m, double tau, int N,
                           const DecayProfile& profile);

// D^{-1/2} H D^{-1/2} congruence; exactly symmetric by construction
Eigen::MatrixXd reduced_matrix(const CollocationSystem& sys);

// Dense symmetric eigensolve of the reduced matrix. Throws solve_error on
// non-finite entries or when a D entry drops below 1e-300 (map overflow at
// the extreme nodes).
SpectrumResult solve(const CollocationSystem& sys);

}  // namespace descm
