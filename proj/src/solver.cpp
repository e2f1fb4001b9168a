#include "descm/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <lapacke.h>

namespace descm {

double delta2(int j, int k) {
  if (j == k) return -M_PI * M_PI / 3.0;
  const long long m = static_cast<long long>(j) - k;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return -2.0 * sign / static_cast<double>(m * m);
}

double sinc_basis(int j, double h, double x) {
  if (!(h > 0.0)) throw std::invalid_argument("sinc_basis: h must be positive");
  const double u = M_PI * (x / h - j);
  if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

double lambert_w(double x) {
  if (x < 0.0) throw std::domain_error("lambert_w: negative argument");
  if (x == 0.0) return 0.0;
  double w;
  if (x > M_E) {
    const double l1 = std::log(x), l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  } else {
    w = x / (1.0 + x);  // crude but inside the basin everywhere on [0, e]
  }
  for (int i = 0; i < 50; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= 1e-16 * std::max(1.0, x)) break;
    // Halley step
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
    w -= f / denom;
  }
  return w;
}

double mesh_size(int N, double gamma, double d_strip, double B) {
  if (N < 1) throw std::invalid_argument("mesh_size: N must be >= 1");
  return lambert_w(M_PI * d_strip * gamma * N / B) / (gamma * N);
}

double mesh_size(int N, const DecayProfile& profile) {
  return mesh_size(N, profile.gamma, profile.d_strip, profile.B);
}

CollocationSystem assemble(const Potential& p, const ConformalMap& m, double tau, int N,
                           const DecayProfile& profile) {
  const Potential scaled_p = (tau == 1.0) ? p : scale(p, tau).scaled;
  const double h = mesh_size(N, profile);
  const int dim = 2 * N + 1;

  CollocationSystem sys;
  sys.N = N;
  sys.h = h;
  sys.tau = tau;
  sys.H.resize(dim, dim);
  sys.D.resize(dim);

  // off-diagonal weights depend on j-k only; fill both triangles from one value
  const double inv_h2 = 1.0 / (h * h);
  for (int off = 1; off < dim; ++off) {
    const double val = -delta2(off, 0) * inv_h2;
    for (int row = 0; row + off < dim; ++row) {
      sys.H(row, row + off) = val;
      sys.H(row + off, row) = val;
    }
  }
  for (int k = -N; k <= N; ++k) {
    const double t = k * h;
    const Jet j = m.jet(t);
    const double vt = transformed_potential(m, scaled_p, t);
    if (!std::isfinite(vt))
      throw std::runtime_error("assemble: Vtilde not finite at node k=" + std::to_string(k) +
                               " (t=" + std::to_string(t) + ")");
    sys.H(k + N, k + N) = M_PI * M_PI / 3.0 * inv_h2 + vt;
    sys.D(k + N) = j.d1 * j.d1;
  }
  return sys;
}

Eigen::MatrixXd reduced_matrix(const CollocationSystem& sys) {
  const int dim = static_cast<int>(sys.D.size());
  const Eigen::VectorXd s = sys.D.array().rsqrt();
  Eigen::MatrixXd A(dim, dim);
  for (int col = 0; col < dim; ++col)
    for (int row = 0; row <= col; ++row) {
      const double v = s(row) * sys.H(row, col) * s(col);
      A(row, col) = v;
      A(col, row) = v;
    }
  return A;
}

SpectrumResult solve(const CollocationSystem& sys) {
  if (!sys.H.allFinite() || !sys.D.allFinite())
    throw solve_error(solve_error::Kind::NonFinite, "solve: non-finite matrix entries");
  if (sys.D.minCoeff() <= 1e-300)
    throw solve_error(solve_error::Kind::Underflow,
                      "solve: D entry below 1e-300 (map overflow at extreme nodes)");

  Eigen::MatrixXd A = reduced_matrix(sys);
  if (!A.allFinite())
    throw solve_error(solve_error::Kind::NonFinite, "solve: reduction produced non-finite entries");

  // The reduced matrix is violently graded once the mesh reaches into the
  // tails (entries span ~1e36 near failure); LAPACK's tridiagonal iteration
  // picks its sweep direction per block and keeps the small eigenvalues,
  // which fixed-direction QR implementations lose at exactly these sizes.
  const int dim = static_cast<int>(A.rows());
  Eigen::VectorXd ev(dim);
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', dim, A.data(), dim, ev.data());
  if (info != 0)
    throw solve_error(solve_error::Kind::NonFinite,
                      "solve: eigensolver failed (info " + std::to_string(info) + ")");
  if (!ev.allFinite())
    throw solve_error(solve_error::Kind::NonFinite, "solve: non-finite eigenvalues");

  SpectrumResult res;
  res.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  const double lo = ev.cwiseAbs().minCoeff();
  const double hi = ev.cwiseAbs().maxCoeff();
  res.condition_number = (lo > 0.0) ? hi / lo : std::numeric_limits<double>::infinity();
  res.N = sys.N;
  res.h = sys.h;
  res.tau = sys.tau;
  return res;
}

}  // namespace descm
