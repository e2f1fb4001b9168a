#pragma once

#include "descm/potential.hpp"

namespace descm {

enum class MapVariant { Simple, Generalized };

// Which right-tail decay rate feeds the mesh rule. PaperRates takes
// gamma_R = b/2; ExponentCarried keeps the (n+2)/2 factor from composing the
// map's right tail with the WKB envelope, gamma_R = b(n+2)/2.
enum class RateMode { PaperRates, ExponentCarried };

struct Jet {
  double phi, d1, d2, d3;  // phi(t) and first three derivatives
};

// Conformal map from the real line onto (0, inf).
// Simple:      phi(t) = log(exp(sinh t) + 1)
// Generalized: phi(t) = log(exp(a e^{bt} - c e^{-dt}) + 1)
class ConformalMap {
 public:
  static ConformalMap simple();
  static ConformalMap generalized(double a, double b, double c, double d);

  MapVariant variant() const { return variant_; }
  // Tail parameters; the Simple map behaves like a = c = 1/2, b = d = 1.
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  Jet jet(double t) const;
  double log_phi(double t) const;    // log(phi(t)); stable where phi underflows
  double phi_ratio(double t) const;  // phi'(t)/phi(t); stable for t << 0
  // (3/4)(phi''/phi')^2 - phi'''/(2 phi'), the potential-independent block of
  // Vtilde; the sigmoid factors are cancelled before they can underflow, so
  // this stays finite far into the left tail where d1, d2, d3 are all zero
  double curvature(double t) const;

 private:
  ConformalMap(MapVariant v, double a, double b, double c, double d)
      : variant_(v), a_(a), b_(b), c_(c), d_(d) {}
  double inner(double t) const;  // w(t) with phi = softplus(w)
  void inner_jet(double t, double& w, double& w1, double& w2, double& w3) const;

  MapVariant variant_;
  double a_, b_, c_, d_;
};

Jet map_eval(const ConformalMap& m, double t);

// Vtilde(t) = (3/4)(phi''/phi')^2 - phi'''/(2 phi') + (phi')^2 V(phi(t)),
// the transformed potential of the symmetrized equation
// -v'' + Vtilde v = E (phi')^2 v.
double transformed_potential(const ConformalMap& m, const Potential& p, double t);

// Double-exponential envelope |v(t)| <= A exp(-B e^{gamma |t|}) of the
// transformed wavefunction, split by tail, plus the induced strip half-width.
struct DecayProfile {
  double gamma_L, B_L;  // left tail: gamma_L = d, B_L = c*r
  double gamma_R, B_R;  // right tail: rate per RateMode, B_R from WKB
  double gamma;         // max(gamma_L, gamma_R)
  double B;             // the B on the side achieving gamma
  double d_strip;       // pi / (2 gamma)
};

DecayProfile decay_profile(const ConformalMap& m, const Potential& p, RateMode mode);

}  // namespace descm
