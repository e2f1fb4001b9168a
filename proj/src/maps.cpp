#include "descm/maps.hpp"

#include <cmath>
#include <stdexcept>

namespace descm {

namespace {

// log(e^w + 1) without overflow for large |w|
double softplus(double w) {
  return std::max(w, 0.0) + std::log1p(std::exp(-std::abs(w)));
}

// logistic function, branch-wise to avoid overflow
double sigmoid(double w) {
  if (w >= 0.0) return 1.0 / (1.0 + std::exp(-w));
  const double e = std::exp(w);
  return e / (1.0 + e);
}

}  // namespace

ConformalMap ConformalMap::simple() {
  // tails match e^t/2 on the right and exp(-e^{-t}/2) on the left
  return ConformalMap(MapVariant::Simple, 0.5, 1.0, 0.5, 1.0);
}

ConformalMap ConformalMap::generalized(double a, double b, double c, double d) {
  if (!(a > 0) || !(b > 0) || !(c > 0) || !(d > 0))
    throw std::invalid_argument("map: parameters a, b, c, d must be positive");
  return ConformalMap(MapVariant::Generalized, a, b, c, d);
}

double ConformalMap::inner(double t) const {
  if (variant_ == MapVariant::Simple) return std::sinh(t);
  return a_ * std::exp(b_ * t) - c_ * std::exp(-d_ * t);
}

void ConformalMap::inner_jet(double t, double& w, double& w1, double& w2, double& w3) const {
  if (variant_ == MapVariant::Simple) {
    w = std::sinh(t);
    w1 = std::cosh(t);
    w2 = w;
    w3 = w1;
    return;
  }
  const double p = a_ * std::exp(b_ * t);   // grows on the right
  const double q = c_ * std::exp(-d_ * t);  // grows on the left
  w = p - q;
  w1 = b_ * p + d_ * q;
  w2 = b_ * b_ * p - d_ * d_ * q;
  w3 = b_ * b_ * b_ * p + d_ * d_ * d_ * q;
}

Jet ConformalMap::jet(double t) const {
  if (!std::isfinite(t)) throw std::domain_error("map: non-finite t");
  double w, w1, w2, w3;
  inner_jet(t, w, w1, w2, w3);
  const double s = sigmoid(w);
  const double sc = sigmoid(-w);           // 1 - s without cancellation
  const double s1 = s * sc;                // sigma'
  const double s2 = s1 * (sc - s);         // sigma''
  Jet j;
  j.phi = softplus(w);
  j.d1 = s * w1;
  j.d2 = s1 * w1 * w1 + s * w2;
  j.d3 = s2 * w1 * w1 * w1 + 3.0 * s1 * w1 * w2 + s * w3;
  return j;
}

double ConformalMap::curvature(double t) const {
  double w, w1, w2, w3;
  inner_jet(t, w, w1, w2, w3);
  // divide the sigma-chain derivatives by phi' = sigma*w' analytically:
  // sigma'/sigma = 1-sigma, sigma''/sigma = (1-sigma)(1-2sigma), w' > 0
  const double s = sigmoid(w);
  const double sc = sigmoid(-w);
  const double r2 = sc * w1 + w2 / w1;                              // phi''/phi'
  const double r3 = sc * (sc - s) * w1 * w1 + 3.0 * sc * w2 + w3 / w1;  // phi'''/phi'
  return 0.75 * r2 * r2 - 0.5 * r3;
}

double ConformalMap::log_phi(double t) const {
  const double w = inner(t);
  // softplus(w) ~ e^w as w -> -inf; relative correction below e^{-37}
  if (w > -37.0) return std::log(softplus(w));
  return w;
}

double ConformalMap::phi_ratio(double t) const {
  double w, w1, w2, w3;
  inner_jet(t, w, w1, w2, w3);
  // sigmoid(w)/softplus(w) -> 1 as w -> -inf; ratio exact to ~e^{-40} there
  if (w < -40.0) return w1;
  return sigmoid(w) * w1 / softplus(w);
}

Jet map_eval(const ConformalMap& m, double t) { return m.jet(t); }

double transformed_potential(const ConformalMap& m, const Potential& p, double t) {
  const Jet j = m.jet(t);
  // (phi')^2 V(phi) term by term; the singular powers go through q = phi'/phi,
  // which tends to w'(t) on the left tail instead of 0/0
  const double q = m.phi_ratio(t);
  double v = 0.0;
  for (const auto& [power, a] : p.coefficients()) {
    if (power == -2)
      v += a * q * q;
    else if (power == -1)
      v += a * q * j.d1;
    else
      v += a * j.d1 * j.d1 * std::pow(j.phi, power);
  }
  return m.curvature(t) + v;
}

DecayProfile decay_profile(const ConformalMap& m, const Potential& p, RateMode mode) {
  const AsymptoticData asym = asymptotics(p);
  const int n = p.degree();
  DecayProfile dp;
  dp.gamma_L = m.d();
  dp.B_L = m.c() * asym.frobenius_root;
  dp.gamma_R = (mode == RateMode::PaperRates) ? m.b() / 2.0 : m.b() * (n + 2) / 2.0;
  // Composing the WKB envelope with phi ~ a e^{bt} gives
  // exp(-K e^{b(n+2)t/2}) with K = wkb_rate * a^{(n+2)/2}. The profile carries
  // K/2: with d_strip = pi/(2 gamma) the Lambert-W argument is then pi^2 N/K,
  // the spacing that balances the two tails' truncation errors on the
  // built-in potentials (see the convergence tests).
  dp.B_R = asym.wkb_rate * std::pow(m.a(), asym.wkb_power) / 2.0;
  if (dp.gamma_R >= dp.gamma_L) {
    dp.gamma = dp.gamma_R;
    dp.B = dp.B_R;
  } else {
    dp.gamma = dp.gamma_L;
    dp.B = dp.B_L;
  }
  dp.d_strip = M_PI / (2.0 * dp.gamma);
  return dp;
}

}  // namespace descm
