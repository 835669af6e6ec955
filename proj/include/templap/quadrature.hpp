#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace templap {

/// Gauss rule on [-1,1] for the Jacobi weight (1-xi)^alpha_w (1+xi)^beta_w.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double alpha_w = 0.0;
  double beta_w = 0.0;

  std::size_t size() const { return nodes.size(); }
};

/// Points used for every spectral integral in the tail and load formulas.
inline constexpr int kTailQuadraturePoints = 64;

/// n-point Jacobi-Gauss rule computed by Golub-Welsch. Nodes ascending.
/// Requires n >= 1 and alpha_w, beta_w > -1.
QuadratureRule jacobi_gauss_rule(int n, double alpha_w, double beta_w);

/// Same rule, memoized. The returned reference stays valid for the life of
/// the process; safe to call concurrently.
const QuadratureRule& cached_jacobi_gauss_rule(int n, double alpha_w,
                                               double beta_w);

/// Integral of (1+xi)^beta_w over [-1,1] times (1-xi)^alpha_w: the total mass
/// of the weight.
double jacobi_weight_mass(double alpha_w, double beta_w);

/// int_lo^hi f(y) dy with an n-point Gauss-Legendre rule.
double integrate_legendre(const std::function<double(double)>& f, double lo,
                          double hi, int n = kTailQuadraturePoints);

/// int_0^len t^p phi(t) dt for p > -1, using the Jacobi rule with weight
/// exponent p on the left end, i.e. the substitution t = len (1+xi)/2.
double integrate_power_weighted(const std::function<double(double)>& phi,
                                double len, double p,
                                int n = kTailQuadraturePoints);

/// Composite Gauss-Legendre over [lo,hi] with panels halving geometrically
/// toward both endpoints (`levels` panels per half). Tolerates integrable
/// endpoint singularities and near-endpoint kernel peaks.
double integrate_graded(const std::function<double(double)>& f, double lo,
                        double hi, int levels = 40, int points = 16);

/// Composite Gauss-Legendre over [lo,hi] whose panels grow geometrically away
/// from `near` (which must be lo or hi), starting at width `first_width`.
double integrate_away_from(const std::function<double(double)>& f, double lo,
                           double hi, double near, double first_width,
                           int points = 32);

}  // namespace templap
