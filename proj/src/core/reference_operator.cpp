#include "templap/reference_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "templap/quadrature.hpp"
#include "templap/special_functions.hpp"
#include "templap/tail_integrals.hpp"

namespace templap {

double reference_apply_operator(const std::function<double(double)>& u,
                                const BoundarySpec& exterior, double x,
                                const SchemeParams& params, Interval domain) {
  const double a = domain.lo;
  const double b = domain.hi;
  if (!(x > a && x < b))
    throw std::domain_error("reference_apply_operator: x must be interior");

  const double beta = params.beta();
  const double lambda = params.lambda();
  const double ux = u(x);
  const double delta = std::min(x - a, b - x);

  auto second_difference = [&](double t) {
    return 2.0 * ux - u(x - t) - u(x + t);
  };

  // Near field, inner half: Jacobi weight t^{1-beta} absorbs the singularity
  // left after dividing the O(t^2) second difference by t^2.
  const double inner = integrate_power_weighted(
      [&](double t) {
        return second_difference(t) / (t * t) * std::exp(-lambda * t);
      },
      0.5 * delta, 1.0 - beta);
  // Outer half reaches the boundary, where u may lose smoothness.
  const double outer = integrate_graded(
      [&](double t) {
        return second_difference(t) * std::exp(-lambda * t) *
               std::pow(t, -1.0 - beta);
      },
      0.5 * delta, delta);

  // Remaining one-sided part of the domain.
  double far = 0.0;
  auto one_sided = [&](double y) {
    const double dist = std::abs(y - x);
    return (ux - u(y)) * std::exp(-lambda * dist) * std::pow(dist, -1.0 - beta);
  };
  if (x - a < b - x)
    far = integrate_graded(one_sided, x + delta, b);
  else if (b - x < x - a)
    far = integrate_graded(one_sided, a, x - delta);

  exterior.check_against(a, b);
  const auto [d1, d2] = exterior_loads(x, exterior, params);
  const double tails =
      ux * (kernel_tail(x - a, params) + kernel_tail(b - x, params));

  const double raw = inner + outer + far + tails - d1 - d2;
  return params.apply_cbeta() ? c_beta_const(params) * raw : raw;
}

}  // namespace templap
