#include "templap/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "templap/quadrature.hpp"

namespace templap {

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gamma_fn: non-finite input");
  if (x <= 0.0 && x == std::nearbyint(x))
    throw std::domain_error("gamma_fn: pole at non-positive integer");
  return std::tgamma(x);
}

double c_beta_const(const SchemeParams& params) {
  const double beta = params.beta();
  if (!params.tempered() || params.beta_is_one()) {
    return beta * gamma_fn(0.5 * (1.0 + beta)) /
           (std::pow(2.0, 1.0 - beta) * std::sqrt(std::numbers::pi) *
            gamma_fn(1.0 - 0.5 * beta));
  }
  return gamma_fn(0.5) /
         (2.0 * std::sqrt(std::numbers::pi) * std::abs(gamma_fn(-beta)));
}

double exp_integral_tail_series(double z, int terms) {
  if (!(z > 0.0) || !std::isfinite(z))
    throw std::domain_error("exp_integral_tail_series: z must be positive");
  // term_n = (-1)^n z^n / n!, accumulated recursively.
  double power = 1.0;
  double sum = 0.0;
  for (int n = 1; n <= terms; ++n) {
    power *= -z / n;
    sum += power / n;
  }
  return -kEulerGamma - std::log(z) - sum;
}

double exp_integral_e1(double z) {
  if (!(z > 0.0) || !std::isfinite(z))
    throw std::domain_error("exp_integral_e1: z must be positive");
  if (z < 0.5) return exp_integral_tail_series(z);
  // E_1(z) = int_1^inf e^{-z t}/t dt = int_0^1 e^{-z/tau}/tau dtau.
  const double lo = std::min(z / kTailSubstitutionK, 0.5);
  return integrate_legendre(
      [z](double tau) { return std::exp(-z / tau) / tau; }, lo, 1.0);
}

}  // namespace templap
