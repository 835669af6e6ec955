#include "templap/tail_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "templap/quadrature.hpp"
#include "templap/special_functions.hpp"

namespace templap {

namespace {

double tail_power_law(double d, double lambda, double beta, int points) {
  const double decay = std::exp(-lambda * d);
  const double one_minus = 1.0 - beta;
  const double finite_part = integrate_power_weighted(
      [lambda](double t) { return std::exp(-lambda * t); }, d, one_minus,
      points);
  return decay / (beta * std::pow(d, beta)) +
         lambda / (beta * one_minus) * decay * std::pow(d, one_minus) +
         std::pow(lambda, beta) * gamma_fn(-beta) +
         lambda * lambda / (beta * one_minus) * finite_part;
}

// int_d^inf e^{-lambda t} t^{-1-beta} dt = int_0^{1/d} e^{-lambda/tau} tau^{beta-1} dtau.
double tail_substituted(double d, double lambda, double beta, int points) {
  const double upper = 1.0 / d;
  const double lower = std::min(lambda / kTailSubstitutionK, 0.5 * upper);
  return integrate_legendre(
      [lambda, beta](double tau) { return std::exp(-lambda / tau) * std::pow(tau, beta - 1.0); },
      lower, upper, points);
}

double tail_beta_one(double d, double lambda) {
  return std::exp(-lambda * d) / d - lambda * exp_integral_tail_series(lambda * d);
}

}  // namespace

double kernel_tail(double distance, const SchemeParams& params, int points) {
  if (!(distance > 0.0))
    throw std::invalid_argument("kernel_tail: distance must be positive");
  const double beta = params.beta();
  const double lambda = params.lambda();
  if (!params.tempered()) return std::pow(distance, -beta) / beta;
  // the split form cancels once e^{-lambda d} is small
  if (lambda * distance >= 0.5) return tail_substituted(distance, lambda, beta, points);
  if (params.beta_is_one()) return tail_beta_one(distance, lambda);
  return tail_power_law(distance, lambda, beta, points);
}

double tail_integral_left(std::size_t i, const SchemeParams& params,
                          const Grid& grid) {
  if (i < 1 || i > grid.size())
    throw std::out_of_range("tail_integral_left: node index out of range");
  return kernel_tail(grid.left_distance(i), params);
}

double tail_integral_right(std::size_t i, const SchemeParams& params,
                           const Grid& grid) {
  if (i < 1 || i > grid.size())
    throw std::out_of_range("tail_integral_right: node index out of range");
  return kernel_tail(grid.right_distance(i), params);
}

}  // namespace templap
