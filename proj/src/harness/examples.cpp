#include "templap/examples.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "templap/quadrature.hpp"
#include "templap/reference_operator.hpp"
#include "templap/special_functions.hpp"
#include "templap/tail_integrals.hpp"

namespace templap {

double example1_exact(double x) { return x * x * (1.0 - x); }

namespace {

void require_unit_interval(const Grid& grid, const char* who) {
  if (grid.a() != 0.0 || grid.b() != 1.0)
    throw std::invalid_argument(std::string(who) + ": grid must span (0,1)");
}

// int_d^inf e^{-lambda t} / t dt, up to a d-independent constant when
// lambda = 0 (only differences are used).
double log_tail(double d, double lambda) {
  return lambda > 0.0 ? exp_integral_e1(lambda * d) : -std::log(d);
}

}  // namespace

std::vector<double> example1_f(const SchemeParams& params, const Grid& grid) {
  require_unit_interval(grid, "example1_f");
  const double beta = params.beta();
  const double lambda = params.lambda();
  const double scale = params.apply_cbeta() ? c_beta_const(params) : 1.0;
  const std::size_t m = grid.size();
  std::vector<double> f(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const double x = grid.node(i);
    const double left = grid.left_distance(i);
    const double right = grid.right_distance(i);
    const double slope = 2.0 * x - 3.0 * x * x;
    double v = example1_exact(x) *
               (tail_integral_left(i, params, grid) + tail_integral_right(i, params, grid));
    if (params.beta_is_one()) {
      v += integrate_legendre(
          [&](double t) { return (-t + 3.0 * x - 1.0) * std::exp(-lambda * t); }, 0.0, left);
      v += integrate_legendre(
          [&](double t) { return (t + 3.0 * x - 1.0) * std::exp(-lambda * t); }, 0.0, right);
      v += slope * (log_tail(right, lambda) - log_tail(left, lambda));
    } else {
      const double p = 1.0 - beta;
      const double shift = lambda * slope / p;
      v += slope / p *
           (std::pow(left, p) * std::exp(-lambda * left) -
            std::pow(right, p) * std::exp(-lambda * right));
      v += integrate_power_weighted(
          [&](double t) { return (-t + 3.0 * x - 1.0 + shift) * std::exp(-lambda * t); },
          left, p);
      v += integrate_power_weighted(
          [&](double t) { return (t + 3.0 * x - 1.0 - shift) * std::exp(-lambda * t); },
          right, p);
    }
    f[i - 1] = scale * v;
  }
  return f;
}

double example2_exact(double x) {
  const double q = x - x * x;
  return q * q;
}

BoundarySpec example2_boundary() {
  auto g = [](double y) {
    if (y >= -0.5 && y <= 0.0) return -2.0 * y;
    if (y >= 1.0 && y <= 1.5) return 2.0 * y - 2.0;
    return 0.0;
  };
  return BoundarySpec(g, 0.0, 0.0, Interval{-0.5, 0.0}, Interval{1.0, 1.5});
}

Example2Setup example2_setup(const SchemeParams& params, const Grid& grid) {
  require_unit_interval(grid, "example2_setup");
  Example2Setup out{{}, example2_boundary(), {}};
  const auto xs = grid.interior_nodes();
  out.f.reserve(xs.size());
  out.exact.reserve(xs.size());
  for (double x : xs) {
    out.f.push_back(
        reference_apply_operator(example2_exact, out.boundary, x, params, {0.0, 1.0}));
    out.exact.push_back(example2_exact(x));
  }
  return out;
}

double example3_exact(double beta, double r, double x) {
  if (!(r > 0.0)) throw std::invalid_argument("example3_exact: radius must be positive");
  if (std::abs(x) > r) throw std::domain_error("example3_exact: |x| > r");
  const double num = std::sqrt(std::numbers::pi) * std::pow(r * r - x * x, beta / 2.0);
  return num / (std::pow(2.0, beta) * gamma_fn(1.0 + beta / 2.0) *
                gamma_fn(0.5 + beta / 2.0));
}

double example3_exact(const SchemeParams& params, double r, double x) {
  if (params.tempered())
    throw std::invalid_argument(
        "example3_exact: no closed form for lambda > 0, use successive refinement");
  return example3_exact(params.beta(), r, x);
}

}  // namespace templap
