#include "oracles.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "templap/coefficients.hpp"

namespace oracle {

namespace bq = boost::math::quadrature;

double c_beta(double beta, double lambda) {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  if (lambda == 0.0 || beta == 1.0)
    return beta * std::tgamma((1.0 + beta) / 2.0) /
           (std::pow(2.0, 1.0 - beta) * sqrt_pi * std::tgamma(1.0 - beta / 2.0));
  return std::tgamma(0.5) / (2.0 * sqrt_pi * std::abs(std::tgamma(-beta)));
}

double kernel_tail(double d, double beta, double lambda) {
  // t = d + u, u in (0, inf)
  bq::exp_sinh<double> integrator;
  auto f = [&](double u) {
    const double t = d + u;
    return std::exp(-lambda * u) * std::pow(t, -1.0 - beta);
  };
  return std::exp(-lambda * d) * integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-15);
}

double e1(double z) {
  bq::exp_sinh<double> integrator;
  auto f = [&](double u) { return std::exp(-u) / (z + u); };
  return std::exp(-z) * integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-15);
}

double singular_cell(double beta, int s1, double h) {
  // int_0^1 t^{s1-beta} dt with t = e^{-v}; the endpoint singularity becomes a slow exponential
  bq::exp_sinh<double> integrator;
  const double a = s1 - beta;
  auto f = [a](double v) { return std::exp(-(a + 1.0) * v); };
  return std::pow(h, -beta) * integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-15);
}

double exterior_load(const std::function<double(double)>& g, double lo, double hi,
                     double x, double beta, double lambda) {
  auto f = [&](double y) {
    const double d = std::abs(x - y);
    return g(y) * std::exp(-lambda * d) * std::pow(d, -1.0 - beta);
  };
  return bq::gauss_kronrod<double, 61>::integrate(f, lo, hi, 25, 1e-14);
}

System brute_system(const templap::SchemeParams& params, const templap::Grid& grid,
                    const std::vector<double>& f_values,
                    const std::function<double(double)>& g,
                    const std::vector<templap::Interval>& supports, double u_a, double u_b) {
  using templap::CellWeight;
  const std::size_t m = grid.size();
  const double beta = params.beta(), lambda = params.lambda(), h = grid.h();
  const int s = params.s();
  const double scale = params.apply_cbeta() ? c_beta(beta, lambda) : 1.0;
  const double sing = singular_cell(beta, params.s1(), h) * std::exp(-lambda * h);

  System sys{Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)),
             Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m))};
  auto cell = [&](CellWeight w, std::size_t i, std::size_t k) {
    return templap::coeff_quadrature_oracle(w, i, s, k, params, grid);
  };
  for (std::size_t i = 1; i <= m; ++i) {
    const double xi = grid.node(i);
    // weight[k]: coefficient of (u(x_i) - u(x_k)) in the discrete operator
    std::vector<double> weight(m + 2, 0.0);
    for (std::size_t k = 0; k + 1 < i; ++k) {
      double w = cell(CellWeight::A1, i, k + 1);
      if (k >= 1) w += cell(CellWeight::A2, i, k);
      const double n = static_cast<double>(i - k);
      weight[k] = w * std::exp(-lambda * n * h) / std::pow(n, s);
    }
    for (std::size_t k = i + 2; k <= m + 1; ++k) {
      double w = 0.0;
      if (k + 1 <= m + 1) w += cell(CellWeight::A3, i, k + 1);
      w += cell(CellWeight::A4, i, k);
      const double n = static_cast<double>(k - i);
      weight[k] = w * std::exp(-lambda * n * h) / std::pow(n, s);
    }
    weight[i - 1] += sing;
    weight[i + 1] += sing;
    if (i >= 2) weight[i - 1] += cell(CellWeight::A2, i, i - 1) * std::exp(-lambda * h);
    if (i + 2 <= m + 1) weight[i + 1] += cell(CellWeight::A3, i, i + 2) * std::exp(-lambda * h);

    const auto r = static_cast<Eigen::Index>(i - 1);
    double diag = kernel_tail(grid.left_distance(i), beta, lambda) +
                  kernel_tail(grid.right_distance(i), beta, lambda);
    for (std::size_t k = 0; k <= m + 1; ++k) {
      if (k == i) continue;
      diag += weight[k];
      if (k >= 1 && k <= m) sys.h(r, static_cast<Eigen::Index>(k - 1)) = -scale * weight[k];
    }
    sys.h(r, r) = scale * diag;

    double load = weight[0] * u_a + weight[m + 1] * u_b;
    for (const auto& piece : supports) load += exterior_load(g, piece.lo, piece.hi, xi, beta, lambda);
    sys.f(r) = f_values[i - 1] + scale * load;
  }
  return sys;
}

}  // namespace oracle
