#include "templap/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "templap/special_functions.hpp"

namespace templap {

double jacobi_weight_mass(double alpha_w, double beta_w) {
  return std::exp2(alpha_w + beta_w + 1.0) * std::tgamma(alpha_w + 1.0) *
         std::tgamma(beta_w + 1.0) / std::tgamma(alpha_w + beta_w + 2.0);
}

QuadratureRule jacobi_gauss_rule(int n, double alpha_w, double beta_w) {
  if (n < 1) throw std::invalid_argument("quadrature rule needs n >= 1");
  if (!(alpha_w > -1.0) || !(beta_w > -1.0))
    throw std::invalid_argument("Jacobi weight exponents must exceed -1");

  const double a = alpha_w;
  const double b = beta_w;
  const double ab = a + b;

  // Three-term recurrence of the monic Jacobi polynomials.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (t * (t + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + a) * (k + b) * (k + ab) /
           (t * t * (t + 1.0) * (t - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }

  QuadratureRule rule;
  rule.alpha_w = alpha_w;
  rule.beta_w = beta_w;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mass = jacobi_weight_mass(a, b);

  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mass;
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("Golub-Welsch eigenproblem did not converge");

  // Eigen returns eigenvalues in increasing order.
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = eig.eigenvalues()(k);
    const double v0 = eig.eigenvectors()(0, k);
    rule.weights[k] = mass * v0 * v0;
  }
  return rule;
}

const QuadratureRule& cached_jacobi_gauss_rule(int n, double alpha_w,
                                               double beta_w) {
  using Key = std::tuple<int, double, double>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<QuadratureRule>> cache;

  const Key key{n, alpha_w, beta_w};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto rule = std::make_unique<QuadratureRule>(
        jacobi_gauss_rule(n, alpha_w, beta_w));
    it = cache.emplace(key, std::move(rule)).first;
  }
  return *it->second;
}

double integrate_legendre(const std::function<double(double)>& f, double lo,
                          double hi, int n) {
  const QuadratureRule& rule = cached_jacobi_gauss_rule(n, 0.0, 0.0);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k)
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return half * sum;
}

double integrate_power_weighted(const std::function<double(double)>& phi,
                                double len, double p, int n) {
  if (len <= 0.0) return 0.0;
  const QuadratureRule& rule = cached_jacobi_gauss_rule(n, 0.0, p);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k)
    sum += rule.weights[k] * phi(0.5 * len * (1.0 + rule.nodes[k]));
  return std::pow(0.5 * len, p + 1.0) * sum;
}

double integrate_graded(const std::function<double(double)>& f, double lo,
                        double hi, int levels, int points) {
  if (!(hi > lo)) return 0.0;
  const double mid = 0.5 * (lo + hi);
  const double half = mid - lo;
  double sum = 0.0;
  // Left half: breakpoints lo + half * 2^{-k}, k = levels..0.
  double prev = lo;
  for (int k = levels; k >= 0; --k) {
    const double next = (k == 0) ? mid : lo + half * std::ldexp(1.0, -k);
    sum += integrate_legendre(f, prev, next, points);
    prev = next;
  }
  prev = hi;
  for (int k = levels; k >= 0; --k) {
    const double next = (k == 0) ? mid : hi - half * std::ldexp(1.0, -k);
    sum += integrate_legendre(f, next, prev, points);
    prev = next;
  }
  return sum;
}

double integrate_away_from(const std::function<double(double)>& f, double lo,
                           double hi, double near, double first_width,
                           int points) {
  if (!(hi > lo)) return 0.0;
  if (near != lo && near != hi)
    throw std::invalid_argument("grading anchor must be an interval endpoint");
  if (!(first_width > 0.0))
    throw std::invalid_argument("first panel width must be positive");
  const double length = hi - lo;
  double sum = 0.0;
  double covered = 0.0;
  double width = std::min(first_width, length);
  while (covered < length) {
    const double next = std::min(length, covered + width);
    if (near == lo)
      sum += integrate_legendre(f, lo + covered, lo + next, points);
    else
      sum += integrate_legendre(f, hi - next, hi - covered, points);
    covered = next;
    width *= 2.0;
  }
  return sum;
}

}  // namespace templap
