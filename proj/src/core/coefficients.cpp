#include "templap/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace templap {

namespace {

constexpr std::size_t kSeriesThreshold = 4;
constexpr int kMaxSeriesTerms = 400;

// 2 m^p - (m-1)^p - (m+1)^p.
double power_second_difference(std::size_t m, double p) {
  const double md = static_cast<double>(m);
  if (m < kSeriesThreshold)
    return 2.0 * std::pow(md, p) - std::pow(md - 1.0, p) - std::pow(md + 1.0, p);
  // (1+x)^p + (1-x)^p - 2 = 2 sum_{k>=1} binom(p,2k) x^{2k}, x = 1/m.
  // Every term carries the same sign, so the sum is cancellation free.
  const double x = 1.0 / md;
  double binom = 1.0;
  double xk = 1.0;
  double sum = 0.0;
  for (int j = 1; j <= kMaxSeriesTerms; ++j) {
    binom *= (p - j + 1.0) / j;
    xk *= x;
    if (j % 2 == 1) continue;
    const double term = binom * xk;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return -2.0 * std::pow(md, p) * sum;
}

// n^p - (n-1)^p - p n^{p-1}.
double power_boundary_difference(std::size_t n, double p) {
  const double nd = static_cast<double>(n);
  if (n < kSeriesThreshold)
    return std::pow(nd, p) - std::pow(nd - 1.0, p) - p * std::pow(nd, p - 1.0);
  // n^p [1 - (1-x)^p - p x] = -n^p sum_{k>=2} binom(p,k) (-x)^k.
  const double x = 1.0 / nd;
  double binom = 1.0;
  double xk = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    binom *= (p - k + 1.0) / k;
    xk *= -x;
    if (k == 1) continue;
    const double term = binom * xk;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return -std::pow(nd, p) * sum;
}

// beta = 1, s = 0: 2 ln m - ln(m+1) - ln(m-1).
double log_pair_s0(std::size_t m) {
  const double md = static_cast<double>(m);
  return -std::log1p(-1.0 / (md * md));
}

// beta = 1, s = 1: (m+1) ln(m+1) + (m-1) ln(m-1) - 2 m ln m.
double log_pair_s1(std::size_t m) {
  const double md = static_cast<double>(m);
  if (m < kSeriesThreshold)
    return (md + 1.0) * std::log(md + 1.0) + (md - 1.0) * std::log(md - 1.0) -
           2.0 * md * std::log(md);
  // 2 sum_{j>=1} x^{2j-1} / ((2j-1) 2j), x = 1/m.
  const double x = 1.0 / md;
  const double x2 = x * x;
  double xp = x;
  double sum = 0.0;
  for (int j = 1; j <= kMaxSeriesTerms; ++j) {
    const double term = xp / ((2.0 * j - 1.0) * (2.0 * j));
    sum += term;
    if (term <= 1e-18 * sum) break;
    xp *= x2;
  }
  return 2.0 * sum;
}

// beta = 1, s = 0: ln(n/(n-1)) - 1/n.
double log_boundary_s0(std::size_t n) {
  const double nd = static_cast<double>(n);
  if (n < kSeriesThreshold) return std::log(nd / (nd - 1.0)) - 1.0 / nd;
  // -ln(1-x) - x = sum_{k>=2} x^k / k.
  const double x = 1.0 / nd;
  double xk = x;
  double sum = 0.0;
  for (int k = 2; k <= kMaxSeriesTerms; ++k) {
    xk *= x;
    const double term = xk / k;
    sum += term;
    if (term <= 1e-18 * sum) break;
  }
  return sum;
}

// beta = 1, s = 1: (1-n) ln(n/(n-1)) + 1.
double log_boundary_s1(std::size_t n) {
  const double nd = static_cast<double>(n);
  if (n < kSeriesThreshold) return (1.0 - nd) * std::log(nd / (nd - 1.0)) + 1.0;
  // sum_{k>=1} x^k / (k (k+1)).
  const double x = 1.0 / nd;
  double xk = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    xk *= x;
    const double term = xk / (k * (k + 1.0));
    sum += term;
    if (term <= 1e-18 * sum) break;
  }
  return sum;
}

double power_prefactor(const SchemeParams& params, double h) {
  const double beta = params.beta();
  const double s = params.s();
  return std::pow(h, -beta) / ((beta - s) * (1.0 - beta + s));
}

double power_exponent(const SchemeParams& params) {
  return 1.0 - params.beta() + params.s();
}

}  // namespace

double coeff_pair_sum(std::size_t m, const SchemeParams& params, double h) {
  if (m < 2) throw std::invalid_argument("coeff_pair_sum: lag must be >= 2");
  if (params.beta_is_one())
    return (params.s() == 0 ? log_pair_s0(m) : log_pair_s1(m)) / h;
  return power_prefactor(params, h) *
         power_second_difference(m, power_exponent(params));
}

double coeff_adjacent_cell(const SchemeParams& params, double h) {
  if (params.beta_is_one()) {
    const double ln2 = std::log(2.0);
    return (params.s() == 0 ? 1.0 - ln2 : 2.0 * ln2 - 1.0) / h;
  }
  const double p = power_exponent(params);
  return power_prefactor(params, h) * (1.0 + p - std::exp2(p));
}

double coeff_singular_cell(const SchemeParams& params, double h) {
  return std::pow(h, -params.beta()) / (params.s1() + 1.0 - params.beta());
}

double coeff_near_diag(const SchemeParams& params, double h) {
  return std::exp(-params.lambda() * h) *
         (coeff_singular_cell(params, h) + coeff_adjacent_cell(params, h));
}

double coeff_boundary_weight(std::size_t n, const SchemeParams& params,
                             double h) {
  if (n < 2)
    throw std::invalid_argument("coeff_boundary_weight: offset must be >= 2");
  if (params.beta_is_one())
    return (params.s() == 0 ? log_boundary_s0(n) : log_boundary_s1(n)) / h;
  return power_prefactor(params, h) *
         power_boundary_difference(n, power_exponent(params));
}

double coeff_boundary_left(std::size_t i, const SchemeParams& params,
                           const Grid& grid) {
  if (i < 2 || i > grid.size())
    throw std::invalid_argument("coeff_boundary_left: need 2 <= i <= M");
  return coeff_boundary_weight(i, params, grid.h());
}

double coeff_boundary_right(std::size_t i, const SchemeParams& params,
                            const Grid& grid) {
  if (i < 1 || i + 1 > grid.size())
    throw std::invalid_argument("coeff_boundary_right: need 1 <= i <= M-1");
  return coeff_boundary_weight(grid.size() + 1 - i, params, grid.h());
}

}  // namespace templap
