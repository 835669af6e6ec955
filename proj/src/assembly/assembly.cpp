#include "templap/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include "templap/coefficients.hpp"
#include "templap/special_functions.hpp"
#include "templap/tail_integrals.hpp"

namespace templap {

OperatorMatrix::OperatorMatrix(SchemeParams params, Grid grid,
                               std::vector<double> diag,
                               std::vector<double> toeplitz_col,
                               std::vector<double> tails_left,
                               std::vector<double> tails_right)
    : params_(params),
      grid_(grid),
      diag_(std::move(diag)),
      toeplitz_col_(std::move(toeplitz_col)),
      tails_left_(std::move(tails_left)),
      tails_right_(std::move(tails_right)) {
  const std::size_t m = grid_.size();
  if (diag_.size() != m || toeplitz_col_.size() != m ||
      tails_left_.size() != m || tails_right_.size() != m)
    throw std::invalid_argument("OperatorMatrix: inconsistent storage sizes");
}

double operator_scale(const SchemeParams& params) {
  return params.apply_cbeta() ? c_beta_const(params) : 1.0;
}

std::vector<double> assemble_offdiagonal(const SchemeParams& params,
                                         const Grid& grid) {
  const std::size_t m_count = grid.size();
  const double h = grid.h();
  const double scale = operator_scale(params);
  std::vector<double> col(m_count, 0.0);
  col[1] = -scale * coeff_near_diag(params, h);
  for (std::size_t m = 2; m < m_count; ++m) {
    const double md = static_cast<double>(m);
    double weight = coeff_pair_sum(m, params, h) * std::exp(-params.lambda() * md * h);
    if (params.s() == 1) weight /= md;
    col[m] = -scale * weight;
  }
  return col;
}

std::pair<std::vector<double>, std::vector<double>> assemble_tails(
    const SchemeParams& params, const Grid& grid) {
  const std::size_t m = grid.size();
  const double scale = operator_scale(params);
  std::vector<double> left(m);
  std::vector<double> right(m);
  for (std::size_t i = 1; i <= m; ++i) {
    left[i - 1] = scale * tail_integral_left(i, params, grid);
    right[i - 1] = scale * tail_integral_right(i, params, grid);
  }
  return {std::move(left), std::move(right)};
}

namespace {

// Weight of the endpoint value n cells away, before c_beta.
double endpoint_weight(std::size_t n, const SchemeParams& params, double h) {
  if (n == 1) return std::exp(-params.lambda() * h) * coeff_singular_cell(params, h);
  const double nd = static_cast<double>(n);
  double w = coeff_boundary_weight(n, params, h) * std::exp(-params.lambda() * nd * h);
  if (params.s() == 1) w /= nd;
  return w;
}

}  // namespace

std::vector<double> boundary_lift_left(const SchemeParams& params,
                                       const Grid& grid) {
  std::vector<double> lift(grid.size());
  for (std::size_t i = 1; i <= grid.size(); ++i)
    lift[i - 1] = endpoint_weight(i, params, grid.h());
  return lift;
}

std::vector<double> boundary_lift_right(const SchemeParams& params,
                                        const Grid& grid) {
  const std::size_t m = grid.size();
  std::vector<double> lift(m);
  for (std::size_t i = 1; i <= m; ++i)
    lift[i - 1] = endpoint_weight(m + 1 - i, params, grid.h());
  return lift;
}

std::vector<double> assemble_diagonal(const SchemeParams& params,
                                      const Grid& grid,
                                      std::span<const double> toeplitz_col,
                                      std::span<const double> tails_left,
                                      std::span<const double> tails_right) {
  const std::size_t m = grid.size();
  if (toeplitz_col.size() != m || tails_left.size() != m || tails_right.size() != m)
    throw std::invalid_argument("assemble_diagonal: size mismatch");
  const double scale = operator_scale(params);

  // prefix[k] = sum_{l=1}^{k} t_l; row i sees lags 1..i-1 and 1..M-i.
  std::vector<double> prefix(m, 0.0);
  for (std::size_t k = 1; k < m; ++k) prefix[k] = prefix[k - 1] + toeplitz_col[k];

  const auto lift_a = boundary_lift_left(params, grid);
  const auto lift_b = boundary_lift_right(params, grid);
  std::vector<double> diag(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const double off_sum = prefix[i - 1] + prefix[m - i];
    diag[i - 1] = (tails_left[i - 1] + tails_right[i - 1]) - off_sum +
                  scale * (lift_a[i - 1] + lift_b[i - 1]);
  }
  return diag;
}

OperatorMatrix assemble_operator(const SchemeParams& params, const Grid& grid) {
  auto col = assemble_offdiagonal(params, grid);
  auto [left, right] = assemble_tails(params, grid);
  auto diag = assemble_diagonal(params, grid, col, left, right);
  return OperatorMatrix(params, grid, std::move(diag), std::move(col),
                        std::move(left), std::move(right));
}

std::pair<double, double> boundary_tail_load(std::size_t i,
                                             const BoundarySpec& boundary,
                                             const SchemeParams& params,
                                             const Grid& grid) {
  if (i < 1 || i > grid.size())
    throw std::out_of_range("boundary_tail_load: node index out of range");
  if (boundary.is_zero()) return {0.0, 0.0};
  return exterior_loads(grid.node(i), boundary, params);
}

LoadVector assemble_rhs(std::span<const double> f_values,
                        const BoundarySpec& boundary,
                        const SchemeParams& params, const Grid& grid) {
  const std::size_t m = grid.size();
  if (f_values.size() != m)
    throw std::invalid_argument("assemble_rhs: f_values has the wrong length");
  boundary.check_against(grid.a(), grid.b());
  const double scale = operator_scale(params);
  const auto lift_a = boundary_lift_left(params, grid);
  const auto lift_b = boundary_lift_right(params, grid);

  LoadVector load{std::vector<double>(m)};
  for (std::size_t i = 1; i <= m; ++i) {
    const auto [d1, d2] = boundary_tail_load(i, boundary, params, grid);
    const double lifted = d1 + d2 + lift_a[i - 1] * boundary.u_a() +
                          lift_b[i - 1] * boundary.u_b();
    const double value = f_values[i - 1] + scale * lifted;
    if (!std::isfinite(value))
      throw std::runtime_error("assemble_rhs: non-finite load entry at row " +
                               std::to_string(i));
    load.values[i - 1] = value;
  }
  return load;
}

Eigen::MatrixXd materialize_dense(const OperatorMatrix& op, std::size_t cap) {
  const std::size_t m = op.size();
  if (m > cap)
    throw std::length_error("materialize_dense: M=" + std::to_string(m) +
                            " exceeds the dense cap " + std::to_string(cap));
  Eigen::MatrixXd dense(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) dense(i, j) = op.entry(i, j);
  return dense;
}

}  // namespace templap
