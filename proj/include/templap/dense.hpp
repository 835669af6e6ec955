#pragma once

#include <Eigen/Dense>

#include <span>
#include <utility>
#include <vector>

namespace templap {

/// Gaussian elimination with partial pivoting. Throws std::runtime_error for
/// a singular (or numerically singular) matrix.
std::vector<double> dense_gauss_solve(const Eigen::MatrixXd& a,
                                      std::span<const double> rhs);

/// (lambda_min, lambda_max) of a symmetric matrix.
std::pair<double, double> extreme_eigs(const Eigen::MatrixXd& a);

}  // namespace templap
