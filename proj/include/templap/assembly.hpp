#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "templap/boundary.hpp"
#include "templap/params.hpp"

namespace templap {

/// Stiffness matrix H = D + T: a diagonal plus a symmetric Toeplitz
/// off-diagonal part, together with the tail integrals that went into D.
///
/// Storage is 0-based: diag()[i-1] = h_{i,i}, toeplitz_col()[m] = h_{i,i+m}
/// for m >= 1 (slot 0 holds 0). tails_left/right hold the tail integrals in
/// the same normalization as the matrix (scaled by c_beta when the
/// parameters request it).
class OperatorMatrix {
 public:
  OperatorMatrix(SchemeParams params, Grid grid, std::vector<double> diag,
                 std::vector<double> toeplitz_col,
                 std::vector<double> tails_left,
                 std::vector<double> tails_right);

  const SchemeParams& params() const { return params_; }
  const Grid& grid() const { return grid_; }
  std::size_t size() const { return diag_.size(); }

  const std::vector<double>& diag() const { return diag_; }
  const std::vector<double>& toeplitz_col() const { return toeplitz_col_; }
  const std::vector<double>& tails_left() const { return tails_left_; }
  const std::vector<double>& tails_right() const { return tails_right_; }

  /// h_{i,j} for 0-based i, j.
  double entry(std::size_t i, std::size_t j) const {
    return i == j ? diag_[i] : toeplitz_col_[i > j ? i - j : j - i];
  }

 private:
  SchemeParams params_;
  Grid grid_;
  std::vector<double> diag_;
  std::vector<double> toeplitz_col_;
  std::vector<double> tails_left_;
  std::vector<double> tails_right_;
};

/// c_beta when the parameters apply it, 1 otherwise.
double operator_scale(const SchemeParams& params);

/// First column of H - D: entry m = -pair(m) e^{-lambda m h} / m^s for
/// m >= 2, entry 1 = -near-diagonal weight, entry 0 = 0. Scaled.
std::vector<double> assemble_offdiagonal(const SchemeParams& params,
                                         const Grid& grid);

/// Scaled tail integrals B_1(i), B_2(i), i = 1..M.
std::pair<std::vector<double>, std::vector<double>> assemble_tails(
    const SchemeParams& params, const Grid& grid);

/// Raw weight of u(a) in row i (0-based vector over i = 1..M): the singular
/// cell weight e^{-lambda h} h^{-beta}/(s1+1-beta) for i = 1, otherwise
/// A_1(i,s,1) e^{-lambda i h} / i^s.
std::vector<double> boundary_lift_left(const SchemeParams& params,
                                       const Grid& grid);

/// Mirror of boundary_lift_left for u(b).
std::vector<double> boundary_lift_right(const SchemeParams& params,
                                        const Grid& grid);

/// Diagonal from the row-sum identity
///   h_{i,i} = B_1(i) + B_2(i) - sum_{j != i} h_{i,j} + lift_left(i) + lift_right(i)
/// with every term in the operator's normalization.
std::vector<double> assemble_diagonal(const SchemeParams& params,
                                      const Grid& grid,
                                      std::span<const double> toeplitz_col,
                                      std::span<const double> tails_left,
                                      std::span<const double> tails_right);

/// Full assembly of H.
OperatorMatrix assemble_operator(const SchemeParams& params, const Grid& grid);

/// Raw exterior loads (d_1(i), d_2(i)) at node i, 1 <= i <= M.
std::pair<double, double> boundary_tail_load(std::size_t i,
                                             const BoundarySpec& boundary,
                                             const SchemeParams& params,
                                             const Grid& grid);

/// Right-hand side F.
struct LoadVector {
  std::vector<double> values;
};

/// F_i = f_i + scale (d_1(i) + d_2(i) + lift_left(i) u(a) + lift_right(i) u(b)).
/// `f_values` is the physical right-hand side at x_1..x_M and is not scaled.
/// Throws std::invalid_argument on length mismatch and std::runtime_error
/// if an entry comes out non-finite.
LoadVector assemble_rhs(std::span<const double> f_values,
                        const BoundarySpec& boundary,
                        const SchemeParams& params, const Grid& grid);

inline constexpr std::size_t kDenseCap = 4096;

/// Dense copy of H. Throws std::length_error above `cap`.
Eigen::MatrixXd materialize_dense(const OperatorMatrix& op,
                                  std::size_t cap = kDenseCap);

/// Binary dump for cross-implementation diffing: the 8-byte magic
/// "TFLAP001", M as a little-endian uint64, then diag, toeplitz_col and F as
/// little-endian IEEE-754 doubles (M values each).
struct OperatorDump {
  std::vector<double> diag;
  std::vector<double> toeplitz_col;
  std::vector<double> load;
};

void write_operator_dump(const std::filesystem::path& path,
                         const OperatorMatrix& op, const LoadVector& load);
OperatorDump read_operator_dump(const std::filesystem::path& path);

}  // namespace templap
