#pragma once

#include <cstddef>

#include "templap/params.hpp"

namespace templap {

// Closed-form interpolation weights of the scheme, for the unnormalized
// kernel (no c_beta). With p = 1 - beta + s and
// C = h^{-beta} / ((beta - s)(1 - beta + s)), the power-law forms are
//   pair(m)      = C (2 m^p - (m-1)^p - (m+1)^p)
//   adjacent     = C (1 + p - 2^p)
//   boundary(n)  = C (n^p - (n-1)^p - p n^{p-1})
// and beta == 1 switches to the logarithmic limits. Differences of nearly
// equal powers are summed as binomial series for large lags so that the
// weights keep full relative accuracy at any M.

/// A_1(i,s,j+1) + A_2(i,s,j) for lag m = |i-j| >= 2. Throws
/// std::invalid_argument for m < 2.
double coeff_pair_sum(std::size_t m, const SchemeParams& params, double h);

/// A_2(i,s,i-1): weight of the cell adjacent to the singular one.
double coeff_adjacent_cell(const SchemeParams& params, double h);

/// h^{-beta} / (s1 + 1 - beta): the singular-cell weight.
double coeff_singular_cell(const SchemeParams& params, double h);

/// |h_{i,i+-1}| = e^{-lambda h} (singular-cell weight + adjacent weight).
double coeff_near_diag(const SchemeParams& params, double h);

/// Interpolation weight A_1(n,s,1) of the far endpoint of the first cell, as
/// seen from a node n cells away. Requires n >= 2.
double coeff_boundary_weight(std::size_t n, const SchemeParams& params,
                             double h);

/// A_1(i,s,1): weight multiplying u(a) in row i, 2 <= i <= M.
double coeff_boundary_left(std::size_t i, const SchemeParams& params,
                           const Grid& grid);

/// A_4(i,s,M+1): weight multiplying u(b) in row i, 1 <= i <= M-1.
double coeff_boundary_right(std::size_t i, const SchemeParams& params,
                            const Grid& grid);

}  // namespace templap

namespace templap {

/// The four interpolation weights of a regular cell [x_{k-1}, x_k]:
/// A1, A2 for cells left of x_i, A3, A4 for cells right of it.
enum class CellWeight { A1, A2, A3, A4 };

/// Direct adaptive quadrature of the defining cell integral, e.g.
///   A1(i,s,k) = h^{-s-1} int_{x_{k-1}}^{x_k} (x_k - y)(x_i - y)^{s-1-beta} dy.
/// Independent of the closed forms; meant as a test oracle. Throws
/// std::invalid_argument if the cell touches x_i (k >= i for A1/A2,
/// k <= i+1 for A3/A4) or lies outside the grid.
double coeff_quadrature_oracle(CellWeight weight, std::size_t i, int s,
                               std::size_t k, const SchemeParams& params,
                               const Grid& grid);

}  // namespace templap
