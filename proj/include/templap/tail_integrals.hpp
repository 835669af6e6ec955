#pragma once

#include <cstddef>

#include "templap/params.hpp"

namespace templap {

/// int_d^inf e^{-lambda t} t^{-1-beta} dt for d > 0 (unnormalized kernel).
///
/// lambda = 0: d^{-beta}/beta. lambda > 0, beta != 1: incomplete-gamma style
/// identity whose finite part int_0^d e^{-lambda t} t^{1-beta} dt is done by
/// Jacobi-Gauss with weight (1+xi)^{1-beta}. beta = 1, lambda > 0: the 1/t
/// substitution with cutoff lambda/K when d >= 1/(2 lambda), otherwise
/// e^{-lambda d}/d - lambda E_1(lambda d) through the power series.
double kernel_tail(double distance, const SchemeParams& params,
                   int points = 64);

/// B_1(i): kernel mass of (-inf, a] seen from x_i, 1 <= i <= M.
double tail_integral_left(std::size_t i, const SchemeParams& params,
                          const Grid& grid);

/// B_2(i): kernel mass of [b, inf) seen from x_i, 1 <= i <= M.
double tail_integral_right(std::size_t i, const SchemeParams& params,
                           const Grid& grid);

}  // namespace templap
