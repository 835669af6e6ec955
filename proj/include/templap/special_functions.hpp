#pragma once

#include "templap/params.hpp"

namespace templap {

inline constexpr double kEulerGamma = 0.5772156649015329;

/// Number of terms kept in the small-argument exponential-integral series.
inline constexpr int kExpIntegralSeriesTerms = 26;

/// Lower cutoff divisor K in the 1/t substitution for the beta = 1 tails:
/// the integral over (0, lambda/K) is dropped (it is below e^{-K}).
inline constexpr double kTailSubstitutionK = 80.0;

/// Gamma function. Throws std::domain_error at poles (0, -1, -2, ...) and for
/// non-finite input.
double gamma_fn(double x);

/// Normalization constant c_beta of the tempered fractional Laplacian:
/// the untempered constant for lambda = 0 or beta = 1, and
/// Gamma(1/2) / (2 sqrt(pi) |Gamma(-beta)|) otherwise.
double c_beta_const(const SchemeParams& params);

/// E_1(z) = int_z^inf e^{-t}/t dt by the truncated power series
/// -gamma - ln z - sum_{n=1}^{terms} (-1)^n z^n / (n n!).
/// Meant for z < 1/2. Throws std::domain_error for z <= 0.
double exp_integral_tail_series(double z, int terms = kExpIntegralSeriesTerms);

/// E_1(z) for any z > 0: series below 1/2, otherwise the 1/t substitution
/// int_{z/K}^{1} e^{-z/tau} / tau dtau evaluated by Gauss-Legendre.
double exp_integral_e1(double z);

}  // namespace templap
