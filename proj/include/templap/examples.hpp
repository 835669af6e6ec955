#pragma once

#include <vector>

#include "templap/boundary.hpp"
#include "templap/params.hpp"

namespace templap {

/// u(x) = x^2 (1 - x).
double example1_exact(double x);

/// Right-hand side for u = x^2(1-x) on (0,1) with zero exterior data, at the
/// interior nodes. The tail and near-field integrals are evaluated with the
/// same spectral rules as the operator itself; c_beta is applied iff the
/// parameters apply it. Throws std::invalid_argument unless the grid spans
/// (0,1).
std::vector<double> example1_f(const SchemeParams& params, const Grid& grid);

/// Nonzero exterior data: g = -2x on [-1/2,0], 2x-2 on [1,3/2], and interior
/// solution (x - x^2)^2 on (0,1).
struct Example2Setup {
  std::vector<double> f;
  BoundarySpec boundary;
  std::vector<double> exact;
};

BoundarySpec example2_boundary();
double example2_exact(double x);

/// f comes from reference_apply_operator. Requires a grid on (0,1).
Example2Setup example2_setup(const SchemeParams& params, const Grid& grid);

/// Mean exit time from (-r,r) for the untempered operator (f = 1):
/// sqrt(pi) (r^2 - x^2)^{beta/2} / (2^beta Gamma(1+beta/2) Gamma(1/2+beta/2)).
/// Throws std::domain_error for |x| > r.
double example3_exact(double beta, double r, double x);

/// Same, refusing tempered parameters (no closed form): throws
/// std::invalid_argument when lambda > 0.
double example3_exact(const SchemeParams& params, double r, double x);

}  // namespace templap
