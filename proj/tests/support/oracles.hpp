#pragma once

// Brute-force references built only from Boost.Math quadrature and the
// defining integrals. Nothing here calls the closed forms under test.

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <vector>

#include "templap/boundary.hpp"
#include "templap/params.hpp"

namespace oracle {

/// c_beta straight from std::tgamma.
double c_beta(double beta, double lambda);

/// int_d^inf e^{-lambda t} t^{-1-beta} dt by exp-sinh quadrature.
double kernel_tail(double d, double beta, double lambda);

/// int_z^inf e^{-t}/t dt.
double e1(double z);

/// h^{-s1} int_0^h (y/h) y^{s1-1-beta} dy by tanh-sinh.
double singular_cell(double beta, int s1, double h);

/// Exterior load int_lo^hi g(y) e^{-lambda|x-y|}|x-y|^{-1-beta} dy, adaptive.
double exterior_load(const std::function<double(double)>& g, double lo, double hi,
                     double x, double beta, double lambda);

struct System {
  Eigen::MatrixXd h;
  Eigen::VectorXd f;
};

/// Assemble H and F node by node: every interpolation node contributes its
/// cell weights (computed by adaptive quadrature) to the diagonal, the
/// off-diagonal or the load, and the tails come from kernel_tail.
System brute_system(const templap::SchemeParams& params, const templap::Grid& grid,
                    const std::vector<double>& f_values,
                    const std::function<double(double)>& g,
                    const std::vector<templap::Interval>& supports, double u_a,
                    double u_b);

}  // namespace oracle
