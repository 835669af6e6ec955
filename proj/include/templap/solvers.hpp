#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "templap/preconditioners.hpp"
#include "templap/toeplitz.hpp"

namespace templap {

struct SolveOptions {
  double tol = 1e-9;          ///< on ||F - H U_k|| / ||F||
  std::size_t max_iter = 0;   ///< 0: 10 M + 100
};

struct SolveReport {
  std::size_t iterations = 0;
  std::vector<double> relative_residuals;  ///< entry k after iteration k; [0] = 1
  double wall_time = 0.0;                  ///< seconds
  bool converged = false;
};

struct SolveResult {
  std::vector<double> solution;
  SolveReport report;
};

/// Conjugate gradients from U_0 = 0. Hitting max_iter is reported through
/// report.converged, not thrown.
SolveResult cg_solve(const LinearOperator& op, std::span<const double> rhs,
                     const SolveOptions& options = {});

/// Preconditioned CG from U_0 = 0. The stopping test uses the true
/// (unpreconditioned) residual.
SolveResult pcg_solve(const LinearOperator& op, std::span<const double> rhs,
                      const Preconditioner& precond,
                      const SolveOptions& options = {});

}  // namespace templap
