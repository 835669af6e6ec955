#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "templap/assembly.hpp"
#include "templap/params.hpp"
#include "templap/solvers.hpp"

namespace templap {

enum class SolverKind { Cg, PcgIchol, PcgTchan, Dense };

/// "cg", "pcg-ichol", "pcg-tchan", "dense". Throws std::invalid_argument.
SolverKind parse_solver(std::string_view name);
std::string_view solver_name(SolverKind kind);

/// Solve H U = F with the chosen method. `band` is the ichol bandwidth.
/// The dense path reports zero iterations.
SolveResult solve_system(const OperatorMatrix& op, std::span<const double> rhs,
                         SolverKind kind, const SolveOptions& options = {},
                         std::size_t band = 10);

/// Discrete L2 = sqrt(h sum d_i^2) and max norm of d = a - b.
/// Throws std::invalid_argument on length mismatch.
std::pair<double, double> error_norms(std::span<const double> a,
                                      std::span<const double> b, double h);

/// Fine values at the coarse nodes: coarse node i (1-based) is fine node 2i.
/// Requires fine.size() == 2 coarse_size + 1.
std::vector<double> restrict_to_coarse(std::span<const double> fine,
                                       std::size_t coarse_size);

/// Rate between consecutive levels, stored on the finer one (entry 0 is
/// empty). Plain: ln(e1/e2)/ln(h1/h2). Log-corrected:
/// ln[(ln h2 e1)/(ln h1 e2)]/ln(h1/h2). Empty when either error is zero.
std::vector<std::optional<double>> compute_rates(std::span<const double> errors,
                                                 std::span<const double> hs,
                                                 bool log_corrected);

/// True for the (beta, s, s1) = (1, 1, 1) scheme, whose error carries a
/// |ln h| factor.
bool uses_log_corrected_rates(const SchemeParams& params);

struct ExperimentConfig {
  /// 1, 2, 3, or 0 for a custom problem.
  int example = 1;
  SchemeParams params{0.5, 0.0, 0, 0};
  /// Example 3 domain is (-radius, radius).
  double radius = 1.0;
  /// Custom problems only.
  Interval domain{0.0, 1.0};
  std::function<double(double)> custom_f;
  /// Custom exact solution; successive refinement when empty.
  std::function<double(double)> custom_exact;
  /// Ascending J values.
  std::vector<int> levels;
  SolverKind solver = SolverKind::PcgTchan;
  double tol = 1e-9;
  std::size_t band = 10;
  std::size_t max_iter = 0;
};

/// M for level J: 2^J for Example 2, 2^J - 1 otherwise.
std::size_t interior_count(const ExperimentConfig& config, int level);

struct LevelResult {
  int level = 0;
  std::size_t m = 0;
  double h = 0.0;
  double l2_error = 0.0;
  double linf_error = 0.0;
  std::optional<double> l2_rate;
  std::optional<double> linf_rate;
  std::size_t iterations = 0;
  double seconds = 0.0;
  bool converged = true;
};

struct ConvergenceReport {
  std::vector<LevelResult> levels;
  bool log_corrected = false;
  /// Errors are ||U_{h/2} - U_h|| (no exact solution available).
  bool successive_refinement = false;

  bool all_converged() const;
};

/// Discrete system of one level. `exact` is empty when the problem has no
/// closed-form reference.
struct LevelSystem {
  Grid grid;
  OperatorMatrix op;
  LoadVector load;
  std::vector<double> exact;
};

LevelSystem assemble_level(const ExperimentConfig& config, int level);

/// Assemble, solve and measure every level. A solve that misses the
/// tolerance marks its level instead of aborting. Throws
/// std::invalid_argument for an invalid configuration.
ConvergenceReport run_convergence_study(const ExperimentConfig& config);

}  // namespace templap
