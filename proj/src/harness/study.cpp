#include "templap/study.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "templap/dense.hpp"
#include "templap/examples.hpp"
#include "templap/preconditioners.hpp"
#include "templap/toeplitz.hpp"

namespace templap {

SolverKind parse_solver(std::string_view name) {
  if (name == "cg") return SolverKind::Cg;
  if (name == "pcg-ichol") return SolverKind::PcgIchol;
  if (name == "pcg-tchan") return SolverKind::PcgTchan;
  if (name == "dense") return SolverKind::Dense;
  throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::Cg: return "cg";
    case SolverKind::PcgIchol: return "pcg-ichol";
    case SolverKind::PcgTchan: return "pcg-tchan";
    case SolverKind::Dense: return "dense";
  }
  return "?";
}

SolveResult solve_system(const OperatorMatrix& op, std::span<const double> rhs,
                         SolverKind kind, const SolveOptions& options, std::size_t band) {
  switch (kind) {
    case SolverKind::Cg:
      return cg_solve(FastOperator(op), rhs, options);
    case SolverKind::PcgIchol:
      return pcg_solve(FastOperator(op), rhs, build_band_compensated_ichol(op, band),
                       options);
    case SolverKind::PcgTchan:
      return pcg_solve(FastOperator(op), rhs, build_tchan_precond(op), options);
    case SolverKind::Dense: {
      const auto start = std::chrono::steady_clock::now();
      SolveResult out;
      const auto a = materialize_dense(op);
      out.solution = dense_gauss_solve(a, rhs);
      Eigen::Map<const Eigen::VectorXd> u(out.solution.data(), a.rows());
      Eigen::Map<const Eigen::VectorXd> f(rhs.data(), a.rows());
      const double fn = f.norm();
      out.report.relative_residuals = {1.0, fn > 0.0 ? (a * u - f).norm() / fn : 0.0};
      out.report.converged = true;
      out.report.wall_time =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return out;
    }
  }
  throw std::invalid_argument("solve_system: bad solver kind");
}

std::pair<double, double> error_norms(std::span<const double> a, std::span<const double> b,
                                      double h) {
  if (a.size() != b.size()) throw std::invalid_argument("error_norms: length mismatch");
  double sum = 0.0, mx = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
    mx = std::max(mx, std::abs(d));
  }
  return {std::sqrt(h * sum), mx};
}

std::vector<double> restrict_to_coarse(std::span<const double> fine, std::size_t coarse_size) {
  if (fine.size() != 2 * coarse_size + 1)
    throw std::invalid_argument("restrict_to_coarse: grids are not nested");
  std::vector<double> out(coarse_size);
  for (std::size_t i = 1; i <= coarse_size; ++i) out[i - 1] = fine[2 * i - 1];
  return out;
}

std::vector<std::optional<double>> compute_rates(std::span<const double> errors,
                                                 std::span<const double> hs,
                                                 bool log_corrected) {
  if (errors.size() != hs.size()) throw std::invalid_argument("compute_rates: length mismatch");
  std::vector<std::optional<double>> rates(errors.size());
  for (std::size_t k = 1; k < errors.size(); ++k) {
    const double e1 = errors[k - 1], e2 = errors[k];
    const double h1 = hs[k - 1], h2 = hs[k];
    if (!(e1 > 0.0) || !(e2 > 0.0)) continue;
    const double ratio = log_corrected ? (std::log(h2) * e1) / (std::log(h1) * e2) : e1 / e2;
    rates[k] = std::log(ratio) / std::log(h1 / h2);
  }
  return rates;
}

bool uses_log_corrected_rates(const SchemeParams& params) {
  return params.beta_is_one() && params.s() == 1 && params.s1() == 1;
}

bool ConvergenceReport::all_converged() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const LevelResult& l) { return l.converged; });
}

std::size_t interior_count(const ExperimentConfig& config, int level) {
  if (level < 2 || level > 30) throw std::invalid_argument("level J must lie in [2, 30]");
  const std::size_t p = std::size_t{1} << level;
  return config.example == 2 ? p : p - 1;
}

namespace {

struct Problem {
  Grid grid;
  std::vector<double> f;
  BoundarySpec boundary;
  std::vector<double> exact;  // empty: none
};

Grid grid_for(const ExperimentConfig& c, std::size_t m) {
  switch (c.example) {
    case 1:
    case 2: return Grid(0.0, 1.0, m);
    case 3: return Grid(-c.radius, c.radius, m);
    default: return Grid(c.domain.lo, c.domain.hi, m);
  }
}

bool has_exact(const ExperimentConfig& c) {
  switch (c.example) {
    case 1:
    case 2: return true;
    case 3: return !c.params.tempered() && c.params.apply_cbeta();
    default: return static_cast<bool>(c.custom_exact);
  }
}

Problem build_problem(const ExperimentConfig& c, std::size_t m, bool want_exact) {
  Problem p{grid_for(c, m), {}, BoundarySpec::homogeneous(), {}};
  const auto xs = p.grid.interior_nodes();
  switch (c.example) {
    case 1:
      p.f = example1_f(c.params, p.grid);
      if (want_exact)
        for (double x : xs) p.exact.push_back(example1_exact(x));
      break;
    case 2: {
      auto setup = example2_setup(c.params, p.grid);
      p.f = std::move(setup.f);
      p.boundary = std::move(setup.boundary);
      p.exact = std::move(setup.exact);
      break;
    }
    case 3:
      p.f.assign(m, 1.0);
      if (want_exact)
        for (double x : xs) p.exact.push_back(example3_exact(c.params, c.radius, x));
      break;
    default:
      for (double x : xs) p.f.push_back(c.custom_f(x));
      if (want_exact)
        for (double x : xs) p.exact.push_back(c.custom_exact(x));
  }
  return p;
}

void validate(const ExperimentConfig& c) {
  if (c.example < 0 || c.example > 3) throw std::invalid_argument("example must be 1, 2 or 3");
  if (c.levels.empty()) throw std::invalid_argument("no refinement levels given");
  if (!std::is_sorted(c.levels.begin(), c.levels.end()) ||
      std::adjacent_find(c.levels.begin(), c.levels.end()) != c.levels.end())
    throw std::invalid_argument("levels must be strictly ascending");
  if (c.example == 3 && !(c.radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (c.example == 0 && !c.custom_f) throw std::invalid_argument("custom problem needs f");
  if (!(c.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (c.band == 0) throw std::invalid_argument("band must be >= 1");
  if (!has_exact(c)) {
    for (std::size_t k = 1; k < c.levels.size(); ++k)
      if (c.levels[k] != c.levels[k - 1] + 1)
        throw std::invalid_argument("successive refinement needs consecutive levels");
  }
}

}  // namespace

LevelSystem assemble_level(const ExperimentConfig& config, int level) {
  validate(config);
  Problem prob = build_problem(config, interior_count(config, level), has_exact(config));
  auto op = assemble_operator(config.params, prob.grid);
  auto load = assemble_rhs(prob.f, prob.boundary, config.params, prob.grid);
  return {prob.grid, std::move(op), std::move(load), std::move(prob.exact)};
}

ConvergenceReport run_convergence_study(const ExperimentConfig& config) {
  validate(config);
  ConvergenceReport report;
  report.log_corrected = uses_log_corrected_rates(config.params);
  const bool exact = has_exact(config);
  report.successive_refinement = !exact;

  const SolveOptions options{config.tol, config.max_iter};
  std::vector<int> solve_levels = config.levels;
  if (!exact) solve_levels.push_back(config.levels.back() + 1);

  std::vector<std::vector<double>> solutions;
  for (std::size_t k = 0; k < solve_levels.size(); ++k) {
    const int level = solve_levels[k];
    const bool measured = k < config.levels.size();
    const LevelSystem sys = assemble_level(config, level);
    SolveResult res = solve_system(sys.op, sys.load.values, config.solver, options, config.band);
    if (measured) {
      LevelResult lr;
      lr.level = level;
      lr.m = sys.grid.size();
      lr.h = sys.grid.h();
      lr.iterations = res.report.iterations;
      lr.seconds = res.report.wall_time;
      lr.converged = res.report.converged;
      if (exact) std::tie(lr.l2_error, lr.linf_error) = error_norms(sys.exact, res.solution, lr.h);
      report.levels.push_back(lr);
    } else {
      report.levels.back().converged = report.levels.back().converged && res.report.converged;
    }
    solutions.push_back(std::move(res.solution));
  }
  if (!exact) {
    for (std::size_t k = 0; k < report.levels.size(); ++k) {
      auto& lr = report.levels[k];
      const auto fine = restrict_to_coarse(solutions[k + 1], lr.m);
      std::tie(lr.l2_error, lr.linf_error) = error_norms(fine, solutions[k], lr.h);
    }
  }

  std::vector<double> hs, l2, linf;
  for (const auto& lr : report.levels) {
    hs.push_back(lr.h);
    l2.push_back(lr.l2_error);
    linf.push_back(lr.linf_error);
  }
  const auto r2 = compute_rates(l2, hs, report.log_corrected);
  const auto ri = compute_rates(linf, hs, report.log_corrected);
  for (std::size_t k = 0; k < report.levels.size(); ++k) {
    report.levels[k].l2_rate = r2[k];
    report.levels[k].linf_rate = ri[k];
  }
  return report;
}

}  // namespace templap
