#include "templap/solvers.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace templap {

namespace {

double dot(std::span<const double> x, std::span<const double> y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

SolveResult krylov(const LinearOperator& op, std::span<const double> rhs,
                   const Preconditioner* precond, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = op.size();
  if (rhs.size() != n) throw std::invalid_argument("solve: rhs length mismatch");
  if (precond && precond->size() != n)
    throw std::invalid_argument("solve: preconditioner size mismatch");
  if (!(options.tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");
  const std::size_t max_iter = options.max_iter ? options.max_iter : 10 * n + 100;

  SolveResult out;
  out.solution.assign(n, 0.0);
  auto& rep = out.report;
  std::vector<double> r(rhs.begin(), rhs.end());
  const double norm_f = std::sqrt(dot(r, r));
  rep.relative_residuals.push_back(1.0);
  if (norm_f == 0.0) {
    rep.relative_residuals.back() = 0.0;
    rep.converged = true;
    return out;
  }

  std::vector<double> z(n), p(n), q(n);
  auto precondition = [&] {
    if (precond)
      precond->solve(r, z);
    else
      z = r;
  };
  precondition();
  p = z;
  double rz = dot(r, z);
  auto& u = out.solution;
  while (rep.iterations < max_iter) {
    op.apply(p, q);
    const double pq = dot(p, q);
    if (!(pq > 0.0)) throw std::runtime_error("solve: operator is not positive definite");
    const double alpha = rz / pq;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] += alpha * p[i];
      r[i] -= alpha * q[i];
    }
    ++rep.iterations;
    const double rel = std::sqrt(dot(r, r)) / norm_f;
    rep.relative_residuals.push_back(rel);
    if (rel <= options.tol) {
      rep.converged = true;
      break;
    }
    precondition();
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  rep.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

SolveResult cg_solve(const LinearOperator& op, std::span<const double> rhs,
                     const SolveOptions& options) {
  return krylov(op, rhs, nullptr, options);
}

SolveResult pcg_solve(const LinearOperator& op, std::span<const double> rhs,
                      const Preconditioner& precond, const SolveOptions& options) {
  return krylov(op, rhs, &precond, options);
}

}  // namespace templap
