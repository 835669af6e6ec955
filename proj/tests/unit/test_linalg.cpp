#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "../support/test_util.hpp"
#include "templap/assembly.hpp"
#include "templap/dense.hpp"
#include "templap/fft.hpp"
#include "templap/preconditioners.hpp"
#include "templap/solvers.hpp"
#include "templap/study.hpp"
#include "templap/toeplitz.hpp"

using namespace templap;
using testutil::max_rel_diff;

namespace {

std::vector<double> random_vector(std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = testutil::uniform(-1.0, 1.0);
  return v;
}

Eigen::Map<const Eigen::VectorXd> as_eigen(const std::vector<double>& v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

LevelSystem example1_level(double beta, double lambda, int s, int s1, int level) {
  ExperimentConfig cfg;
  cfg.example = 1;
  cfg.params = SchemeParams(beta, lambda, s, s1);
  cfg.levels = {level};
  return assemble_level(cfg, level);
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("real DFT") {
  for (std::size_t n : {1u, 2u, 7u, 16u, 255u}) {
    RealDft dft(n);
    CHECK(dft.spectrum_size() == n / 2 + 1);
    const auto x = random_vector(n);
    std::vector<std::complex<double>> spec(dft.spectrum_size());
    dft.forward(x, spec);
    for (std::size_t k = 0; k < spec.size(); ++k) {
      std::complex<double> want = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        want += x[j] * std::polar(1.0, -2.0 * M_PI * static_cast<double>(j * k) / static_cast<double>(n));
      CHECK(std::abs(spec[k] - want) < 1e-12 * static_cast<double>(n));
    }
    std::vector<double> back(n);
    dft.inverse(spec, back);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(back[j] / static_cast<double>(n) - x[j]) < 1e-13);
  }
  CHECK_THROWS_AS(RealDft(0), std::invalid_argument);
}

TEST_CASE("Toeplitz matvec") {
  SUBCASE("identity column") {
    std::vector<double> col(9, 0.0);
    col[0] = 1.0;
    const SymToeplitz t(col);
    const auto v = random_vector(9);
    const auto y = toeplitz_matvec(t, v);
    for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(y[i] - v[i]) < 1e-15);
  }
  SUBCASE("all ones") {
    const SymToeplitz t(std::vector<double>(3, 1.0));
    const auto y = toeplitz_matvec(t, std::vector<double>(3, 1.0));
    for (double v : y) CHECK(std::abs(v - 3.0) < 1e-14);
  }
  SUBCASE("embedding size") {
    CHECK(SymToeplitz(std::vector<double>(256, 1.0)).embedding_size() == 512);
    CHECK(SymToeplitz(std::vector<double>(257, 1.0)).embedding_size() == 1024);
    CHECK(SymToeplitz(std::vector<double>(1, 1.0)).embedding_size() == 2);
  }
  SUBCASE("random against dense") {
    const auto col = random_vector(256);
    Eigen::MatrixXd dense(256, 256);
    for (Eigen::Index i = 0; i < 256; ++i)
      for (Eigen::Index j = 0; j < 256; ++j) dense(i, j) = col[static_cast<std::size_t>(std::abs(i - j))];
    const auto v = random_vector(256);
    const Eigen::VectorXd want = dense * as_eigen(v);
    const auto got = toeplitz_matvec(SymToeplitz(col), v);
    CHECK(max_rel_diff(got, std::span<const double>(want.data(), 256)) < 1e-12);
  }
  CHECK_THROWS_AS(toeplitz_matvec(SymToeplitz(std::vector<double>(4, 1.0)), std::vector<double>(3)),
                  std::invalid_argument);
}

TEST_CASE("operator matvec") {
  SUBCASE("FFT path equals dense for random vectors") {
    for (std::size_t m : {64u, 256u, 1024u}) {
      const auto op = assemble_operator(SchemeParams(1.5, 3.0, 1, 1), Grid(0.0, 1.0, m));
      const FastOperator fast(op);
      const auto dense = materialize_dense(op);
      for (int k = 0; k < 50; ++k) {
        const auto v = random_vector(m);
        const Eigen::VectorXd want = dense * as_eigen(v);
        CHECK(max_rel_diff(fast(v), std::span<const double>(want.data(), m)) < 1e-12);
      }
    }
  }
  const auto op = assemble_operator(SchemeParams(0.5, 0.5, 0, 0), Grid(0.0, 1.0, 127));
  const FastOperator fast(op);
  SUBCASE("unit vectors give columns") {
    const auto dense = materialize_dense(op);
    for (std::size_t i : {0u, 1u, 63u, 126u}) {
      std::vector<double> e(127, 0.0);
      e[i] = 1.0;
      const auto col = fast(e);
      for (std::size_t j = 0; j < 127; ++j)
        CHECK(std::abs(col[j] - dense(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))) <
              1e-12 * std::abs(dense(0, 0)));
    }
  }
  SUBCASE("linearity and symmetry") {
    const auto v = random_vector(127), w = random_vector(127);
    const double alpha = 2.75;
    std::vector<double> comb(127);
    for (std::size_t i = 0; i < 127; ++i) comb[i] = alpha * v[i] + w[i];
    const auto hv = fast(v), hw = fast(w), hc = fast(comb);
    std::vector<double> lin(127);
    for (std::size_t i = 0; i < 127; ++i) lin[i] = alpha * hv[i] + hw[i];
    CHECK(max_rel_diff(hc, lin) < 1e-13);
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < 127; ++i) {
      a += hv[i] * w[i];
      b += v[i] * hw[i];
    }
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
  }
}

TEST_CASE("conjugate gradients") {
  SUBCASE("identity converges in one step") {
    const DenseOperator id(Eigen::MatrixXd::Identity(20, 20));
    const auto r = cg_solve(id, random_vector(20));
    CHECK(r.report.converged);
    CHECK(r.report.iterations == 1);
  }
  SUBCASE("four distinct eigenvalues") {
    Eigen::VectorXd d(40);
    for (Eigen::Index i = 0; i < 40; ++i) d(i) = 1.0 + static_cast<double>(i % 4);
    const DenseOperator op(d.asDiagonal().toDenseMatrix());
    SolveOptions opts;
    opts.tol = 1e-12;
    const auto r = cg_solve(op, random_vector(40), opts);
    CHECK(r.report.converged);
    CHECK(r.report.iterations <= 4);
  }
  SUBCASE("zero right-hand side") {
    const DenseOperator id(Eigen::MatrixXd::Identity(5, 5));
    const auto r = cg_solve(id, std::vector<double>(5, 0.0));
    CHECK(r.report.converged);
    CHECK(r.report.iterations == 0);
    CHECK(std::all_of(r.solution.begin(), r.solution.end(), [](double x) { return x == 0.0; }));
  }
  SUBCASE("iteration cap is reported, not thrown") {
    const auto op = assemble_operator(SchemeParams(1.5, 0.0, 1, 1), Grid(0.0, 1.0, 511));
    SolveOptions opts;
    opts.max_iter = 5;
    const auto r = cg_solve(FastOperator(op), std::vector<double>(511, 1.0), opts);
    CHECK_FALSE(r.report.converged);
    CHECK(r.report.iterations == 5);
    CHECK(r.report.relative_residuals.size() == 6);
    CHECK(r.report.relative_residuals[0] == 1.0);
  }
  SUBCASE("true residual meets the tolerance") {
    const auto sys = example1_level(0.5, 0.5, 0, 0, 9);
    const FastOperator fast(sys.op);
    const auto r = cg_solve(fast, sys.load.values);
    REQUIRE(r.report.converged);
    const auto hu = fast(r.solution);
    std::vector<double> res(hu.size());
    for (std::size_t i = 0; i < res.size(); ++i) res[i] = sys.load.values[i] - hu[i];
    CHECK(norm(res) / norm(sys.load.values) <= 1e-9);
    CHECK(r.report.relative_residuals.back() <= 1e-9);
  }
  CHECK_THROWS_AS(cg_solve(DenseOperator(Eigen::MatrixXd::Identity(3, 3)), std::vector<double>(4)),
                  std::invalid_argument);
  CHECK_THROWS(cg_solve(DenseOperator(-Eigen::MatrixXd::Identity(3, 3)), std::vector<double>(3, 1.0)));
}

TEST_CASE("preconditioned CG") {
  const auto op = assemble_operator(SchemeParams(1.5, 3.0, 1, 1), Grid(0.0, 1.0, 63));
  const auto dense = materialize_dense(op);
  const auto rhs = random_vector(63);
  SUBCASE("exact inverse") {
    const auto r = pcg_solve(FastOperator(op), rhs, DenseCholPreconditioner(dense));
    CHECK(r.report.converged);
    CHECK(r.report.iterations <= 2);
  }
  SUBCASE("identity preconditioner reproduces CG") {
    const auto a = pcg_solve(FastOperator(op), rhs, IdentityPreconditioner(63));
    const auto b = cg_solve(FastOperator(op), rhs);
    CHECK(a.report.iterations == b.report.iterations);
    CHECK(max_rel_diff(a.solution, b.solution) < 1e-12);
  }
  CHECK_THROWS_AS(pcg_solve(FastOperator(op), rhs, IdentityPreconditioner(62)), std::invalid_argument);
}

TEST_CASE("T. Chan circulant") {
  const std::vector<double> t{2.0, 1.0, 0.5, 0.25};
  const auto c = tchan_first_column(t);
  const std::vector<double> want{2.0, 0.8125, 0.5, 0.8125};
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(c[k] - want[k]) < 1e-15);
  const auto ones = tchan_first_column(std::vector<double>(7, 1.0));
  for (double v : ones) CHECK(std::abs(v - 1.0) < 1e-15);

  SUBCASE("round trip") {
    for (std::size_t m : {4u, 63u, 97u, 256u}) {
      const auto op = assemble_operator(SchemeParams(0.5, 0.5, 0, 0), Grid(0.0, 1.0, m));
      const auto pc = build_tchan_precond(op);
      const auto v = random_vector(m);
      std::vector<double> cv(m), back(m);
      pc.multiply(v, cv);
      pc.solve(cv, back);
      CHECK(max_rel_diff(back, v) < 1e-12);
    }
  }
  SUBCASE("multiply agrees with the dense circulant") {
    const CirculantPrecond pc(c);
    const std::vector<double> v{1.0, -2.0, 0.5, 3.0};
    std::vector<double> y(4);
    pc.multiply(v, y);
    for (std::size_t i = 0; i < 4; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < 4; ++j) s += c[(i + 4 - j) % 4] * v[j];
      CHECK(std::abs(y[i] - s) < 1e-13);
    }
  }
  SUBCASE("indefinite circulant is rejected") {
    CHECK_THROWS_AS(CirculantPrecond({1.0, 2.0, 2.0}), std::runtime_error);
    CHECK_THROWS_AS(CirculantPrecond({1.0, 0.5, 0.0}), std::runtime_error);
  }
  SUBCASE("clustered spectrum at M = 255") {
    for (const auto& p : {SchemeParams(0.5, 0.5, 0, 0), SchemeParams(1.0, 3.0, 1, 1),
                          SchemeParams(1.5, 3.0, 1, 1)}) {
      const auto op = assemble_operator(p, Grid(0.0, 1.0, 255));
      const auto pc = build_tchan_precond(op);
      // C^{-1/2} H C^{-1/2} via the dense circulant
      Eigen::MatrixXd cmat(255, 255);
      for (Eigen::Index i = 0; i < 255; ++i)
        for (Eigen::Index j = 0; j < 255; ++j)
          cmat(i, j) = pc.first_col()[static_cast<std::size_t>((i - j + 255) % 255)];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ce(cmat);
      const Eigen::MatrixXd cinvsqrt = ce.operatorInverseSqrt();
      const Eigen::MatrixXd sim = cinvsqrt * materialize_dense(op) * cinvsqrt;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (sim + sim.transpose()), Eigen::EigenvaluesOnly);
      const auto ev = es.eigenvalues();
      const auto inside = (ev.array() >= 0.5 && ev.array() <= 1.5).count();
      CHECK(static_cast<double>(inside) >= 0.9 * 255);
    }
  }
}

TEST_CASE("band-compensated incomplete Cholesky") {
  const auto op = assemble_operator(SchemeParams(0.5, 0.5, 0, 0), Grid(0.0, 1.0, 255));
  SUBCASE("row sums are preserved") {
    const auto g = compensated_band_diagonal(op, 10);
    const auto h1 = operator_matvec(op, std::vector<double>(255, 1.0));
    for (std::size_t i = 0; i < 255; ++i) {
      double row = g[i];
      for (std::size_t d = 1; d <= 10; ++d) {
        if (i >= d) row += op.toeplitz_col()[d];
        if (i + d < 255) row += op.toeplitz_col()[d];
      }
      CHECK(std::abs(row - h1[i]) <= 1e-12 * std::abs(h1[i]) + 1e-12 * op.diag()[i]);
    }
  }
  SUBCASE("factor reproduces the band") {
    const auto pc = build_band_compensated_ichol(op, 10);
    const auto l = pc.dense_factor();
    const Eigen::MatrixXd g = l * l.transpose();
    const auto gd = compensated_band_diagonal(op, 10);
    for (Eigen::Index i = 0; i < 255; ++i)
      for (Eigen::Index j = std::max<Eigen::Index>(0, i - 10); j <= i; ++j) {
        const double want = i == j ? gd[static_cast<std::size_t>(i)] : op.toeplitz_col()[static_cast<std::size_t>(i - j)];
        CHECK(std::abs(g(i, j) - want) < 1e-12 * gd[0]);
      }
  }
  SUBCASE("full band is exact") {
    const auto small = assemble_operator(SchemeParams(1.5, 3.0, 1, 1), Grid(0.0, 1.0, 40));
    const auto pc = build_band_compensated_ichol(small, 100);
    CHECK(pc.bandwidth() == 39);
    const auto r = pcg_solve(FastOperator(small), random_vector(40), pc);
    CHECK(r.report.converged);
    CHECK(r.report.iterations <= 2);
  }
  SUBCASE("condition number drops tenfold") {
    const auto pc = build_band_compensated_ichol(op, 10);
    const Eigen::MatrixXd l = pc.dense_factor();
    const Eigen::MatrixXd linv = l.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(255, 255));
    const Eigen::MatrixXd sim = linv * materialize_dense(op) * linv.transpose();
    const auto [pmin, pmax] = extreme_eigs(0.5 * (sim + sim.transpose()));
    const auto [hmin, hmax] = extreme_eigs(materialize_dense(op));
    CHECK(hmax / hmin >= 10.0 * (pmax / pmin));
  }
  CHECK_THROWS_AS(build_band_compensated_ichol(op, 0), std::invalid_argument);
  CHECK_THROWS_AS(BandedCholPrecond(std::vector<double>{1.0, -1.0}, std::vector<double>{0.0, 0.0}, 1),
                  std::runtime_error);
}

TEST_CASE("dense baseline") {
  Eigen::MatrixXd one(1, 1);
  one(0, 0) = 2.0;
  CHECK(dense_gauss_solve(one, std::vector<double>{4.0})[0] == doctest::Approx(2.0));
  CHECK_THROWS_AS(dense_gauss_solve(Eigen::MatrixXd::Zero(3, 3), std::vector<double>(3, 1.0)),
                  std::runtime_error);
  Eigen::MatrixXd d = Eigen::Vector3d(1.0, 2.0, 3.0).asDiagonal();
  const auto [lo, hi] = extreme_eigs(d);
  CHECK(lo == doctest::Approx(1.0));
  CHECK(hi == doctest::Approx(3.0));

  const auto sys = example1_level(0.5, 0.0, 0, 0, 8);
  const auto dense = materialize_dense(sys.op);
  const auto u = dense_gauss_solve(dense, sys.load.values);
  const Eigen::VectorXd res = dense * as_eigen(u) - as_eigen(sys.load.values);
  CHECK(res.norm() / as_eigen(sys.load.values).norm() <= 1e-12);

  const auto [hmin, hmax] = extreme_eigs(dense);
  double floor = INFINITY;
  for (std::size_t i = 0; i < sys.op.size(); ++i)
    floor = std::min(floor, sys.op.tails_left()[i] + sys.op.tails_right()[i]);
  CHECK(hmin > floor);

  SUBCASE("all solvers agree") {
    const double cond = hmax / hmin;
    for (auto kind : {SolverKind::Cg, SolverKind::PcgIchol, SolverKind::PcgTchan}) {
      const auto r = solve_system(sys.op, sys.load.values, kind);
      REQUIRE(r.report.converged);
      CHECK(max_rel_diff(r.solution, u) <= 1e-9 * cond);
    }
  }
}

TEST_CASE("T. Chan iteration counts are stable under refinement") {
  for (double beta : {0.5, 1.0}) {
    std::vector<std::size_t> its;
    for (int level = 9; level <= 12; ++level) {
      const auto sys = example1_level(beta, 0.5, beta < 1.0 ? 0 : 1, beta < 1.0 ? 0 : 1, level);
      its.push_back(solve_system(sys.op, sys.load.values, SolverKind::PcgTchan).report.iterations);
    }
    for (std::size_t k = 1; k < its.size(); ++k)
      CHECK(std::max(its[k], its[k - 1]) - std::min(its[k], its[k - 1]) <= 2);
  }
}
