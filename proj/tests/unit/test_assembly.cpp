#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "../support/oracles.hpp"
#include "../support/test_util.hpp"
#include "templap/assembly.hpp"
#include "templap/coefficients.hpp"
#include "templap/dense.hpp"
#include "templap/examples.hpp"
#include "templap/toeplitz.hpp"

using namespace templap;
using testutil::rel_err;

namespace {

SchemeParams random_params() {
  const double beta = testutil::uniform(0.05, 1.95);
  const int s = testutil::uniform(0.0, 1.0) < 0.5 ? 0 : 1;
  const int s1 = beta < 1.0 ? s : 1;
  return SchemeParams(beta, testutil::uniform(0.0, 5.0), s, s1);
}

const SchemeParams kSchemes[] = {
    SchemeParams(0.5, 0.0, 0, 0), SchemeParams(0.5, 3.0, 1, 1), SchemeParams(1.0, 0.5, 0, 1),
    SchemeParams(1.0, 3.0, 1, 1), SchemeParams(1.5, 0.0, 1, 1), SchemeParams(1.5, 3.0, 0, 1),
};

}  // namespace

TEST_CASE("off-diagonal column") {
  Grid g(0.0, 10.0, 9);  // h = 1
  const auto col = assemble_offdiagonal(SchemeParams(0.5, 0.0, 0, 0, false), g);
  CHECK(col[0] == 0.0);
  CHECK(rel_err(col[1], -2.3431457505076198) < 1e-12);
  CHECK(rel_err(col[2], -0.38550526870925122) < 1e-12);

  SUBCASE("decay bound") {
    for (const auto& p : kSchemes) {
      Grid grid(0.0, 1.0, 1023);
      const auto c = assemble_offdiagonal(p, grid);
      const double h = grid.h();
      double lo = INFINITY, hi = 0.0;
      for (std::size_t m = 2; m < c.size(); ++m) {
        const double ratio = -c[m] / (std::pow(static_cast<double>(m), -1.0 - p.beta()) *
                                      std::pow(h, -p.beta()) * std::exp(-p.lambda() * m * h));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      CHECK(lo > 0.0);
      CHECK(hi / lo < 4.0);
    }
  }
}

TEST_CASE("M-matrix certificate") {
  for (int draw = 0; draw < 20; ++draw) {
    const SchemeParams p = random_params();
    for (std::size_t m : {15u, 63u, 255u}) {
      Grid g(testutil::uniform(-1.0, 0.0), testutil::uniform(0.5, 2.0), m);
      const auto op = assemble_operator(p, g);
      for (std::size_t k = 1; k < m; ++k) CHECK(op.toeplitz_col()[k] < 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        CHECK(op.diag()[i] > 0.0);
        double row = op.diag()[i];
        for (std::size_t j = 0; j < m; ++j)
          if (j != i) row += op.entry(i, j);
        const double tails = op.tails_left()[i] + op.tails_right()[i];
        CHECK(row > tails);
        CHECK(tails > 0.0);
      }
    }
  }
}

TEST_CASE("diagonal is palindromic") {
  for (const auto& p : kSchemes) {
    Grid g(0.0, 1.0, 101);
    const auto op = assemble_operator(p, g);
    for (std::size_t i = 0; i < 101; ++i)
      CHECK(rel_err(op.diag()[i], op.diag()[100 - i]) < 1e-13);
  }
}

TEST_CASE("brute-force assembly at M = 7") {
  auto gfun = [](double y) {
    if (y >= -0.5 && y <= 0.0) return 1.0 - 2.0 * y;
    if (y >= 1.0 && y <= 1.5) return 0.5 + y * y;
    return 0.0;
  };
  const std::vector<Interval> supports{{-0.5, 0.0}, {1.0, 1.5}};
  const BoundarySpec bs(gfun, 1.0, 1.5, Interval{-0.5, 0.0}, Interval{1.0, 1.5});
  const std::vector<double> f{0.3, -1.0, 2.0, 0.5, 0.0, 1.25, -0.75};
  Grid g(0.0, 1.0, 7);

  SUBCASE("diagonal, beta = 0.5, lambda = 0, (0,0)") {
    const SchemeParams p(0.5, 0.0, 0, 0);
    const auto op = assemble_operator(p, g);
    const auto sys = oracle::brute_system(p, g, f, gfun, supports, 1.0, 1.5);
    for (std::size_t i = 0; i < 7; ++i)
      CHECK(rel_err(op.diag()[i], sys.h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i))) < 1e-9);
  }
  SUBCASE("every entry, admissible schemes") {
    for (const auto& p : kSchemes) {
      CAPTURE(p.beta());
      CAPTURE(p.lambda());
      CAPTURE(p.s());
      const auto op = assemble_operator(p, g);
      const auto load = assemble_rhs(f, bs, p, g);
      const auto sys = oracle::brute_system(p, g, f, gfun, supports, 1.0, 1.5);
      for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j)
          CHECK(rel_err(op.entry(i, j), sys.h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) < 1e-8);
        CHECK(rel_err(load.values[i], sys.f(static_cast<Eigen::Index>(i))) < 1e-8);
      }
    }
  }
}

TEST_CASE("load vector") {
  Grid g(0.0, 1.0, 31);
  std::vector<double> f(31);
  for (std::size_t i = 0; i < 31; ++i) f[i] = std::sin(3.0 * g.node(i + 1));

  SUBCASE("zero exterior data leaves f untouched") {
    for (const auto& p : kSchemes) {
      const auto load = assemble_rhs(f, BoundarySpec::homogeneous(), p, g);
      for (std::size_t i = 0; i < 31; ++i) CHECK(load.values[i] == f[i]);
    }
  }
  SUBCASE("example 2 exterior data enters through the d-loads only") {
    const SchemeParams p(0.5, 0.0, 0, 0);
    const auto bs = example2_boundary();
    const auto load = assemble_rhs(f, bs, p, g);
    const double scale = operator_scale(p);
    for (std::size_t i = 1; i <= 31; ++i) {
      const auto [d1, d2] = boundary_tail_load(i, bs, p, g);
      CHECK(d1 > 0.0);
      CHECK(d2 > 0.0);
      CHECK(rel_err(load.values[i - 1] - f[i - 1], scale * (d1 + d2)) < 1e-12);
    }
    // g = -2y on the left is the reflection of 2y - 2 on the right
    const auto [l, r] = boundary_tail_load(8, bs, p, g);
    const auto [l2, r2] = boundary_tail_load(24, bs, p, g);
    CHECK(rel_err(l, r2) < 1e-12);
    CHECK(rel_err(r, l2) < 1e-12);
  }
  SUBCASE("symmetric data gives a palindromic load") {
    auto gs = [](double y) { return (y >= -0.5 && y <= 0.0) || (y >= 1.0 && y <= 1.5) ? 2.0 : 0.0; };
    const BoundarySpec bs(gs, 2.0, 2.0, Interval{-0.5, 0.0}, Interval{1.0, 1.5});
    std::vector<double> sym(31);
    for (std::size_t i = 0; i < 31; ++i) sym[i] = g.node(i + 1) * (1.0 - g.node(i + 1));
    const auto load = assemble_rhs(sym, bs, SchemeParams(1.5, 3.0, 1, 1), g);
    for (std::size_t i = 0; i < 31; ++i)
      CHECK(rel_err(load.values[i], load.values[30 - i]) < 1e-12);
  }
  CHECK_THROWS_AS(assemble_rhs(std::vector<double>(30, 0.0), BoundarySpec::homogeneous(),
                               SchemeParams(0.5, 0.0, 0, 0), g),
                  std::invalid_argument);
  std::vector<double> bad(f);
  bad[4] = NAN;
  CHECK_THROWS_AS(assemble_rhs(bad, BoundarySpec::homogeneous(), SchemeParams(0.5, 0.0, 0, 0), g),
                  std::runtime_error);
}

TEST_CASE("dense materialization") {
  const auto op3 = assemble_operator(SchemeParams(0.5, 1.0, 0, 0), Grid(0.0, 1.0, 3));
  const auto d3 = materialize_dense(op3);
  CHECK(d3.rows() == 3);
  CHECK(d3(0, 2) == op3.toeplitz_col()[2]);
  CHECK(d3(1, 1) == op3.diag()[1]);

  const auto op = assemble_operator(SchemeParams(1.5, 3.0, 1, 1), Grid(0.0, 1.0, 256));
  const auto dense = materialize_dense(op);
  CHECK((dense.array() == dense.transpose().array()).all());
  Eigen::VectorXd v(256);
  for (Eigen::Index i = 0; i < 256; ++i) v(i) = std::cos(0.1 * static_cast<double>(i * i));
  const Eigen::VectorXd want = dense * v;
  const auto got = operator_matvec(op, std::span<const double>(v.data(), 256));
  CHECK(testutil::max_rel_diff(got, std::span<const double>(want.data(), 256)) < 1e-12);

  CHECK_THROWS_AS(materialize_dense(op, 100), std::length_error);
}

TEST_CASE("binary dump round trip") {
  const Grid g(0.0, 1.0, 15);
  const SchemeParams p(1.0, 0.5, 0, 1);
  const auto op = assemble_operator(p, g);
  const auto bs = example2_boundary();
  std::vector<double> f(15, 1.0);
  const auto load = assemble_rhs(f, bs, p, g);
  const auto path = std::filesystem::temp_directory_path() / "templap_dump_test.bin";
  write_operator_dump(path, op, load);
  CHECK(std::filesystem::file_size(path) == 8 + 8 + 3 * 15 * 8);
  {
    std::ifstream in(path, std::ios::binary);
    char magic[8];
    in.read(magic, 8);
    CHECK(std::string(magic, 8) == "TFLAP001");
  }
  const auto dump = read_operator_dump(path);
  CHECK(dump.diag == op.diag());
  CHECK(dump.toeplitz_col == op.toeplitz_col());
  CHECK(dump.load == load.values);
  {
    std::ofstream out(path, std::ios::binary);
    out << "NOTADUMP";
  }
  CHECK_THROWS(read_operator_dump(path));
  std::filesystem::remove(path);
  CHECK_THROWS(read_operator_dump(path));
}

TEST_CASE("spectral properties") {
  SUBCASE("Gershgorin floor") {
    for (const auto& p : kSchemes) {
      const auto op = assemble_operator(p, Grid(0.0, 1.0, 63));
      double floor = INFINITY;
      for (std::size_t i = 0; i < 63; ++i)
        floor = std::min(floor, op.tails_left()[i] + op.tails_right()[i]);
      for (std::size_t i = 0; i < 63; ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < 63; ++j)
          if (j != i) radius += std::abs(op.entry(i, j));
        CHECK(op.diag()[i] - radius > floor);
      }
      const auto [lmin, lmax] = extreme_eigs(materialize_dense(op));
      CHECK(lmin >= floor);
      CHECK(lmax > lmin);
    }
  }
  SUBCASE("extreme eigenvalues scale as h^-beta") {
    for (const auto& p : {SchemeParams(0.5, 0.5, 0, 0), SchemeParams(1.5, 3.0, 1, 1)}) {
      std::vector<double> mins, maxs, hs;
      for (std::size_t m : {31u, 63u, 127u, 255u}) {
        const Grid g(0.0, 1.0, m);
        const auto [lmin, lmax] = extreme_eigs(materialize_dense(assemble_operator(p, g)));
        mins.push_back(lmin);
        maxs.push_back(lmax);
        hs.push_back(g.h());
      }
      const auto [mn, mx] = std::minmax_element(mins.begin(), mins.end());
      CHECK(*mx / *mn <= 2.0);
      const double slope = std::log(maxs.back() / maxs.front()) / std::log(hs.front() / hs.back());
      CHECK(std::abs(slope - p.beta()) <= 0.1);
    }
  }
}
