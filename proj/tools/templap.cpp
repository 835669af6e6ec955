// templap: convergence studies for the 1-D tempered fractional Laplacian.

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "templap/assembly.hpp"
#include "templap/report.hpp"
#include "templap/study.hpp"

namespace {

// "J1..J2" or a single "J".
std::vector<int> parse_levels(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
      throw CLI::ValidationError("--levels", "expected J1..J2, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  const std::string_view sv(text);
  const int lo = to_int(dots == std::string::npos ? sv : sv.substr(0, dots));
  const int hi = dots == std::string::npos ? lo : to_int(sv.substr(dots + 2));
  if (hi < lo) throw CLI::ValidationError("--levels", "J2 must not be below J1");
  std::vector<int> out;
  for (int j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-difference solver for the tempered fractional Laplacian"};
  app.set_config("--config", "", "key = value file with the same option names");

  int example = 1;
  double beta = 0.5, lambda = 0.0, radius = 1.0, tol = 1e-9;
  std::vector<int> scheme{0, 0};
  std::string levels = "10..13", solver = "pcg-tchan", format = "csv", out, dump;
  std::size_t band = templap::kDefaultBand, max_iter = 0;
  bool no_cbeta = false;

  app.add_option("--example", example, "1, 2 or 3")->check(CLI::Range(1, 3));
  app.add_option("--beta", beta, "fractional order in (0,2)");
  app.add_option("--lambda", lambda, "tempering rate >= 0");
  app.add_option("--scheme", scheme, "S,S1")->delimiter(',')->expected(2);
  app.add_option("--levels", levels, "J1..J2")->capture_default_str();
  app.add_option("--solver", solver, "cg | pcg-ichol | pcg-tchan | dense")
      ->capture_default_str();
  app.add_option("--tol", tol, "relative residual tolerance")->capture_default_str();
  app.add_option("--band", band, "ichol half-bandwidth k")->capture_default_str();
  app.add_option("--max-iter", max_iter, "iteration cap (0: automatic)");
  app.add_option("--radius", radius, "Example 3 half-width r")->capture_default_str();
  app.add_flag("--no-cbeta", no_cbeta, "do not apply the normalization constant");
  app.add_option("--out", out, "report file (default: stdout)");
  app.add_option("--format", format, "csv | markdown")->capture_default_str();
  app.add_option("--dump", dump, "binary dump of the finest system");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  templap::ExperimentConfig config;
  templap::ReportFormat fmt{};
  try {
    config.example = example;
    config.params = templap::SchemeParams(beta, lambda, scheme.at(0), scheme.at(1), !no_cbeta);
    config.radius = radius;
    config.levels = parse_levels(levels);
    config.solver = templap::parse_solver(solver);
    config.tol = tol;
    config.band = band;
    config.max_iter = max_iter;
    fmt = templap::parse_format(format);
    for (int j : config.levels) (void)templap::interior_count(config, j);
  } catch (const std::exception& e) {
    std::cerr << "templap: " << e.what() << '\n';
    return 1;
  }

  try {
    const auto report = templap::run_convergence_study(config);
    if (out.empty())
      templap::write_report(report, fmt, std::cout);
    else
      templap::emit_report(report, fmt, out);
    if (!dump.empty()) {
      const auto sys = templap::assemble_level(config, config.levels.back());
      templap::write_operator_dump(dump, sys.op, sys.load);
    }
    if (!report.all_converged()) {
      std::cerr << "templap: some levels did not reach the tolerance\n";
      return 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "templap: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "templap: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
