#include "templap/params.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace templap {

bool SchemeParams::admissible(double beta, int s, int s1) {
  if (beta < 1.0) return (s == 0 && s1 == 0) || (s == 1 && s1 == 1);
  return (s == 0 && s1 == 1) || (s == 1 && s1 == 1);
}

SchemeParams::SchemeParams(double beta, double lambda, int s, int s1,
                           bool apply_cbeta)
    : beta_(beta), lambda_(lambda), s_(s), s1_(s1), apply_cbeta_(apply_cbeta) {
  if (!(beta > 0.0 && beta < 2.0))
    throw std::invalid_argument("beta must lie strictly inside (0,2)");
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("lambda must be finite and >= 0");
  if (!admissible(beta, s, s1)) {
    std::ostringstream msg;
    msg << "scheme (s,s1)=(" << s << "," << s1 << ") is not admissible for beta="
        << beta;
    throw std::invalid_argument(msg.str());
  }
  if (beta != 1.0 && std::abs(beta - 1.0) < kBetaOneWarnBand) {
    std::clog << "templap: warning: beta=" << beta
              << " is within " << kBetaOneWarnBand
              << " of 1; power-law coefficients suffer cancellation\n";
  }
}

Grid::Grid(double a, double b, std::size_t interior_count)
    : a_(a), b_(b), m_(interior_count) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("grid requires finite a < b");
  if (interior_count < 3)
    throw std::invalid_argument("grid requires at least 3 interior nodes");
  h_ = (b - a) / static_cast<double>(m_ + 1);
}

double Grid::node(std::size_t i) const {
  if (i > m_ + 1) throw std::out_of_range("grid node index out of range");
  if (i == 0) return a_;
  if (i == m_ + 1) return b_;
  return a_ + static_cast<double>(i) * h_;
}

std::vector<double> Grid::interior_nodes() const {
  std::vector<double> x(m_);
  for (std::size_t i = 1; i <= m_; ++i) x[i - 1] = node(i);
  return x;
}

}  // namespace templap
