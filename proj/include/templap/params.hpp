#pragma once

#include <cstddef>
#include <vector>

namespace templap {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Scheme parameters of the tempered fractional Laplacian discretization.
///
/// `beta` is the fractional order in (0,2), `lambda` the tempering rate,
/// and (s, s1) select how much of the kernel power is moved into the
/// interpolated functions. Admissible pairs are (0,0), (1,1) for beta < 1 and
/// (0,1), (1,1) for beta >= 1. Construction throws std::invalid_argument for
/// anything else.
class SchemeParams {
 public:
  SchemeParams(double beta, double lambda, int s, int s1,
               bool apply_cbeta = true);

  double beta() const { return beta_; }
  double lambda() const { return lambda_; }
  int s() const { return s_; }
  int s1() const { return s1_; }
  bool apply_cbeta() const { return apply_cbeta_; }

  /// Exact comparison; beta == 1 selects the logarithmic coefficient forms.
  bool beta_is_one() const { return beta_ == 1.0; }
  bool tempered() const { return lambda_ > 0.0; }

  static bool admissible(double beta, int s, int s1);

 private:
  double beta_;
  double lambda_;
  int s_;
  int s1_;
  bool apply_cbeta_;
};

/// Distance from 1 below which a non-unit beta triggers a cancellation
/// warning (C_{beta,s} has a pole at beta = 1).
inline constexpr double kBetaOneWarnBand = 1e-6;

/// Uniform grid a = x_0 < x_1 < ... < x_{M+1} = b.
class Grid {
 public:
  /// Requires b > a and M >= 3.
  Grid(double a, double b, std::size_t interior_count);

  double a() const { return a_; }
  double b() const { return b_; }
  double h() const { return h_; }
  std::size_t size() const { return m_; }

  /// Node x_i for i = 0..M+1. The endpoints are returned exactly.
  double node(std::size_t i) const;

  /// Interior nodes x_1..x_M.
  std::vector<double> interior_nodes() const;

  /// x_i - a and b - x_i computed from the integer offsets, so that
  /// left_distance(i) == right_distance(M+1-i) bit for bit.
  double left_distance(std::size_t i) const { return static_cast<double>(i) * h_; }
  double right_distance(std::size_t i) const {
    return static_cast<double>(m_ + 1 - i) * h_;
  }

 private:
  double a_;
  double b_;
  std::size_t m_;
  double h_;
};

}  // namespace templap
