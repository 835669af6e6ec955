#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "templap/params.hpp"

namespace templap {

/// Generalized Dirichlet data: u = g on R \ (a,b).
///
/// The exterior function may only be nonzero on the declared support pieces
/// (one at most on each side of the domain); outside them it is treated as
/// zero. The endpoint values u(a), u(b) enter the boundary-lift terms of the
/// load vector and are carried separately.
class BoundarySpec {
 public:
  using Function = std::function<double(double)>;

  /// g == 0 with u(a) = u(b) = 0.
  static BoundarySpec homogeneous();

  /// Throws std::invalid_argument when g is given without any bounded
  /// support, when a support piece is empty or unbounded, or when g does not
  /// vanish at sample points just beyond the declared support.
  BoundarySpec(Function g, double u_a, double u_b,
               std::optional<Interval> left_support,
               std::optional<Interval> right_support);

  bool is_zero() const { return !g_; }
  double u_a() const { return u_a_; }
  double u_b() const { return u_b_; }
  const std::optional<Interval>& left_support() const { return left_; }
  const std::optional<Interval>& right_support() const { return right_; }

  /// g(y); zero when no exterior function was given.
  double g(double y) const { return g_ ? g_(y) : 0.0; }

  /// Throws std::invalid_argument if a support piece overlaps (a,b) or g is
  /// nonzero at sample points in the exterior gaps next to the domain.
  void check_against(double a, double b) const;

 private:
  BoundarySpec() = default;

  Function g_;
  double u_a_ = 0.0;
  double u_b_ = 0.0;
  std::optional<Interval> left_;
  std::optional<Interval> right_;
};

/// Raw exterior loads (d_1, d_2) seen from the point x in (a,b):
/// int g(y) e^{-lambda|x-y|} |x-y|^{-1-beta} dy over each support piece,
/// by composite Gauss-Legendre with panels growing away from the point.
std::pair<double, double> exterior_loads(double x, const BoundarySpec& boundary,
                                         const SchemeParams& params,
                                         int points = 32);

}  // namespace templap
