#include "templap/boundary.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "templap/quadrature.hpp"

namespace templap {

namespace {

void require_bounded(const std::optional<Interval>& piece, const char* side) {
  if (!piece) return;
  if (!std::isfinite(piece->lo) || !std::isfinite(piece->hi) ||
      !(piece->hi > piece->lo))
    throw std::invalid_argument(std::string("BoundarySpec: ") + side +
                                " support must be a bounded, non-empty interval");
}

void require_zero(const BoundarySpec& spec, double y) {
  if (spec.g(y) != 0.0)
    throw std::invalid_argument(
        "BoundarySpec: exterior function is nonzero outside its declared "
        "support (at y=" + std::to_string(y) + ")");
}

}  // namespace

BoundarySpec BoundarySpec::homogeneous() { return BoundarySpec(); }

BoundarySpec::BoundarySpec(Function g, double u_a, double u_b,
                           std::optional<Interval> left_support,
                           std::optional<Interval> right_support)
    : g_(std::move(g)),
      u_a_(u_a),
      u_b_(u_b),
      left_(left_support),
      right_(right_support) {
  require_bounded(left_, "left");
  require_bounded(right_, "right");
  if (g_ && !left_ && !right_)
    throw std::invalid_argument(
        "BoundarySpec: exterior function given without a bounded support");
  if (!g_) {
    left_.reset();
    right_.reset();
    return;
  }
  for (double far : {0.5, 2.0, 100.0}) {
    if (left_) require_zero(*this, left_->lo - far * left_->length());
    if (right_) require_zero(*this, right_->hi + far * right_->length());
  }
}

void BoundarySpec::check_against(double a, double b) const {
  if (left_ && left_->hi > a)
    throw std::invalid_argument("BoundarySpec: left support overlaps the domain");
  if (right_ && right_->lo < b)
    throw std::invalid_argument("BoundarySpec: right support overlaps the domain");
  if (!g_) return;
  const double width = b - a;
  if (left_) {
    if (left_->hi < a) require_zero(*this, 0.5 * (left_->hi + a));
  } else {
    for (double far : {0.01, 1.0, 10.0}) require_zero(*this, a - far * width);
  }
  if (right_) {
    if (right_->lo > b) require_zero(*this, 0.5 * (right_->lo + b));
  } else {
    for (double far : {0.01, 1.0, 10.0}) require_zero(*this, b + far * width);
  }
}

std::pair<double, double> exterior_loads(double x, const BoundarySpec& boundary,
                                         const SchemeParams& params,
                                         int points) {
  if (boundary.is_zero()) return {0.0, 0.0};
  const double beta = params.beta();
  const double lambda = params.lambda();
  auto kernel = [beta, lambda](double dist) {
    return std::exp(-lambda * dist) * std::pow(dist, -1.0 - beta);
  };

  double left = 0.0;
  if (const auto& piece = boundary.left_support()) {
    const double gap = x - piece->hi;
    if (!(gap > 0.0))
      throw std::invalid_argument("exterior_loads: point inside left support");
    left = integrate_away_from(
        [&](double y) { return boundary.g(y) * kernel(x - y); }, piece->lo,
        piece->hi, piece->hi, gap, points);
  }
  double right = 0.0;
  if (const auto& piece = boundary.right_support()) {
    const double gap = piece->lo - x;
    if (!(gap > 0.0))
      throw std::invalid_argument("exterior_loads: point inside right support");
    right = integrate_away_from(
        [&](double y) { return boundary.g(y) * kernel(y - x); }, piece->lo,
        piece->hi, piece->lo, gap, points);
  }
  return {left, right};
}

}  // namespace templap
