#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

#include "templap/coefficients.hpp"

namespace templap {

double coeff_quadrature_oracle(CellWeight weight, std::size_t i, int s, std::size_t k,
                               const SchemeParams& params, const Grid& grid) {
  const std::size_t m = grid.size();
  const bool left = weight == CellWeight::A1 || weight == CellWeight::A2;
  if (i < 1 || i > m || k < 1 || k > m + 1)
    throw std::invalid_argument("coeff_quadrature_oracle: index out of range");
  if (left ? k >= i : k <= i + 1)
    throw std::invalid_argument("coeff_quadrature_oracle: cell touches the singular node");

  // Local coordinates: t = (y - x_{k-1}) / h in [0,1]; distance to x_i in
  // units of h is integral, so the kernel is evaluated without cancellation.
  const double h = grid.h();
  const double expo = s - 1.0 - params.beta();
  const double lo = static_cast<double>(k) - 1.0 - static_cast<double>(i);
  auto integrand = [&](double t) {
    const double dist = std::abs(lo + t);
    double lin = 0.0;
    switch (weight) {
      case CellWeight::A1:
      case CellWeight::A3: lin = 1.0 - t; break;
      case CellWeight::A2:
      case CellWeight::A4: lin = t; break;
    }
    return lin * std::pow(dist, expo);
  };
  double err = 0.0;
  const double val =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 15,
                                                                    1e-15, &err);
  // h^{-s-1} * h (dy) * h (linear factor) * h^{expo} (kernel) = h^{-beta}
  return std::pow(h, -params.beta()) * val;
}

}  // namespace templap
