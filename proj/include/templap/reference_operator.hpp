#pragma once

#include <functional>

#include "templap/boundary.hpp"
#include "templap/params.hpp"

namespace templap {

/// Pointwise -(Delta + lambda)^{beta/2} u (x) by quadrature of the
/// singular-integral definition, with c_beta applied when the parameters ask
/// for it.
///
/// `u` is the solution inside the domain (smooth on the closed interval);
/// the exterior values come from `exterior`. The symmetric second difference
/// 2u(x) - u(x-t) - u(x+t) removes the principal value on the near field
/// |x-y| < delta = dist(x, boundary); the rest of the domain and the exterior
/// are ordinary integrals. Throws std::domain_error unless a < x < b.
double reference_apply_operator(const std::function<double(double)>& u,
                                const BoundarySpec& exterior, double x,
                                const SchemeParams& params, Interval domain);

}  // namespace templap
