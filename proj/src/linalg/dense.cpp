#include "templap/dense.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace templap {

std::vector<double> dense_gauss_solve(const Eigen::MatrixXd& a,
                                      std::span<const double> rhs) {
  if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != rhs.size())
    throw std::invalid_argument("dense_gauss_solve: dimension mismatch");
  if (a.rows() == 0) return {};
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const auto& packed = lu.matrixLU();
  const double scale = packed.diagonal().cwiseAbs().maxCoeff();
  const double floor = scale * std::numeric_limits<double>::epsilon() *
                       static_cast<double>(a.rows());
  if (!(scale > 0.0) || packed.diagonal().cwiseAbs().minCoeff() <= floor)
    throw std::runtime_error("dense_gauss_solve: matrix is singular");
  Eigen::Map<const Eigen::VectorXd> b(rhs.data(), a.rows());
  const Eigen::VectorXd x = lu.solve(b);
  return {x.data(), x.data() + x.size()};
}

std::pair<double, double> extreme_eigs(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw std::invalid_argument("extreme_eigs: need a nonempty square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw std::runtime_error("extreme_eigs: no convergence");
  const auto& ev = eig.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

}  // namespace templap
