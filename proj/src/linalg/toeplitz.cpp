#include "templap/toeplitz.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace templap {

namespace {

std::size_t embedding_length(std::size_t m) {
  return std::bit_ceil(std::max<std::size_t>(2 * m, 2));
}

}  // namespace

SymToeplitz::SymToeplitz(std::vector<double> first_col)
    : first_col_(std::move(first_col)), dft_(embedding_length(first_col_.size())) {
  const std::size_t m = first_col_.size();
  if (m == 0) throw std::invalid_argument("SymToeplitz: empty first column");
  const std::size_t n = dft_.size();

  std::vector<double> circ(n, 0.0);
  double scale = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    circ[k] = first_col_[k];
    if (k > 0) circ[n - k] = first_col_[k];
    scale += (k > 0 ? 2.0 : 1.0) * std::abs(first_col_[k]);
  }
  std::vector<std::complex<double>> spec(dft_.spectrum_size());
  dft_.forward(circ, spec);
  spectrum_.resize(spec.size());
  for (std::size_t k = 0; k < spec.size(); ++k) {
    if (std::abs(spec[k].imag()) > 1e-13 * std::max(scale, 1e-300))
      throw std::runtime_error("SymToeplitz: embedded spectrum is not real");
    spectrum_[k] = spec[k].real();
  }
}

void SymToeplitz::apply(std::span<const double> x, std::span<double> y) const {
  const std::size_t m = size();
  if (x.size() != m || y.size() != m)
    throw std::invalid_argument("SymToeplitz::apply: length mismatch");
  dft_.convolve(x, spectrum_, y, 1.0 / static_cast<double>(dft_.size()));
}

std::vector<double> toeplitz_matvec(const SymToeplitz& t, std::span<const double> v) {
  return t(v);
}

namespace {

std::vector<double> offdiagonal_column(const OperatorMatrix& op) {
  std::vector<double> col = op.toeplitz_col();
  col[0] = 0.0;
  return col;
}

}  // namespace

FastOperator::FastOperator(const OperatorMatrix& op)
    : diag_(op.diag()), offdiag_(offdiagonal_column(op)) {}

void FastOperator::apply(std::span<const double> x, std::span<double> y) const {
  offdiag_.apply(x, y);
  for (std::size_t i = 0; i < diag_.size(); ++i) y[i] += diag_[i] * x[i];
}

std::vector<double> operator_matvec(const OperatorMatrix& op, std::span<const double> v) {
  return FastOperator(op)(v);
}

DenseOperator::DenseOperator(Eigen::MatrixXd a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols())
    throw std::invalid_argument("DenseOperator: matrix must be square");
}

void DenseOperator::apply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != size() || y.size() != size())
    throw std::invalid_argument("DenseOperator::apply: length mismatch");
  Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
  Eigen::Map<Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(y.size()));
  yv.noalias() = a_ * xv;
}

}  // namespace templap
