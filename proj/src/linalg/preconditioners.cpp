#include "templap/preconditioners.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace templap {

void IdentityPreconditioner::solve(std::span<const double> r,
                                   std::span<double> z) const {
  if (r.size() != n_ || z.size() != n_)
    throw std::invalid_argument("IdentityPreconditioner: length mismatch");
  std::copy(r.begin(), r.end(), z.begin());
}

DenseCholPreconditioner::DenseCholPreconditioner(const Eigen::MatrixXd& a) : llt_(a) {
  if (llt_.info() != Eigen::Success)
    throw std::runtime_error("DenseCholPreconditioner: matrix is not s.p.d.");
}

void DenseCholPreconditioner::solve(std::span<const double> r,
                                    std::span<double> z) const {
  if (r.size() != size() || z.size() != size())
    throw std::invalid_argument("DenseCholPreconditioner: length mismatch");
  Eigen::Map<const Eigen::VectorXd> rv(r.data(), static_cast<Eigen::Index>(r.size()));
  Eigen::Map<Eigen::VectorXd> zv(z.data(), static_cast<Eigen::Index>(z.size()));
  zv = llt_.solve(rv);
}

// ---------------------------------------------------------------------------
// Circulant

CirculantPrecond::CirculantPrecond(std::vector<double> first_col)
    : first_col_(std::move(first_col)), dft_(std::max<std::size_t>(first_col_.size(), 1)) {
  const std::size_t m = first_col_.size();
  if (m == 0) throw std::invalid_argument("CirculantPrecond: empty first column");
  std::vector<std::complex<double>> spec(dft_.spectrum_size());
  dft_.forward(first_col_, spec);
  const double scale =
      std::accumulate(first_col_.begin(), first_col_.end(), 0.0,
                      [](double acc, double c) { return acc + std::abs(c); });
  spectrum_.resize(m);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (std::abs(spec[j].imag()) > 1e-13 * std::max(scale, 1e-300))
      throw std::runtime_error("CirculantPrecond: first column is not symmetric");
    spectrum_[j] = spec[j].real();
    spectrum_[(m - j) % m] = spec[j].real();
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!(spectrum_[j] > 0.0))
      throw std::runtime_error("CirculantPrecond: eigenvalue " + std::to_string(j) +
                               " is not positive (" + std::to_string(spectrum_[j]) +
                               ")");
  }
  half_spectrum_.assign(spectrum_.begin(), spectrum_.begin() + static_cast<std::ptrdiff_t>(spec.size()));
  inv_spectrum_.resize(spec.size());
  for (std::size_t j = 0; j < spec.size(); ++j) inv_spectrum_[j] = 1.0 / half_spectrum_[j];
}

void CirculantPrecond::diagonal_apply(std::span<const double> r, std::span<double> z,
                                      bool invert) const {
  const std::size_t m = size();
  if (r.size() != m || z.size() != m)
    throw std::invalid_argument("CirculantPrecond: length mismatch");
  dft_.convolve(r, invert ? inv_spectrum_ : half_spectrum_, z, 1.0 / static_cast<double>(m));
}

void CirculantPrecond::solve(std::span<const double> r, std::span<double> z) const {
  diagonal_apply(r, z, true);
}

void CirculantPrecond::multiply(std::span<const double> r, std::span<double> z) const {
  diagonal_apply(r, z, false);
}

std::vector<double> tchan_first_column(std::span<const double> t) {
  const std::size_t m = t.size();
  std::vector<double> c(m);
  if (m == 0) return c;
  c[0] = t[0];
  const double md = static_cast<double>(m);
  for (std::size_t k = 1; k < m; ++k) {
    const double kd = static_cast<double>(k);
    c[k] = ((md - kd) * t[k] + kd * t[m - k]) / md;
  }
  return c;
}

CirculantPrecond build_tchan_precond(const OperatorMatrix& op) {
  std::vector<double> t = op.toeplitz_col();
  const auto& diag = op.diag();
  t[0] = std::accumulate(diag.begin(), diag.end(), 0.0) / static_cast<double>(diag.size());
  return CirculantPrecond(tchan_first_column(t));
}

// ---------------------------------------------------------------------------
// Banded incomplete Cholesky with diagonal compensation

std::vector<double> compensated_band_diagonal(const OperatorMatrix& op, std::size_t k) {
  const std::size_t m = op.size();
  const auto& col = op.toeplitz_col();
  std::vector<double> prefix(m, 0.0);
  for (std::size_t l = 1; l < m; ++l) prefix[l] = prefix[l - 1] + col[l];
  std::vector<double> g(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t left = i - 1;
    const std::size_t right = m - i;
    const double dropped = (prefix[left] - prefix[std::min(k, left)]) +
                           (prefix[right] - prefix[std::min(k, right)]);
    g[i - 1] = op.diag()[i - 1] + dropped;
  }
  return g;
}

BandedCholPrecond::BandedCholPrecond(std::span<const double> g_diag,
                                     std::span<const double> off, std::size_t k)
    : n_(g_diag.size()), k_(k), l_(g_diag.size() * (k + 1), 0.0) {
  if (k == 0) throw std::invalid_argument("BandedCholPrecond: bandwidth must be >= 1");
  if (off.size() < k + 1)
    throw std::invalid_argument("BandedCholPrecond: band column too short");
  auto g = [&](std::size_t i, std::size_t j) {  // i >= j, i - j <= k
    return i == j ? g_diag[i] : off[i - j];
  };
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j0 = i > k_ ? i - k_ : 0;
    for (std::size_t j = j0; j <= i; ++j) {
      double sum = g(i, j);
      const std::size_t l0 = std::max(j0, j > k_ ? j - k_ : std::size_t{0});
      for (std::size_t l = l0; l < j; ++l)
        sum -= l_[i * (k_ + 1) + (i - l)] * l_[j * (k_ + 1) + (j - l)];
      if (i == j) {
        if (!(sum > 0.0))
          throw std::runtime_error("BandedCholPrecond: non-positive pivot at row " +
                                   std::to_string(i));
        l_[i * (k_ + 1)] = std::sqrt(sum);
      } else {
        l_[i * (k_ + 1) + (i - j)] = sum / l_[j * (k_ + 1)];
      }
    }
  }
}

Eigen::MatrixXd BandedCholPrecond::dense_factor() const {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_),
                                            static_cast<Eigen::Index>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t d = 0; d <= std::min(i, k_); ++d)
      l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - d)) = factor(i, d);
  return l;
}

void BandedCholPrecond::solve(std::span<const double> r, std::span<double> z) const {
  if (r.size() != n_ || z.size() != n_)
    throw std::invalid_argument("BandedCholPrecond: length mismatch");
  const std::size_t w = k_ + 1;
  // L y = r
  for (std::size_t i = 0; i < n_; ++i) {
    double sum = r[i];
    const std::size_t dmax = std::min(i, k_);
    for (std::size_t d = 1; d <= dmax; ++d) sum -= l_[i * w + d] * z[i - d];
    z[i] = sum / l_[i * w];
  }
  // L^T z = y
  for (std::size_t ii = n_; ii-- > 0;) {
    double sum = z[ii];
    const std::size_t dmax = std::min(n_ - 1 - ii, k_);
    for (std::size_t d = 1; d <= dmax; ++d) sum -= l_[(ii + d) * w + d] * z[ii + d];
    z[ii] = sum / l_[ii * w];
  }
}

BandedCholPrecond build_band_compensated_ichol(const OperatorMatrix& op, std::size_t k) {
  if (k == 0) throw std::invalid_argument("band-compensated ichol needs k >= 1");
  const std::size_t m = op.size();
  const std::size_t band = std::min(k, m - 1);
  const auto g_diag = compensated_band_diagonal(op, band);
  std::vector<double> off(op.toeplitz_col().begin(),
                          op.toeplitz_col().begin() + static_cast<std::ptrdiff_t>(band + 1));
  return BandedCholPrecond(g_diag, off, band);
}

}  // namespace templap
