#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

#include "templap/assembly.hpp"
#include "templap/fft.hpp"

namespace templap {

/// z = B^{-1} r for a symmetric positive definite approximation B of H.
class Preconditioner {
 public:
  virtual ~Preconditioner() = default;
  virtual std::size_t size() const = 0;
  virtual void solve(std::span<const double> r, std::span<double> z) const = 0;
};

class IdentityPreconditioner : public Preconditioner {
 public:
  explicit IdentityPreconditioner(std::size_t n) : n_(n) {}
  std::size_t size() const override { return n_; }
  void solve(std::span<const double> r, std::span<double> z) const override;

 private:
  std::size_t n_;
};

/// Exact dense inverse through a Cholesky factorization (small systems).
class DenseCholPreconditioner : public Preconditioner {
 public:
  explicit DenseCholPreconditioner(const Eigen::MatrixXd& a);
  std::size_t size() const override { return static_cast<std::size_t>(llt_.rows()); }
  void solve(std::span<const double> r, std::span<double> z) const override;

 private:
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

/// Circulant matrix C with real symmetric first column c, applied through
/// its DFT spectrum. Throws std::runtime_error naming the first index whose
/// eigenvalue is not strictly positive.
class CirculantPrecond : public Preconditioner {
 public:
  explicit CirculantPrecond(std::vector<double> first_col);

  std::size_t size() const override { return first_col_.size(); }
  const std::vector<double>& first_col() const { return first_col_; }
  /// Eigenvalues lambda_0..lambda_{M-1}.
  const std::vector<double>& spectrum() const { return spectrum_; }

  void solve(std::span<const double> r, std::span<double> z) const override;
  /// z = C r.
  void multiply(std::span<const double> r, std::span<double> z) const;

 private:
  void diagonal_apply(std::span<const double> r, std::span<double> z,
                      bool invert) const;

  std::vector<double> first_col_;
  RealDft dft_;
  std::vector<double> spectrum_;
  std::vector<double> half_spectrum_;  // entries 0..m/2, as the DFT stores them
  std::vector<double> inv_spectrum_;
};

/// T. Chan's optimal circulant for the symmetric Toeplitz matrix with first
/// column t: c_k = ((M-k) t_k + k t_{M-k}) / M, c_0 = t_0.
std::vector<double> tchan_first_column(std::span<const double> t);

/// Circulant preconditioner built from the Toeplitz surrogate
/// G = mean(diag H) I + (H - D).
CirculantPrecond build_tchan_precond(const OperatorMatrix& op);

/// Diagonal of G = band_k(H) + O, where the diagonal compensation O gives G
/// the same row sums as H.
std::vector<double> compensated_band_diagonal(const OperatorMatrix& op,
                                              std::size_t k);

/// Cholesky factor L of the compensated band matrix G, restricted to the
/// band (k+1 stored diagonals). Solves with B = L L^T cost O(kM).
class BandedCholPrecond : public Preconditioner {
 public:
  /// Band entries: g_diag[i] = G(i,i), off[d] = G(i,i+d) for d = 1..k.
  /// Throws std::runtime_error on a non-positive pivot.
  BandedCholPrecond(std::span<const double> g_diag, std::span<const double> off,
                    std::size_t k);

  std::size_t size() const override { return n_; }
  std::size_t bandwidth() const { return k_; }
  /// L(i, i-d) for 0 <= d <= min(i, k).
  double factor(std::size_t i, std::size_t d) const { return l_[i * (k_ + 1) + d]; }
  Eigen::MatrixXd dense_factor() const;

  void solve(std::span<const double> r, std::span<double> z) const override;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<double> l_;
};

inline constexpr std::size_t kDefaultBand = 10;

/// Compensated band extraction plus banded Cholesky, 1 <= k. Bands wider
/// than M-1 are clipped (the factorization is then exact).
BandedCholPrecond build_band_compensated_ichol(const OperatorMatrix& op,
                                               std::size_t k = kDefaultBand);

}  // namespace templap
