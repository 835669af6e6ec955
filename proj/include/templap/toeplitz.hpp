#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

#include "templap/assembly.hpp"
#include "templap/fft.hpp"

namespace templap {

/// y = A x for a symmetric positive definite system matrix.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual std::size_t size() const = 0;
  virtual void apply(std::span<const double> x, std::span<double> y) const = 0;

  std::vector<double> operator()(std::span<const double> x) const {
    std::vector<double> y(size());
    apply(x, y);
    return y;
  }
};

/// Symmetric Toeplitz matrix given by its first column t_0..t_{M-1}.
///
/// Products use a circulant embedding of length N = next power of two >= 2M
/// whose spectrum is computed at construction. Throws std::runtime_error if
/// the embedded spectrum has an imaginary part above 1e-13 of its scale.
class SymToeplitz : public LinearOperator {
 public:
  explicit SymToeplitz(std::vector<double> first_col);

  std::size_t size() const override { return first_col_.size(); }
  const std::vector<double>& first_col() const { return first_col_; }
  std::size_t embedding_size() const { return dft_.size(); }

  void apply(std::span<const double> x, std::span<double> y) const override;

 private:
  std::vector<double> first_col_;
  RealDft dft_;
  std::vector<double> spectrum_;
};

/// T v by FFT. Throws std::invalid_argument on length mismatch.
std::vector<double> toeplitz_matvec(const SymToeplitz& t, std::span<const double> v);

/// H = D + (H - D) applied in O(M log M).
class FastOperator : public LinearOperator {
 public:
  explicit FastOperator(const OperatorMatrix& op);

  std::size_t size() const override { return diag_.size(); }
  void apply(std::span<const double> x, std::span<double> y) const override;

 private:
  std::vector<double> diag_;
  SymToeplitz offdiag_;
};

/// One-shot H v; builds the FFT embedding on every call.
std::vector<double> operator_matvec(const OperatorMatrix& op, std::span<const double> v);

/// Dense matrix as a LinearOperator (tests and the direct baseline).
class DenseOperator : public LinearOperator {
 public:
  explicit DenseOperator(Eigen::MatrixXd a);

  std::size_t size() const override { return static_cast<std::size_t>(a_.rows()); }
  void apply(std::span<const double> x, std::span<double> y) const override;
  const Eigen::MatrixXd& matrix() const { return a_; }

 private:
  Eigen::MatrixXd a_;
};

}  // namespace templap
