#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace templap {

/// Real-to-complex DFT of fixed length n (FFTW backend).
///
/// Plans are created once at construction; every transform call uses its own
/// scratch buffers, so a const RealDft can be shared between threads.
class RealDft {
 public:
  explicit RealDft(std::size_t n);
  ~RealDft();

  RealDft(const RealDft&) = delete;
  RealDft& operator=(const RealDft&) = delete;
  RealDft(RealDft&& other) noexcept;
  RealDft& operator=(RealDft&& other) noexcept;

  std::size_t size() const { return n_; }
  std::size_t spectrum_size() const { return n_ / 2 + 1; }

  /// out[k] = sum_j in[j] e^{-2 pi i jk/n}, k = 0..n/2.
  void forward(std::span<const double> in,
               std::span<std::complex<double>> out) const;

  /// Unnormalized inverse: out[j] = sum_k in[k] e^{+2 pi i jk/n} over the
  /// full Hermitian spectrum. Divide by n for the true inverse.
  void inverse(std::span<const std::complex<double>> in,
               std::span<double> out) const;

  /// Spectral multiplier applied to a zero-padded input:
  /// out = scale * (first out.size() entries of IDFT(weights .* DFT(pad(in)))),
  /// with IDFT unnormalized. `weights` has spectrum_size() real entries;
  /// in.size() and out.size() are at most n.
  void convolve(std::span<const double> in, std::span<const double> weights,
                std::span<double> out, double scale) const;

 private:
  void release();

  std::size_t n_ = 0;
  void* forward_plan_ = nullptr;
  void* inverse_plan_ = nullptr;
};

}  // namespace templap
