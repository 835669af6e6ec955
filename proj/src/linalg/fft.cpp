#include "templap/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace templap {

namespace {

// The FFTW planner is not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
std::unique_ptr<T[], FftwFree> fftw_buffer(std::size_t n) {
  void* p = fftw_malloc(sizeof(T) * std::max<std::size_t>(n, 1));
  if (!p) throw std::bad_alloc();
  return std::unique_ptr<T[], FftwFree>(static_cast<T*>(p));
}

fftw_plan as_plan(void* p) { return static_cast<fftw_plan>(p); }

// Per-thread transform buffers, grown on demand and reused across calls.
struct Scratch {
  std::unique_ptr<double[], FftwFree> real;
  std::unique_ptr<fftw_complex[], FftwFree> spec;
  std::size_t real_cap = 0, spec_cap = 0;

  double* reals(std::size_t n) {
    if (n > real_cap) {
      real = fftw_buffer<double>(n);
      real_cap = n;
    }
    return real.get();
  }
  fftw_complex* specs(std::size_t n) {
    if (n > spec_cap) {
      spec = fftw_buffer<fftw_complex>(n);
      spec_cap = n;
    }
    return spec.get();
  }
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

}  // namespace

RealDft::RealDft(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("RealDft: length must be positive");
  auto real = fftw_buffer<double>(n);
  auto spec = fftw_buffer<fftw_complex>(n / 2 + 1);
  const int len = static_cast<int>(n);
  std::lock_guard<std::mutex> lock(planner_mutex());
  forward_plan_ = fftw_plan_dft_r2c_1d(len, real.get(), spec.get(), FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft_c2r_1d(len, spec.get(), real.get(), FFTW_ESTIMATE);
  if (!forward_plan_ || !inverse_plan_) {
    release();
    throw std::runtime_error("RealDft: FFTW planning failed");
  }
}

RealDft::~RealDft() { release(); }

RealDft::RealDft(RealDft&& other) noexcept
    : n_(other.n_),
      forward_plan_(other.forward_plan_),
      inverse_plan_(other.inverse_plan_) {
  other.forward_plan_ = nullptr;
  other.inverse_plan_ = nullptr;
}

RealDft& RealDft::operator=(RealDft&& other) noexcept {
  if (this != &other) {
    release();
    n_ = other.n_;
    forward_plan_ = other.forward_plan_;
    inverse_plan_ = other.inverse_plan_;
    other.forward_plan_ = nullptr;
    other.inverse_plan_ = nullptr;
  }
  return *this;
}

void RealDft::release() {
  if (!forward_plan_ && !inverse_plan_) return;
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (forward_plan_) fftw_destroy_plan(as_plan(forward_plan_));
  if (inverse_plan_) fftw_destroy_plan(as_plan(inverse_plan_));
  forward_plan_ = nullptr;
  inverse_plan_ = nullptr;
}

void RealDft::forward(std::span<const double> in,
                      std::span<std::complex<double>> out) const {
  if (in.size() != n_ || out.size() != spectrum_size())
    throw std::invalid_argument("RealDft::forward: length mismatch");
  double* real = scratch().reals(n_);
  fftw_complex* spec = scratch().specs(spectrum_size());
  std::copy(in.begin(), in.end(), real);
  fftw_execute_dft_r2c(as_plan(forward_plan_), real, spec);
  std::memcpy(static_cast<void*>(out.data()), spec,
              sizeof(fftw_complex) * spectrum_size());
}

void RealDft::inverse(std::span<const std::complex<double>> in,
                      std::span<double> out) const {
  if (in.size() != spectrum_size() || out.size() != n_)
    throw std::invalid_argument("RealDft::inverse: length mismatch");
  double* real = scratch().reals(n_);
  fftw_complex* spec = scratch().specs(spectrum_size());
  std::memcpy(spec, static_cast<const void*>(in.data()),
              sizeof(fftw_complex) * spectrum_size());
  fftw_execute_dft_c2r(as_plan(inverse_plan_), spec, real);
  std::copy(real, real + n_, out.begin());
}

void RealDft::convolve(std::span<const double> in, std::span<const double> weights,
                       std::span<double> out, double scale) const {
  if (in.size() > n_ || out.size() > n_ || weights.size() != spectrum_size())
    throw std::invalid_argument("RealDft::convolve: length mismatch");
  double* real = scratch().reals(n_);
  fftw_complex* spec = scratch().specs(spectrum_size());
  std::copy(in.begin(), in.end(), real);
  std::fill(real + in.size(), real + n_, 0.0);
  fftw_execute_dft_r2c(as_plan(forward_plan_), real, spec);
  for (std::size_t k = 0; k < spectrum_size(); ++k) {
    spec[k][0] *= weights[k];
    spec[k][1] *= weights[k];
  }
  fftw_execute_dft_c2r(as_plan(inverse_plan_), spec, real);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scale * real[i];
}

}  // namespace templap
