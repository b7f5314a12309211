#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hrtfup {

// Real-to-complex FFT pair with numpy-style conventions:
//   forward(x)[k] = sum_n x[n] exp(-2*pi*i*k*n/N), k = 0..N/2
//   inverse(X)    = (1/N) * hermitian expansion, length N
// inverse() uses only the real part of the DC and Nyquist bins.
// Instances are cheap to create and may be used from one thread at a time;
// plan creation is internally serialized (the planner is not thread-safe).
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const { return n_; }
  std::size_t num_bins() const { return n_ / 2 + 1; }

  std::vector<std::complex<double>> forward(const std::vector<double>& x) const;
  std::vector<double> inverse(const std::vector<std::complex<double>>& spec) const;

 private:
  std::size_t n_;
  void* plan_fwd_;
  void* plan_inv_;
  double* real_buf_;
  void* cplx_buf_;
};

}  // namespace hrtfup
