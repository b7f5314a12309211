#include "hrtfup/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

#include "hrtfup/errors.hpp"

namespace hrtfup {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
  if (n < 2) throw ValidationError("Fft: transform size must be >= 2");
  real_buf_ = fftw_alloc_real(n);
  cplx_buf_ = fftw_alloc_complex(n / 2 + 1);
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), real_buf_,
                                   static_cast<fftw_complex*>(cplx_buf_),
                                   FFTW_ESTIMATE);
  plan_inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                   static_cast<fftw_complex*>(cplx_buf_),
                                   real_buf_, FFTW_ESTIMATE);
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
  fftw_free(real_buf_);
  fftw_free(cplx_buf_);
}

std::vector<std::complex<double>> Fft::forward(const std::vector<double>& x) const {
  if (x.size() != n_) throw ValidationError("Fft::forward: size mismatch");
  std::memcpy(real_buf_, x.data(), n_ * sizeof(double));
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  std::vector<std::complex<double>> out(num_bins());
  std::memcpy(out.data(), cplx_buf_, num_bins() * sizeof(fftw_complex));
  return out;
}

std::vector<double> Fft::inverse(const std::vector<std::complex<double>>& spec) const {
  if (spec.size() != num_bins()) throw ValidationError("Fft::inverse: size mismatch");
  auto* c = static_cast<fftw_complex*>(cplx_buf_);
  for (std::size_t k = 0; k < spec.size(); ++k) {
    c[k][0] = spec[k].real();
    c[k][1] = spec[k].imag();
  }
  c[0][1] = 0.0;
  if (n_ % 2 == 0) c[num_bins() - 1][1] = 0.0;
  fftw_execute(static_cast<fftw_plan>(plan_inv_));
  std::vector<double> out(n_);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = real_buf_[i] * scale;
  return out;
}

}  // namespace hrtfup
