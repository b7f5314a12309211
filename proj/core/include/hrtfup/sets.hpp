#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include <nlohmann/json.hpp>

#include "hrtfup/grids.hpp"

namespace hrtfup {

inline constexpr int kLeft = 0;
inline constexpr int kRight = 1;

// Complex spectra on linear frequencies 0..fs/2 inclusive (bin spacing
// fs/T where T is the paired IR length). DC and Nyquist bins are the real
// representatives of the Hermitian symmetry.
struct HrtfSet {
  SphericalGrid grid;
  double sample_rate_hz = 0.0;
  int num_bins = 0;
  std::array<Eigen::MatrixXcd, 2> spectra;  // per ear: directions x bins
  nlohmann::json metadata;

  int ir_length() const { return 2 * (num_bins - 1); }
  double bin_freq_hz(int k) const {
    return sample_rate_hz * k / static_cast<double>(ir_length());
  }
  void validate() const;
};

struct HrirSet {
  SphericalGrid grid;
  double sample_rate_hz = 0.0;
  std::array<Eigen::MatrixXd, 2> samples;  // per ear: directions x T
  nlohmann::json metadata;

  int ir_length() const { return static_cast<int>(samples[kLeft].cols()); }
  void validate() const;
};

HrtfSet fft_set(const HrirSet& irs);
HrirSet ifft_set(const HrtfSet& spectra);

}  // namespace hrtfup
