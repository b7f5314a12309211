#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "hrtfup/grids.hpp"

namespace hrtfup {

struct HrtfSet;

double erb_bandwidth_hz(double f_hz);   // 24.7 (4.37 f/1000 + 1)
double erb_number(double f_hz);         // 21.4 log10(1 + 0.00437 f)
double erb_number_to_hz(double erbn);

// 4th-order Gammatone magnitude-squared responses sampled on a linear
// frequency grid, peak-normalized per band.
struct GammatoneBank {
  int num_bands = 0;
  double f_low_hz = 0.0;
  double f_high_hz = 0.0;
  int num_bins = 0;
  double sample_rate_hz = 0.0;
  std::vector<double> center_freqs_hz;
  Eigen::MatrixXd mag_sq;  // bands x bins
};

GammatoneBank design_bank(int num_bins, double sample_rate, int num_bands = 41,
                          double f_low = 50.0, double f_high = 20000.0);

// Band energies in dB per direction and ear (floor -120 dB).
struct AuditorySpectrumSet {
  SphericalGrid grid;
  std::vector<double> center_freqs_hz;
  std::array<Eigen::MatrixXd, 2> values_db;  // per ear: directions x bands
};

AuditorySpectrumSet auditory_filter(const HrtfSet& spectra, const GammatoneBank& bank);

inline constexpr double kAuditoryFloorDb = -120.0;

}  // namespace hrtfup
