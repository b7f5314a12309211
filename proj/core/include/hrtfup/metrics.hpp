#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hrtfup/auditory.hpp"
#include "hrtfup/sets.hpp"

namespace hrtfup {

// |A{test} - A{reference}| per ear, direction and Gammatone band (dB).
std::array<Eigen::MatrixXd, 2> magnitude_error(const HrtfSet& test,
                                               const HrtfSet& reference,
                                               const GammatoneBank& bank);

// Mean of per-direction values over directions within a great-circle
// radius of the center.
double regional_average(const Eigen::VectorXd& values, const SphericalGrid& grid,
                        const Direction& center, double radius_deg);

// Broadband level difference 10 log10(sum l^2 / sum r^2), dB.
double ild(const HrirSet& set, int direction_index);

// Onset time of arrival: 10x band-limited resampling, 8th-order Butterworth
// low pass at 3 kHz (4 biquads, forward only), first |sample| at or above
// -10 dB of the filtered maximum. Seconds.
double estimate_toa(const std::vector<double>& ir, double sample_rate);

// toa(left) - toa(right), seconds.
double itd(const HrirSet& set, int direction_index);

// |itd_test - itd_reference| per direction, microseconds.
Eigen::VectorXd itd_error(const HrirSet& test, const HrirSet& reference);

struct JndCurve {
  double ild_jnd_db = 1.0;
  // 20 us at azimuth 0/180, 100 us at 90/270, linear between
  double itd_jnd_us(double azimuth_deg) const;
};

struct EvaluationReport {
  std::string subject_id;
  SphericalGrid grid;
  std::vector<double> band_fc_hz;
  std::array<Eigen::MatrixXd, 2> dg_db;  // per ear: directions x bands
  Eigen::VectorXd dild_db;               // per direction
  Eigen::VectorXd ditd_us;               // per direction

  Eigen::VectorXd dg_direction_mean(int ear) const;  // mean over bands
  double dg_global_mean(int ear) const;
};

struct JndSummary {
  std::vector<int> horizontal_indices;
  std::vector<bool> ild_exceeded;
  std::vector<bool> itd_exceeded;
  double ild_exceeded_fraction = 0.0;
  double itd_exceeded_fraction = 0.0;
};

JndSummary jnd_exceedance(const EvaluationReport& report, const JndCurve& jnd);

EvaluationReport evaluate_sets(const HrirSet& test, const HrirSet& reference,
                               const GammatoneBank& bank,
                               const std::string& subject_id);

// Long-format CSV with fixed columns:
// subject,ear,az_deg,el_deg,band_fc_hz,metric,value
void report_to_csv(const EvaluationReport& report, std::ostream& os);
std::string report_summary_json(const EvaluationReport& report, const JndCurve& jnd);

// Butterworth lowpass as second-order sections (b0 b1 b2 a1 a2), bilinear
// transform design; order must be even.
struct Biquad {
  double b0, b1, b2, a1, a2;
};
std::vector<Biquad> butterworth_lowpass_sos(int order, double cutoff_hz,
                                            double sample_rate);
void sos_filter_inplace(const std::vector<Biquad>& sos, std::vector<double>& x);

// Band-limited 10x-style resampling by rfft zero padding.
std::vector<double> resample_fft(const std::vector<double>& x, int factor);

}  // namespace hrtfup
