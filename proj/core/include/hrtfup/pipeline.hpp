#pragma once

#include <optional>

#include "hrtfup/auditory.hpp"
#include "hrtfup/sets.hpp"
#include "hrtfup/sh.hpp"
#include "hrtfup/sphere.hpp"

namespace hrtfup {

enum class PhaseMode { Zero, Minimum };

struct LimiterSettings {
  double limit_db = 6.0;
  double knee_db = 3.0;
};

struct CorrectionFilterSet {
  SphericalGrid grid;
  std::array<Eigen::MatrixXd, 2> gains_db;  // per ear: directions x bins
  double aliasing_freq_hz = 0.0;
  double fade_low_hz = 0.0;   // aliasing_freq / 2^(1/3); 0 when fade disabled
  bool fade_enabled = true;
  std::optional<LimiterSettings> limiter;
  PhaseMode phase_mode = PhaseMode::Minimum;
  double sample_rate_hz = 0.0;
  int num_bins = 0;
};

struct McaConfig {
  int sparse_order = 1;
  HeadModel head;
  SphericalGrid target_grid;
  bool enable_aliasing_fade = true;
  std::optional<LimiterSettings> limiter;  // default off
  PhaseMode phase_mode = PhaseMode::Minimum;
  ShMode sh_mode = ShMode::Quadrature;
};

struct McaResult {
  HrirSet dense_corrected;
  HrirSet dense_uncorrected;
  CorrectionFilterSet filters;
};

// Spectral division by the rigid-sphere transfer functions on the set's
// own grid (time alignment), and its inverse (multiplication).
HrtfSet align(const HrtfSet& set, const HeadModel& head);
HrtfSet align_inverse(const HrtfSet& set, const HeadModel& head);

HrtfSet interpolate_sh(const HrtfSet& set, int order, const SphericalGrid& target,
                       ShMode mode);
AuditorySpectrumSet interpolate_auditory(const AuditorySpectrumSet& set, int order,
                                         const SphericalGrid& target, ShMode mode);

double aliasing_frequency_hz(int order, const HeadModel& head);

// Soft-knee limiting curve applied per bin when a limiter is configured.
double soft_limit_db(double gain_db, const LimiterSettings& lim);

// Band gains (a_hat_interp - a_of_interp, dB) interpolated to the linear bin
// grid, then optionally limited, then faded to 0 below the aliasing region.
CorrectionFilterSet design_correction(const AuditorySpectrumSet& a_hat_interp,
                                      const AuditorySpectrumSet& a_of_interp,
                                      const McaConfig& cfg, int num_bins,
                                      double sample_rate);

HrtfSet apply_correction(const HrtfSet& set, const CorrectionFilterSet& filters);

// Minimum-phase spectrum with the given per-bin magnitude gains (dB),
// real-cepstrum construction on an 8x zero-padded grid.
std::vector<std::complex<double>> minimum_phase_spectrum(
    const std::vector<double>& gains_db);

McaResult mca_upsample(const HrirSet& sparse, const McaConfig& cfg);

}  // namespace hrtfup
