#include "hrtfup/pipeline.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "hrtfup/errors.hpp"
#include "hrtfup/fft.hpp"

namespace hrtfup {

namespace {

constexpr double kPi = 3.14159265358979323846;

HrtfSet apply_stf(const HrtfSet& set, const HeadModel& head, bool divide) {
  set.validate();
  const StfSet stf =
      sphere_transfer_function(head, set.grid, set.num_bins, set.sample_rate_hz);
  HrtfSet out = set;
  for (int ear = 0; ear < 2; ++ear) {
    if (divide) {
      out.spectra[ear] = set.spectra[ear].cwiseQuotient(stf.spectra[ear]);
    } else {
      out.spectra[ear] = set.spectra[ear].cwiseProduct(stf.spectra[ear]);
    }
    if (!out.spectra[ear].allFinite()) {
      throw NumericError(divide ? "align: non-finite result"
                                : "align_inverse: non-finite result");
    }
  }
  return out;
}

}  // namespace

HrtfSet align(const HrtfSet& set, const HeadModel& head) {
  return apply_stf(set, head, true);
}

HrtfSet align_inverse(const HrtfSet& set, const HeadModel& head) {
  return apply_stf(set, head, false);
}

HrtfSet interpolate_sh(const HrtfSet& set, int order, const SphericalGrid& target,
                       ShMode mode) {
  HrtfSet out = sh_inverse(sh_transform(set, order, mode), target);
  out.metadata = set.metadata;
  return out;
}

AuditorySpectrumSet interpolate_auditory(const AuditorySpectrumSet& set, int order,
                                         const SphericalGrid& target, ShMode mode) {
  AuditorySpectrumSet out;
  out.grid = target;
  out.center_freqs_hz = set.center_freqs_hz;
  for (int ear = 0; ear < 2; ++ear) {
    out.values_db[ear] = sh_inverse_real(
        sh_transform_real(set.values_db[ear], set.grid, order, mode), target, order);
  }
  return out;
}

double aliasing_frequency_hz(int order, const HeadModel& head) {
  return order * head.speed_of_sound_mps / (2.0 * kPi * head.radius_m);
}

double soft_limit_db(double gain_db, const LimiterSettings& lim) {
  const double T = lim.limit_db, W = lim.knee_db;
  const double two_delta = 2.0 * (gain_db - T);
  if (W > 0.0 && std::abs(two_delta) <= W) {
    const double over = gain_db - T + W / 2.0;
    return gain_db - over * over / (2.0 * W);
  }
  if (two_delta > 0.0) return T;
  return gain_db;
}

CorrectionFilterSet design_correction(const AuditorySpectrumSet& a_hat_interp,
                                      const AuditorySpectrumSet& a_of_interp,
                                      const McaConfig& cfg, int num_bins,
                                      double sample_rate) {
  if (a_hat_interp.center_freqs_hz.size() != a_of_interp.center_freqs_hz.size()) {
    throw ValidationError("design_correction: band count mismatch");
  }
  if (a_hat_interp.grid.size() != a_of_interp.grid.size()) {
    throw ValidationError("design_correction: grid size mismatch");
  }
  const int nbands = static_cast<int>(a_hat_interp.center_freqs_hz.size());
  const int ndir = static_cast<int>(a_hat_interp.grid.size());
  const int ir_len = 2 * (num_bins - 1);

  cfg.head.validate();
  CorrectionFilterSet out;
  out.grid = a_hat_interp.grid;
  out.aliasing_freq_hz = aliasing_frequency_hz(cfg.sparse_order, cfg.head);
  out.fade_enabled = cfg.enable_aliasing_fade;
  out.fade_low_hz = cfg.enable_aliasing_fade
                        ? out.aliasing_freq_hz * std::pow(2.0, -1.0 / 3.0)
                        : 0.0;
  out.limiter = cfg.limiter;
  out.phase_mode = cfg.phase_mode;
  out.sample_rate_hz = sample_rate;
  out.num_bins = num_bins;

  // band center frequencies on the ERB-number axis for the bin interpolation
  std::vector<double> band_erbn(nbands);
  for (int b = 0; b < nbands; ++b) {
    band_erbn[b] = erb_number(a_hat_interp.center_freqs_hz[b]);
  }
  std::vector<double> bin_erbn(num_bins);
  for (int k = 0; k < num_bins; ++k) {
    bin_erbn[k] = erb_number(sample_rate * k / ir_len);
  }

  const double f_a = out.aliasing_freq_hz;
  const double f_lo = out.fade_low_hz;
  for (int ear = 0; ear < 2; ++ear) {
    Eigen::MatrixXd band_gains =
        a_hat_interp.values_db[ear] - a_of_interp.values_db[ear];
    out.gains_db[ear].resize(ndir, num_bins);
    for (int d = 0; d < ndir; ++d) {
      for (int k = 0; k < num_bins; ++k) {
        const double x = bin_erbn[k];
        double g;
        if (x <= band_erbn.front()) {
          g = band_gains(d, 0);
        } else if (x >= band_erbn.back()) {
          g = band_gains(d, nbands - 1);
        } else {
          const auto it =
              std::upper_bound(band_erbn.begin(), band_erbn.end(), x);
          const int hi = static_cast<int>(it - band_erbn.begin());
          const int lo = hi - 1;
          const double t = (x - band_erbn[lo]) / (band_erbn[hi] - band_erbn[lo]);
          g = (1.0 - t) * band_gains(d, lo) + t * band_gains(d, hi);
        }
        if (cfg.limiter) g = soft_limit_db(g, *cfg.limiter);
        if (cfg.enable_aliasing_fade) {
          const double f = sample_rate * k / ir_len;
          if (f <= f_lo) {
            g = 0.0;
          } else if (f < f_a) {
            g = (f - f_lo) / (f_a - f_lo) * g;
          }
        }
        out.gains_db[ear](d, k) = g;
      }
    }
    if (!out.gains_db[ear].allFinite()) {
      throw NumericError("design_correction: non-finite gains");
    }
  }
  return out;
}

std::vector<std::complex<double>> minimum_phase_spectrum(
    const std::vector<double>& gains_db) {
  const int num_bins = static_cast<int>(gains_db.size());
  const int ir_len = 2 * (num_bins - 1);
  const int pad = 8;
  const int fine_len = pad * ir_len;
  const int fine_bins = fine_len / 2 + 1;

  // dB gains onto the fine grid, linear in bin index
  std::vector<std::complex<double>> logmag(fine_bins);
  constexpr double kDbToLn = 2.302585092994046 / 20.0;  // ln(10)/20
  for (int k = 0; k < fine_bins; ++k) {
    const double pos = static_cast<double>(k) / pad;
    const int lo = std::min(static_cast<int>(pos), num_bins - 2);
    const double t = pos - lo;
    const double db = (1.0 - t) * gains_db[lo] + t * gains_db[lo + 1];
    logmag[k] = db * kDbToLn;
  }

  Fft fft(fine_len);
  const auto cep = fft.inverse(logmag);
  std::vector<double> folded(fine_len, 0.0);
  folded[0] = cep[0];
  for (int n = 1; n < fine_len / 2; ++n) folded[n] = 2.0 * cep[n];
  folded[fine_len / 2] = cep[fine_len / 2];
  const auto log_min = fft.forward(folded);

  std::vector<std::complex<double>> out(num_bins);
  for (int k = 0; k < num_bins; ++k) out[k] = std::exp(log_min[k * pad]);
  return out;
}

HrtfSet apply_correction(const HrtfSet& set, const CorrectionFilterSet& filters) {
  set.validate();
  if (set.num_bins != filters.num_bins ||
      set.grid.size() != filters.grid.size()) {
    throw ValidationError("apply_correction: set and filters do not match");
  }
  for (int ear = 0; ear < 2; ++ear) {
    if (!filters.gains_db[ear].allFinite()) {
      throw ValidationError("apply_correction: non-finite gain");
    }
  }
  HrtfSet out = set;
  const int ndir = static_cast<int>(set.grid.size());
  if (filters.phase_mode == PhaseMode::Zero) {
    for (int ear = 0; ear < 2; ++ear) {
      out.spectra[ear] = set.spectra[ear].cwiseProduct(
          (filters.gains_db[ear] * (std::log(10.0) / 20.0))
              .array()
              .exp()
              .matrix()
              .cast<std::complex<double>>());
    }
  } else {
    std::vector<double> gains(set.num_bins);
    for (int ear = 0; ear < 2; ++ear) {
      for (int d = 0; d < ndir; ++d) {
        for (int k = 0; k < set.num_bins; ++k) gains[k] = filters.gains_db[ear](d, k);
        const auto spec = minimum_phase_spectrum(gains);
        for (int k = 0; k < set.num_bins; ++k) {
          out.spectra[ear](d, k) = set.spectra[ear](d, k) * spec[k];
        }
      }
    }
  }
  // keep the Hermitian representatives real
  for (int ear = 0; ear < 2; ++ear) {
    for (int d = 0; d < ndir; ++d) {
      out.spectra[ear](d, 0) = out.spectra[ear](d, 0).real();
      out.spectra[ear](d, set.num_bins - 1) =
          out.spectra[ear](d, set.num_bins - 1).real();
    }
    if (!out.spectra[ear].allFinite()) {
      throw NumericError("apply_correction: non-finite result");
    }
  }
  return out;
}

namespace {

template <typename F>
auto stage(const char* name, F&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    throw IoError(std::string("stage ") + name + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("stage ") + name + ": " + e.what());
  } catch (const NumericError& e) {
    throw NumericError(std::string("stage ") + name + ": " + e.what());
  }
}

}  // namespace

McaResult mca_upsample(const HrirSet& sparse, const McaConfig& cfg) {
  if (cfg.sparse_order < 1) {
    throw ValidationError("mca_upsample: sparse order must be >= 1");
  }
  if (cfg.target_grid.directions.empty()) {
    throw ValidationError("mca_upsample: empty target grid");
  }
  if (sparse.grid.nominal_order && *sparse.grid.nominal_order < cfg.sparse_order) {
    throw ValidationError("mca_upsample: sparse grid nominal order " +
                          std::to_string(*sparse.grid.nominal_order) +
                          " below configured order " +
                          std::to_string(cfg.sparse_order));
  }
  cfg.head.validate();

  const HrtfSet h = stage("fft", [&] { return fft_set(sparse); });
  const GammatoneBank bank = stage("auditory design", [&] {
    return design_bank(h.num_bins, h.sample_rate_hz);
  });
  const AuditorySpectrumSet a_h =
      stage("auditory filter", [&] { return auditory_filter(h, bank); });

  const HrtfSet h_t = stage("align", [&] { return align(h, cfg.head); });
  const HrtfSet h_t_dense = stage("interpolate", [&] {
    return interpolate_sh(h_t, cfg.sparse_order, cfg.target_grid, cfg.sh_mode);
  });
  const HrtfSet h_dense =
      stage("align inverse", [&] { return align_inverse(h_t_dense, cfg.head); });

  const AuditorySpectrumSet a_h_dense = stage("auditory interpolate", [&] {
    return interpolate_auditory(a_h, cfg.sparse_order, cfg.target_grid, cfg.sh_mode);
  });
  const AuditorySpectrumSet a_of_dense = stage("auditory of interpolated", [&] {
    return auditory_filter(h_dense, bank);
  });

  McaResult result;
  result.filters = stage("correction design", [&] {
    return design_correction(a_h_dense, a_of_dense, cfg, h.num_bins, h.sample_rate_hz);
  });
  const HrtfSet h_corrected = stage("correction apply", [&] {
    return apply_correction(h_dense, result.filters);
  });

  result.dense_uncorrected = stage("inverse fft", [&] { return ifft_set(h_dense); });
  result.dense_corrected = stage("inverse fft", [&] { return ifft_set(h_corrected); });
  result.dense_uncorrected.metadata = sparse.metadata;
  result.dense_corrected.metadata = sparse.metadata;
  return result;
}

}  // namespace hrtfup
