#include "hrtfup/auditory.hpp"

#include <cmath>
#include <complex>

#include "hrtfup/errors.hpp"
#include "hrtfup/sets.hpp"

namespace hrtfup {

double erb_bandwidth_hz(double f_hz) {
  return 24.7 * (4.37 * f_hz / 1000.0 + 1.0);
}

double erb_number(double f_hz) {
  return 21.4 * std::log10(1.0 + 0.00437 * f_hz);
}

double erb_number_to_hz(double erbn) {
  return (std::pow(10.0, erbn / 21.4) - 1.0) / 0.00437;
}

GammatoneBank design_bank(int num_bins, double sample_rate, int num_bands,
                          double f_low, double f_high) {
  if (num_bands < 2) throw ValidationError("design_bank: num_bands must be >= 2");
  if (!(f_low < f_high && f_high <= sample_rate / 2.0)) {
    throw ValidationError("design_bank: need f_low < f_high <= sample_rate/2");
  }
  if (num_bins < 2) throw ValidationError("design_bank: num_bins must be >= 2");

  GammatoneBank bank;
  bank.num_bands = num_bands;
  bank.f_low_hz = f_low;
  bank.f_high_hz = f_high;
  bank.num_bins = num_bins;
  bank.sample_rate_hz = sample_rate;

  const double e_lo = erb_number(f_low), e_hi = erb_number(f_high);
  bank.center_freqs_hz.resize(num_bands);
  for (int b = 0; b < num_bands; ++b) {
    const double t = static_cast<double>(b) / (num_bands - 1);
    bank.center_freqs_hz[b] = erb_number_to_hz(e_lo + t * (e_hi - e_lo));
  }
  bank.center_freqs_hz.front() = f_low;
  bank.center_freqs_hz.back() = f_high;

  const int ir_len = 2 * (num_bins - 1);
  bank.mag_sq.resize(num_bands, num_bins);
  for (int b = 0; b < num_bands; ++b) {
    const double fc = bank.center_freqs_hz[b];
    const double bw = 1.019 * erb_bandwidth_hz(fc);
    for (int k = 0; k < num_bins; ++k) {
      const double f = sample_rate * k / ir_len;
      const std::complex<double> lo(1.0, (f - fc) / bw);
      const std::complex<double> hi(1.0, (f + fc) / bw);
      const std::complex<double> g = 1.0 / std::pow(lo, 4) + 1.0 / std::pow(hi, 4);
      bank.mag_sq(b, k) = std::norm(g);
    }
    const double peak = bank.mag_sq.row(b).maxCoeff();
    bank.mag_sq.row(b) /= peak;

    int peak_bin;
    bank.mag_sq.row(b).maxCoeff(&peak_bin);
    int nearest = static_cast<int>(std::lround(fc * ir_len / sample_rate));
    if (nearest > num_bins - 1) nearest = num_bins - 1;
    if (std::abs(peak_bin - nearest) > 1) {
      throw NumericError("design_bank: band " + std::to_string(b) +
                         " peaks more than one bin from its center frequency");
    }
  }
  return bank;
}

AuditorySpectrumSet auditory_filter(const HrtfSet& spectra, const GammatoneBank& bank) {
  if (spectra.num_bins != bank.num_bins) {
    throw ValidationError("auditory_filter: spectra have " +
                          std::to_string(spectra.num_bins) + " bins, bank expects " +
                          std::to_string(bank.num_bins));
  }
  AuditorySpectrumSet out;
  out.grid = spectra.grid;
  out.center_freqs_hz = bank.center_freqs_hz;
  const double floor_energy = std::pow(10.0, kAuditoryFloorDb / 10.0);
  for (int ear = 0; ear < 2; ++ear) {
    const Eigen::MatrixXd energy = spectra.spectra[ear].cwiseAbs2();
    Eigen::MatrixXd bands = energy * bank.mag_sq.transpose();  // dirs x bands
    out.values_db[ear] = (bands.array().max(floor_energy)).log10() * 10.0;
  }
  return out;
}

}  // namespace hrtfup
