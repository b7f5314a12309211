#include "hrtfup/sets.hpp"

#include <string>
#include <vector>

#include "hrtfup/errors.hpp"
#include "hrtfup/fft.hpp"

namespace hrtfup {

void HrtfSet::validate() const {
  if (num_bins < 2) throw ValidationError("HrtfSet: num_bins must be >= 2");
  for (int ear = 0; ear < 2; ++ear) {
    if (spectra[ear].rows() != static_cast<Eigen::Index>(grid.size()) ||
        spectra[ear].cols() != num_bins) {
      throw ValidationError("HrtfSet: spectra shape does not match grid/bins");
    }
    if (!spectra[ear].allFinite()) throw NumericError("HrtfSet: non-finite spectra");
  }
}

void HrirSet::validate() const {
  if (ir_length() < 2) throw ValidationError("HrirSet: IR length must be >= 2");
  for (int ear = 0; ear < 2; ++ear) {
    if (samples[ear].rows() != static_cast<Eigen::Index>(grid.size()) ||
        samples[ear].cols() != ir_length()) {
      throw ValidationError("HrirSet: sample shape does not match grid/length");
    }
    if (!samples[ear].allFinite()) throw NumericError("HrirSet: non-finite samples");
  }
}

HrtfSet fft_set(const HrirSet& irs) {
  irs.validate();
  const int T = irs.ir_length();
  const int ndir = static_cast<int>(irs.grid.size());
  HrtfSet out;
  out.grid = irs.grid;
  out.sample_rate_hz = irs.sample_rate_hz;
  out.num_bins = T / 2 + 1;
  out.metadata = irs.metadata;
  Fft fft(T);
  std::vector<double> x(T);
  for (int ear = 0; ear < 2; ++ear) {
    out.spectra[ear].resize(ndir, out.num_bins);
    for (int d = 0; d < ndir; ++d) {
      for (int t = 0; t < T; ++t) x[t] = irs.samples[ear](d, t);
      const auto spec = fft.forward(x);
      for (int k = 0; k < out.num_bins; ++k) out.spectra[ear](d, k) = spec[k];
    }
  }
  return out;
}

HrirSet ifft_set(const HrtfSet& spectra) {
  spectra.validate();
  const int T = spectra.ir_length();
  const int ndir = static_cast<int>(spectra.grid.size());
  HrirSet out;
  out.grid = spectra.grid;
  out.sample_rate_hz = spectra.sample_rate_hz;
  out.metadata = spectra.metadata;
  Fft fft(T);
  std::vector<std::complex<double>> spec(spectra.num_bins);
  for (int ear = 0; ear < 2; ++ear) {
    out.samples[ear].resize(ndir, T);
    for (int d = 0; d < ndir; ++d) {
      for (int k = 0; k < spectra.num_bins; ++k) spec[k] = spectra.spectra[ear](d, k);
      const auto ir = fft.inverse(spec);
      for (int t = 0; t < T; ++t) out.samples[ear](d, t) = ir[t];
    }
  }
  return out;
}

}  // namespace hrtfup
