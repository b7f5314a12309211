#include "hrtfup/sphere.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "hrtfup/errors.hpp"
#include "hrtfup/fft.hpp"

namespace hrtfup {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Regression weights from head half-width/half-height/half-depth to the
// acoustically effective sphere radius (Algazi-style fit).
constexpr double kRadiusWeightWidth = 0.51;
constexpr double kRadiusWeightHeight = 0.019;
constexpr double kRadiusWeightDepth = 0.18;
constexpr double kRadiusOffsetM = 0.032;

constexpr int kSeriesHardCap = 400;

// Spherical Bessel j_n for n = 0..nmax by Miller's downward recurrence,
// y_n upward. Stable for the ka range the hard cap admits.
void sph_bessel_jy(int nmax, double x, std::vector<double>& j, std::vector<double>& y) {
  j.assign(nmax + 1, 0.0);
  y.assign(nmax + 1, 0.0);
  const double sx = std::sin(x), cx = std::cos(x);
  y[0] = -cx / x;
  if (nmax >= 1) y[1] = -cx / (x * x) - sx / x;
  for (int n = 1; n < nmax; ++n) {
    y[n + 1] = (2.0 * n + 1.0) / x * y[n] - y[n - 1];
  }
  const int start = nmax + 16 + static_cast<int>(1.5 * x);
  double jp2 = 0.0, jp1 = 1e-300;
  std::vector<double> tmp(nmax + 1, 0.0);
  for (int n = start; n >= 1; --n) {
    const double jn = (2.0 * n + 1.0) / x * jp1 - jp2;
    jp2 = jp1;
    jp1 = jn;
    if (n - 1 <= nmax) tmp[n - 1] = jn;
    if (std::abs(jp1) > 1e280) {  // rescale to avoid overflow
      jp1 *= 1e-280;
      jp2 *= 1e-280;
      for (auto& v : tmp) v *= 1e-280;
    }
  }
  const double j0 = sx / x;
  const double scale = j0 / tmp[0];
  for (int n = 0; n <= nmax; ++n) j[n] = tmp[n] * scale;
}

int adaptive_terms(double ka, double truncation_scale) {
  const double e = 2.718281828459045;
  return static_cast<int>(std::ceil((e * ka / 2.0 + 10.0) * truncation_scale));
}

}  // namespace

void HeadModel::validate() const {
  if (!(radius_m > 0)) throw ValidationError("HeadModel: radius must be positive");
  if (!allow_radius_outside_sanity && (radius_m < 0.05 || radius_m > 0.15)) {
    throw ValidationError("HeadModel: radius " + std::to_string(radius_m) +
                          " m outside sanity window [0.05, 0.15]");
  }
  if (!(speed_of_sound_mps > 0)) {
    throw ValidationError("HeadModel: speed of sound must be positive");
  }
}

double optimal_head_radius(double width_m, double height_m, double depth_m) {
  if (!(width_m > 0 && height_m > 0 && depth_m > 0)) {
    throw ValidationError("optimal_head_radius: dimensions must be positive");
  }
  return kRadiusWeightWidth * (width_m / 2.0) + kRadiusWeightHeight * (height_m / 2.0) +
         kRadiusWeightDepth * (depth_m / 2.0) + kRadiusOffsetM;
}

StfSet sphere_transfer_function(const HeadModel& head, const SphericalGrid& grid,
                                int num_bins, double sample_rate,
                                double truncation_scale) {
  head.validate();
  if (num_bins < 2) throw ValidationError("sphere_transfer_function: num_bins must be >= 2");
  if (grid.directions.empty()) throw ValidationError("sphere_transfer_function: empty grid");

  StfSet out;
  out.grid = grid;
  out.sample_rate_hz = sample_rate;
  out.num_bins = num_bins;

  const int ndir = static_cast<int>(grid.size());
  const int ir_len = 2 * (num_bins - 1);
  const double r = head.radius_m;
  const double c = head.speed_of_sound_mps;
  const double ka_max = 2.0 * kPi * (sample_rate / 2.0) * r / c;
  const int nmax_total = adaptive_terms(ka_max, truncation_scale);
  if (nmax_total > kSeriesHardCap) {
    std::ostringstream os;
    os << "sphere_transfer_function: series needs " << nmax_total
       << " terms (> cap " << kSeriesHardCap << ") at ka = " << ka_max;
    throw NumericError(os.str());
  }

  // cos of the angle between incidence direction and each ear
  Eigen::MatrixXd cos_theta(ndir, 2);
  for (int ear = 0; ear < 2; ++ear) {
    const Direction ear_dir(head.ear_azimuths_deg[ear], head.ear_elevations_deg[ear]);
    const auto e = ear_dir.to_unit_xyz();
    for (int d = 0; d < ndir; ++d) {
      const auto v = grid.directions[d].to_unit_xyz();
      cos_theta(d, ear) = e[0] * v[0] + e[1] * v[1] + e[2] * v[2];
    }
  }

  // Legendre P_n(cos theta) for all n once per direction/ear
  std::vector<Eigen::MatrixXd> legendre(2, Eigen::MatrixXd(ndir, nmax_total + 1));
  for (int ear = 0; ear < 2; ++ear) {
    for (int d = 0; d < ndir; ++d) {
      const double u = cos_theta(d, ear);
      legendre[ear](d, 0) = 1.0;
      if (nmax_total >= 1) legendre[ear](d, 1) = u;
      for (int n = 1; n < nmax_total; ++n) {
        legendre[ear](d, n + 1) =
            ((2.0 * n + 1.0) * u * legendre[ear](d, n) - n * legendre[ear](d, n - 1)) /
            (n + 1.0);
      }
    }
  }

  for (int ear = 0; ear < 2; ++ear) {
    out.spectra[ear].resize(ndir, num_bins);
    out.spectra[ear].col(0).setConstant(std::complex<double>(1.0, 0.0));
  }

  std::vector<double> jn, yn;
  std::vector<std::complex<double>> cn(nmax_total + 1);
  for (int k = 1; k < num_bins; ++k) {
    const double f = sample_rate * k / ir_len;
    const double x = 2.0 * kPi * f * r / c;
    const int nmax = adaptive_terms(x, truncation_scale);
    sph_bessel_jy(nmax, x, jn, yn);
    // c_n = (-i)^n (2n+1) / h_n^(1)'(x)
    for (int n = 0; n <= nmax; ++n) {
      double jd, yd;
      if (n == 0) {
        jd = -jn[1];
        yd = -yn[1];
      } else {
        jd = jn[n - 1] - (n + 1.0) / x * jn[n];
        yd = yn[n - 1] - (n + 1.0) / x * yn[n];
      }
      const std::complex<double> hd(jd, yd);
      std::complex<double> mi_pow;  // (-i)^n
      switch (n & 3) {
        case 0: mi_pow = {1, 0}; break;
        case 1: mi_pow = {0, -1}; break;
        case 2: mi_pow = {-1, 0}; break;
        default: mi_pow = {0, 1}; break;
      }
      cn[n] = mi_pow * (2.0 * n + 1.0) / hd;
    }
    const std::complex<double> front = std::complex<double>(0.0, 1.0) / (x * x);
    for (int ear = 0; ear < 2; ++ear) {
      for (int d = 0; d < ndir; ++d) {
        std::complex<double> acc(0.0, 0.0);
        for (int n = 0; n <= nmax; ++n) acc += cn[n] * legendre[ear](d, n);
        out.spectra[ear](d, k) = std::conj(front * acc);
      }
    }
  }
  for (int ear = 0; ear < 2; ++ear) {
    if (!out.spectra[ear].allFinite()) {
      throw NumericError("sphere_transfer_function: non-finite spectrum");
    }
  }
  return out;
}

int synth_safety_shift(int ir_len) {
  return static_cast<int>(std::lround(0.45 * ir_len));
}

HrirSet synth_sphere_hrirs(const HeadModel& head, const SphericalGrid& grid,
                           int ir_len, double sample_rate) {
  if (ir_len < 16 || ir_len % 2 != 0) {
    throw ValidationError("synth_sphere_hrirs: ir_len must be even and >= 16");
  }
  const int num_bins = ir_len / 2 + 1;
  StfSet stf = sphere_transfer_function(head, grid, num_bins, sample_rate);

  const int shift = synth_safety_shift(ir_len);
  const int ndir = static_cast<int>(grid.size());
  HrirSet out;
  out.grid = grid;
  out.sample_rate_hz = sample_rate;
  out.metadata["safety_shift_samples"] = shift;
  out.metadata["head_radius_m"] = head.radius_m;
  out.metadata["speed_of_sound_mps"] = head.speed_of_sound_mps;

  Fft fft(ir_len);
  std::vector<std::complex<double>> spec(num_bins);
  double total_energy = 0.0, tail_energy = 0.0;
  const int tail_start = ir_len - ir_len / 10;
  for (int ear = 0; ear < 2; ++ear) {
    out.samples[ear].resize(ndir, ir_len);
    for (int d = 0; d < ndir; ++d) {
      for (int k = 0; k < num_bins; ++k) {
        const double phase = -2.0 * kPi * k * shift / ir_len;
        spec[k] = stf.spectra[ear](d, k) *
                  std::complex<double>(std::cos(phase), std::sin(phase));
      }
      spec[num_bins - 1] = spec[num_bins - 1].real();
      const auto ir = fft.inverse(spec);
      for (int t = 0; t < ir_len; ++t) {
        out.samples[ear](d, t) = ir[t];
        total_energy += ir[t] * ir[t];
        if (t >= tail_start) tail_energy += ir[t] * ir[t];
      }
    }
  }
  const double tail_db = 10.0 * std::log10(tail_energy / total_energy);
  if (!(tail_db < -60.0)) {
    std::ostringstream os;
    os << "synth_sphere_hrirs: tail energy in the last 10% of the IRs is "
       << tail_db << " dB of total (threshold -60 dB); increase ir_len";
    throw NumericError(os.str());
  }
  return out;
}

double woodworth_itd(const HeadModel& head, double azimuth_deg) {
  const double az = Direction(azimuth_deg, 0.0).azimuth_deg * kPi / 180.0;
  const double wrapped = az > kPi ? az - 2.0 * kPi : az;  // (-pi, pi]
  const double lateral = std::abs(wrapped) <= kPi / 2.0 ? std::abs(wrapped)
                                                        : kPi - std::abs(wrapped);
  const double itd = head.radius_m / head.speed_of_sound_mps * (lateral + std::sin(lateral));
  return wrapped >= 0 ? itd : -itd;
}

}  // namespace hrtfup
