#include "hrtfup/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hrtfup/errors.hpp"
#include "hrtfup/fft.hpp"

namespace hrtfup {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_matching(const SphericalGrid& a, const SphericalGrid& b,
                      const char* who) {
  if (a.size() != b.size()) {
    throw ValidationError(std::string(who) + ": grids differ in size");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (great_circle_distance(a.directions[i], b.directions[i]) > 1e-9) {
      throw ValidationError(std::string(who) + ": grids differ at direction " +
                            std::to_string(i));
    }
  }
}

}  // namespace

std::array<Eigen::MatrixXd, 2> magnitude_error(const HrtfSet& test,
                                               const HrtfSet& reference,
                                               const GammatoneBank& bank) {
  require_matching(test.grid, reference.grid, "magnitude_error");
  if (test.num_bins != reference.num_bins ||
      test.sample_rate_hz != reference.sample_rate_hz) {
    throw ValidationError("magnitude_error: bin/rate mismatch");
  }
  const auto at = auditory_filter(test, bank);
  const auto ar = auditory_filter(reference, bank);
  std::array<Eigen::MatrixXd, 2> out;
  for (int ear = 0; ear < 2; ++ear) {
    out[ear] = (at.values_db[ear] - ar.values_db[ear]).cwiseAbs();
  }
  return out;
}

double regional_average(const Eigen::VectorXd& values, const SphericalGrid& grid,
                        const Direction& center, double radius_deg) {
  if (!(radius_deg > 0.0 && radius_deg <= 180.0)) {
    throw ValidationError("regional_average: radius must be in (0, 180]");
  }
  if (values.size() != static_cast<Eigen::Index>(grid.size())) {
    throw ValidationError("regional_average: value count does not match grid");
  }
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (great_circle_distance(grid.directions[i], center) <= radius_deg) {
      sum += values(static_cast<Eigen::Index>(i));
      ++count;
    }
  }
  if (count == 0) throw ValidationError("regional_average: empty region");
  return sum / count;
}

double ild(const HrirSet& set, int direction_index) {
  if (direction_index < 0 || direction_index >= static_cast<int>(set.grid.size())) {
    throw ValidationError("ild: direction index out of range");
  }
  const double el = set.samples[kLeft].row(direction_index).squaredNorm();
  const double er = set.samples[kRight].row(direction_index).squaredNorm();
  if (!(er > 0.0)) throw NumericError("ild: zero-energy right channel");
  if (!(el > 0.0)) throw NumericError("ild: zero-energy left channel");
  return 10.0 * std::log10(el / er);
}

std::vector<Biquad> butterworth_lowpass_sos(int order, double cutoff_hz,
                                            double sample_rate) {
  if (order < 2 || order % 2 != 0) {
    throw ValidationError("butterworth_lowpass_sos: order must be even and >= 2");
  }
  if (!(cutoff_hz > 0 && cutoff_hz < sample_rate / 2)) {
    throw ValidationError("butterworth_lowpass_sos: cutoff out of range");
  }
  const double wc = 2.0 * sample_rate * std::tan(kPi * cutoff_hz / sample_rate);
  const double K = 2.0 * sample_rate;
  std::vector<Biquad> sos;
  for (int k = 0; k < order / 2; ++k) {
    const double ang = kPi * (2.0 * k + 1.0 + order) / (2.0 * order);
    const std::complex<double> p = wc * std::exp(std::complex<double>(0.0, ang));
    const double a_re = -2.0 * p.real();
    const double a2 = std::norm(p);
    const double b0 = wc * wc;
    const double d0 = K * K + a_re * K + a2;
    sos.push_back({b0 / d0, 2.0 * b0 / d0, b0 / d0, 2.0 * (a2 - K * K) / d0,
                   (K * K - a_re * K + a2) / d0});
  }
  return sos;
}

void sos_filter_inplace(const std::vector<Biquad>& sos, std::vector<double>& x) {
  for (const auto& s : sos) {
    double z1 = 0.0, z2 = 0.0;
    for (auto& v : x) {
      const double w = v - s.a1 * z1 - s.a2 * z2;
      v = s.b0 * w + s.b1 * z1 + s.b2 * z2;
      z2 = z1;
      z1 = w;
    }
  }
}

std::vector<double> resample_fft(const std::vector<double>& x, int factor) {
  if (factor < 1) throw ValidationError("resample_fft: factor must be >= 1");
  if (factor == 1) return x;
  const int n = static_cast<int>(x.size());
  if (n < 2 || n % 2 != 0) {
    throw ValidationError("resample_fft: length must be even and >= 2");
  }
  Fft fwd(n);
  const auto spec = fwd.forward(x);
  const int out_len = n * factor;
  std::vector<std::complex<double>> padded(out_len / 2 + 1,
                                           std::complex<double>(0.0, 0.0));
  for (int k = 0; k + 1 < static_cast<int>(spec.size()); ++k) padded[k] = spec[k];
  padded[spec.size() - 1] = spec.back() * 0.5;  // split the Nyquist bin
  Fft inv(out_len);
  auto y = inv.inverse(padded);
  for (auto& v : y) v *= factor;
  return y;
}

double estimate_toa(const std::vector<double>& ir, double sample_rate) {
  if (ir.empty()) throw ValidationError("estimate_toa: empty IR");
  bool silent = true;
  for (double v : ir) {
    if (v != 0.0) {
      silent = false;
      break;
    }
  }
  if (silent) throw NumericError("estimate_toa: silent IR");

  constexpr int kUpFactor = 10;
  constexpr double kCutoffHz = 3000.0;
  constexpr double kThresholdDb = -10.0;

  auto y = resample_fft(ir, kUpFactor);
  const double fs_up = sample_rate * kUpFactor;
  const auto sos = butterworth_lowpass_sos(8, kCutoffHz, fs_up);
  sos_filter_inplace(sos, y);

  double peak = 0.0;
  for (double v : y) peak = std::max(peak, std::abs(v));
  if (!(peak > 0.0)) throw NumericError("estimate_toa: filtered IR is zero");
  const double threshold = peak * std::pow(10.0, kThresholdDb / 20.0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (std::abs(y[i]) >= threshold) return static_cast<double>(i) / fs_up;
  }
  throw NumericError("estimate_toa: threshold never reached");
}

double itd(const HrirSet& set, int direction_index) {
  if (direction_index < 0 || direction_index >= static_cast<int>(set.grid.size())) {
    throw ValidationError("itd: direction index out of range");
  }
  const int T = set.ir_length();
  std::vector<double> l(T), r(T);
  for (int t = 0; t < T; ++t) {
    l[t] = set.samples[kLeft](direction_index, t);
    r[t] = set.samples[kRight](direction_index, t);
  }
  return estimate_toa(l, set.sample_rate_hz) - estimate_toa(r, set.sample_rate_hz);
}

Eigen::VectorXd itd_error(const HrirSet& test, const HrirSet& reference) {
  require_matching(test.grid, reference.grid, "itd_error");
  const int ndir = static_cast<int>(test.grid.size());
  Eigen::VectorXd out(ndir);
  for (int d = 0; d < ndir; ++d) {
    out(d) = std::abs(itd(test, d) - itd(reference, d)) * 1e6;
  }
  return out;
}

double JndCurve::itd_jnd_us(double azimuth_deg) const {
  double az = std::fmod(azimuth_deg, 360.0);
  if (az < 0) az += 360.0;
  // fold to [0, 180]: JND symmetric left/right
  if (az > 180.0) az = 360.0 - az;
  if (az <= 90.0) return 20.0 + (100.0 - 20.0) * az / 90.0;
  return 100.0 - (100.0 - 20.0) * (az - 90.0) / 90.0;
}

Eigen::VectorXd EvaluationReport::dg_direction_mean(int ear) const {
  return dg_db[ear].rowwise().mean();
}

double EvaluationReport::dg_global_mean(int ear) const {
  return dg_db[ear].mean();
}

JndSummary jnd_exceedance(const EvaluationReport& report, const JndCurve& jnd) {
  JndSummary s;
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    if (std::abs(report.grid.directions[i].elevation_deg) < 1e-6) {
      s.horizontal_indices.push_back(static_cast<int>(i));
    }
  }
  int ild_n = 0, itd_n = 0;
  for (int i : s.horizontal_indices) {
    const bool ild_ex = report.dild_db(i) > jnd.ild_jnd_db;
    const bool itd_ex =
        report.ditd_us(i) > jnd.itd_jnd_us(report.grid.directions[i].azimuth_deg);
    s.ild_exceeded.push_back(ild_ex);
    s.itd_exceeded.push_back(itd_ex);
    ild_n += ild_ex ? 1 : 0;
    itd_n += itd_ex ? 1 : 0;
  }
  if (!s.horizontal_indices.empty()) {
    s.ild_exceeded_fraction = static_cast<double>(ild_n) / s.horizontal_indices.size();
    s.itd_exceeded_fraction = static_cast<double>(itd_n) / s.horizontal_indices.size();
  }
  return s;
}

EvaluationReport evaluate_sets(const HrirSet& test, const HrirSet& reference,
                               const GammatoneBank& bank,
                               const std::string& subject_id) {
  require_matching(test.grid, reference.grid, "evaluate_sets");
  if (test.ir_length() != reference.ir_length() ||
      test.sample_rate_hz != reference.sample_rate_hz) {
    throw ValidationError("evaluate_sets: length/rate mismatch");
  }
  EvaluationReport rep;
  rep.subject_id = subject_id;
  rep.grid = test.grid;
  rep.band_fc_hz = bank.center_freqs_hz;
  rep.dg_db = magnitude_error(fft_set(test), fft_set(reference), bank);

  const int ndir = static_cast<int>(test.grid.size());
  rep.dild_db.resize(ndir);
  rep.ditd_us.resize(ndir);
  for (int d = 0; d < ndir; ++d) {
    rep.dild_db(d) = std::abs(ild(test, d) - ild(reference, d));
  }
  rep.ditd_us = itd_error(test, reference);
  return rep;
}

namespace {

void csv_number(std::ostream& os, double v) {
  std::ostringstream tmp;
  tmp.precision(12);
  tmp << v;
  os << tmp.str();
}

}  // namespace

void report_to_csv(const EvaluationReport& report, std::ostream& os) {
  os << "subject,ear,az_deg,el_deg,band_fc_hz,metric,value\n";
  const char* ear_names[2] = {"left", "right"};
  const int ndir = static_cast<int>(report.grid.size());
  const int nbands = static_cast<int>(report.band_fc_hz.size());
  for (int ear = 0; ear < 2; ++ear) {
    for (int d = 0; d < ndir; ++d) {
      const auto& dir = report.grid.directions[d];
      for (int b = 0; b < nbands; ++b) {
        os << report.subject_id << ',' << ear_names[ear] << ',';
        csv_number(os, dir.azimuth_deg);
        os << ',';
        csv_number(os, dir.elevation_deg);
        os << ',';
        csv_number(os, report.band_fc_hz[b]);
        os << ",dg_db,";
        csv_number(os, report.dg_db[ear](d, b));
        os << '\n';
      }
    }
  }
  for (int d = 0; d < ndir; ++d) {
    const auto& dir = report.grid.directions[d];
    os << report.subject_id << ",both,";
    csv_number(os, dir.azimuth_deg);
    os << ',';
    csv_number(os, dir.elevation_deg);
    os << ",,ild_db,";
    csv_number(os, report.dild_db(d));
    os << '\n';
  }
  for (int d = 0; d < ndir; ++d) {
    const auto& dir = report.grid.directions[d];
    os << report.subject_id << ",both,";
    csv_number(os, dir.azimuth_deg);
    os << ',';
    csv_number(os, dir.elevation_deg);
    os << ",,itd_us,";
    csv_number(os, report.ditd_us(d));
    os << '\n';
  }
}

std::string report_summary_json(const EvaluationReport& report, const JndCurve& jnd) {
  nlohmann::json j;
  j["subject"] = report.subject_id;
  j["num_directions"] = report.grid.size();
  j["num_bands"] = report.band_fc_hz.size();
  const char* ear_names[2] = {"left", "right"};
  for (int ear = 0; ear < 2; ++ear) {
    auto& je = j["dg_db"][ear_names[ear]];
    je["global_mean"] = report.dg_global_mean(ear);
    const auto dirmean = report.dg_direction_mean(ear);
    try {
      je["frontal_25deg"] =
          regional_average(dirmean, report.grid, Direction(0, 0), 25.0);
    } catch (const ValidationError&) {
    }
    try {
      je["contralateral_25deg"] =
          regional_average(dirmean, report.grid, Direction(270, 0), 25.0);
    } catch (const ValidationError&) {
    }
  }
  const auto s = jnd_exceedance(report, jnd);
  j["horizontal"]["num_directions"] = s.horizontal_indices.size();
  if (!s.horizontal_indices.empty()) {
    double ild_sum = 0.0, itd_sum = 0.0;
    for (int i : s.horizontal_indices) {
      ild_sum += report.dild_db(i);
      itd_sum += report.ditd_us(i);
    }
    j["horizontal"]["ild_mean_db"] = ild_sum / s.horizontal_indices.size();
    j["horizontal"]["itd_mean_us"] = itd_sum / s.horizontal_indices.size();
    j["horizontal"]["ild_jnd_exceeded_fraction"] = s.ild_exceeded_fraction;
    j["horizontal"]["itd_jnd_exceeded_fraction"] = s.itd_exceeded_fraction;
  }
  return j.dump(2) + "\n";
}

}  // namespace hrtfup
