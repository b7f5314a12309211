#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "hrtfup/grids.hpp"
#include "hrtfup/sets.hpp"

namespace hrtfup {

struct HeadModel {
  double radius_m = 0.0875;
  std::array<double, 2> ear_azimuths_deg = {90.0, 270.0};
  std::array<double, 2> ear_elevations_deg = {0.0, 0.0};
  double speed_of_sound_mps = 343.0;
  bool allow_radius_outside_sanity = false;

  void validate() const;
};

// Regression from head half-dimensions to the acoustically effective
// sphere radius (coefficients pinned in sphere.cpp).
double optimal_head_radius(double width_m, double height_m, double depth_m);

struct StfSet {
  SphericalGrid grid;
  double sample_rate_hz = 0.0;
  int num_bins = 0;
  std::array<Eigen::MatrixXcd, 2> spectra;  // per ear: directions x bins
};

// Plane-wave rigid-sphere surface pressure at each ear for each incidence
// direction, on linear frequencies 0..fs/2. DC bin forced to 1+0i.
// truncation_scale multiplies the adaptive series length (tests only).
StfSet sphere_transfer_function(const HeadModel& head, const SphericalGrid& grid,
                                int num_bins, double sample_rate,
                                double truncation_scale = 1.0);

// Inverse FFT of the STF spectra with a circular-shift safety delay of
// round(0.45 * ir_len) samples (recorded in metadata). Errors if the tail
// energy guard trips.
HrirSet synth_sphere_hrirs(const HeadModel& head, const SphericalGrid& grid,
                           int ir_len, double sample_rate);

// Safety delay used by synth_sphere_hrirs, in samples.
int synth_safety_shift(int ir_len);

// Spherical-head time-of-arrival difference (Woodworth): (r/c)(sin T + T)
// for a horizontal source at the given azimuth, seconds, left minus right.
double woodworth_itd(const HeadModel& head, double azimuth_deg);

}  // namespace hrtfup
