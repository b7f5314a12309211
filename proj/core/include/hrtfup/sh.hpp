#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hrtfup/grids.hpp"

namespace hrtfup {

struct HrtfSet;

enum class ShMode { Quadrature, LeastSquares };

// Real fully-normalized spherical harmonics without the Condon-Shortley
// phase. Column (n, m) lives at index n^2 + n + m.
struct ShBasisMatrix {
  int order = 0;
  std::vector<Direction> directions;
  Eigen::MatrixXd values;  // directions x (order+1)^2
};

struct ShCoefficients {
  int order = 0;
  int num_bins = 0;
  double sample_rate_hz = 0.0;
  std::array<Eigen::MatrixXcd, 2> data;  // per ear: (order+1)^2 x bins
};

ShBasisMatrix sh_basis(int order, const std::vector<Direction>& directions);

ShCoefficients sh_transform(const HrtfSet& set, int order, ShMode mode);
HrtfSet sh_inverse(const ShCoefficients& coeffs, const SphericalGrid& target);

// Same transforms for real direction-indexed fields (rows = directions).
Eigen::MatrixXd sh_transform_real(const Eigen::MatrixXd& field,
                                  const SphericalGrid& grid, int order,
                                  ShMode mode);
Eigen::MatrixXd sh_inverse_real(const Eigen::MatrixXd& coeffs,
                                const SphericalGrid& target, int order);

}  // namespace hrtfup
