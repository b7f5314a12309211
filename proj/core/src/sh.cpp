#include "hrtfup/sh.hpp"

#include <cmath>
#include <string>

#include "hrtfup/errors.hpp"
#include "hrtfup/sets.hpp"

namespace hrtfup {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fully normalized associated Legendre values Q_nm(u) such that
// Y_n0 = Q_n0 and Y_nm = sqrt(2) Q_nm cos/sin(m az). Stable n-upward
// recursion with normalization folded in (no Condon-Shortley phase).
void normalized_legendre(int order, double u, double s, Eigen::VectorXd& q) {
  const int cols = (order + 1) * (order + 2) / 2;
  q.resize(cols);
  auto idx = [order](int n, int m) { return n * (n + 1) / 2 + m; };
  q[idx(0, 0)] = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 1; m <= order; ++m) {
    q[idx(m, m)] = q[idx(m - 1, m - 1)] * s *
                   std::sqrt((2.0 * m + 1.0) / (2.0 * m));
  }
  for (int m = 0; m < order; ++m) {
    q[idx(m + 1, m)] = u * std::sqrt(2.0 * m + 3.0) * q[idx(m, m)];
  }
  for (int m = 0; m <= order; ++m) {
    for (int n = m + 2; n <= order; ++n) {
      const double a = std::sqrt((4.0 * n * n - 1.0) / (static_cast<double>(n) * n - m * m));
      const double b = std::sqrt(((n - 1.0) * (n - 1.0) - m * m) /
                                 (4.0 * (n - 1.0) * (n - 1.0) - 1.0));
      q[idx(n, m)] = a * (u * q[idx(n - 1, m)] - b * q[idx(n - 2, m)]);
    }
  }
}

}  // namespace

ShBasisMatrix sh_basis(int order, const std::vector<Direction>& directions) {
  if (order < 0) throw ValidationError("sh_basis: order must be >= 0");
  ShBasisMatrix basis;
  basis.order = order;
  basis.directions = directions;
  const int ncols = (order + 1) * (order + 1);
  basis.values.resize(static_cast<Eigen::Index>(directions.size()), ncols);
  Eigen::VectorXd q;
  const double sqrt2 = std::sqrt(2.0);
  for (std::size_t d = 0; d < directions.size(); ++d) {
    const double az = directions[d].azimuth_deg * kPi / 180.0;
    const double el = directions[d].elevation_deg * kPi / 180.0;
    const double u = std::sin(el);  // cos(colatitude)
    const double s = std::cos(el);
    normalized_legendre(order, u, s, q);
    auto idx = [](int n, int m) { return n * (n + 1) / 2 + m; };
    for (int n = 0; n <= order; ++n) {
      basis.values(d, n * n + n) = q[idx(n, 0)];
      for (int m = 1; m <= n; ++m) {
        const double base = sqrt2 * q[idx(n, m)];
        basis.values(d, n * n + n + m) = base * std::cos(m * az);
        basis.values(d, n * n + n - m) = base * std::sin(m * az);
      }
    }
  }
  if (!basis.values.allFinite()) throw NumericError("sh_basis: non-finite values");
  return basis;
}

namespace {

struct TransformPlan {
  // x maps sampled values (directions) to coefficients: coeffs = M * samples
  Eigen::MatrixXd M;
};

TransformPlan make_plan(const SphericalGrid& grid, int order, ShMode mode) {
  const int ncoef = (order + 1) * (order + 1);
  const auto basis = sh_basis(order, grid.directions);
  TransformPlan plan;
  if (mode == ShMode::Quadrature) {
    if (!grid.has_weights()) {
      throw ValidationError("sh_transform: quadrature mode needs grid weights (grid '" +
                            grid.name + "')");
    }
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(
        grid.weights.data(), static_cast<Eigen::Index>(grid.weights.size()));
    plan.M = 4.0 * kPi * basis.values.transpose() * w.asDiagonal();
  } else {
    if (static_cast<int>(grid.size()) < ncoef) {
      throw ValidationError("sh_transform: least squares needs at least " +
                            std::to_string(ncoef) + " directions, grid '" + grid.name +
                            "' has " + std::to_string(grid.size()));
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(
        basis.values, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cond = sv(0) / sv(sv.size() - 1);
    if (!(cond < 1e8)) {
      throw NumericError("sh_transform: grid '" + grid.name + "' at order " +
                         std::to_string(order) + " is rank deficient (condition " +
                         std::to_string(cond) + ")");
    }
    plan.M = svd.matrixV() * sv.cwiseInverse().asDiagonal() * svd.matrixU().transpose();
  }
  return plan;
}

}  // namespace

ShCoefficients sh_transform(const HrtfSet& set, int order, ShMode mode) {
  const auto plan = make_plan(set.grid, order, mode);
  ShCoefficients out;
  out.order = order;
  out.num_bins = set.num_bins;
  out.sample_rate_hz = set.sample_rate_hz;
  for (int ear = 0; ear < 2; ++ear) {
    out.data[ear] = plan.M * set.spectra[ear];
    if (!out.data[ear].allFinite()) {
      throw NumericError("sh_transform: non-finite coefficients");
    }
  }
  return out;
}

HrtfSet sh_inverse(const ShCoefficients& coeffs, const SphericalGrid& target) {
  const auto basis = sh_basis(coeffs.order, target.directions);
  HrtfSet out;
  out.grid = target;
  out.sample_rate_hz = coeffs.sample_rate_hz;
  out.num_bins = coeffs.num_bins;
  for (int ear = 0; ear < 2; ++ear) {
    out.spectra[ear] = basis.values * coeffs.data[ear];
  }
  return out;
}

Eigen::MatrixXd sh_transform_real(const Eigen::MatrixXd& field,
                                  const SphericalGrid& grid, int order,
                                  ShMode mode) {
  if (field.rows() != static_cast<Eigen::Index>(grid.size())) {
    throw ValidationError("sh_transform_real: field rows do not match grid size");
  }
  const auto plan = make_plan(grid, order, mode);
  return plan.M * field;
}

Eigen::MatrixXd sh_inverse_real(const Eigen::MatrixXd& coeffs,
                                const SphericalGrid& target, int order) {
  const auto basis = sh_basis(order, target.directions);
  return basis.values * coeffs;
}

}  // namespace hrtfup
