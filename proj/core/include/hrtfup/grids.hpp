#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hrtfup {

// Azimuth 0 = front, 90 = left, 180 = back, 270 = right; elevation 0 =
// horizontal, +90 = above. Azimuth is normalized to [0, 360).
struct Direction {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;

  Direction() = default;
  Direction(double az_deg, double el_deg);

  std::array<double, 3> to_unit_xyz() const;
  static Direction from_unit_xyz(double x, double y, double z);
};

double great_circle_distance(const Direction& a, const Direction& b);  // degrees

struct SphericalGrid {
  std::string name;
  std::vector<Direction> directions;
  std::vector<double> weights;  // empty means no quadrature weights
  std::optional<int> nominal_order;

  bool has_weights() const { return !weights.empty(); }
  std::size_t size() const { return directions.size(); }

  // Checks weight count/positivity/sum (normalizing the sum to 1) and
  // rejects duplicate directions. Built-in rules with published negative
  // weights pass allow_nonpositive_weights.
  void validate(bool allow_nonpositive_weights = false);
};

SphericalGrid lebedev_grid(int order);
SphericalGrid fliege_grid(int num_points);
SphericalGrid horizontal_grid(double step_deg);

std::vector<int> lebedev_supported_orders();
std::vector<int> fliege_supported_sizes();

// JSON grid file: {"name", "nominal_order", "directions": [[az, el]...],
// "weights": [...]} with alphabetically ordered keys.
SphericalGrid load_grid(const std::string& path);
void save_grid(const SphericalGrid& grid, const std::string& path);
std::string grid_to_json(const SphericalGrid& grid);
SphericalGrid grid_from_json(const std::string& text, const std::string& origin);

}  // namespace hrtfup
