#include "hrtfup/grids.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grid_data.hpp"
#include "hrtfup/errors.hpp"

namespace hrtfup {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }

double normalize_azimuth(double az) {
  double a = std::fmod(az, 360.0);
  if (a < 0) a += 360.0;
  // fmod can return 360.0 - epsilon rounding back up to 360
  if (a >= 360.0) a -= 360.0;
  return a;
}

}  // namespace

Direction::Direction(double az_deg, double el_deg)
    : azimuth_deg(normalize_azimuth(az_deg)), elevation_deg(el_deg) {
  if (!(el_deg >= -90.0 && el_deg <= 90.0)) {
    throw ValidationError("Direction: elevation " + std::to_string(el_deg) +
                          " outside [-90, 90]");
  }
}

std::array<double, 3> Direction::to_unit_xyz() const {
  const double az = deg2rad(azimuth_deg);
  const double el = deg2rad(elevation_deg);
  return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
}

Direction Direction::from_unit_xyz(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  const double el = std::asin(std::clamp(z / r, -1.0, 1.0));
  double az = std::atan2(y, x);
  return Direction(rad2deg(az), rad2deg(el));
}

double great_circle_distance(const Direction& a, const Direction& b) {
  const auto u = a.to_unit_xyz();
  const auto v = b.to_unit_xyz();
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return rad2deg(std::acos(std::clamp(dot, -1.0, 1.0)));
}

void SphericalGrid::validate(bool allow_nonpositive_weights) {
  if (directions.empty()) {
    throw ValidationError("grid '" + name + "': no directions");
  }
  if (has_weights()) {
    if (weights.size() != directions.size()) {
      throw ValidationError("grid '" + name + "': " + std::to_string(weights.size()) +
                            " weights for " + std::to_string(directions.size()) +
                            " directions");
    }
    if (!allow_nonpositive_weights) {
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0)) {
          throw ValidationError("grid '" + name + "': weight " + std::to_string(i) +
                                " is not positive");
        }
      }
    }
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-10) {
      throw ValidationError("grid '" + name + "': weights sum to " +
                            std::to_string(sum) + ", expected 1");
    }
    for (auto& w : weights) w /= sum;
  }
  constexpr double kDupThresholdDeg = 1e-9 * 180.0 / kPi;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    for (std::size_t j = i + 1; j < directions.size(); ++j) {
      if (great_circle_distance(directions[i], directions[j]) < kDupThresholdDeg) {
        throw ValidationError("grid '" + name + "': duplicate directions " +
                              std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

namespace {

// Octahedral orbit expansion for the classic Lebedev rules. Points are
// appended as unit xyz plus the orbit weight.
void expand_orbit(const detail::LebedevRule& r,
                  std::vector<std::array<double, 4>>& pts) {
  const double w = r.w;
  auto add = [&](double x, double y, double z) {
    pts.push_back({x, y, z, w});
  };
  switch (r.code) {
    case 1: {  // 6 points (+-1, 0, 0)
      add(1, 0, 0); add(-1, 0, 0);
      add(0, 1, 0); add(0, -1, 0);
      add(0, 0, 1); add(0, 0, -1);
      break;
    }
    case 2: {  // 12 points (0, +-a, +-a), a = 1/sqrt(2)
      const double a = 1.0 / std::sqrt(2.0);
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          add(0, s1 * a, s2 * a);
          add(s1 * a, 0, s2 * a);
          add(s1 * a, s2 * a, 0);
        }
      break;
    }
    case 3: {  // 8 points (+-a, +-a, +-a), a = 1/sqrt(3)
      const double a = 1.0 / std::sqrt(3.0);
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1}) add(s1 * a, s2 * a, s3 * a);
      break;
    }
    case 4: {  // 24 points (+-a, +-a, +-b), b = sqrt(1 - 2a^2)
      const double a = r.a;
      const double b = std::sqrt(std::max(0.0, 1.0 - 2.0 * a * a));
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1}) {
            add(s1 * a, s2 * a, s3 * b);
            add(s1 * a, s3 * b, s2 * a);
            add(s3 * b, s1 * a, s2 * a);
          }
      break;
    }
    case 5: {  // 24 points (+-a, +-b, 0), b = sqrt(1 - a^2)
      const double a = r.a;
      const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          add(s1 * a, s2 * b, 0);
          add(s1 * b, s2 * a, 0);
          add(s1 * a, 0, s2 * b);
          add(s1 * b, 0, s2 * a);
          add(0, s1 * a, s2 * b);
          add(0, s1 * b, s2 * a);
        }
      break;
    }
    case 6: {  // 48 points (+-a, +-b, +-c), c = sqrt(1 - a^2 - b^2)
      const double a = r.a;
      const double b = r.b;
      const double c = std::sqrt(std::max(0.0, 1.0 - a * a - b * b));
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1}) {
            add(s1 * a, s2 * b, s3 * c);
            add(s1 * a, s3 * c, s2 * b);
            add(s2 * b, s1 * a, s3 * c);
            add(s2 * b, s3 * c, s1 * a);
            add(s3 * c, s1 * a, s2 * b);
            add(s3 * c, s2 * b, s1 * a);
          }
      break;
    }
    default:
      throw NumericError("lebedev: unknown orbit code " + std::to_string(r.code));
  }
}

const detail::LebedevRuleSet* find_lebedev(int order) {
  for (int i = 0; i < detail::kNumLebedevRuleSets; ++i) {
    if (detail::kLebedevRuleSets[i].order == order) return &detail::kLebedevRuleSets[i];
  }
  return nullptr;
}

}  // namespace

std::vector<int> lebedev_supported_orders() {
  std::vector<int> v;
  for (int i = 0; i < detail::kNumLebedevRuleSets; ++i)
    v.push_back(detail::kLebedevRuleSets[i].order);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> fliege_supported_sizes() {
  std::vector<int> v;
  for (int i = 0; i < detail::kNumFliegeSets; ++i)
    v.push_back(detail::kFliegeSets[i].num_points);
  std::sort(v.begin(), v.end());
  return v;
}

SphericalGrid lebedev_grid(int order) {
  const auto* set = find_lebedev(order);
  if (!set) {
    std::ostringstream os;
    os << "lebedev_grid: unsupported order " << order << "; supported orders:";
    for (int o : lebedev_supported_orders()) os << " " << o;
    throw ValidationError(os.str());
  }
  std::vector<std::array<double, 4>> pts;
  pts.reserve(set->num_points);
  for (int i = 0; i < set->num_rules; ++i) expand_orbit(set->rules[i], pts);
  if (static_cast<int>(pts.size()) != set->num_points) {
    throw NumericError("lebedev_grid: generated " + std::to_string(pts.size()) +
                       " points, expected " + std::to_string(set->num_points));
  }
  SphericalGrid g;
  g.name = "lebedev-" + std::to_string(set->num_points);
  g.nominal_order = order;
  for (const auto& p : pts) {
    g.directions.push_back(Direction::from_unit_xyz(p[0], p[1], p[2]));
    g.weights.push_back(p[3]);
  }
  // Published rules at sizes 74, 230, 266 contain negative weights.
  g.validate(true);
  return g;
}

SphericalGrid fliege_grid(int num_points) {
  const detail::FliegeSet* set = nullptr;
  for (int i = 0; i < detail::kNumFliegeSets; ++i) {
    if (detail::kFliegeSets[i].num_points == num_points) {
      set = &detail::kFliegeSets[i];
      break;
    }
  }
  if (!set) {
    std::ostringstream os;
    os << "fliege_grid: unsupported size " << num_points << "; supported sizes:";
    for (int s : fliege_supported_sizes()) os << " " << s;
    throw ValidationError(os.str());
  }
  SphericalGrid g;
  g.name = "fliege-" + std::to_string(num_points);
  g.nominal_order = set->order;
  for (int i = 0; i < num_points; ++i) {
    g.directions.emplace_back(set->rows[i][0], set->rows[i][1]);
    g.weights.push_back(set->rows[i][2]);
  }
  g.validate(false);
  return g;
}

SphericalGrid horizontal_grid(double step_deg) {
  if (!(step_deg > 0)) throw ValidationError("horizontal_grid: step must be positive");
  const double count = 360.0 / step_deg;
  const double rounded = std::round(count);
  if (std::abs(count - rounded) > 1e-9 || rounded < 1) {
    throw ValidationError("horizontal_grid: 360/" + std::to_string(step_deg) +
                          " is not an integer");
  }
  SphericalGrid g;
  std::ostringstream name;
  name << "horizontal-" << static_cast<long>(rounded);
  g.name = name.str();
  for (long k = 0; k < static_cast<long>(rounded); ++k) {
    g.directions.emplace_back(k * step_deg, 0.0);
  }
  g.validate(false);
  return g;
}

std::string grid_to_json(const SphericalGrid& grid) {
  nlohmann::json j;
  j["name"] = grid.name;
  if (grid.nominal_order) j["nominal_order"] = *grid.nominal_order;
  auto& dirs = j["directions"];
  dirs = nlohmann::json::array();
  for (const auto& d : grid.directions) {
    dirs.push_back({d.azimuth_deg, d.elevation_deg});
  }
  if (grid.has_weights()) j["weights"] = grid.weights;
  return j.dump(2) + "\n";
}

SphericalGrid grid_from_json(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("grid file " + origin + ": " + e.what());
  }
  SphericalGrid g;
  try {
    g.name = j.value("name", origin);
    if (j.contains("nominal_order")) g.nominal_order = j["nominal_order"].get<int>();
    for (const auto& d : j.at("directions")) {
      g.directions.emplace_back(d.at(0).get<double>(), d.at(1).get<double>());
    }
    if (j.contains("weights")) g.weights = j["weights"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("grid file " + origin + ": " + e.what());
  }
  g.validate(false);
  return g;
}

SphericalGrid load_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open grid file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return grid_from_json(buf.str(), path);
}

void save_grid(const SphericalGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write grid file " + path);
  out << grid_to_json(grid);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace hrtfup
