#include "peerfee/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace peerfee {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

bool is_valid(GeoPoint p) noexcept {
  return std::isfinite(p.longitude) && std::isfinite(p.latitude) &&
         p.longitude >= -180.0 && p.longitude <= 180.0 &&
         p.latitude >= -90.0 && p.latitude <= 90.0;
}

double great_circle_km(GeoPoint a, GeoPoint b) noexcept {
  const double lat1 = a.latitude * kDegToRad;
  const double lat2 = b.latitude * kDegToRad;
  const double dlat = (b.latitude - a.latitude) * kDegToRad;
  const double dlon = (b.longitude - a.longitude) * kDegToRad;
  const double s_lat = std::sin(dlat / 2.0);
  const double s_lon = std::sin(dlon / 2.0);
  double h = s_lat * s_lat + std::cos(lat1) * std::cos(lat2) * s_lon * s_lon;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

}  // namespace peerfee
