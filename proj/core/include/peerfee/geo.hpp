#pragma once

namespace peerfee {

// Mean Earth radius (IUGG), km.
inline constexpr double kEarthRadiusKm = 6371.0088;

struct GeoPoint {
  double longitude = 0.0;  // degrees, [-180, 180]
  double latitude = 0.0;   // degrees, [-90, 90]

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

bool is_valid(GeoPoint p) noexcept;

// Haversine great-circle distance in km. Symmetric, and exactly zero for
// identical points.
double great_circle_km(GeoPoint a, GeoPoint b) noexcept;

}  // namespace peerfee
