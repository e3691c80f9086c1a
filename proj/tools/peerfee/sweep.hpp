#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace peerfee::app {

enum class SweepVariable { x, x_d, r, r_prime, n };

std::string_view to_string(SweepVariable v) noexcept;

struct SweepSpec {
  SweepVariable variable = SweepVariable::x;
  std::vector<double> values;
};

// `name=start:stop:step` or `name=v1,v2,...`; names x, x_d, r, r_prime (or
// r'), n. Points of a range are start + i*step up to stop inclusive.
// Throws UsageError.
SweepSpec parse_sweep(std::string_view text);

// start + i*step for i = 0.. while the point does not pass stop (with a
// relative slack of 1e-9 steps so that 0:1:0.01 ends at 1).
std::vector<double> range_points(double start, double stop, double step);

}  // namespace peerfee::app
