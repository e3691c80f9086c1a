#include "sweep.hpp"

#include <charconv>
#include <cmath>

#include "config.hpp"

namespace peerfee::app {

namespace {

constexpr std::size_t kMaxSweepPoints = 1'000'000;

double parse_double(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw UsageError("sweep: cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string_view to_string(SweepVariable v) noexcept {
  switch (v) {
    case SweepVariable::x: return "x";
    case SweepVariable::x_d: return "x_d";
    case SweepVariable::r: return "r";
    case SweepVariable::r_prime: return "r_prime";
    case SweepVariable::n: return "n";
  }
  return "?";
}

std::vector<double> range_points(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("sweep: step must be > 0");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw UsageError("sweep: range must be finite");
  if (stop < start) throw UsageError("sweep: stop is below start");
  const double span = (stop - start) / step;
  if (span + 1.0 > static_cast<double>(kMaxSweepPoints)) {
    throw UsageError("sweep: more than 1000000 points");
  }
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

SweepSpec parse_sweep(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw UsageError("sweep: expected name=start:stop:step or name=v1,v2,...");
  }
  const std::string_view name = text.substr(0, eq);
  const std::string_view body = text.substr(eq + 1);
  SweepSpec spec;
  if (name == "x") spec.variable = SweepVariable::x;
  else if (name == "x_d" || name == "x-d") spec.variable = SweepVariable::x_d;
  else if (name == "r") spec.variable = SweepVariable::r;
  else if (name == "r_prime" || name == "r-prime" || name == "r'") spec.variable = SweepVariable::r_prime;
  else if (name == "n" || name == "N") spec.variable = SweepVariable::n;
  else throw UsageError("sweep: unknown variable '" + std::string(name) + "'");

  if (body.find(':') != std::string_view::npos) {
    const auto c1 = body.find(':');
    const auto c2 = body.find(':', c1 + 1);
    if (c2 == std::string_view::npos || body.find(':', c2 + 1) != std::string_view::npos) {
      throw UsageError("sweep: range must be start:stop:step");
    }
    spec.values = range_points(parse_double(body.substr(0, c1), "start"),
                               parse_double(body.substr(c1 + 1, c2 - c1 - 1), "stop"),
                               parse_double(body.substr(c2 + 1), "step"));
  } else {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto comma = body.find(',', pos);
      const auto end = comma == std::string_view::npos ? body.size() : comma;
      spec.values.push_back(parse_double(body.substr(pos, end - pos), "value"));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (spec.values.empty()) throw UsageError("sweep: no values");
  if (spec.variable == SweepVariable::n) {
    for (double v : spec.values) {
      if (v < 1.0 || v != std::floor(v)) throw UsageError("sweep: n values must be integers >= 1");
    }
  }
  return spec;
}

}  // namespace peerfee::app
