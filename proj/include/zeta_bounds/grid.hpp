#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "zeta_bounds/errors.hpp"

namespace zeta_bounds {

enum class Spacing { Log, Linear };

struct GridSpec {
  double min;
  double max;
  int points;
  Spacing spacing = Spacing::Log;
};

inline void validate(GridSpec const& g) {
  detail::require(std::isfinite(g.min) && std::isfinite(g.max), "grid bounds must be finite");
  detail::require(g.points >= 1, "grid needs at least one point");
  detail::require(g.points == 1 ? g.min <= g.max : g.min < g.max, "grid requires min < max");
  detail::require(g.spacing == Spacing::Linear || g.min > 0.0, "log grid requires min > 0");
}

/// The grid's points, endpoints included exactly.
inline std::vector<double> grid_points(GridSpec const& g) {
  validate(g);
  std::vector<double> out(g.points);
  if (g.points == 1) {
    out[0] = g.min;
    return out;
  }
  for (int i = 0; i < g.points; ++i) {
    double const f = static_cast<double>(i) / (g.points - 1);
    out[i] = g.spacing == Spacing::Log ? std::exp(std::log(g.min) + f * std::log(g.max / g.min))
                                       : g.min + f * (g.max - g.min);
  }
  out.front() = g.min;
  out.back() = g.max;
  return out;
}

namespace detail {

inline double parse_number(std::string_view text) {
  double value = 0.0;
  auto const* end = text.data() + text.size();
  auto const [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses "min:max:points[:log|linear]".
inline GridSpec parse_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto const colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw DomainError("grid must look like min:max:points[:log|linear]");
  }
  GridSpec g{detail::parse_number(parts[0]), detail::parse_number(parts[1]), 0, Spacing::Log};
  double const points = detail::parse_number(parts[2]);
  if (points != std::floor(points) || points < 1 || points > 1e8) {
    throw DomainError("grid points must be a positive integer");
  }
  g.points = static_cast<int>(points);
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.spacing = Spacing::Log;
    } else if (parts[3] == "linear") {
      g.spacing = Spacing::Linear;
    } else {
      throw DomainError("grid spacing must be 'log' or 'linear'");
    }
  }
  validate(g);
  return g;
}

}  // namespace zeta_bounds
