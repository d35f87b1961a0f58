#include "gemforge/linker/blocking.hpp"

#include <unicode/utf8.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace gemforge::linker {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string prefix(const std::string& name, std::size_t n) {
  int32_t i = 0;
  const auto length = static_cast<int32_t>(name.size());
  for (std::size_t k = 0; k < n && i < length; ++k) U8_FWD_1(name.data(), i, length);
  return name.substr(0, static_cast<std::size_t>(i));
}

struct Grid {
  double cell;
  long long columns;  // cells around a full circle of longitude

  long long row(double lat) const { return static_cast<long long>(std::floor(lat / cell)); }
  long long col(double lon) const {
    long long c = static_cast<long long>(std::floor((lon + 180.0) / cell));
    return ((c % columns) + columns) % columns;
  }
};

}  // namespace

std::vector<CandidatePair> block(const std::vector<Entity>& left, const std::vector<Entity>& right,
                                 const LinkSpec& spec) {
  std::set<CandidatePair> out;

  const Grid grid{spec.blocking.cell_deg, static_cast<long long>(std::ceil(360.0 / spec.blocking.cell_deg))};
  const double cell_m = kEarthRadiusM * spec.blocking.cell_deg * kPi / 180.0;
  const long long row_span = std::max(1LL, static_cast<long long>(std::ceil(spec.geo_cutoff_m / cell_m)));

  std::map<std::pair<long long, long long>, std::vector<std::size_t>> cells;
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (const auto& p = right[j].point) cells[{grid.row(p->lat), grid.col(p->lon)}].push_back(j);
  }

  for (std::size_t i = 0; i < left.size(); ++i) {
    const auto& p = left[i].point;
    if (!p) continue;
    const long long r0 = grid.row(p->lat);
    const long long c0 = grid.col(p->lon);
    // Narrowest cell width within the row band decides the longitude span.
    double worst_lat = std::min(90.0, (std::abs(static_cast<double>(r0)) + 1 + row_span) * grid.cell);
    double width_m = cell_m * std::cos(worst_lat * kPi / 180.0);
    long long col_span = grid.columns;
    if (width_m > 0) {
      col_span = std::max(1LL, static_cast<long long>(std::ceil(spec.geo_cutoff_m / width_m)));
    }
    col_span = std::min(col_span, grid.columns / 2);
    std::set<long long> cols;
    for (long long dc = -col_span; dc <= col_span; ++dc) cols.insert(((c0 + dc) % grid.columns + grid.columns) % grid.columns);
    for (long long dr = -row_span; dr <= row_span; ++dr) {
      for (long long c : cols) {
        auto it = cells.find({r0 + dr, c});
        if (it == cells.end()) continue;
        for (std::size_t j : it->second) out.emplace(i, j);
      }
    }
  }

  if (spec.blocking.name_prefix_len > 0) {
    std::unordered_map<std::string, std::vector<std::size_t>> by_prefix;
    for (std::size_t j = 0; j < right.size(); ++j) {
      std::set<std::string> keys;
      for (const auto& n : right[j].names) {
        if (!n.empty()) keys.insert(prefix(n, spec.blocking.name_prefix_len));
      }
      for (const auto& k : keys) by_prefix[k].push_back(j);
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (const auto& n : left[i].names) {
        if (n.empty()) continue;
        auto it = by_prefix.find(prefix(n, spec.blocking.name_prefix_len));
        if (it == by_prefix.end()) continue;
        for (std::size_t j : it->second) out.emplace(i, j);
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<CandidatePair> all_pairs(const std::vector<Entity>& left, const std::vector<Entity>& right) {
  std::vector<CandidatePair> out;
  out.reserve(left.size() * right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace gemforge::linker
