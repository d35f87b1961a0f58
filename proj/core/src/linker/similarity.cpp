#include "gemforge/linker/similarity.hpp"

#include <unicode/utf8.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "gemforge/etl/slug.hpp"
#include "gemforge/ontology/vocab.hpp"
#include "gemforge/rdf/vocab.hpp"

namespace gemforge::linker {

namespace {

std::u32string code_points(std::string_view s) {
  std::u32string out;
  int32_t i = 0;
  const auto length = static_cast<int32_t>(s.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c < 0 ? 0xFFFD : static_cast<char32_t>(c));
  }
  return out;
}

std::optional<double> parse_double(const std::string& s) {
  double v = 0;
  const char* b = s.data() + (!s.empty() && s[0] == '+' ? 1 : 0);
  auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || b == p) return std::nullopt;
  return v;
}

}  // namespace

double levenshtein_sim(std::string_view a, std::string_view b) {
  std::u32string x = code_points(a);
  std::u32string y = code_points(b);
  if (x == y) return 1.0;
  if (x.empty() || y.empty()) return 0.0;
  std::vector<std::size_t> row(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (x[i - 1] == y[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return 1.0 - static_cast<double>(row[y.size()]) / static_cast<double>(std::max(x.size(), y.size()));
}

double trigram_jaccard(std::string_view a, std::string_view b) {
  std::u32string x = code_points(a);
  std::u32string y = code_points(b);
  if (x == y) return 1.0;
  if (x.empty() || y.empty()) return 0.0;
  auto trigrams = [](const std::u32string& s) {
    std::u32string padded = U"  " + s + U" ";
    std::set<std::u32string> out;
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) out.insert(padded.substr(i, 3));
    return out;
  };
  auto tx = trigrams(x);
  auto ty = trigrams(y);
  std::size_t common = 0;
  for (const auto& t : tx) common += ty.count(t);
  return static_cast<double>(common) / static_cast<double>(tx.size() + ty.size() - common);
}

double string_sim(std::string_view a, std::string_view b, MetricKind kind) {
  switch (kind) {
    case MetricKind::Levenshtein: return levenshtein_sim(a, b);
    case MetricKind::TrigramJaccard: return trigram_jaccard(a, b);
    case MetricKind::Geo: break;
  }
  throw std::invalid_argument("geo is not a string metric");
}

double haversine_m(GeoPoint a, GeoPoint b) {
  constexpr double kRad = 3.14159265358979323846 / 180.0;
  double dlat = (b.lat - a.lat) * kRad;
  double dlon = (b.lon - a.lon) * kRad;
  double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
             std::cos(a.lat * kRad) * std::cos(b.lat * kRad) * std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

double geo_sim(GeoPoint a, GeoPoint b, double cutoff_m) {
  return std::max(0.0, 1.0 - haversine_m(a, b) / cutoff_m);
}

std::vector<Entity> extract_entities(const rdf::Graph& graph) {
  const rdf::Iri label(std::string(rdf::vocab::kRdfsLabel));
  std::map<rdf::Iri, Entity> by_iri;
  for (const rdf::Triple* t : graph.match(std::nullopt, label, std::nullopt)) {
    if (!t->subject.is_iri() || !t->object.is_literal()) continue;
    Entity& e = by_iri.try_emplace(t->subject.iri(), Entity{t->subject.iri(), {}, std::nullopt}).first->second;
    std::string slug = etl::slugify(t->object.literal().lexical());
    if (std::find(e.names.begin(), e.names.end(), slug) == e.names.end()) e.names.push_back(std::move(slug));
  }

  auto first_number = [&](const rdf::Term& s, const rdf::Iri& p) -> std::optional<double> {
    for (const rdf::Triple* t : graph.match(s, p, std::nullopt)) {
      if (!t->object.is_literal()) continue;
      if (auto v = parse_double(t->object.literal().lexical())) return v;
    }
    return std::nullopt;
  };

  std::vector<Entity> out;
  out.reserve(by_iri.size());
  for (auto& [iri, e] : by_iri) {
    std::sort(e.names.begin(), e.names.end());
    const rdf::Term s(iri);
    auto lat = first_number(s, ontology::vocab::lat());
    auto lon = first_number(s, ontology::vocab::lon());
    if (lat && lon) e.point = GeoPoint{*lat, *lon};
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace gemforge::linker
