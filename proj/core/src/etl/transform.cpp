#include "gemforge/etl/transform.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_set>

#include "gemforge/ontology/vocab.hpp"
#include "gemforge/rdf/iri.hpp"
#include "gemforge/rdf/vocab.hpp"

namespace gemforge::etl {

namespace vocab = ontology::vocab;
namespace rv = rdf::vocab;

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  if (!is_digits(s.substr(0, 4)) || !is_digits(s.substr(5, 2)) || !is_digits(s.substr(8, 2))) return false;
  int year = std::stoi(std::string(s.substr(0, 4)));
  int month = std::stoi(std::string(s.substr(5, 2)));
  int day = std::stoi(std::string(s.substr(8, 2)));
  static constexpr int kDays[] = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12 || day < 1 || day > kDays[month - 1]) return false;
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  return !(month == 2 && day == 29 && !leap);
}

bool is_language_tag(std::string_view s) {
  std::size_t i = 0;
  std::size_t part = 0;
  while (i <= s.size()) {
    std::size_t end = s.find('-', i);
    if (end == std::string_view::npos) end = s.size();
    std::string_view sub = s.substr(i, end - i);
    if (sub.empty() || sub.size() > 8) return false;
    for (char c : sub) {
      bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
      if (!alpha && !(part > 0 && c >= '0' && c <= '9')) return false;
    }
    ++part;
    i = end + 1;
  }
  return part > 0;
}

rdf::Literal decimal(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  std::string text(buf, p);
  if (text.find('.') == std::string::npos) text += ".0";
  return rdf::Literal(std::move(text), rdf::Iri(std::string(rv::kXsdDecimal)));
}

rdf::Literal text_literal(const std::string& text, const std::optional<std::string>& lang) {
  return lang ? rdf::Literal::with_language(text, *lang) : rdf::Literal(text);
}

void check(const GemRecord& r) {
  if (r.id == 0) throw RecordError("id must be a positive integer");
  if (r.name.empty()) throw RecordError("name is empty");
  if (r.name_lang && !is_language_tag(*r.name_lang)) throw RecordError("invalid name_lang '" + *r.name_lang + "'");
  if (r.categories.empty()) throw RecordError("no categories");
  if (r.city_id == 0) throw RecordError("city_id must be a positive integer");
  if (r.city_name.empty()) throw RecordError("city_name is empty");
  if (!(r.lat >= -90.0 && r.lat <= 90.0)) throw RecordError("lat out of range [-90, 90]");
  if (!(r.lon >= -180.0 && r.lon <= 180.0)) throw RecordError("lon out of range [-180, 180]");
  for (const auto& [lang, text] : r.descriptions) {
    if (!is_language_tag(lang)) throw RecordError("invalid description language '" + lang + "'");
    if (text.empty()) throw RecordError("empty description for language '" + lang + "'");
  }
  for (const auto& link : r.links) {
    if (!rdf::Iri::is_valid(link)) throw RecordError("invalid link IRI '" + link + "'");
  }
  if (r.valid_from && !is_date(*r.valid_from)) throw RecordError("valid_from is not a YYYY-MM-DD date");
  if (r.valid_to && !is_date(*r.valid_to)) throw RecordError("valid_to is not a YYYY-MM-DD date");
  if (r.valid_to && !r.valid_from) throw RecordError("valid_to without valid_from");
  if (r.valid_from && r.valid_to && *r.valid_to < *r.valid_from) throw RecordError("valid_to precedes valid_from");
}

}  // namespace

rdf::Iri mint_iri(const GemRecord& record) { return rdf::Iri(std::string(vocab::kGemNs) + std::to_string(record.id)); }

rdf::Iri city_iri(std::uint64_t city_id) { return rdf::Iri(std::string(vocab::kCityNs) + std::to_string(city_id)); }

rdf::Graph record_to_triples(const GemRecord& record, const ontology::OntologyModel& model,
                             std::vector<std::string>* warnings) {
  check(record);

  const rdf::Iri type(std::string(rv::kRdfType));
  const rdf::Iri fallback = vocab::cultural_property();
  std::vector<rdf::Iri> classes;
  std::vector<std::string> notes;
  for (const auto& code : record.categories) {
    CategoryMatch m = map_category(code, &record.osm_tags);
    if (!m.fallback && !model.has_class(m.cls)) {
      notes.push_back("category '" + code + "' maps to <" + m.cls.str() + "> which the ontology lacks");
      m = {fallback, true};
    } else if (m.fallback) {
      notes.push_back("unknown category '" + code + "', using CulturalProperty");
    }
    if (m.fallback && !model.has_class(fallback)) throw RecordError("unmappable category '" + code + "'");
    if (std::find(classes.begin(), classes.end(), m.cls) == classes.end()) classes.push_back(m.cls);
  }

  const rdf::Term gem(mint_iri(record));
  rdf::Graph g;
  for (const auto& c : classes) g.insert(rdf::Triple(gem, type, rdf::Term(c)));
  g.insert(rdf::Triple(gem, rdf::Iri(std::string(rv::kRdfsLabel)), text_literal(record.name, record.name_lang)));
  g.insert(rdf::Triple(gem, vocab::lat(), decimal(record.lat)));
  g.insert(rdf::Triple(gem, vocab::lon(), decimal(record.lon)));
  g.insert(rdf::Triple(gem, vocab::in_city(), rdf::Term(city_iri(record.city_id))));

  const auto is_online = [&](const rdf::Iri& c) { return ontology::is_subclass_of(model, c, vocab::cg("EUCultureFromHome")); };
  const rdf::Term location_type(std::all_of(classes.begin(), classes.end(), is_online) ? vocab::online_location()
                                                                                      : vocab::physical_location());
  if (record.valid_from) {
    const rdf::Term node(rdf::BlankNode("loc" + std::to_string(record.id)));
    const rdf::Iri date(std::string(rv::kXsdDate));
    g.insert(rdf::Triple(gem, vocab::has_time_indexed_location(), node));
    g.insert(rdf::Triple(node, vocab::at_location_type(), location_type));
    g.insert(rdf::Triple(node, vocab::at_time_start(), rdf::Literal(*record.valid_from, date)));
    if (record.valid_to) g.insert(rdf::Triple(node, vocab::at_time_end(), rdf::Literal(*record.valid_to, date)));
  } else {
    g.insert(rdf::Triple(gem, vocab::has_location_type(), location_type));
  }

  for (const auto& [lang, text] : record.descriptions) {
    g.insert(rdf::Triple(gem, vocab::description(), rdf::Literal::with_language(text, lang)));
  }
  const rdf::Iri see_also(std::string(rv::kRdfsSeeAlso));
  for (const auto& link : record.links) g.insert(rdf::Triple(gem, see_also, rdf::Term(rdf::Iri(link))));

  if (warnings) {
    for (auto& n : notes) warnings->push_back(std::to_string(record.id) + ": " + std::move(n));
  }
  return g;
}

EtlResult run_etl(const RecordBatch& batch, const ontology::OntologyModel& model) {
  EtlResult result;
  result.stats.records_in = batch.records.size() + batch.rejected.size();
  result.rejected = batch.rejected;

  const rdf::Iri type(std::string(rv::kRdfType));
  const rdf::Iri label(std::string(rv::kRdfsLabel));
  std::unordered_set<std::uint64_t> seen;
  std::set<std::uint64_t> cities;
  rdf::Graph data;
  std::size_t gems = 0;

  for (const GemRecord& rec : batch.records) {
    if (!seen.insert(rec.id).second) {
      result.rejected.push_back({std::to_string(rec.id), "duplicate id"});
      continue;
    }
    try {
      std::vector<std::string> warnings;
      rdf::Graph g = record_to_triples(rec, model, &warnings);
      result.stats.category_fallbacks += warnings.size();
      for (auto& w : warnings) result.warnings.push_back(std::move(w));
      data.merge(g);
      ++gems;
      if (cities.insert(rec.city_id).second) {
        const rdf::Term city(city_iri(rec.city_id));
        data.insert(rdf::Triple(city, type, rdf::Term(vocab::city_class())));
        data.insert(rdf::Triple(city, label, rdf::Term(rdf::Literal(rec.city_name))));
      }
    } catch (const RecordError& e) {
      seen.erase(rec.id);
      result.rejected.push_back({std::to_string(rec.id), e.what()});
    }
  }

  result.graph = ontology::infer_types(model, data);
  result.stats.records_rejected = result.rejected.size();
  result.stats.triples_out = result.graph.size();
  result.stats.resources_minted = gems + cities.size();
  return result;
}

}  // namespace gemforge::etl
