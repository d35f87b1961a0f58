#include "gemforge/rdf/format.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace gemforge::rdf {

std::string_view media_type(Format format) noexcept {
  switch (format) {
    case Format::Turtle: return "text/turtle";
    case Format::NTriples: return "application/n-triples";
    case Format::RdfXml: return "application/rdf+xml";
    case Format::JsonLd: return "application/ld+json";
    case Format::SparqlJson: return "application/json";
    case Format::SparqlXml: return "application/xml";
    case Format::Html: return "text/html";
  }
  return "application/octet-stream";
}

std::string_view file_extension(Format format) noexcept {
  switch (format) {
    case Format::Turtle: return "ttl";
    case Format::NTriples: return "nt";
    case Format::RdfXml: return "rdf";
    case Format::JsonLd: return "json";
    case Format::Html: return "html";
    case Format::SparqlJson: return "srj";
    case Format::SparqlXml: return "srx";
  }
  return "";
}

std::optional<Format> format_from_extension(std::string_view ext) noexcept {
  if (ext == "ttl") return Format::Turtle;
  if (ext == "nt") return Format::NTriples;
  if (ext == "rdf") return Format::RdfXml;
  if (ext == "json" || ext == "jsonld") return Format::JsonLd;
  if (ext == "html") return Format::Html;
  return std::nullopt;
}

bool is_rdf_syntax(Format format) noexcept {
  return format == Format::Turtle || format == Format::NTriples || format == Format::RdfXml ||
         format == Format::JsonLd;
}

const std::vector<MediaOffer>& resource_offers() {
  static const std::vector<MediaOffer> kOffers = {
      {"text/turtle", Format::Turtle},
      {"text/rdf+n3", Format::Turtle},
      {"application/rdf+xml", Format::RdfXml},
      {"application/xml", Format::RdfXml},
      {"application/ld+json", Format::JsonLd},
      {"application/json", Format::JsonLd},
      {"application/n-triples", Format::NTriples},
      {"text/html", Format::Html},
  };
  return kOffers;
}

std::optional<Format> rdf_format_from_media_type(std::string_view type) noexcept {
  for (const MediaOffer& offer : resource_offers()) {
    if (offer.media_type == type) return offer.format;
  }
  return std::nullopt;
}

namespace {

std::string lower_trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out(s.substr(b, e - b));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

struct MediaRange {
  std::string type;
  std::string subtype;
  double q = 1.0;
};

// qvalue = ( "0" [ "." 0*3DIGIT ] ) / ( "1" [ "." 0*3("0") ] )
std::optional<double> parse_qvalue(std::string_view s) {
  if (s.empty() || s.size() > 5) return std::nullopt;
  if (s[0] != '0' && s[0] != '1') return std::nullopt;
  if (s.size() > 1) {
    if (s[1] != '.') return std::nullopt;
    for (char c : s.substr(2)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      if (s[0] == '1' && c != '0') return std::nullopt;
    }
  }
  double value = s[0] - '0';
  double scale = 0.1;
  for (char c : s.substr(std::min<std::size_t>(2, s.size()))) {
    value += (c - '0') * scale;
    scale /= 10;
  }
  return value;
}

bool token_chars(std::string_view s) {
  if (s.empty()) return false;
  static constexpr std::string_view kSpecials = "()<>@,;:\\\"/[]?={} \t";
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto uc = static_cast<unsigned char>(c);
    return uc > 0x20 && uc < 0x7f && kSpecials.find(c) == std::string_view::npos;
  });
}

std::vector<MediaRange> parse_accept(std::string_view header) {
  std::vector<MediaRange> ranges;
  std::size_t start = 0;
  while (start <= header.size()) {
    std::size_t comma = header.find(',', start);
    std::string_view item = header.substr(start, comma == std::string_view::npos ? header.npos : comma - start);
    start = comma == std::string_view::npos ? header.size() + 1 : comma + 1;

    std::size_t semi = item.find(';');
    std::string type = lower_trim(item.substr(0, semi));
    std::size_t slash = type.find('/');
    if (slash == std::string::npos) continue;
    MediaRange range{type.substr(0, slash), type.substr(slash + 1)};
    if (!token_chars(range.type) || !token_chars(range.subtype)) continue;
    if (range.type == "*" && range.subtype != "*") continue;

    bool valid = true;
    while (semi != std::string_view::npos) {
      std::size_t next = item.find(';', semi + 1);
      std::string param = lower_trim(item.substr(semi + 1, next == std::string_view::npos ? item.npos : next - semi - 1));
      semi = next;
      std::size_t eq = param.find('=');
      if (eq == std::string::npos) continue;
      if (lower_trim(param.substr(0, eq)) == "q") {
        auto q = parse_qvalue(lower_trim(param.substr(eq + 1)));
        if (!q) {
          valid = false;
          break;
        }
        range.q = *q;
      }
    }
    if (valid) ranges.push_back(std::move(range));
  }
  return ranges;
}

}  // namespace

std::optional<Format> negotiate(std::string_view accept_header, const std::vector<MediaOffer>& offers,
                                Format default_format) {
  if (lower_trim(accept_header).empty()) return default_format;
  std::vector<MediaRange> ranges = parse_accept(accept_header);
  if (ranges.empty()) return default_format;

  std::optional<Format> best;
  double best_q = 0.0;
  for (const MediaOffer& offer : offers) {
    std::string_view mt = offer.media_type;
    std::string_view type = mt.substr(0, mt.find('/'));
    std::string_view subtype = mt.substr(mt.find('/') + 1);
    // Aliases answer only when named; a wildcard speaks for the canonical type.
    const bool alias = mt != media_type(offer.format);
    int specificity = -1;
    double q = 0.0;
    for (const MediaRange& r : ranges) {
      int s = -1;
      if (r.type == type && r.subtype == subtype) {
        s = 2;
      } else if (alias) {
        continue;
      } else if (r.type == type && r.subtype == "*") {
        s = 1;
      } else if (r.type == "*" && r.subtype == "*") {
        s = 0;
      }
      if (s > specificity) {
        specificity = s;
        q = r.q;
      } else if (s == specificity && s >= 0) {
        q = std::max(q, r.q);
      }
    }
    if (specificity >= 0 && q > best_q) {
      best_q = q;
      best = offer.format;
    }
  }
  return best;
}

std::optional<Format> negotiate(std::string_view accept_header) {
  return negotiate(accept_header, resource_offers(), Format::Html);
}

}  // namespace gemforge::rdf
