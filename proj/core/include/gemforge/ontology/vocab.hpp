#pragma once

#include <string>
#include <string_view>

#include "gemforge/rdf/term.hpp"

namespace gemforge::ontology::vocab {

inline constexpr std::string_view kOntologyNs = "https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/";
inline constexpr std::string_view kResourceNs = "https://culturalgems.jrc.ec.europa.eu/resource/";
inline constexpr std::string_view kGemNs = "https://culturalgems.jrc.ec.europa.eu/resource/cultural-gems/";
inline constexpr std::string_view kCityNs = "https://culturalgems.jrc.ec.europa.eu/resource/city/";

inline constexpr std::string_view kArco = "https://w3id.org/arco/ontology/arco/";
inline constexpr std::string_view kArcoLocation = "https://w3id.org/arco/ontology/location/";
inline constexpr std::string_view kClv = "https://w3id.org/italia/onto/CLV/";
inline constexpr std::string_view kGeo = "http://www.w3.org/2003/01/geo/wgs84_pos#";
inline constexpr std::string_view kDcterms = "http://purl.org/dc/terms/";

inline rdf::Iri cg(std::string_view local) { return rdf::Iri(std::string(kOntologyNs) + std::string(local)); }
inline rdf::Iri arco(std::string_view local) { return rdf::Iri(std::string(kArco) + std::string(local)); }
inline rdf::Iri aloc(std::string_view local) { return rdf::Iri(std::string(kArcoLocation) + std::string(local)); }
inline rdf::Iri geo(std::string_view local) { return rdf::Iri(std::string(kGeo) + std::string(local)); }
inline rdf::Iri dcterms(std::string_view local) { return rdf::Iri(std::string(kDcterms) + std::string(local)); }
inline rdf::Iri clv(std::string_view local) { return rdf::Iri(std::string(kClv) + std::string(local)); }

// Properties emitted for gems and their locations.
inline rdf::Iri in_city() { return cg("inCity"); }
inline rdf::Iri lat() { return geo("lat"); }
inline rdf::Iri lon() { return geo("long"); }
inline rdf::Iri description() { return dcterms("description"); }
inline rdf::Iri has_location_type() { return aloc("hasLocationType"); }
inline rdf::Iri has_time_indexed_location() { return aloc("hasTimeIndexedTypedLocation"); }
inline rdf::Iri at_location_type() { return aloc("atLocationType"); }
inline rdf::Iri at_time_start() { return aloc("atTime-start"); }
inline rdf::Iri at_time_end() { return aloc("atTime-end"); }

inline rdf::Iri cultural_property() { return arco("CulturalProperty"); }
inline rdf::Iri city_class() { return clv("City"); }
inline rdf::Iri physical_location() { return cg("CurrentPhysicalLocation"); }
inline rdf::Iri online_location() { return cg("OnlineLocation"); }

}  // namespace gemforge::ontology::vocab
