#include "gemforge/etl/category.hpp"

#include <algorithm>
#include <cctype>

#include "gemforge/ontology/vocab.hpp"

namespace gemforge::etl {

namespace vocab = ontology::vocab;

const std::vector<CategoryEntry>& app_category_table() {
  static const std::vector<CategoryEntry> table = {
      {"eu-culture-from-home", "EUCultureFromHome"},
      {"virtual-tour", "VirtualTour"},
      {"online-exhibition", "OnlineExhibition"},
      {"online-performance", "OnlinePerformance"},
      {"digital-collection", "DigitalCollection"},
      {"cinemas-and-theatres", "CinemasAndTheatres"},
      {"cinema", "Cinema"},
      {"theatre", "Theatre"},
      {"theater", "Theatre"},
      {"opera-house", "OperaHouse"},
      {"open-air-cinema", "OpenAirCinema"},
      {"art-galleries-and-museums", "ArtGalleriesAndMuseums"},
      {"museum", "Museum"},
      {"art-gallery", "ArtGallery"},
      {"gallery", "ArtGallery"},
      {"art-centre", "ArtCentre"},
      {"exhibition-centre", "ExhibitionCentre"},
      {"artworks", "Artworks"},
      {"artwork", "Artworks"},
      {"sculpture", "Sculpture"},
      {"mural", "Mural"},
      {"installation", "Installation"},
      {"street-art", "StreetArt"},
      {"creative-spaces", "CreativeSpaces"},
      {"library", "Library"},
      {"studio", "Studio"},
      {"coworking-space", "CoworkingSpace"},
      {"makerspace", "Makerspace"},
      {"art-school", "ArtSchool"},
      {"historic-sites", "HistoricSites"},
      {"castle", "Castle"},
      {"palace", "Palace"},
      {"ruins", "Ruins"},
      {"archaeological-site", "ArchaeologicalSite"},
      {"historic-building", "HistoricBuilding"},
      {"religious-heritage", "ReligiousHeritage"},
      {"church", "Church"},
      {"cathedral", "Cathedral"},
      {"monastery", "Monastery"},
      {"mosque", "Mosque"},
      {"synagogue", "Synagogue"},
      {"cemetery", "Cemetery"},
      {"memorials-and-monuments", "MemorialsAndMonuments"},
      {"monument", "Monument"},
      {"memorial", "Memorial"},
      {"statue", "Statue"},
      {"fountain", "Fountain"},
      {"events-and-festivals", "EventsAndFestivals"},
      {"festival", "Festival"},
      {"exhibition", "Exhibition"},
      {"fair", "Fair"},
      {"music-venues", "MusicVenues"},
      {"concert-hall", "ConcertHall"},
      {"music-club", "MusicClub"},
      {"recording-studio", "RecordingStudio"},
      {"rehearsal-studio", "RehearsalStudio"},
      {"community-spaces", "CommunitySpaces"},
      {"community-centre", "CommunityCentre"},
      {"cultural-centre", "CulturalCentre"},
      {"archaeological-find", "ArchaeologicalProperty", true},
      {"music-heritage", "MusicHeritage", true},
  };
  return table;
}

// More specific tags come first: a node tagged tourism=artwork and
// artwork_type=statue maps to Statue.
const std::vector<CategoryEntry>& osm_category_table() {
  static const std::vector<CategoryEntry> table = {
      {"artwork_type=sculpture", "Sculpture"},
      {"artwork_type=statue", "Statue"},
      {"artwork_type=mural", "Mural"},
      {"artwork_type=installation", "Installation"},
      {"artwork_type=graffiti", "StreetArt"},
      {"building=cathedral", "Cathedral"},
      {"building=church", "Church"},
      {"building=chapel", "Church"},
      {"building=mosque", "Mosque"},
      {"building=synagogue", "Synagogue"},
      {"building=monastery", "Monastery"},
      {"historic=monastery", "Monastery"},
      {"castle_type=palace", "Palace"},
      {"historic=castle", "Castle"},
      {"historic=ruins", "Ruins"},
      {"historic=archaeological_site", "ArchaeologicalSite"},
      {"historic=building", "HistoricBuilding"},
      {"historic=monument", "Monument"},
      {"historic=memorial", "Memorial"},
      {"amenity=cinema", "Cinema"},
      {"amenity=theatre", "Theatre"},
      {"theatre:genre=opera", "OperaHouse"},
      {"tourism=museum", "Museum"},
      {"tourism=gallery", "ArtGallery"},
      {"shop=art", "ArtGallery"},
      {"amenity=arts_centre", "ArtCentre"},
      {"amenity=exhibition_centre", "ExhibitionCentre"},
      {"tourism=artwork", "Artworks"},
      {"amenity=library", "Library"},
      {"amenity=studio", "Studio"},
      {"studio=audio", "RecordingStudio"},
      {"office=coworking", "CoworkingSpace"},
      {"amenity=coworking_space", "CoworkingSpace"},
      {"leisure=hackerspace", "Makerspace"},
      {"amenity=music_school", "ArtSchool"},
      {"amenity=place_of_worship", "ReligiousHeritage"},
      {"landuse=cemetery", "Cemetery"},
      {"amenity=grave_yard", "Cemetery"},
      {"amenity=fountain", "Fountain"},
      {"amenity=concert_hall", "ConcertHall"},
      {"amenity=music_venue", "MusicClub"},
      {"amenity=nightclub", "MusicClub"},
      {"amenity=community_centre", "CommunityCentre"},
      {"amenity=social_centre", "CulturalCentre"},
  };
  return table;
}

namespace {

rdf::Iri class_of(const CategoryEntry& e) { return e.arco ? vocab::arco(e.local) : vocab::cg(e.local); }

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

const CategoryEntry* find(const std::vector<CategoryEntry>& table, std::string_view key) {
  auto it = std::find_if(table.begin(), table.end(), [&](const CategoryEntry& e) { return e.key == key; });
  return it == table.end() ? nullptr : &*it;
}

}  // namespace

CategoryMatch map_category(std::string_view code, const OsmTags* osm_tags) {
  std::string key = lower(code);
  if (const auto* e = find(app_category_table(), key)) return {class_of(*e)};
  if (const auto* e = find(osm_category_table(), key)) return {class_of(*e)};
  if (osm_tags) {
    for (const auto& e : osm_category_table()) {
      auto eq = e.key.find('=');
      auto it = osm_tags->find(std::string(e.key.substr(0, eq)));
      if (it != osm_tags->end() && it->second == e.key.substr(eq + 1)) return {class_of(e)};
    }
  }
  return {vocab::cultural_property(), true};
}

}  // namespace gemforge::etl
