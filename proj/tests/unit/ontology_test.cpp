#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gemforge/ontology/model.hpp"
#include "gemforge/ontology/validate.hpp"
#include "gemforge/ontology/vocab.hpp"
#include "gemforge/rdf/parse.hpp"
#include "gemforge/rdf/vocab.hpp"

namespace rdf = gemforge::rdf;
namespace ontology = gemforge::ontology;
namespace vocab = gemforge::ontology::vocab;
using gemforge::testing::fixture;
using gemforge::testing::shipped_model;

namespace {

ontology::OntologyModel model_from(std::string_view ttl) { return ontology::load_ontology(rdf::parse_turtle(ttl)); }

std::vector<ontology::ViolationKind> kinds(const ontology::ValidationReport& r) {
  std::vector<ontology::ViolationKind> out;
  for (const auto& v : r.violations) out.push_back(v.kind);
  return out;
}

}  // namespace

TEST(ShippedOntology, ClassCount) { EXPECT_EQ(shipped_model().classes().size(), 67u); }

TEST(ShippedOntology, ElevenTopLevelClasses) {
  auto top = ontology::top_level_classes(shipped_model());
  EXPECT_EQ(top.size(), 11u);
  for (const auto& c : top) {
    EXPECT_EQ(c.view().rfind(vocab::kOntologyNs, 0), 0u) << c.str();
  }
}

TEST(ShippedOntology, CulturalPropertyHasTangibleAndIntangibleOnly) {
  auto subs = shipped_model().direct_subclasses(vocab::cultural_property());
  std::sort(subs.begin(), subs.end());
  ASSERT_EQ(subs.size(), 2u);
  EXPECT_EQ(subs[0], vocab::arco("IntangibleCulturalProperty"));
  EXPECT_EQ(subs[1], vocab::arco("TangibleCulturalProperty"));
}

TEST(ShippedOntology, EveryGemClassReachesCulturalProperty) {
  const auto& m = shipped_model();
  for (const auto& c : m.classes()) {
    if (c.view().rfind(vocab::kOntologyNs, 0) != 0) continue;
    if (c == vocab::physical_location() || c == vocab::online_location()) continue;
    EXPECT_TRUE(ontology::is_subclass_of(m, c, vocab::cultural_property())) << c.str();
  }
}

TEST(ShippedOntology, MuseumClosure) {
  const auto& sup = shipped_model().superclasses(vocab::cg("Museum"));
  EXPECT_TRUE(sup.count(vocab::cg("Museum")));
  EXPECT_TRUE(sup.count(vocab::cg("ArtGalleriesAndMuseums")));
  EXPECT_TRUE(sup.count(vocab::cultural_property()));
  EXPECT_FALSE(sup.count(vocab::cg("EUCultureFromHome")));
}

TEST(ShippedOntology, LabelsPreferEnglish) {
  EXPECT_TRUE(shipped_model().label(vocab::cg("Museum")).has_value());
  EXPECT_FALSE(shipped_model().label(vocab::cg("NoSuchClass")).has_value());
}

TEST(Model, ClosureIsReflexiveAndTransitive) {
  auto m = model_from(R"(@prefix : <http://e/> . @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    :A rdfs:subClassOf :B . :B rdfs:subClassOf :C . :D rdfs:subClassOf :C .)");
  EXPECT_EQ(m.classes().size(), 4u);
  EXPECT_EQ(m.superclasses(rdf::Iri("http://e/A")),
            (std::set<rdf::Iri>{rdf::Iri("http://e/A"), rdf::Iri("http://e/B"), rdf::Iri("http://e/C")}));
  EXPECT_TRUE(ontology::is_subclass_of(m, rdf::Iri("http://e/D"), rdf::Iri("http://e/D")));
  EXPECT_FALSE(ontology::is_subclass_of(m, rdf::Iri("http://e/C"), rdf::Iri("http://e/A")));
}

TEST(Model, CycleIsReported) {
  try {
    model_from(R"(@prefix : <http://e/> . @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
      :A rdfs:subClassOf :B . :B rdfs:subClassOf :C . :C rdfs:subClassOf :A . :X rdfs:subClassOf :A .)");
    FAIL() << "expected SubclassCycleError";
  } catch (const ontology::SubclassCycleError& e) {
    ASSERT_EQ(e.path().size(), 3u);
    EXPECT_EQ(e.path().front(), rdf::Iri("http://e/A"));
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
}

TEST(Model, SelfLoopIsACycle) {
  EXPECT_THROW(model_from("<http://e/A> <http://www.w3.org/2000/01/rdf-schema#subClassOf> <http://e/A> ."),
               ontology::SubclassCycleError);
}

TEST(Model, DomainAndRangeAttachToProperties) {
  auto m = model_from(R"(@prefix : <http://e/> . @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    :p a owl:ObjectProperty ; rdfs:domain :A ; rdfs:range :B ; rdfs:label "p" .)");
  ASSERT_EQ(m.properties().size(), 1u);
  const auto& decl = m.properties().at(rdf::Iri("http://e/p"));
  EXPECT_EQ(decl.domain, rdf::Iri("http://e/A"));
  EXPECT_EQ(decl.range, rdf::Iri("http://e/B"));
  EXPECT_EQ(m.annotations().size(), 1u);
}

TEST(Imports, ResolvedThroughLoaderAndMissingMarksPartial) {
  auto base = ontology::load_ontology(rdf::read_graph_file(fixture("importing-ontology.ttl")));
  EXPECT_EQ(base.imports().size(), 2u);
  std::vector<std::string> requested;
  auto loader = [&](const rdf::Iri& iri) -> std::optional<rdf::Graph> {
    requested.push_back(iri.str());
    if (iri.str() == "https://w3id.org/arco/ontology/arco") return rdf::read_graph_file(fixture("arco-stub.ttl"));
    return std::nullopt;
  };
  auto merged = ontology::resolve_imports(base, loader);
  EXPECT_EQ(requested.size(), 2u);
  EXPECT_TRUE(merged.partial());
  ASSERT_EQ(merged.warnings().size(), 1u);
  EXPECT_NE(merged.warnings()[0].find("http://example.org/missing"), std::string::npos);
  EXPECT_TRUE(ontology::is_subclass_of(merged, rdf::Iri("http://example.org/onto/Gem"), vocab::cultural_property()));
  EXPECT_EQ(merged.label(vocab::cultural_property()), "Cultural property");
  EXPECT_FALSE(base.partial());
}

TEST(Imports, CyclicImportsTerminate) {
  auto a = rdf::parse_turtle(R"(<http://e/a> a <http://www.w3.org/2002/07/owl#Ontology> ;
    <http://www.w3.org/2002/07/owl#imports> <http://e/b> .)");
  auto b = rdf::parse_turtle(R"(<http://e/b> a <http://www.w3.org/2002/07/owl#Ontology> ;
    <http://www.w3.org/2002/07/owl#imports> <http://e/a> .)");
  int calls = 0;
  auto merged = ontology::resolve_imports(ontology::load_ontology(a), [&](const rdf::Iri& iri) -> std::optional<rdf::Graph> {
    ++calls;
    return iri.str() == "http://e/b" ? std::optional(b) : std::optional(a);
  });
  EXPECT_EQ(calls, 1);
  EXPECT_FALSE(merged.partial());
}

TEST(Inference, AddsEverySuperclassOnce) {
  rdf::Graph data;
  const rdf::Iri type(std::string(rdf::vocab::kRdfType));
  const rdf::Term gem(rdf::Iri("https://culturalgems.jrc.ec.europa.eu/resource/cultural-gems/1"));
  data.insert(rdf::Triple(gem, type, rdf::Term(vocab::cg("Museum"))));
  rdf::Graph inferred = ontology::infer_types(shipped_model(), data);
  const auto& sup = shipped_model().superclasses(vocab::cg("Museum"));
  EXPECT_EQ(inferred.size(), sup.size());
  EXPECT_EQ(ontology::infer_types(shipped_model(), inferred), inferred);
}

TEST(Validate, CleanFixturePasses) {
  rdf::Graph data = rdf::read_graph_file(fixture("museu-do-fado.ttl"));
  auto reports = ontology::validate_all(shipped_model(), data);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.ok()) << r.subject.str() << ": " << r.violations.front().detail;
  }
}

TEST(Validate, DefectFixtureYieldsExactlyThree) {
  rdf::Graph data = rdf::read_graph_file(fixture("ten-gems-defects.ttl"));
  auto reports = ontology::validate_all(shipped_model(), data);
  std::map<std::string, std::vector<ontology::ViolationKind>> bad;
  for (const auto& r : reports) {
    if (!r.ok()) bad[r.subject.str()] = kinds(r);
  }
  const std::string ns(vocab::kGemNs);
  using K = ontology::ViolationKind;
  std::map<std::string, std::vector<K>> expected{{ns + "5003", {K::UnknownType}},
                                                  {ns + "5006", {K::CoordinateOutOfRange}},
                                                  {ns + "5009", {K::IntervalOrder}}};
  EXPECT_EQ(bad, expected);
  auto json = ontology::to_json(reports);
  EXPECT_EQ(json["violations"].size(), 3u);
}

TEST(Validate, MissingTypeAndDanglingReference) {
  rdf::Graph data = rdf::parse_turtle(R"(
    <https://culturalgems.jrc.ec.europa.eu/resource/cultural-gems/9>
      <https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/inCity>
      <https://culturalgems.jrc.ec.europa.eu/resource/city/404> ;
      <http://www.w3.org/2003/01/geo/wgs84_pos#long> "east" .)");
  auto r = ontology::validate_individual(shipped_model(), data,
                                         rdf::Iri("https://culturalgems.jrc.ec.europa.eu/resource/cultural-gems/9"));
  using K = ontology::ViolationKind;
  auto k = kinds(r);
  std::sort(k.begin(), k.end());
  EXPECT_EQ(k, (std::vector<K>{K::MissingType, K::CoordinateOutOfRange, K::DanglingReference}));
}
