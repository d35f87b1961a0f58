#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gemforge/rdf/parse.hpp"
#include "gemforge/rdf/serialize.hpp"
#include "isomorphism.hpp"
#include "random_graph.hpp"
#include "reference_readers.hpp"

namespace rdf = gemforge::rdf;
using namespace gemforge::testing;

namespace {

rdf::Iri iri(const char* s) { return rdf::Iri(s); }

rdf::Graph one_triple() {
  rdf::Graph g;
  g.insert(iri("http://e/a"), iri("http://e/p"), iri("http://e/b"));
  return g;
}

rdf::Graph reparse(const std::string& text, rdf::Format f) {
  switch (f) {
    case rdf::Format::Turtle: return rdf::parse_turtle(text);
    case rdf::Format::NTriples: return rdf::parse_ntriples(text);
    case rdf::Format::RdfXml: return read_rdfxml(text);
    case rdf::Format::JsonLd: return read_jsonld(text);
    default: throw std::logic_error("not an RDF syntax");
  }
}

}  // namespace

TEST(Serialize, EmptyGraphAsNTriplesIsEmpty) { EXPECT_EQ(rdf::to_ntriples(rdf::Graph{}), ""); }

TEST(Serialize, OneTripleNTriples) {
  EXPECT_EQ(rdf::to_ntriples(one_triple()), "<http://e/a> <http://e/p> <http://e/b> .\n");
}

TEST(Serialize, NTriplesIsSortedBySubjectPredicateObject) {
  std::mt19937_64 rng(3);
  rdf::Graph g = random_graph(rng);
  std::string nt = rdf::to_ntriples(g);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < nt.size()) {
    std::size_t end = nt.find('\n', start);
    lines.push_back(nt.substr(start, end - start));
    start = end + 1;
  }
  EXPECT_EQ(lines.size(), g.size());
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
}

TEST(Serialize, OutputIsDeterministicAcrossInsertionOrder) {
  std::mt19937_64 rng(11);
  RandomGraphOptions opts;
  opts.max_blank_nodes = 0;
  rdf::Graph g = random_graph(rng, opts);
  std::vector<rdf::Triple> triples(g.begin(), g.end());
  std::reverse(triples.begin(), triples.end());
  rdf::Graph h;
  for (const auto& [prefix, ns] : g.prefixes()) h.set_prefix(prefix, ns);
  for (auto& t : triples) h.insert(t);
  for (auto f : {rdf::Format::Turtle, rdf::Format::NTriples, rdf::Format::RdfXml, rdf::Format::JsonLd}) {
    EXPECT_EQ(rdf::serialize(g, f), rdf::serialize(h, f)) << rdf::media_type(f);
  }
}

class RoundTrip : public ::testing::TestWithParam<rdf::Format> {};

TEST_P(RoundTrip, FiftyTripleRandomGraphsAreIsomorphicAfterReparse) {
  rdf::Format f = GetParam();
  std::mt19937_64 rng(1234 + static_cast<int>(f));
  for (int i = 0; i < 40; ++i) {
    rdf::Graph g = random_graph(rng);
    std::string text = rdf::serialize(g, f);
    rdf::Graph back = reparse(text, f);
    ASSERT_TRUE(isomorphic(g, back)) << "iteration " << i << "\n" << describe_difference(g, back) << text;
  }
}

INSTANTIATE_TEST_SUITE_P(AllSyntaxes, RoundTrip,
                         ::testing::Values(rdf::Format::Turtle, rdf::Format::NTriples, rdf::Format::RdfXml,
                                           rdf::Format::JsonLd),
                         [](const auto& info) {
                           switch (info.param) {
                             case rdf::Format::Turtle: return std::string("Turtle");
                             case rdf::Format::NTriples: return std::string("NTriples");
                             case rdf::Format::RdfXml: return std::string("RdfXml");
                             default: return std::string("JsonLd");
                           }
                         });

TEST(Serialize, TurtleUsesGraphPrefixes) {
  rdf::Graph g = one_triple();
  g.set_prefix("ex", iri("http://e/"));
  std::string ttl = rdf::to_turtle(g);
  EXPECT_NE(ttl.find("@prefix ex: <http://e/> ."), std::string::npos) << ttl;
  EXPECT_NE(ttl.find("ex:a ex:p ex:b"), std::string::npos) << ttl;
}

TEST(Serialize, RdfXmlRejectsPredicatesWithoutLocalName) {
  rdf::Graph g;
  g.insert(iri("http://e/a"), iri("http://e/p/"), iri("http://e/b"));
  EXPECT_THROW(rdf::to_rdfxml(g), rdf::SerializeError);
}

TEST(Serialize, FixtureSurvivesEverySyntax) {
  rdf::Graph g = rdf::read_graph_file(fixture("museu-do-fado.ttl"));
  for (auto f : {rdf::Format::Turtle, rdf::Format::NTriples, rdf::Format::RdfXml, rdf::Format::JsonLd}) {
    EXPECT_TRUE(isomorphic(g, reparse(rdf::serialize(g, f), f))) << rdf::media_type(f);
  }
}

TEST(Isomorphism, DistinguishesBlankNodeStructure) {
  rdf::Graph a = rdf::parse_turtle("_:x <http://e/p> _:y . _:y <http://e/p> _:x .");
  rdf::Graph b = rdf::parse_turtle("_:x <http://e/p> _:y . _:y <http://e/p> _:z .");
  rdf::Graph c = rdf::parse_turtle("_:m <http://e/p> _:n . _:n <http://e/p> _:m .");
  EXPECT_FALSE(isomorphic(a, b));
  EXPECT_TRUE(isomorphic(a, c));
}
