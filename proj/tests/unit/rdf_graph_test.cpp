#include <gtest/gtest.h>

#include <random>

#include "gemforge/rdf/graph.hpp"
#include "gemforge/rdf/snapshot.hpp"
#include "gemforge/rdf/vocab.hpp"
#include "random_graph.hpp"

namespace rdf = gemforge::rdf;
using gemforge::testing::random_graph;
using gemforge::testing::RandomGraphOptions;

namespace {

rdf::Iri iri(const char* s) { return rdf::Iri(s); }

std::vector<rdf::Triple> scan(const rdf::Graph& g, const std::optional<rdf::Term>& s, const std::optional<rdf::Iri>& p,
                              const std::optional<rdf::Term>& o) {
  std::vector<rdf::Triple> out;
  for (const rdf::Triple& t : g) {
    if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<rdf::Triple> sorted_match(const rdf::Graph& g, const std::optional<rdf::Term>& s,
                                      const std::optional<rdf::Iri>& p, const std::optional<rdf::Term>& o) {
  auto out = rdf::match(g, s, p, o);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Iri, RejectsRelativeAndForbiddenCharacters) {
  EXPECT_TRUE(rdf::Iri::is_valid("http://e/a"));
  EXPECT_TRUE(rdf::Iri::is_valid("urn:x:y"));
  EXPECT_FALSE(rdf::Iri::is_valid("relative/path"));
  EXPECT_FALSE(rdf::Iri::is_valid("http://e/a b"));
  EXPECT_FALSE(rdf::Iri::is_valid("http://e/<a>"));
  EXPECT_THROW(rdf::Iri("no scheme"), rdf::InvalidTerm);
}

TEST(Term, NTriplesRendering) {
  EXPECT_EQ(rdf::Term(iri("http://e/a")).to_ntriples(), "<http://e/a>");
  EXPECT_EQ(rdf::Term(rdf::BlankNode("b0")).to_ntriples(), "_:b0");
  EXPECT_EQ(rdf::Term(rdf::Literal("x")).to_ntriples(), "\"x\"");
  EXPECT_EQ(rdf::Term(rdf::Literal::with_language("Museu", "pt")).to_ntriples(), "\"Museu\"@pt");
  EXPECT_EQ(rdf::Term(rdf::Literal("1", rdf::Iri(std::string(rdf::vocab::kXsdInteger)))).to_ntriples(),
            "\"1\"^^<http://www.w3.org/2001/XMLSchema#integer>");
  EXPECT_EQ(rdf::Term(rdf::Literal("a\"b\\c\nd")).to_ntriples(), "\"a\\\"b\\\\c\\nd\"");
}

TEST(Term, LiteralSubjectIsRejected) {
  EXPECT_THROW(rdf::Triple(rdf::Literal("x"), iri("http://e/p"), iri("http://e/o")), rdf::InvalidTerm);
}

TEST(Graph, MatchBySubjectOnSingleTriple) {
  rdf::Graph g;
  g.insert(iri("http://e/a"), iri("http://e/p"), iri("http://e/b"));
  auto found = g.match(rdf::Term(iri("http://e/a")), std::nullopt, std::nullopt);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0]->object, rdf::Term(iri("http://e/b")));
}

TEST(Graph, EmptyGraphMatchesNothing) {
  rdf::Graph g;
  EXPECT_TRUE(g.match(std::nullopt, std::nullopt, std::nullopt).empty());
  EXPECT_TRUE(g.empty());
}

TEST(Graph, SetSemantics) {
  std::mt19937_64 rng(7);
  rdf::Graph g = random_graph(rng);
  rdf::Graph doubled = g;
  doubled.merge(g);
  EXPECT_EQ(doubled.size(), g.size());
  EXPECT_FALSE(doubled.insert(*g.begin()));
}

TEST(Graph, MatchEqualsLinearScanOnTenThousandTriples) {
  std::mt19937_64 rng(20240611);
  RandomGraphOptions opts;
  opts.triples = 10'000;
  opts.iri_pool = 400;
  opts.predicate_pool = 12;
  rdf::Graph g = random_graph(rng, opts);
  ASSERT_GT(g.size(), 9'000u);

  std::vector<const rdf::Triple*> all(g.size());
  std::size_t i = 0;
  for (const rdf::Triple& t : g) all[i++] = &t;
  std::uniform_int_distribution<std::size_t> any(0, all.size() - 1);
  for (int k = 0; k < 100; ++k) {
    const rdf::Triple& t = *all[any(rng)];
    int shape = k % 8;
    std::optional<rdf::Term> s = (shape & 1) ? std::optional<rdf::Term>(t.subject) : std::nullopt;
    std::optional<rdf::Iri> p = (shape & 2) ? std::optional<rdf::Iri>(t.predicate) : std::nullopt;
    std::optional<rdf::Term> o = (shape & 4) ? std::optional<rdf::Term>(t.object) : std::nullopt;
    EXPECT_EQ(sorted_match(g, s, p, o), scan(g, s, p, o)) << "shape " << shape;
    EXPECT_GE(g.estimate(s, p, o), g.match(s, p, o).size());
  }
}

TEST(Graph, IndexCoherenceUnderInterleavedInserts) {
  std::mt19937_64 rng(99);
  RandomGraphOptions opts;
  opts.triples = 1;
  opts.iri_pool = 15;
  opts.predicate_pool = 4;
  opts.max_blank_nodes = 0;
  rdf::Graph g;
  for (int round = 0; round < 300; ++round) {
    rdf::Graph one = random_graph(rng, opts);
    g.merge(one);
    if (round % 10 != 9) continue;
    const rdf::Triple& t = *one.begin();
    for (int shape = 0; shape < 8; ++shape) {
      std::optional<rdf::Term> s = (shape & 1) ? std::optional<rdf::Term>(t.subject) : std::nullopt;
      std::optional<rdf::Iri> p = (shape & 2) ? std::optional<rdf::Iri>(t.predicate) : std::nullopt;
      std::optional<rdf::Term> o = (shape & 4) ? std::optional<rdf::Term>(t.object) : std::nullopt;
      ASSERT_EQ(sorted_match(g, s, p, o), scan(g, s, p, o)) << "round " << round << " shape " << shape;
    }
  }
}

TEST(Graph, CopiesAreIndependent) {
  rdf::Graph a;
  a.insert(iri("http://e/a"), iri("http://e/p"), iri("http://e/b"));
  rdf::Graph b = a;
  b.insert(iri("http://e/a"), iri("http://e/p"), iri("http://e/c"));
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(b.match(rdf::Term(iri("http://e/a")), std::nullopt, std::nullopt).size(), 2u);
  EXPECT_EQ(a.match(rdf::Term(iri("http://e/a")), std::nullopt, std::nullopt).size(), 1u);
}

TEST(Graph, MergeAdoptsOnlyUnboundPrefixes) {
  rdf::Graph a;
  a.set_prefix("ex", iri("http://e/"));
  rdf::Graph b;
  b.set_prefix("ex", iri("http://other/"));
  b.set_prefix("x", iri("http://x/"));
  a.merge(b);
  EXPECT_EQ(a.prefixes().at("ex"), iri("http://e/"));
  EXPECT_EQ(a.prefixes().at("x"), iri("http://x/"));
}

TEST(Graph, SortedIsNTriplesOrder) {
  rdf::Graph g;
  g.insert(iri("http://e/b"), iri("http://e/p"), rdf::Literal("2"));
  g.insert(iri("http://e/a"), iri("http://e/q"), rdf::Literal("1"));
  g.insert(iri("http://e/a"), iri("http://e/p"), rdf::Literal("1"));
  auto sorted = g.sorted();
  ASSERT_EQ(sorted.size(), 3u);
  EXPECT_EQ(sorted[0]->to_ntriples(), "<http://e/a> <http://e/p> \"1\" .");
  EXPECT_EQ(sorted[1]->to_ntriples(), "<http://e/a> <http://e/q> \"1\" .");
  EXPECT_EQ(sorted[2]->to_ntriples(), "<http://e/b> <http://e/p> \"2\" .");
}

TEST(Graph, PrefixBlankNodesKeepsStructure) {
  rdf::Graph g;
  g.insert(rdf::BlankNode("b0"), iri("http://e/p"), rdf::BlankNode("b1"));
  g.insert(iri("http://e/a"), iri("http://e/p"), rdf::BlankNode("b0"));
  rdf::Graph h = rdf::prefix_blank_nodes(g, "f1_");
  EXPECT_EQ(h.size(), 2u);
  EXPECT_TRUE(h.contains(rdf::Triple(rdf::BlankNode("f1_b0"), iri("http://e/p"), rdf::BlankNode("f1_b1"))));
  EXPECT_TRUE(h.contains(rdf::Triple(iri("http://e/a"), iri("http://e/p"), rdf::BlankNode("f1_b0"))));
}

TEST(Snapshot, ReadersKeepTheirVersion) {
  rdf::Snapshot<int> snap(1);
  auto pinned = snap.get();
  snap.publish(2);
  EXPECT_EQ(*pinned, 1);
  EXPECT_EQ(*snap.get(), 2);
}
