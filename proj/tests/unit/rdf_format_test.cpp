#include <gtest/gtest.h>

#include <random>

#include "gemforge/rdf/format.hpp"

namespace rdf = gemforge::rdf;
using rdf::Format;

TEST(Negotiate, RdfXml) { EXPECT_EQ(rdf::negotiate("application/rdf+xml"), Format::RdfXml); }

TEST(Negotiate, EmptyHeaderMeansHtml) {
  EXPECT_EQ(rdf::negotiate(""), Format::Html);
  EXPECT_EQ(rdf::negotiate("   "), Format::Html);
}

TEST(Negotiate, HigherQualityWins) { EXPECT_EQ(rdf::negotiate("text/html;q=0.3, text/turtle;q=0.9"), Format::Turtle); }

TEST(Negotiate, TiesFollowServerPreference) {
  EXPECT_EQ(rdf::negotiate("*/*"), Format::Turtle);
  EXPECT_EQ(rdf::negotiate("application/n-triples, application/ld+json"), Format::JsonLd);
  EXPECT_EQ(rdf::negotiate("text/html, application/rdf+xml"), Format::RdfXml);
  EXPECT_EQ(rdf::negotiate("application/*"), Format::RdfXml);
}

TEST(Negotiate, MostSpecificRangeSetsTheQuality) {
  // text/turtle is excluded explicitly even though text/* is welcome.
  EXPECT_EQ(rdf::negotiate("text/*;q=0.8, text/turtle;q=0"), Format::Html);
  EXPECT_EQ(rdf::negotiate("*/*;q=0.1, application/ld+json"), Format::JsonLd);
}

TEST(Negotiate, LegacyAndGenericAliases) {
  EXPECT_EQ(rdf::negotiate("text/rdf+n3"), Format::Turtle);
  EXPECT_EQ(rdf::negotiate("application/xml"), Format::RdfXml);
  EXPECT_EQ(rdf::negotiate("application/json"), Format::JsonLd);
}

TEST(Negotiate, NothingAcceptable) {
  EXPECT_EQ(rdf::negotiate("image/png"), std::nullopt);
  EXPECT_EQ(rdf::negotiate("text/turtle;q=0"), std::nullopt);
}

TEST(Negotiate, CaseAndWhitespaceInsensitive) {
  EXPECT_EQ(rdf::negotiate("  Text/Turtle ; Q=0.5 "), Format::Turtle);
}

TEST(Negotiate, InvalidQualityDropsTheRange) {
  EXPECT_EQ(rdf::negotiate("text/turtle;q=2, application/rdf+xml;q=0.1"), Format::RdfXml);
}

TEST(Negotiate, TotalOnArbitraryInput) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> len(0, 80);
  for (int i = 0; i < 5000; ++i) {
    std::string header;
    for (int k = len(rng); k > 0; --k) header += static_cast<char>(byte(rng));
    auto f = rdf::negotiate(header);
    if (f) {
      EXPECT_TRUE(rdf::is_rdf_syntax(*f) || *f == Format::Html);
    }
  }
}

TEST(MediaTypes, CanonicalNames) {
  EXPECT_EQ(rdf::media_type(Format::Turtle), "text/turtle");
  EXPECT_EQ(rdf::media_type(Format::NTriples), "application/n-triples");
  EXPECT_EQ(rdf::media_type(Format::RdfXml), "application/rdf+xml");
  EXPECT_EQ(rdf::media_type(Format::JsonLd), "application/ld+json");
  EXPECT_EQ(rdf::media_type(Format::SparqlJson), "application/json");
  EXPECT_EQ(rdf::media_type(Format::SparqlXml), "application/xml");
}

TEST(MediaTypes, ExtensionsRoundTrip) {
  for (auto f : {Format::Turtle, Format::NTriples, Format::RdfXml, Format::JsonLd, Format::Html}) {
    EXPECT_EQ(rdf::format_from_extension(rdf::file_extension(f)), f);
  }
  EXPECT_EQ(rdf::format_from_extension("docx"), std::nullopt);
}
