#include <gtest/gtest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>

#include "fixtures.hpp"
#include "gemforge/rdf/parse.hpp"
#include "gemforge/util/io.hpp"
#include "isomorphism.hpp"
#include "run_process.hpp"

namespace fs = std::filesystem;
namespace rdf = gemforge::rdf;
using gemforge::testing::fixture;
using gemforge::testing::ontology_file;
using gemforge::testing::ProcessResult;

namespace {

ProcessResult cli(std::vector<std::string> args, const std::string& stdin_text = {}) {
  args.insert(args.begin(), GEMFORGE_CLI_PATH);
  return gemforge::testing::run_process(args, stdin_text);
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("gemforge-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, HelpListsSubcommandsAndFlags) {
  auto top = cli({"--help"});
  EXPECT_EQ(top.exit_code, 0);
  for (const char* sub : {"validate", "etl", "link", "query", "serve", "export"}) {
    EXPECT_NE(top.out.find(sub), std::string::npos) << sub;
  }
  auto q = cli({"query", "--help"});
  EXPECT_EQ(q.exit_code, 0);
  for (const char* flag : {"--data", "--query", "--query-file", "--output", "--ontology"}) {
    EXPECT_NE(q.out.find(flag), std::string::npos) << flag;
  }
}

TEST(Cli, UsageErrorsExit64) {
  EXPECT_EQ(cli({}).exit_code, 64);
  EXPECT_EQ(cli({"validate", "--bogus"}).exit_code, 64);
  EXPECT_EQ(cli({"export", "--data", fixture("museu-do-fado.ttl"), "--format", "docx"}).exit_code, 64);
}

TEST(Cli, MissingFileExits1) {
  auto r = cli({"validate", "--data", "/nonexistent/x.ttl", "--ontology", ontology_file()});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("/nonexistent/x.ttl"), std::string::npos) << r.err;
}

TEST(Cli, ValidateDefectsExit3) {
  auto r = cli({"validate", "--data", fixture("ten-gems-defects.ttl"), "--ontology", ontology_file(), "--json"});
  EXPECT_EQ(r.exit_code, 3) << r.err;
  EXPECT_NE(r.out.find("5003"), std::string::npos);
  EXPECT_NE(r.out.find("5006"), std::string::npos);
  EXPECT_NE(r.out.find("5009"), std::string::npos);
}

TEST(Cli, MalformedQueryExits2) {
  auto r = cli({"query", "--data", fixture("museu-do-fado.ttl"), "--query", "SELECT ?s WHERE {"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(cli({"query", "--data", fixture("museu-do-fado.ttl"), "--query", "ASK {}"}).exit_code, 2);
}

TEST(Cli, EtlThenValidateThenLink) {
  TempDir tmp;
  auto etl = cli({"etl", "--input", fixture("lisbon-gems.csv"), "--ontology", ontology_file(), "--out", tmp / "gems.nt",
                  "--reject-log", tmp / "rejects.jsonl"});
  ASSERT_EQ(etl.exit_code, 0) << etl.err;
  EXPECT_NE(etl.err.find("\"records_in\":12"), std::string::npos) << etl.err;
  std::string rejects = gemforge::util::read_file(tmp / "rejects.jsonl");
  EXPECT_EQ(std::count(rejects.begin(), rejects.end(), '\n'), 2);

  auto validate = cli({"validate", "--data", tmp / "gems.nt", "--ontology", ontology_file()});
  EXPECT_EQ(validate.exit_code, 0) << validate.out << validate.err;

  auto link = cli({"link", "--left", tmp / "gems.nt", "--right", fixture("dbpedia-lisbon.ttl"), "--out", tmp / "links.nt",
                   "--review", tmp / "review.csv"});
  ASSERT_EQ(link.exit_code, 0) << link.err;
  rdf::Graph links = rdf::read_graph_file(tmp / "links.nt");
  EXPECT_GE(links.size(), 5u);
  EXPECT_TRUE(links.contains(rdf::Triple(
      rdf::Term(rdf::Iri("https://culturalgems.jrc.ec.europa.eu/resource/cultural-gems/27213")),
      rdf::Iri("http://www.w3.org/2002/07/owl#sameAs"), rdf::Term(rdf::Iri("http://dbpedia.org/resource/Museu_do_Fado")))));
}

TEST(Cli, ExportRoundTrips) {
  TempDir tmp;
  rdf::Graph source = rdf::read_graph_file(fixture("museu-do-fado.ttl"));
  for (const char* fmt : {"ttl", "nt"}) {
    std::string out = tmp / (std::string("export.") + fmt);
    auto r = cli({"export", "--data", fixture("museu-do-fado.ttl"), "--format", fmt, "--out", out});
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(gemforge::testing::isomorphic(rdf::read_graph_file(out), source)) << fmt;
  }
  auto stdout_nt = cli({"export", "--data", fixture("museu-do-fado.ttl"), "--format", "nt"});
  EXPECT_EQ(stdout_nt.out, gemforge::util::read_file(tmp / "export.nt"));
}

TEST(Cli, QueryFromFileWithOutputToken) {
  TempDir tmp;
  gemforge::util::write_file(tmp / "q.rq",
                             "DESCRIBE <https://culturalgems.jrc.ec.europa.eu/resource/cultural-gems/27213>");
  auto r = cli({"query", "--data", fixture("museu-do-fado.ttl"), "--query-file", tmp / "q.rq", "--output",
                "application/n-triples"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(rdf::parse_ntriples(r.out).size(), 13u);
  auto bad = cli({"query", "--data", fixture("museu-do-fado.ttl"), "--query-file", tmp / "q.rq", "--output", "image/png"});
  EXPECT_EQ(bad.exit_code, 64);
}
