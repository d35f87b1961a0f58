#include <algorithm>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <pthread.h>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "gemforge/etl/transform.hpp"
#include "gemforge/linker/discover.hpp"
#include "gemforge/ontology/validate.hpp"
#include "gemforge/rdf/parse.hpp"
#include "gemforge/rdf/serialize.hpp"
#include "gemforge/server/endpoint.hpp"
#include "gemforge/server/http_server.hpp"
#include "gemforge/sparql/ast.hpp"
#include "gemforge/util/config_file.hpp"
#include "gemforge/util/io.hpp"

namespace fs = std::filesystem;
using namespace gemforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitQuery = 2;
constexpr int kExitUsage = 64;

// Violations map to 3..125 so they never collide with the I/O and query codes.
int violation_exit_code(std::size_t count) {
  if (count == 0) return kExitOk;
  return static_cast<int>(std::clamp<std::size_t>(count, 3, 125));
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ontology::OntologyModel load_model(const fs::path& path) { return ontology::load_ontology(rdf::read_graph_file(path)); }

std::vector<fs::path> to_paths(const std::vector<std::string>& items) { return {items.begin(), items.end()}; }

void emit(const std::optional<std::string>& out, const std::string& content) {
  if (out && *out != "-") {
    util::write_file(*out, content);
  } else {
    std::cout << content << std::flush;
  }
}

rdf::Format output_format_for(const fs::path& path) {
  std::string ext = path.extension().string();
  if (ext.size() > 1) {
    if (auto f = rdf::format_from_extension(ext.substr(1)); f && rdf::is_rdf_syntax(*f)) return *f;
  }
  return rdf::Format::NTriples;
}

// ---- validate -------------------------------------------------------------

struct ValidateArgs {
  std::vector<std::string> data;
  std::string ontology;
  bool json = false;
};

int cmd_validate(const ValidateArgs& args) {
  ontology::OntologyModel model = load_model(args.ontology);
  rdf::Graph data = server::load_data_files(to_paths(args.data));
  auto reports = ontology::validate_all(model, data);
  std::size_t count = 0;
  for (const auto& r : reports) count += r.violations.size();

  if (args.json) {
    std::cout << ontology::to_json(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      for (const auto& v : r.violations) {
        std::cout << "<" << r.subject.str() << "> " << ontology::to_string(v.kind) << ": " << v.detail << "\n";
      }
    }
    std::cerr << "checked " << reports.size() << " resources, " << count << " violation(s)\n";
  }
  return violation_exit_code(count);
}

// ---- etl ------------------------------------------------------------------

struct EtlArgs {
  std::string input;
  std::string ontology;
  std::string out;
  std::optional<std::string> reject_log;
};

int cmd_etl(const EtlArgs& args) {
  ontology::OntologyModel model = load_model(args.ontology);
  etl::RecordBatch batch = etl::read_records_file(args.input);
  etl::EtlResult result = etl::run_etl(batch, model);

  util::write_file(args.out, rdf::serialize(result.graph, output_format_for(args.out)));
  if (args.reject_log) {
    std::string log;
    for (const auto& r : result.rejected) log += nlohmann::json{{"id", r.id}, {"reason", r.reason}}.dump() + "\n";
    util::write_file(*args.reject_log, log);
  }
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  const auto& s = result.stats;
  std::cerr << nlohmann::json{{"records_in", s.records_in},
                              {"records_rejected", s.records_rejected},
                              {"triples_out", s.triples_out},
                              {"resources_minted", s.resources_minted},
                              {"category_fallbacks", s.category_fallbacks}}
                   .dump()
            << "\n";
  return kExitOk;
}

// ---- link -----------------------------------------------------------------

struct LinkArgs {
  std::string left;
  std::string right;
  std::optional<std::string> spec;
  std::string out;
  std::optional<std::string> review;
  bool no_blocking = false;
  bool verbose = false;
};

int cmd_link(const LinkArgs& args) {
  linker::LinkSpec spec;
  if (args.spec) spec = linker::load_link_spec(*args.spec);
  spec.normalize();
  rdf::Graph left = rdf::read_graph_file(args.left);
  rdf::Graph right = rdf::read_graph_file(args.right);

  std::vector<std::string> notes;
  linker::DiscoverOptions options;
  options.blocking = !args.no_blocking;
  options.log = &notes;
  auto candidates = linker::discover_links(left, right, spec, options);

  util::write_file(args.out, rdf::to_ntriples(linker::emit_sameas(candidates)));
  if (args.review) util::write_file(*args.review, linker::review_csv(candidates));

  std::size_t accepted = 0;
  std::size_t review = 0;
  for (const auto& c : candidates) {
    accepted += c.verdict == linker::Verdict::Accept;
    review += c.verdict == linker::Verdict::Review;
  }
  if (args.verbose) {
    for (const auto& n : notes) std::cerr << "note: " << n << "\n";
  }
  std::cerr << nlohmann::json{{"accepted", accepted}, {"review", review}, {"notes", notes.size()}}.dump() << "\n";
  return kExitOk;
}

// ---- query ----------------------------------------------------------------

struct QueryArgs {
  std::vector<std::string> data;
  std::optional<std::string> ontology;
  std::optional<std::string> query;
  std::optional<std::string> query_file;
  std::optional<std::string> output;
};

int cmd_query(const QueryArgs& args) {
  if (args.query.has_value() == args.query_file.has_value()) throw UsageError("give exactly one of --query and --query-file");
  std::string text = args.query ? *args.query : util::read_file(*args.query_file);
  rdf::Graph graph = args.ontology ? server::load_dataset(*args.ontology, to_paths(args.data)).data
                                   : server::load_data_files(to_paths(args.data));

  std::optional<std::string_view> output;
  if (args.output) output = *args.output;
  server::QueryResponse r = server::run_sparql(graph, text, output, "", ontology::vocab::kResourceNs);
  if (r.status == 200) {
    std::cout << r.body << std::flush;
    return kExitOk;
  }
  std::cerr << r.body;
  return r.status == 406 ? kExitUsage : kExitQuery;
}

// ---- export ---------------------------------------------------------------

struct ExportArgs {
  std::vector<std::string> data;
  std::string format;
  std::optional<std::string> out;
};

int cmd_export(const ExportArgs& args) {
  auto format = server::describe_format_from_token(args.format);
  if (!format || !rdf::is_rdf_syntax(*format)) throw UsageError("unknown export format: " + args.format);
  rdf::Graph graph = server::load_data_files(to_paths(args.data));
  emit(args.out, rdf::serialize(graph, *format));
  return kExitOk;
}

// ---- serve ----------------------------------------------------------------

struct ServeArgs {
  std::optional<std::string> config;
  std::optional<std::string> bind;
  std::optional<std::string> ontology;
  std::vector<std::string> data;
  std::optional<std::string> explorer_dir;
  std::vector<std::string> cors;
};

std::optional<fs::path> default_ontology() {
  for (const char* candidate : {GEMFORGE_INSTALLED_ONTOLOGY, GEMFORGE_SOURCE_ONTOLOGY}) {
    std::error_code ec;
    if (fs::is_regular_file(candidate, ec)) return fs::path(candidate);
  }
  return std::nullopt;
}

int cmd_serve(const ServeArgs& args) {
  server::ServerConfig config;
  if (args.config) {
    fs::path path(*args.config);
    server::apply_config(config, util::load_config_file(path), path.parent_path());
  }
  server::apply_environment(config, [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    return v ? std::optional<std::string>(v) : std::nullopt;
  });
  if (args.bind) server::parse_bind(config, *args.bind);
  if (args.ontology) config.ontology_file = *args.ontology;
  if (!args.data.empty()) config.data_files = to_paths(args.data);
  if (args.explorer_dir) config.explorer_dir = fs::path(*args.explorer_dir);
  if (!args.cors.empty()) config.cors_allowed_origins = args.cors;
  if (config.ontology_file.empty()) {
    if (auto fallback = default_ontology()) config.ontology_file = *fallback;
  }
  try {
    config.check();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  auto reload = [config] { return server::load_dataset(config.ontology_file, config.data_files); };
  server::LinkedDataService service(config, reload(), reload);
  server::HttpServer http(service, config.explorer_dir);

  // Block the stop signals before the worker threads start; one thread waits for them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  int port = http.bind(config.host, config.port);
  std::cerr << "serving " << service.snapshot()->data.size() << " triples on http://" << config.host << ":" << port
            << "/\n";
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    http.stop();
  });
  http.run();
  // run() also returns on a listener failure; wake the waiter in that case.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cultural gems linked-data toolkit: ETL, link discovery, SPARQL and a linked-data server"};
  app.name("gemforge");
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "gemforge 0.1.0");

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "Check individuals against the ontology");
  v->add_option("--data", validate.data, "Data files (.ttl or .nt)")->required();
  v->add_option("--ontology", validate.ontology, "Ontology Turtle file")->required();
  v->add_flag("--json", validate.json, "Print a machine-readable report");

  EtlArgs etl_args;
  auto* e = app.add_subcommand("etl", "Transform gem records into RDF");
  e->add_option("--input", etl_args.input, "Records (.csv or JSON lines)")->required();
  e->add_option("--ontology", etl_args.ontology, "Ontology Turtle file")->required();
  e->add_option("--out", etl_args.out, "Output graph (.nt or .ttl)")->required();
  e->add_option("--reject-log", etl_args.reject_log, "JSON-lines log of rejected records");

  LinkArgs link;
  auto* l = app.add_subcommand("link", "Discover owl:sameAs links between two datasets");
  l->add_option("--left", link.left, "Left dataset")->required();
  l->add_option("--right", link.right, "Right dataset")->required();
  l->add_option("--spec", link.spec, "Link specification (TOML or JSON)");
  l->add_option("--out", link.out, "Accepted links as N-Triples")->required();
  l->add_option("--review", link.review, "Review-tier candidates as CSV");
  l->add_flag("--no-blocking", link.no_blocking, "Score every pair");
  l->add_flag("--verbose", link.verbose, "Print scoring notes");

  QueryArgs query;
  auto* q = app.add_subcommand("query", "Run a SPARQL query over local files");
  q->add_option("--data", query.data, "Data files (.ttl or .nt)")->required();
  q->add_option("--ontology", query.ontology, "Ontology file; adds inferred types");
  q->add_option("--query", query.query, "Query text");
  q->add_option("--query-file", query.query_file, "File holding the query");
  q->add_option("--output", query.output, "Format token, e.g. text/turtle or application/json");

  ServeArgs serve;
  auto* s = app.add_subcommand("serve", "Start the linked-data server");
  s->add_option("--config", serve.config, "Server config (TOML or JSON)");
  s->add_option("--bind", serve.bind, "host:port (overrides GEMFORGE_BIND)");
  s->add_option("--ontology", serve.ontology, "Ontology file (overrides GEMFORGE_ONTOLOGY)");
  s->add_option("--data", serve.data, "Data files (override GEMFORGE_DATA)");
  s->add_option("--explorer-dir", serve.explorer_dir, "Static explorer build served under /explorer/");
  s->add_option("--cors-origin", serve.cors, "Allowed CORS origin (repeatable)");

  ExportArgs export_args;
  auto* x = app.add_subcommand("export", "Write the merged data in one RDF syntax");
  x->add_option("--data", export_args.data, "Data files (.ttl or .nt)")->required();
  x->add_option("--format", export_args.format, "ttl, nt, rdfxml or jsonld")
      ->required()
      ->check(CLI::IsMember({"ttl", "turtle", "nt", "ntriples", "rdf", "rdfxml", "jsonld", "json"}));
  x->add_option("--out", export_args.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ok) {
    return app.exit(ok);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (*v) return cmd_validate(validate);
    if (*e) return cmd_etl(etl_args);
    if (*l) return cmd_link(link);
    if (*q) return cmd_query(query);
    if (*s) return cmd_serve(serve);
    if (*x) return cmd_export(export_args);
  } catch (const UsageError& err) {
    std::cerr << "gemforge: " << err.what() << "\n";
    return kExitUsage;
  } catch (const sparql::QueryError& err) {
    std::cerr << "gemforge: " << err.what() << "\n";
    return kExitQuery;
  } catch (const linker::SpecError& err) {
    std::cerr << "gemforge: " << err.what() << "\n";
    return kExitUsage;
  } catch (const util::ConfigError& err) {
    std::cerr << "gemforge: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    // Unreadable files, parse errors in data files and ontology problems.
    std::cerr << "gemforge: " << err.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
