#include "gemforge/rdf/iri.hpp"
#include "gemforge/rdf/parse.hpp"
#include "gemforge/rdf/vocab.hpp"
#include "syntax.hpp"

namespace gemforge::rdf {

namespace {

class NTriplesReader {
 public:
  explicit NTriplesReader(std::string_view text) : in_(text) {}

  Graph run() {
    while (!in_.done()) {
      in_.skip_ws(/*comments=*/true, /*stop_at_newline=*/true);
      if (in_.peek() == '\n') {
        in_.get();
        continue;
      }
      if (in_.done()) break;
      statement();
      in_.skip_ws(true, true);
      if (!in_.done()) {
        if (in_.peek() != '\n') in_.fail("expected end of line after '.'");
        in_.get();
      }
    }
    return std::move(graph_);
  }

 private:
  void statement() {
    Term subject = in_.peek() == '_' ? Term(labeler_.named(in_.read_blank_label())) : Term(absolute_iri());
    blank();
    Iri predicate = absolute_iri();
    blank();
    Term object = object_term();
    blank();
    in_.expect('.', "'.' at end of triple");
    graph_.insert(Triple(std::move(subject), std::move(predicate), std::move(object)));
  }

  void blank() { in_.skip_ws(false, true); }

  Iri absolute_iri() {
    std::size_t pos = in_.pos();
    if (in_.peek() != '<') in_.fail("expected IRI");
    std::string text = in_.read_iriref();
    if (!Iri::is_valid(text)) in_.fail_at(pos, "relative or invalid IRI <" + text + ">");
    return Iri(std::move(text));
  }

  Term object_term() {
    char c = in_.peek();
    if (c == '<') return absolute_iri();
    if (c == '_') return labeler_.named(in_.read_blank_label());
    if (c != '"') in_.fail("expected object term");
    std::string lexical = in_.read_string(false);
    if (in_.peek() == '@') {
      in_.get();
      return Literal::with_language(std::move(lexical), in_.read_langtag());
    }
    if (in_.peek() == '^' && in_.peek(1) == '^') {
      in_.seek(in_.pos() + 2);
      std::size_t pos = in_.pos();
      Iri datatype = absolute_iri();
      if (datatype.view() == vocab::kRdfLangString) in_.fail_at(pos, "rdf:langString requires a language tag");
      return Literal(std::move(lexical), std::move(datatype));
    }
    return Literal(std::move(lexical));
  }

  detail::Cursor in_;
  detail::BlankNodeLabeler labeler_;
  Graph graph_;
};

}  // namespace

Graph parse_ntriples(std::string_view text) { return NTriplesReader(text).run(); }

}  // namespace gemforge::rdf
