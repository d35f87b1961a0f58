#include <cctype>
#include <map>

#include "gemforge/rdf/iri.hpp"
#include "gemforge/rdf/parse.hpp"
#include "gemforge/rdf/vocab.hpp"
#include "syntax.hpp"

namespace gemforge::rdf {

namespace {

using detail::pn_chars;

class TurtleReader {
 public:
  TurtleReader(std::string_view text, const std::optional<Iri>& base) : in_(text) {
    if (base) base_ = base->str();
  }

  Graph run() {
    in_.skip_ws();
    while (!in_.done()) {
      statement();
      in_.skip_ws();
    }
    return std::move(graph_);
  }

 private:
  void statement() {
    if (in_.peek() == '@') {
      std::size_t at = in_.pos();
      in_.get();
      if (in_.starts_with("prefix")) {
        in_.seek(in_.pos() + 6);
        prefix_decl();
        in_.skip_ws();
        in_.expect('.', "'.' after @prefix");
      } else if (in_.starts_with("base")) {
        in_.seek(in_.pos() + 4);
        base_decl();
        in_.skip_ws();
        in_.expect('.', "'.' after @base");
      } else {
        in_.fail_at(at, "unknown directive");
      }
      return;
    }
    if (sparql_keyword("PREFIX")) {
      prefix_decl();
      return;
    }
    if (sparql_keyword("BASE")) {
      base_decl();
      return;
    }
    triples();
    in_.skip_ws();
    in_.expect('.', "'.' at end of statement");
  }

  bool sparql_keyword(std::string_view kw) {
    if (!in_.starts_with_keyword(kw)) return false;
    char after = in_.peek(kw.size());
    if (after != ' ' && after != '\t' && after != '\n' && after != '\r' && after != '<') return false;
    in_.seek(in_.pos() + kw.size());
    return true;
  }

  void prefix_decl() {
    in_.skip_ws();
    std::string prefix = in_.read_pn_prefix();
    in_.expect(':', "':' after prefix name");
    in_.skip_ws();
    Iri ns = resolve(in_.pos(), in_.read_iriref());
    prefixes_[prefix] = ns.str();
    graph_.set_prefix(prefix, ns);
  }

  void base_decl() {
    in_.skip_ws();
    base_ = resolve(in_.pos(), in_.read_iriref()).str();
  }

  Iri resolve(std::size_t pos, const std::string& ref) {
    std::string full;
    if (has_scheme(ref)) {
      full = ref;
    } else if (base_) {
      full = resolve_iri(*base_, ref);
    } else {
      in_.fail_at(pos, "unresolved relative IRI <" + ref + ">: no base IRI");
    }
    if (!Iri::is_valid(full)) in_.fail_at(pos, "invalid IRI <" + full + ">");
    return Iri(std::move(full));
  }

  // iri := IRIREF | PrefixedName
  Iri iri() {
    std::size_t pos = in_.pos();
    if (in_.peek() == '<') return resolve(pos, in_.read_iriref());
    return prefixed_name();
  }

  Iri prefixed_name() {
    std::size_t pos = in_.pos();
    std::string prefix = in_.read_pn_prefix();
    if (in_.peek() != ':') in_.fail_at(pos, "expected IRI or prefixed name");
    in_.get();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) in_.fail_at(pos, "undefined prefix '" + prefix + ":'");
    std::string local = in_.read_pn_local();
    std::string full = it->second + local;
    if (!Iri::is_valid(full)) in_.fail_at(pos, "invalid IRI from prefixed name");
    return Iri(std::move(full));
  }

  void triples() {
    if (in_.peek() == '[') {
      Term subject = blank_node_property_list();
      in_.skip_ws();
      if (in_.peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = subject_term();
    in_.skip_ws();
    predicate_object_list(subject);
  }

  Term subject_term() {
    char c = in_.peek();
    if (c == '(') in_.fail("RDF collections '( ... )' are not supported");
    if (c == '_' && in_.peek(1) == ':') return labeler_.named(in_.read_blank_label());
    if (c == '"' || c == '\'' || c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      in_.fail("literal in subject position");
    }
    return iri();
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      in_.skip_ws();
      Iri predicate = verb();
      object_list(subject, predicate);
      in_.skip_ws();
      if (in_.peek() != ';') return;
      while (in_.peek() == ';') {
        in_.get();
        in_.skip_ws();
      }
      // A trailing ';' may be followed directly by the end of the list.
      char c = in_.peek();
      if (c == '.' || c == ']' || in_.done()) return;
    }
  }

  Iri verb() {
    if (in_.peek() == 'a') {
      char next = in_.peek(1);
      auto un = static_cast<unsigned char>(next);
      if (!(pn_chars(un) || next == ':' || next == '.')) {
        in_.get();
        return Iri(std::string(vocab::kRdfType));
      }
    }
    char c = in_.peek();
    if (c == '_' || c == '"' || c == '[' || c == '(') in_.fail("expected predicate IRI");
    return iri();
  }

  void object_list(const Term& subject, const Iri& predicate) {
    while (true) {
      in_.skip_ws();
      Term object = object_term();
      graph_.insert(Triple(subject, predicate, std::move(object)));
      in_.skip_ws();
      if (in_.peek() != ',') return;
      in_.get();
    }
  }

  Term blank_node_property_list() {
    in_.expect('[', "'['");
    BlankNode node = labeler_.fresh();
    in_.skip_ws();
    if (in_.peek() != ']') predicate_object_list(node);
    in_.skip_ws();
    in_.expect(']', "']'");
    return node;
  }

  Term object_term() {
    char c = in_.peek();
    auto uc = static_cast<unsigned char>(c);
    if (c == '(') in_.fail("RDF collections '( ... )' are not supported");
    if (c == '[') return blank_node_property_list();
    if (c == '_' && in_.peek(1) == ':') return labeler_.named(in_.read_blank_label());
    if (c == '"' || c == '\'') return rdf_literal();
    if (std::isdigit(uc) || c == '+' || c == '-' || (c == '.' && std::isdigit(static_cast<unsigned char>(in_.peek(1))))) {
      return numeric_literal();
    }
    for (std::string_view kw : {"true", "false"}) {
      if (in_.starts_with(kw)) {
        char after = in_.peek(kw.size());
        auto ua = static_cast<unsigned char>(after);
        if (!(pn_chars(ua) || after == ':')) {
          in_.seek(in_.pos() + kw.size());
          return Literal(std::string(kw), Iri(std::string(vocab::kXsdBoolean)));
        }
      }
    }
    if (c == '\0') in_.fail("unexpected end of input");
    return iri();
  }

  Term rdf_literal() {
    std::string lexical = in_.read_string(true);
    if (in_.peek() == '@') {
      in_.get();
      return Literal::with_language(std::move(lexical), in_.read_langtag());
    }
    if (in_.peek() == '^' && in_.peek(1) == '^') {
      in_.seek(in_.pos() + 2);
      std::size_t pos = in_.pos();
      Iri datatype = iri();
      if (datatype.view() == vocab::kRdfLangString) in_.fail_at(pos, "rdf:langString requires a language tag");
      return Literal(std::move(lexical), std::move(datatype));
    }
    return Literal(std::move(lexical));
  }

  Term numeric_literal() {
    std::size_t start = in_.pos();
    std::string lexical;
    auto digits = [&] {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(in_.peek()))) {
        lexical += in_.get();
        ++n;
      }
      return n;
    };
    if (in_.peek() == '+' || in_.peek() == '-') lexical += in_.get();
    std::size_t int_digits = digits();
    std::size_t frac_digits = 0;
    bool has_dot = false;
    if (in_.peek() == '.' && std::isdigit(static_cast<unsigned char>(in_.peek(1)))) {
      has_dot = true;
      lexical += in_.get();
      frac_digits = digits();
    } else if (in_.peek() == '.' && (in_.peek(1) == 'e' || in_.peek(1) == 'E') && int_digits > 0) {
      has_dot = true;
      lexical += in_.get();
    }
    if (int_digits == 0 && frac_digits == 0) in_.fail_at(start, "invalid numeric literal");
    if (in_.peek() == 'e' || in_.peek() == 'E') {
      lexical += in_.get();
      if (in_.peek() == '+' || in_.peek() == '-') lexical += in_.get();
      if (digits() == 0) in_.fail_at(start, "invalid exponent in numeric literal");
      return Literal(std::move(lexical), Iri(std::string(vocab::kXsdDouble)));
    }
    if (has_dot) return Literal(std::move(lexical), Iri(std::string(vocab::kXsdDecimal)));
    return Literal(std::move(lexical), Iri(std::string(vocab::kXsdInteger)));
  }

  detail::Cursor in_;
  std::optional<std::string> base_;
  std::map<std::string, std::string> prefixes_;
  detail::BlankNodeLabeler labeler_;
  Graph graph_;
};

}  // namespace

Graph parse_turtle(std::string_view text, const std::optional<Iri>& base) {
  return TurtleReader(text, base).run();
}

}  // namespace gemforge::rdf
