#include <algorithm>
#include <cctype>
#include <set>

#include "gemforge/rdf/iri.hpp"
#include "gemforge/rdf/vocab.hpp"
#include "gemforge/sparql/ast.hpp"
#include "gemforge/sparql/regex.hpp"
#include "rdf/syntax.hpp"

namespace gemforge::sparql {

namespace {

namespace rv = rdf::vocab;

const std::set<std::string> kUnsupportedQueryForms = {"CONSTRUCT", "ASK", "INSERT", "DELETE", "LOAD", "CLEAR",
                                                      "CREATE", "DROP", "COPY", "MOVE", "ADD", "WITH"};
const std::set<std::string> kUnsupportedInGroup = {"OPTIONAL", "UNION", "GRAPH", "SERVICE", "MINUS", "BIND", "VALUES"};
const std::set<std::string> kUnsupportedModifiers = {"ORDER", "GROUP", "HAVING", "VALUES"};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : in_(text) {}

  QueryAst run() {
    prologue();
    std::string kw = peek_word();
    if (kw == "SELECT") {
      take_word();
      ast_.form = select_query();
    } else if (kw == "DESCRIBE") {
      take_word();
      ast_.form = describe_query();
    } else if (kUnsupportedQueryForms.count(kw)) {
      throw UnsupportedFeature(kw);
    } else {
      in_.fail("expected SELECT or DESCRIBE");
    }
    skip();
    if (!in_.done()) {
      std::string trailing = peek_word();
      if (kUnsupportedModifiers.count(trailing)) throw UnsupportedFeature(trailing);
      in_.fail("unexpected text after query");
    }
    return std::move(ast_);
  }

 private:
  void skip() { in_.skip_ws(true); }

  // Upper-cased word at the cursor, not consumed.
  std::string peek_word() {
    skip();
    std::string out;
    for (std::size_t i = 0; word_char(in_.peek(i)); ++i) {
      out += static_cast<char>(std::toupper(static_cast<unsigned char>(in_.peek(i))));
    }
    return out;
  }
  void take_word() {
    skip();
    while (word_char(in_.peek())) in_.get();
  }
  bool accept_word(std::string_view kw) {
    if (peek_word() != kw) return false;
    // A prefixed name such as `limit:x` is not the keyword.
    if (in_.peek(kw.size()) == ':') return false;
    take_word();
    return true;
  }
  bool accept(char c) {
    skip();
    if (in_.peek() != c) return false;
    in_.get();
    return true;
  }
  void expect(char c, const char* what) {
    skip();
    in_.expect(c, what);
  }

  void prologue() {
    for (;;) {
      if (accept_word("PREFIX")) {
        skip();
        std::string prefix = in_.read_pn_prefix();
        in_.expect(':', "':' after prefix name");
        skip();
        ast_.prefixes.insert_or_assign(prefix, iri_ref());
      } else if (accept_word("BASE")) {
        skip();
        base_ = iri_ref().str();
      } else {
        return;
      }
    }
  }

  rdf::Iri iri_ref() {
    std::size_t pos = in_.pos();
    std::string ref = in_.read_iriref();
    std::string full;
    if (rdf::has_scheme(ref)) {
      full = ref;
    } else if (base_) {
      full = rdf::resolve_iri(*base_, ref);
    } else {
      in_.fail_at(pos, "relative IRI <" + ref + "> without BASE");
    }
    if (!rdf::Iri::is_valid(full)) in_.fail_at(pos, "invalid IRI <" + full + ">");
    return rdf::Iri(std::move(full));
  }

  rdf::Iri prefixed_name() {
    std::size_t pos = in_.pos();
    std::string prefix = in_.read_pn_prefix();
    if (in_.peek() != ':') in_.fail_at(pos, "expected IRI, prefixed name or variable");
    in_.get();
    auto it = ast_.prefixes.find(prefix);
    if (it == ast_.prefixes.end()) in_.fail_at(pos, "undefined prefix '" + prefix + ":'");
    std::string full = it->second.str() + in_.read_pn_local();
    if (!rdf::Iri::is_valid(full)) in_.fail_at(pos, "invalid IRI from prefixed name");
    return rdf::Iri(std::move(full));
  }

  rdf::Iri iri() {
    skip();
    return in_.peek() == '<' ? iri_ref() : prefixed_name();
  }

  bool at_variable() {
    skip();
    return (in_.peek() == '?' || in_.peek() == '$') && word_char(in_.peek(1));
  }

  Variable variable() {
    skip();
    if (!at_variable()) in_.fail("expected variable");
    in_.get();
    std::string name;
    while (word_char(in_.peek())) name += in_.get();
    return Variable{std::move(name)};
  }

  DescribeQuery describe_query() {
    if (at_variable()) throw UnsupportedFeature("DESCRIBE ?variable");
    skip();
    if (in_.peek() == '*') throw UnsupportedFeature("DESCRIBE *");
    DescribeQuery q{iri()};
    skip();
    if (in_.peek() == '<' || at_variable()) throw UnsupportedFeature("DESCRIBE with several resources");
    if (peek_word() == "WHERE" || in_.peek() == '{') throw UnsupportedFeature("DESCRIBE ... WHERE");
    return q;
  }

  SelectQuery select_query() {
    SelectQuery q;
    if (accept_word("DISTINCT")) q.distinct = true;
    if (peek_word() == "REDUCED") throw UnsupportedFeature("REDUCED");
    if (accept('*')) {
      q.star = true;
    } else {
      while (at_variable()) q.vars.push_back(variable());
      skip();
      if (in_.peek() == '(') throw UnsupportedFeature("SELECT expressions");
      if (q.vars.empty()) in_.fail("expected variables or '*' after SELECT");
    }
    if (peek_word() == "FROM") throw UnsupportedFeature("FROM");
    accept_word("WHERE");
    group(q);
    modifiers(q);

    std::vector<Variable> bgp_vars;
    for (const auto& tp : q.patterns) {
      for (const PatternTerm* t : {&tp.subject, &tp.predicate, &tp.object}) {
        if (const auto* v = std::get_if<Variable>(t)) {
          if (std::find(bgp_vars.begin(), bgp_vars.end(), *v) == bgp_vars.end()) bgp_vars.push_back(*v);
        }
      }
    }
    if (q.star) {
      q.vars = bgp_vars;
    } else {
      std::vector<Variable> seen;
      for (const auto& v : q.vars) {
        if (std::find(bgp_vars.begin(), bgp_vars.end(), v) == bgp_vars.end()) {
          throw QuerySyntaxError("projected variable ?" + v.name + " does not occur in the pattern", 1, 1);
        }
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
          throw QuerySyntaxError("variable ?" + v.name + " projected twice", 1, 1);
        }
        seen.push_back(v);
      }
    }
    return q;
  }

  void group(SelectQuery& q) {
    expect('{', "'{' opening the WHERE clause");
    for (;;) {
      skip();
      if (accept('}')) return;
      if (in_.done()) in_.fail("unterminated group pattern");
      if (in_.peek() == '{') throw UnsupportedFeature(nested_group_feature());
      std::string kw = peek_word();
      if (kUnsupportedInGroup.count(kw) && in_.peek(kw.size()) != ':') throw UnsupportedFeature(kw);
      if (accept_word("FILTER")) {
        filter(q);
        accept('.');
        continue;
      }
      triples_same_subject(q);
      skip();
      if (in_.peek() != '}' && peek_word() != "FILTER") {
        std::string next = peek_word();
        if (kUnsupportedInGroup.count(next) && in_.peek(next.size()) != ':') throw UnsupportedFeature(next);
        expect('.', "'.' between triple patterns");
      }
    }
  }

  // `{ ... } UNION { ... }` reads better as UNION than as a nested group.
  std::string nested_group_feature() {
    const std::size_t start = in_.pos();
    int depth = 0;
    do {
      char c = in_.get();
      if (c == '{') ++depth;
      if (c == '}') --depth;
    } while (depth > 0 && !in_.done());
    skip();
    std::string after = peek_word();
    in_.seek(start);
    return after == "UNION" ? "UNION" : "nested group patterns";
  }

  void triples_same_subject(SelectQuery& q) {
    PatternTerm subject = subject_or_object(true);
    for (;;) {
      PatternTerm predicate = verb();
      for (;;) {
        PatternTerm object = subject_or_object(false);
        q.patterns.push_back({subject, predicate, object});
        if (!accept(',')) break;
      }
      if (!accept(';')) return;
      skip();
      // Trailing ';' before '.', '}' or FILTER.
      while (accept(';')) {
      }
      if (in_.peek() == '.' || in_.peek() == '}' || peek_word() == "FILTER") return;
    }
  }

  PatternTerm verb() {
    skip();
    if (at_variable()) return variable();
    if (in_.peek() == 'a' && !word_char(in_.peek(1)) && in_.peek(1) != ':') {
      in_.get();
      return rdf::Term(rdf::Iri(std::string(rv::kRdfType)));
    }
    if (in_.peek() == '^' || in_.peek() == '!' || in_.peek() == '(') throw UnsupportedFeature("property paths");
    rdf::Iri p = iri();
    skip();
    char c = in_.peek();
    if (c == '/' || c == '|' || c == '*' || c == '+' || (c == '?' && !word_char(in_.peek(1)))) {
      throw UnsupportedFeature("property paths");
    }
    return rdf::Term(std::move(p));
  }

  PatternTerm subject_or_object(bool subject) {
    skip();
    if (at_variable()) return variable();
    char c = in_.peek();
    if (c == '[' || (c == '_' && in_.peek(1) == ':')) throw UnsupportedFeature("blank nodes in query patterns");
    if (c == '(') throw UnsupportedFeature("RDF collections");
    if (c == '<') return rdf::Term(iri_ref());
    if (c == '"' || c == '\'' || c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      if (subject) in_.fail("literal in subject position");
      return literal();
    }
    if (subject) return rdf::Term(prefixed_name());
    std::string kw = peek_word();
    if ((kw == "TRUE" || kw == "FALSE") && !word_char(in_.peek(kw.size())) && in_.peek(kw.size()) != ':') {
      take_word();
      return rdf::Term(rdf::Literal(kw == "TRUE" ? "true" : "false", rdf::Iri(std::string(rv::kXsdBoolean))));
    }
    return rdf::Term(prefixed_name());
  }

  rdf::Term literal() {
    skip();
    char c = in_.peek();
    if (c == '"' || c == '\'') {
      std::string lexical = in_.read_string(true);
      if (in_.peek() == '@') {
        in_.get();
        return rdf::Literal::with_language(std::move(lexical), in_.read_langtag());
      }
      if (in_.starts_with("^^")) {
        in_.seek(in_.pos() + 2);
        return rdf::Literal(std::move(lexical), iri());
      }
      return rdf::Literal(std::move(lexical));
    }
    return number();
  }

  rdf::Term number() {
    std::size_t start = in_.pos();
    std::string text;
    if (in_.peek() == '+' || in_.peek() == '-') text += in_.get();
    auto digits = [&] {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(in_.peek()))) {
        text += in_.get();
        ++n;
      }
      return n;
    };
    std::size_t whole = digits();
    std::size_t frac = 0;
    bool dot = false;
    if (in_.peek() == '.' && std::isdigit(static_cast<unsigned char>(in_.peek(1)))) {
      dot = true;
      text += in_.get();
      frac = digits();
    }
    bool exp = false;
    if ((in_.peek() == 'e' || in_.peek() == 'E') && whole + frac > 0) {
      exp = true;
      text += in_.get();
      if (in_.peek() == '+' || in_.peek() == '-') text += in_.get();
      if (digits() == 0) in_.fail_at(start, "malformed exponent");
    }
    if (whole + frac == 0) in_.fail_at(start, "expected a term");
    std::string_view dt = exp ? rv::kXsdDouble : dot ? rv::kXsdDecimal : rv::kXsdInteger;
    return rdf::Literal(std::move(text), rdf::Iri(std::string(dt)));
  }

  void filter(SelectQuery& q) {
    skip();
    if (peek_word() == "REGEX") {
      take_word();
      q.filters.push_back(regex_call());
      return;
    }
    if (peek_word() == "NOT" || peek_word() == "EXISTS") throw UnsupportedFeature("EXISTS");
    expect('(', "'(' after FILTER");
    for (;;) {
      q.filters.push_back(filter_atom());
      skip();
      if (in_.starts_with("&&")) {
        in_.seek(in_.pos() + 2);
        continue;
      }
      if (in_.starts_with("||")) throw UnsupportedFeature("||");
      break;
    }
    expect(')', "')' closing FILTER");
  }

  Filter filter_atom() {
    skip();
    if (in_.peek() == '!') throw UnsupportedFeature("!");
    if (in_.peek() == '(') {
      in_.get();
      Filter f = filter_atom();
      skip();
      if (in_.starts_with("&&") || in_.starts_with("||")) throw UnsupportedFeature("nested boolean expressions");
      expect(')', "')'");
      return f;
    }
    std::string kw = peek_word();
    if (kw == "REGEX") {
      take_word();
      return regex_call();
    }
    PatternTerm lhs = operand();
    skip();
    CompareOp op;
    if (in_.starts_with("!=")) {
      op = CompareOp::Ne;
      in_.seek(in_.pos() + 2);
    } else if (in_.starts_with("<=")) {
      op = CompareOp::Le;
      in_.seek(in_.pos() + 2);
    } else if (in_.starts_with(">=")) {
      op = CompareOp::Ge;
      in_.seek(in_.pos() + 2);
    } else if (in_.peek() == '=') {
      op = CompareOp::Eq;
      in_.get();
    } else if (in_.peek() == '<') {
      op = CompareOp::Lt;
      in_.get();
    } else if (in_.peek() == '>') {
      op = CompareOp::Gt;
      in_.get();
    } else {
      in_.fail("expected a comparison operator");
    }
    PatternTerm rhs = operand();
    return Comparison{op, std::move(lhs), std::move(rhs)};
  }

  PatternTerm operand() {
    skip();
    if (at_variable()) return variable();
    char c = in_.peek();
    if (c == '<') return rdf::Term(iri_ref());
    if (c == '"' || c == '\'' || c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      return literal();
    }
    std::string kw = peek_word();
    if ((kw == "TRUE" || kw == "FALSE") && in_.peek(kw.size()) != ':') {
      take_word();
      return rdf::Term(rdf::Literal(kw == "TRUE" ? "true" : "false", rdf::Iri(std::string(rv::kXsdBoolean))));
    }
    if (!kw.empty() && in_.peek(kw.size()) == '(') throw UnsupportedFeature(kw);
    return rdf::Term(prefixed_name());
  }

  RegexFilter regex_call() {
    RegexFilter f;
    expect('(', "'(' after regex");
    if (peek_word() == "STR" && in_.peek(3) == '(') {
      take_word();
      expect('(', "'(' after str");
      f.var = variable();
      expect(')', "')' closing str(");
      f.str = true;
    } else {
      f.var = variable();
    }
    expect(',', "',' after the regex text argument");
    skip();
    f.pattern = in_.read_string(true);
    if (accept(',')) {
      skip();
      f.flags = in_.read_string(true);
    }
    expect(')', "')' closing regex(");
    Regex::compile(f.pattern, f.flags);  // reject unsupported patterns at parse time
    return f;
  }

  void modifiers(SelectQuery& q) {
    for (;;) {
      std::string kw = peek_word();
      if (kUnsupportedModifiers.count(kw)) throw UnsupportedFeature(kw);
      if (kw == "LIMIT" && !q.limit) {
        take_word();
        q.limit = count("LIMIT");
      } else if (kw == "OFFSET" && !q.offset) {
        take_word();
        q.offset = count("OFFSET");
      } else {
        return;
      }
    }
  }

  std::size_t count(const char* what) {
    skip();
    std::size_t start = in_.pos();
    std::size_t v = 0;
    bool any = false;
    while (std::isdigit(static_cast<unsigned char>(in_.peek()))) {
      std::size_t d = static_cast<std::size_t>(in_.get() - '0');
      if (v > (SIZE_MAX - d) / 10) in_.fail_at(start, std::string(what) + " value too large");
      v = v * 10 + d;
      any = true;
    }
    if (!any) in_.fail_at(start, std::string("expected a non-negative integer after ") + what);
    return v;
  }

  rdf::detail::Cursor in_;
  QueryAst ast_;
  std::optional<std::string> base_;
};

std::string term_text(const PatternTerm& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return "?" + v->name;
  return std::get<rdf::Term>(t).to_ntriples();
}

std::string_view op_text(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "!=";
    case CompareOp::Lt: return "<";
    case CompareOp::Gt: return ">";
    case CompareOp::Le: return "<=";
    case CompareOp::Ge: return ">=";
  }
  return "?";
}

}  // namespace

QueryAst parse_query(std::string_view text) {
  try {
    return QueryParser(text).run();
  } catch (const rdf::ParseError& e) {
    throw QuerySyntaxError(e.message(), e.line(), e.column());
  } catch (const rdf::InvalidTerm& e) {
    throw QuerySyntaxError(e.what(), 1, 1);
  }
}

std::string to_string(const QueryAst& query) {
  if (query.is_describe()) return "DESCRIBE <" + query.describe().iri.str() + ">\n";
  const SelectQuery& q = query.select();
  std::string out = "SELECT ";
  if (q.distinct) out += "DISTINCT ";
  if (q.star) {
    out += "*";
  } else {
    for (std::size_t i = 0; i < q.vars.size(); ++i) out += (i ? " ?" : "?") + q.vars[i].name;
  }
  out += " WHERE {\n";
  for (const auto& tp : q.patterns) {
    out += "  " + term_text(tp.subject) + " " + term_text(tp.predicate) + " " + term_text(tp.object) + " .\n";
  }
  for (const auto& f : q.filters) {
    if (const auto* c = std::get_if<Comparison>(&f)) {
      out += "  FILTER(" + term_text(c->lhs) + " " + std::string(op_text(c->op)) + " " + term_text(c->rhs) + ")\n";
    } else {
      const auto& r = std::get<RegexFilter>(f);
      std::string var = r.str ? "str(?" + r.var.name + ")" : "?" + r.var.name;
      out += "  FILTER regex(" + var + ", \"" + rdf::escape_ntriples_string(r.pattern) + "\"";
      if (!r.flags.empty()) out += ", \"" + rdf::escape_ntriples_string(r.flags) + "\"";
      out += ")\n";
    }
  }
  out += "}";
  if (q.limit) out += " LIMIT " + std::to_string(*q.limit);
  if (q.offset) out += " OFFSET " + std::to_string(*q.offset);
  return out + "\n";
}

}  // namespace gemforge::sparql
