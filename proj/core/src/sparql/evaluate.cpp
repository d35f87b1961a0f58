#include "gemforge/sparql/evaluate.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <array>
#include <set>

#include "gemforge/rdf/vocab.hpp"
#include "gemforge/sparql/regex.hpp"

namespace gemforge::sparql {

namespace {

namespace rv = rdf::vocab;

bool is_numeric_type(std::string_view dt) {
  static constexpr std::string_view kTypes[] = {
      "integer", "decimal", "double", "float", "long", "int", "short", "byte", "nonNegativeInteger",
      "positiveInteger", "negativeInteger", "nonPositiveInteger", "unsignedLong", "unsignedInt",
      "unsignedShort", "unsignedByte"};
  if (dt.rfind(rv::kXsd, 0) != 0) return false;
  dt.remove_prefix(rv::kXsd.size());
  return std::find(std::begin(kTypes), std::end(kTypes), dt) != std::end(kTypes);
}

std::optional<double> numeric_value(const rdf::Term& t) {
  if (!t.is_literal() || !is_numeric_type(t.literal().datatype().view())) return std::nullopt;
  const std::string& s = t.literal().lexical();
  const char* b = s.data() + (!s.empty() && s[0] == '+' ? 1 : 0);
  double v = 0;
  auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || b == p) return std::nullopt;
  return v;
}

bool orderable_pair(const rdf::Literal& a, const rdf::Literal& b) {
  if (a.is_plain_string() && b.is_plain_string()) return true;
  std::string_view dt = a.datatype().view();
  return dt == b.datatype().view() && (dt == rv::kXsdDate || dt == rv::kXsdDateTime);
}

const rdf::Term* resolve(const PatternTerm& t, const std::vector<Variable>& vars, const Row& row) {
  if (const auto* term = std::get_if<rdf::Term>(&t)) return term;
  const auto& v = std::get<Variable>(t);
  auto it = std::find(vars.begin(), vars.end(), v);
  if (it == vars.end()) return nullptr;
  const auto& cell = row[static_cast<std::size_t>(it - vars.begin())];
  return cell ? &*cell : nullptr;
}

bool compare(CompareOp op, const rdf::Term& a, const rdf::Term& b) {
  auto x = numeric_value(a);
  auto y = numeric_value(b);
  if (x && y) {
    switch (op) {
      case CompareOp::Eq: return *x == *y;
      case CompareOp::Ne: return *x != *y;
      case CompareOp::Lt: return *x < *y;
      case CompareOp::Gt: return *x > *y;
      case CompareOp::Le: return *x <= *y;
      case CompareOp::Ge: return *x >= *y;
    }
  }
  if (op == CompareOp::Eq) return a == b;
  if (op == CompareOp::Ne) return a != b;
  if (!a.is_literal() || !b.is_literal() || !orderable_pair(a.literal(), b.literal())) return false;
  int c = a.literal().lexical().compare(b.literal().lexical());
  switch (op) {
    case CompareOp::Lt: return c < 0;
    case CompareOp::Gt: return c > 0;
    case CompareOp::Le: return c <= 0;
    case CompareOp::Ge: return c >= 0;
    default: return false;
  }
}

struct Compiled {
  const Filter* filter;
  std::optional<Regex> regex;
};

bool holds(const Compiled& f, const std::vector<Variable>& vars, const Row& row) {
  if (const auto* c = std::get_if<Comparison>(f.filter)) {
    const rdf::Term* a = resolve(c->lhs, vars, row);
    const rdf::Term* b = resolve(c->rhs, vars, row);
    return a && b && compare(c->op, *a, *b);
  }
  const auto& r = std::get<RegexFilter>(*f.filter);
  const rdf::Term* t = resolve(PatternTerm(r.var), vars, row);
  if (!t) return false;
  if (t->is_literal()) return f.regex->search(t->literal().lexical());
  if (t->is_iri() && r.str) return f.regex->search(t->iri().view());
  return false;
}

std::vector<Compiled> compile_filters(const std::vector<Filter>& filters) {
  std::vector<Compiled> out;
  for (const auto& f : filters) {
    Compiled c{&f, std::nullopt};
    if (const auto* r = std::get_if<RegexFilter>(&f)) c.regex = Regex::compile(r->pattern, r->flags);
    out.push_back(std::move(c));
  }
  return out;
}

class Joiner {
 public:
  Joiner(const rdf::Graph& graph, const std::vector<TriplePattern>& patterns, std::vector<Variable> vars)
      : graph_(graph), patterns_(patterns), vars_(std::move(vars)) {}

  std::vector<Row> run() {
    std::vector<Row> rows{Row(vars_.size())};
    std::vector<bool> bound(vars_.size(), false);
    std::vector<bool> used(patterns_.size(), false);
    for (std::size_t step = 0; step < patterns_.size() && !rows.empty(); ++step) {
      std::size_t pick = choose(used, bound);
      used[pick] = true;
      rows = extend(rows, patterns_[pick]);
      for (const PatternTerm* t : slots(patterns_[pick])) {
        if (const auto* v = std::get_if<Variable>(t)) bound[index(*v)] = true;
      }
    }
    return rows;
  }

 private:
  static std::array<const PatternTerm*, 3> slots(const TriplePattern& tp) {
    return {&tp.subject, &tp.predicate, &tp.object};
  }

  std::size_t index(const Variable& v) const {
    return static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), v) - vars_.begin());
  }

  // Fewest estimated matches, counting variables bound by earlier steps as
  // constants that will narrow the match.
  std::size_t choose(const std::vector<bool>& used, const std::vector<bool>& bound) const {
    std::size_t best = 0;
    std::pair<int, std::size_t> best_key{0, SIZE_MAX};
    bool have = false;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (used[i]) continue;
      const TriplePattern& tp = patterns_[i];
      int free_vars = 0;
      for (const PatternTerm* t : slots(tp)) {
        if (const auto* v = std::get_if<Variable>(t)) free_vars += bound[index(*v)] ? 0 : 1;
      }
      auto constant = [](const PatternTerm& t) -> std::optional<rdf::Term> {
        if (const auto* term = std::get_if<rdf::Term>(&t)) return *term;
        return std::nullopt;
      };
      std::optional<rdf::Iri> p;
      if (auto c = constant(tp.predicate); c && c->is_iri()) p = c->iri();
      std::size_t est = graph_.estimate(constant(tp.subject), p, constant(tp.object));
      std::pair<int, std::size_t> key{free_vars, est};
      if (!have || key < best_key) {
        best = i;
        best_key = key;
        have = true;
      }
    }
    return best;
  }

  std::vector<Row> extend(const std::vector<Row>& rows, const TriplePattern& tp) const {
    std::vector<Row> out;
    for (const Row& row : rows) {
      auto value = [&](const PatternTerm& t) -> std::optional<rdf::Term> {
        if (const auto* term = std::get_if<rdf::Term>(&t)) return *term;
        return row[index(std::get<Variable>(t))];
      };
      std::optional<rdf::Term> s = value(tp.subject);
      std::optional<rdf::Term> p_term = value(tp.predicate);
      std::optional<rdf::Term> o = value(tp.object);
      if (s && s->is_literal()) continue;
      if (p_term && !p_term->is_iri()) continue;
      std::optional<rdf::Iri> p;
      if (p_term) p = p_term->iri();

      for (const rdf::Triple* t : graph_.match(s, p, o)) {
        Row next = row;
        bool ok = true;
        auto bind = [&](const PatternTerm& slot, const rdf::Term& value) {
          const auto* v = std::get_if<Variable>(&slot);
          if (!v || !ok) return;
          auto& cell = next[index(*v)];
          if (cell && *cell != value) {
            ok = false;  // same variable twice in one pattern
          } else {
            cell = value;
          }
        };
        bind(tp.subject, t->subject);
        bind(tp.predicate, rdf::Term(t->predicate));
        bind(tp.object, t->object);
        if (ok) out.push_back(std::move(next));
      }
    }
    return out;
  }

  const rdf::Graph& graph_;
  const std::vector<TriplePattern>& patterns_;
  std::vector<Variable> vars_;
};

}  // namespace

SolutionSet evaluate_select(const SelectQuery& query, const rdf::Graph& graph) {
  std::vector<Variable> all;
  for (const auto& tp : query.patterns) {
    for (const PatternTerm* t : {&tp.subject, &tp.predicate, &tp.object}) {
      if (const auto* v = std::get_if<Variable>(t)) {
        if (std::find(all.begin(), all.end(), *v) == all.end()) all.push_back(*v);
      }
    }
  }
  for (const auto& v : query.vars) {
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  }

  std::vector<Compiled> filters = compile_filters(query.filters);
  std::vector<Row> joined = Joiner(graph, query.patterns, all).run();

  std::vector<std::size_t> projection;
  for (const auto& v : query.vars) {
    projection.push_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), v) - all.begin()));
  }

  // Sort keys are computed once per row.
  std::vector<std::pair<std::vector<std::string>, Row>> keyed;
  for (const Row& row : joined) {
    if (!std::all_of(filters.begin(), filters.end(), [&](const Compiled& f) { return holds(f, all, row); })) continue;
    Row projected;
    std::vector<std::string> key;
    for (std::size_t i : projection) {
      projected.push_back(row[i]);
      // "\x01" sorts unbound cells before any N-Triples text.
      key.push_back(row[i] ? "\x02" + row[i]->to_ntriples() : std::string("\x01"));
    }
    keyed.emplace_back(std::move(key), std::move(projected));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (query.distinct) {
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
  }

  SolutionSet out{query.vars, {}};
  std::size_t start = std::min(keyed.size(), query.offset.value_or(0));
  std::size_t end = keyed.size();
  if (query.limit) end = std::min(end, start + *query.limit);
  for (std::size_t i = start; i < end; ++i) out.rows.push_back(std::move(keyed[i].second));
  return out;
}

rdf::Graph describe(const rdf::Graph& graph, const rdf::Iri& iri) {
  rdf::Graph out;
  for (const auto& [prefix, ns] : graph.prefixes()) out.set_prefix(prefix, ns);
  const rdf::Term root(iri);

  std::set<rdf::Term> visited{root};
  std::deque<rdf::Term> queue{root};
  while (!queue.empty()) {
    rdf::Term s = queue.front();
    queue.pop_front();
    for (const rdf::Triple* t : graph.match(s, std::nullopt, std::nullopt)) {
      out.insert(*t);
      if (t->object.is_blank() && visited.insert(t->object).second) queue.push_back(t->object);
    }
  }
  for (const rdf::Triple* t : graph.match(std::nullopt, std::nullopt, root)) out.insert(*t);
  return out;
}

}  // namespace gemforge::sparql
