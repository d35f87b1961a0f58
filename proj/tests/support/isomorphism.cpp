#include "isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace gemforge::testing {

namespace {

using Label = std::string;

struct Split {
  std::set<std::string> ground;              // N-Triples lines without blank nodes
  std::vector<const rdf::Triple*> with_blank;
  std::vector<Label> blanks;
};

Split split(const rdf::Graph& g) {
  Split s;
  std::set<Label> blanks;
  for (const rdf::Triple& t : g) {
    bool has_blank = false;
    if (t.subject.is_blank()) {
      blanks.insert(t.subject.blank().label());
      has_blank = true;
    }
    if (t.object.is_blank()) {
      blanks.insert(t.object.blank().label());
      has_blank = true;
    }
    if (has_blank) {
      s.with_blank.push_back(&t);
    } else {
      s.ground.insert(t.to_ntriples());
    }
  }
  s.blanks.assign(blanks.begin(), blanks.end());
  return s;
}

// A mapping-invariant fingerprint: the multiset of (position, predicate,
// other end if ground) over the triples a blank node takes part in.
std::map<Label, std::multiset<std::string>> signatures(const Split& s) {
  std::map<Label, std::multiset<std::string>> sig;
  for (const Label& b : s.blanks) sig[b];
  for (const rdf::Triple* t : s.with_blank) {
    auto other = [](const rdf::Term& x) { return x.is_blank() ? std::string("_") : x.to_ntriples(); };
    if (t->subject.is_blank()) sig[t->subject.blank().label()].insert("S " + t->predicate.str() + " " + other(t->object));
    if (t->object.is_blank()) sig[t->object.blank().label()].insert("O " + t->predicate.str() + " " + other(t->subject));
  }
  return sig;
}

std::string render(const rdf::Triple& t, const std::map<Label, Label>& mapping) {
  auto term = [&](const rdf::Term& x) {
    if (!x.is_blank()) return x.to_ntriples();
    auto it = mapping.find(x.blank().label());
    return "_:" + (it == mapping.end() ? std::string("?") : it->second);
  };
  return term(t.subject) + " <" + t.predicate.str() + "> " + term(t.object);
}

}  // namespace

bool isomorphic(const rdf::Graph& a, const rdf::Graph& b) {
  if (a.size() != b.size()) return false;
  Split sa = split(a);
  Split sb = split(b);
  if (sa.blanks.size() > kMaxIsomorphismBlanks || sb.blanks.size() > kMaxIsomorphismBlanks) {
    throw std::length_error("isomorphism check limited to 12 blank nodes");
  }
  if (sa.ground != sb.ground || sa.blanks.size() != sb.blanks.size() || sa.with_blank.size() != sb.with_blank.size()) {
    return false;
  }

  auto sig_a = signatures(sa);
  auto sig_b = signatures(sb);
  std::set<std::string> target;
  std::map<Label, Label> identity;
  for (const Label& l : sb.blanks) identity[l] = l;
  for (const rdf::Triple* t : sb.with_blank) target.insert(render(*t, identity));

  // Triples become checkable once their last blank node (in search order) is mapped.
  std::map<Label, std::size_t> position;
  for (std::size_t i = 0; i < sa.blanks.size(); ++i) position[sa.blanks[i]] = i;
  std::vector<std::vector<const rdf::Triple*>> ready(sa.blanks.size());
  for (const rdf::Triple* t : sa.with_blank) {
    std::size_t last = 0;
    if (t->subject.is_blank()) last = std::max(last, position[t->subject.blank().label()]);
    if (t->object.is_blank()) last = std::max(last, position[t->object.blank().label()]);
    ready[last].push_back(t);
  }

  std::map<Label, Label> mapping;
  std::set<Label> used;
  // Backtracking over candidates with equal signatures. Every triple maps to
  // a distinct target triple because the mapping is injective and the sets
  // have equal size, so membership checks suffice.
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == sa.blanks.size()) return true;
    const Label& from = sa.blanks[i];
    for (const Label& to : sb.blanks) {
      if (used.count(to) || sig_a[from] != sig_b[to]) continue;
      mapping[from] = to;
      bool consistent = std::all_of(ready[i].begin(), ready[i].end(),
                                    [&](const rdf::Triple* t) { return target.count(render(*t, mapping)) != 0; });
      if (consistent) {
        used.insert(to);
        if (self(self, i + 1)) return true;
        used.erase(to);
      }
      mapping.erase(from);
    }
    return false;
  };
  return search(search, 0);
}

std::string describe_difference(const rdf::Graph& a, const rdf::Graph& b) {
  Split sa = split(a);
  Split sb = split(b);
  std::string out = "sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + "; blank nodes " +
                    std::to_string(sa.blanks.size()) + " vs " + std::to_string(sb.blanks.size()) + "\n";
  for (const auto& l : sa.ground) {
    if (!sb.ground.count(l)) out += "  only left:  " + l + "\n";
  }
  for (const auto& l : sb.ground) {
    if (!sa.ground.count(l)) out += "  only right: " + l + "\n";
  }
  return out;
}

}  // namespace gemforge::testing
