#include "gemforge/sparql/regex.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace gemforge::sparql {

namespace {

std::u32string decode(std::string_view s) {
  std::u32string out;
  int32_t i = 0;
  const auto n = static_cast<int32_t>(s.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  while (i < n) {
    UChar32 c;
    U8_NEXT(bytes, i, n, c);
    out.push_back(c < 0 ? 0xFFFD : static_cast<char32_t>(c));
  }
  return out;
}

char32_t fold(char32_t c) { return static_cast<char32_t>(u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT)); }

// Ranges for \d, \w, \s. Non-ASCII letters count as word characters.
void shorthand(char32_t e, std::vector<std::pair<char32_t, char32_t>>& out) {
  switch (e) {
    case 'd': out.push_back({'0', '9'}); break;
    case 'w':
      out.push_back({'0', '9'});
      out.push_back({'A', 'Z'});
      out.push_back({'a', 'z'});
      out.push_back({'_', '_'});
      out.push_back({0x80, 0x10FFFF});
      break;
    case 's':
      out.push_back({' ', ' '});
      out.push_back({'\t', '\n'});
      out.push_back({'\r', '\r'});
      break;
  }
}

bool is_meta(char32_t c) {
  static constexpr std::u32string_view kMeta = U"\\^$.|?*+()[]{}-/";
  return kMeta.find(c) != std::u32string_view::npos;
}

}  // namespace

Regex Regex::compile(std::string_view pattern, std::string_view flags) {
  Regex re;
  for (char f : flags) {
    if (f == 'i') {
      re.icase_ = true;
    } else {
      throw UnsupportedFeature(std::string("regex flag '") + f + "'");
    }
  }

  std::u32string p = decode(pattern);
  std::size_t i = 0;
  if (!p.empty() && p[0] == '^') {
    re.anchored_start_ = true;
    ++i;
  }
  auto bad = [](const std::string& what) { throw UnsupportedFeature("regex " + what); };

  while (i < p.size()) {
    char32_t c = p[i];
    if (c == '$' && i + 1 == p.size()) {
      re.anchored_end_ = true;
      break;
    }
    Atom atom;
    switch (c) {
      case '(':
      case ')': bad("groups"); break;
      case '|': bad("alternation"); break;
      case '{':
      case '}': bad("counted repetition"); break;
      case '^':
      case '$': bad("anchors inside the pattern"); break;
      case '*':
      case '+':
      case '?': throw QueryError("regex quantifier without an operand");
      case '.':
        atom.kind = Kind::Any;
        ++i;
        break;
      case '\\': {
        if (i + 1 >= p.size()) throw QueryError("regex ends with a backslash");
        char32_t e = p[i + 1];
        i += 2;
        if (e >= '1' && e <= '9') bad("backreferences");
        if (e == 'd' || e == 'w' || e == 's' || e == 'D' || e == 'W' || e == 'S') {
          std::vector<std::pair<char32_t, char32_t>> rs;
          shorthand(static_cast<char32_t>(e | 0x20), rs);
          atom.kind = Kind::Class;
          for (auto [lo, hi] : rs) atom.ranges.push_back({lo, hi});
          atom.negated = e < 'a';
        } else if (e == 'n' || e == 't' || e == 'r') {
          atom.ch = e == 'n' ? U'\n' : e == 't' ? U'\t' : U'\r';
        } else if (is_meta(e)) {
          atom.ch = e;
        } else {
          bad(std::string("escape \\") + static_cast<char>(e < 0x80 ? e : '?'));
        }
        break;
      }
      case '[': {
        atom.kind = Kind::Class;
        ++i;
        if (i < p.size() && p[i] == '^') {
          atom.negated = true;
          ++i;
        }
        bool first = true;
        for (;;) {
          if (i >= p.size()) throw QueryError("unterminated regex character class");
          char32_t lo = p[i];
          if (lo == ']' && !first) {
            ++i;
            break;
          }
          first = false;
          if (lo == '\\') {
            if (i + 1 >= p.size()) throw QueryError("unterminated regex character class");
            char32_t e = p[i + 1];
            i += 2;
            if (e == 'd' || e == 'w' || e == 's') {
              std::vector<std::pair<char32_t, char32_t>> rs;
              shorthand(e, rs);
              for (auto [a, b] : rs) atom.ranges.push_back({a, b});
              continue;
            }
            lo = e == 'n' ? U'\n' : e == 't' ? U'\t' : e == 'r' ? U'\r' : e;
          } else {
            ++i;
          }
          char32_t hi = lo;
          if (i + 1 < p.size() && p[i] == '-' && p[i + 1] != ']') {
            hi = p[i + 1];
            if (hi == '\\') {
              if (i + 2 >= p.size()) throw QueryError("unterminated regex character class");
              hi = p[i + 2];
              ++i;
            }
            i += 2;
            if (hi < lo) throw QueryError("regex class range out of order");
          }
          atom.ranges.push_back({lo, hi});
        }
        break;
      }
      default:
        atom.ch = c;
        ++i;
    }
    if (i < p.size()) {
      char32_t q = p[i];
      if (q == '*' || q == '+' || q == '?') {
        atom.quant = q == '*' ? Quant::Star : q == '+' ? Quant::Plus : Quant::Optional;
        ++i;
        if (i < p.size() && (p[i] == '*' || p[i] == '+' || p[i] == '?')) bad("lazy or possessive quantifiers");
      } else if (q == '{') {
        bad("counted repetition");
      }
    }
    if (re.icase_ && atom.kind == Kind::Char) atom.ch = fold(atom.ch);
    re.atoms_.push_back(std::move(atom));
  }
  return re;
}

bool Regex::matches(const Atom& atom, char32_t c) const {
  switch (atom.kind) {
    case Kind::Any: return c != U'\n';
    case Kind::Char: return (icase_ ? fold(c) : c) == atom.ch;
    case Kind::Class: {
      bool hit = false;
      for (const auto& r : atom.ranges) {
        if (c >= r.lo && c <= r.hi) hit = true;
        if (!hit && icase_) {
          char32_t f = fold(c);
          char32_t u = static_cast<char32_t>(u_toupper(static_cast<UChar32>(c)));
          hit = (f >= r.lo && f <= r.hi) || (u >= r.lo && u <= r.hi);
        }
        if (hit) break;
      }
      return hit != atom.negated;
    }
  }
  return false;
}

void Regex::add_closure(std::vector<char>& set, std::size_t state) const {
  while (state <= atoms_.size() && !set[state]) {
    set[state] = 1;
    if (state == atoms_.size()) return;
    Quant q = atoms_[state].quant;
    if (q != Quant::Star && q != Quant::Optional) return;
    ++state;
  }
}

bool Regex::search(std::string_view text) const {
  std::u32string s = decode(text);
  const std::size_t n = atoms_.size();
  std::vector<char> current(n + 1, 0);
  std::vector<char> next(n + 1, 0);
  add_closure(current, 0);

  for (std::size_t pos = 0;; ++pos) {
    if (current[n] && (!anchored_end_ || pos == s.size())) return true;
    if (pos == s.size()) return false;
    std::fill(next.begin(), next.end(), 0);
    const char32_t c = s[pos];
    for (std::size_t st = 0; st < n; ++st) {
      if (!current[st] || !matches(atoms_[st], c)) continue;
      switch (atoms_[st].quant) {
        case Quant::One:
        case Quant::Optional: add_closure(next, st + 1); break;
        case Quant::Star: add_closure(next, st); break;
        case Quant::Plus:
          next[st] = 1;
          add_closure(next, st + 1);
          break;
      }
    }
    if (!anchored_start_) add_closure(next, 0);
    current.swap(next);
  }
}

}  // namespace gemforge::sparql
