#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gemforge/sparql/ast.hpp"

namespace gemforge::sparql {

/// The regex subset FILTER regex() accepts: literal code points, `.`,
/// escapes (\d \w \s and their negations, escaped metacharacters),
/// bracket classes with ranges and negation, `^` and `$` anchors, and the
/// greedy quantifiers `*`, `+`, `?`. Flags: `i` only. Groups, alternation,
/// counted repetition and backreferences raise UnsupportedFeature.
/// Matching is a set-of-states simulation, linear in the input.
class Regex {
 public:
  static Regex compile(std::string_view pattern, std::string_view flags = {});

  /// True when the pattern matches somewhere in `text` (UTF-8).
  bool search(std::string_view text) const;

 private:
  enum class Quant { One, Star, Plus, Optional };
  enum class Kind { Char, Any, Class };
  struct Range {
    char32_t lo, hi;
  };
  struct Atom {
    Kind kind = Kind::Char;
    char32_t ch = 0;
    std::vector<Range> ranges;
    bool negated = false;
    Quant quant = Quant::One;
  };

  bool matches(const Atom& atom, char32_t c) const;
  void add_closure(std::vector<char>& set, std::size_t state) const;

  std::vector<Atom> atoms_;
  bool anchored_start_ = false;
  bool anchored_end_ = false;
  bool icase_ = false;
};

}  // namespace gemforge::sparql
