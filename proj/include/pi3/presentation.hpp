#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pi3 {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);

/// Finite presentation: one vertex, a 1-cell per generator, a 2-cell per relator.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_index(std::string_view name) const;  // throws std::out_of_range
  std::string word_to_string(const Word& w) const;
  std::string to_string() const;
};

/// Grammar: `gens: a, b ; rels: w1, w2` where a word is `term (* term)*`, a term is a
/// generator name with an optional `^<signed int>`, and a relation may be written `u=v`
/// (stored as the relator u v^-1). Throws ParseError with line/column.
GroupPresentation parse_presentation(std::string_view text);

/// Parses a single word against the generator names of `p`.
Word parse_word(std::string_view text, const GroupPresentation& p);

}  // namespace pi3
