#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wordmap {

// Letters of the rank-2 free group. The low bit flags inversion, so the
// inverse of a letter is letter ^ 1.
using Letter = std::uint8_t;
inline constexpr Letter kX = 0;     // x
inline constexpr Letter kXinv = 1;  // x^-1
inline constexpr Letter kY = 2;     // y
inline constexpr Letter kYinv = 3;  // y^-1

inline constexpr Letter inverse_letter(Letter l) { return l ^ 1; }

// A freely reduced word over {x, x^-1, y, y^-1}. The empty word is the
// identity. Construct through reduce()/parse_word() to keep the invariant.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator!=(const Word& o) const { return letters != o.letters; }
  // Plain lexicographic order on letter codes.
  bool operator<(const Word& o) const { return letters < o.letters; }
};

// Length-then-lexicographic order; the order used for "shortest word" ties.
inline bool shorter_lex(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

bool is_reduced(std::span<const Letter> letters);

// Free reduction: repeatedly cancel adjacent inverse letters.
Word reduce(std::span<const Letter> letters);

// Reduced concatenation of two reduced words.
Word concat(const Word& u, const Word& v);

// w^-1 (reverse and invert every letter).
Word inverse(const Word& w);

// w^k for k >= 0, freely reduced.
Word power(const Word& w, unsigned k);

bool is_cyclically_reduced(const Word& w);

// Strips matching first/last inverse letters until cyclically reduced.
Word cyclically_reduce(const Word& w);

// Text form: 'x','y' are the generators, 'X','Y' their inverses.
std::string word_string(const Word& w);
// Inverse of word_string. Any string over {x,X,y,Y} is accepted and freely
// reduced; other characters throw InputError.
Word parse_word(const std::string& text);

}  // namespace wordmap
