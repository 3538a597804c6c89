#include "wordmap/word.hpp"

#include "wordmap/errors.hpp"

namespace wordmap {

bool is_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == inverse_letter(letters[i - 1])) return false;
  return true;
}

Word reduce(std::span<const Letter> letters) {
  Word w;
  w.letters.reserve(letters.size());
  for (Letter l : letters) {
    if (!w.letters.empty() && w.letters.back() == inverse_letter(l))
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> all(u.letters);
  all.insert(all.end(), v.letters.begin(), v.letters.end());
  return reduce(all);
}

Word inverse(const Word& w) {
  Word r;
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(inverse_letter(*it));
  return r;
}

Word power(const Word& w, unsigned k) {
  Word acc;
  for (unsigned i = 0; i < k; ++i) acc = concat(acc, w);
  return acc;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w.letters)) return false;
  if (w.size() < 2) return true;
  return w.letters.front() != inverse_letter(w.letters.back());
}

Word cyclically_reduce(const Word& w) {
  Word r = reduce(w.letters);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r.letters[lo] == inverse_letter(r.letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.letters.begin() + lo, r.letters.begin() + hi));
}

namespace {
constexpr char kLetterChars[4] = {'x', 'X', 'y', 'Y'};
}

std::string word_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w.letters) s.push_back(kLetterChars[l]);
  return s;
}

Word parse_word(const std::string& text) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'x': ls.push_back(kX); break;
      case 'X': ls.push_back(kXinv); break;
      case 'y': ls.push_back(kY); break;
      case 'Y': ls.push_back(kYinv); break;
      default:
        throw InputError(std::string("word contains '") + c + "'; letters are x, X, y, Y");
    }
  }
  return reduce(ls);
}

}  // namespace wordmap
