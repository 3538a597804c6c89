#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wordmap/errors.hpp"
#include "wordmap/search.hpp"
#include "wordmap/word.hpp"

using namespace wordmap;

TEST_CASE("free reduction") {
  CHECK(reduce(std::vector<Letter>{kX, kXinv}).empty());
  CHECK(reduce(std::vector<Letter>{kX, kY, kYinv, kXinv}).empty());
  CHECK(reduce(std::vector<Letter>{kX, kYinv, kY, kY}) == parse_word("xy"));

  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<Letter> raw;
    int len = int(rng() % 20);
    for (int i = 0; i < len; ++i) raw.push_back(Letter(rng() % 4));
    Word w = reduce(raw);
    CHECK(is_reduced(w.letters));
    // Reducing a reduced word is a no-op.
    CHECK(reduce(w.letters) == w);
  }
}

TEST_CASE("parse and format") {
  CHECK(word_string(parse_word("xyXY")) == "xyXY");
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("xX").empty());  // parse reduces
  CHECK_THROWS_AS(parse_word("xzy"), InputError);

  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    Word w = test::random_reduced_word(rng, 1 + int(rng() % 12));
    CHECK(parse_word(word_string(w)) == w);
  }
}

TEST_CASE("concat, inverse, power") {
  Word u = parse_word("xy");
  Word v = parse_word("Yx");
  CHECK(concat(u, v) == parse_word("xx"));
  CHECK(concat(u, inverse(u)).empty());
  CHECK(inverse(parse_word("xyX")) == parse_word("xYX"));

  CHECK(power(parse_word("x"), 30).size() == 30);
  CHECK(power(parse_word("xyX"), 2) == parse_word("xyyX"));
  CHECK(power(parse_word("xy"), 0).empty());
}

TEST_CASE("cyclic reduction") {
  CHECK(is_cyclically_reduced(parse_word("xy")));
  CHECK(!is_cyclically_reduced(parse_word("Xyx")));
  CHECK(cyclically_reduce(parse_word("Xyx")) == parse_word("y"));
  CHECK(cyclically_reduce(parse_word("xYxy")) == parse_word("xYxy"));  // already cyclic
  CHECK(cyclically_reduce(Word{}).empty());
}

TEST_CASE("reduced word counts are 4 * 3^(k-1)") {
  std::uint64_t expect = 4;
  for (int k = 1; k <= 7; ++k) {
    CHECK(test::all_reduced_words(k).size() == expect);
    expect *= 3;
  }
}

TEST_CASE("canonical form basics") {
  // x, y and the inverses all collapse to the single length-1 class.
  CHECK(canonical_form(parse_word("y")) == parse_word("x"));
  CHECK(canonical_form(parse_word("X")) == parse_word("x"));
  CHECK(canonical_form(parse_word("Y")) == parse_word("x"));
  CHECK(is_canonical(parse_word("x")));
  CHECK(!is_canonical(parse_word("y")));
  CHECK(expand_class(parse_word("xy")).size() == 8);
  CHECK(expand_class(parse_word("x")).size() == 4);
}

TEST_CASE("canonical classes tile the cyclically reduced words up to length 6") {
  auto reps = enumerate_canonical(6);
  std::set<Word> covered;
  for (const auto& rep : reps) {
    CHECK(is_canonical(rep));
    CHECK(rep.letters[0] == kX);
    for (const auto& member : expand_class(rep)) {
      CHECK(covered.insert(member).second);  // exactly once
    }
  }
  std::uint64_t total = 0;
  for (int k = 1; k <= 6; ++k)
    for (const auto& w : test::all_reduced_words(k))
      if (is_cyclically_reduced(w)) {
        ++total;
        CHECK(covered.count(w) == 1);
      }
  CHECK(covered.size() == total);

  // Representatives arrive in length-then-lex order.
  for (std::size_t i = 1; i < reps.size(); ++i) CHECK(shorter_lex(reps[i - 1], reps[i]));
}
