#pragma once

// Test-only reference computations, kept independent of the table-based
// implementation paths they are used to check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "wordmap/group.hpp"
#include "wordmap/permutation.hpp"
#include "wordmap/word.hpp"

namespace wordmap::test {

// Subgroup closure over raw permutations, bypassing the mult table.
inline std::set<Permutation> perm_closure(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen;
  if (gens.empty()) return seen;
  std::vector<Permutation> queue;
  Permutation id = Permutation::identity(gens[0].degree());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation cur = queue.back();
    queue.pop_back();
    for (const auto& s : gens) {
      Permutation next = compose(cur, s);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= std::uint64_t(i);
  return r;
}

inline std::uint64_t psl2_order(int p) {
  return std::uint64_t(p) * (std::uint64_t(p) * p - 1) / 2;
}

// All freely reduced words of exactly length k.
inline std::vector<Word> all_reduced_words(int k) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self) -> void {
    if (int(cur.size()) == k) {
      out.emplace_back(cur);
      return;
    }
    for (Letter l = 0; l < 4; ++l) {
      if (!cur.empty() && cur.back() == inverse_letter(l)) continue;
      cur.push_back(l);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Evaluates a raw (possibly unreduced) letter sequence without reducing.
inline Elem fold_letters(const GroupTable& g, const std::vector<Letter>& ls, Elem a, Elem b) {
  Elem ops[4] = {a, g.inv(a), b, g.inv(b)};
  Elem acc = g.identity();
  for (Letter l : ls) acc = g.mult(acc, ops[l]);
  return acc;
}

// Conjugacy class of x under the whole group, via the table.
inline std::vector<Elem> conjugacy_class(const GroupTable& g, Elem x) {
  std::set<Elem> cls;
  for (Elem c = 0; c < g.order(); ++c) cls.insert(g.mult(g.mult(c, x), g.inv(c)));
  return std::vector<Elem>(cls.begin(), cls.end());
}

inline Word random_reduced_word(std::mt19937& rng, int len) {
  std::vector<Letter> ls;
  ls.reserve(len);
  for (int i = 0; i < len; ++i) {
    Letter l;
    do {
      l = Letter(rng() % 4);
    } while (!ls.empty() && ls.back() == inverse_letter(l));
    ls.push_back(l);
  }
  return Word(std::move(ls));
}

}  // namespace wordmap::test
