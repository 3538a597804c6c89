#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wordmap/errors.hpp"
#include "wordmap/permutation.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

// Element ids are indices into GroupTable::elements. uint16 bounds the
// supported order at 65535; the practical limit is the order cap.
using Elem = std::uint16_t;

// Ordered pairs of elements are addressed as a * |G| + b.
using PairIdx = std::uint32_t;

// A word in the defining generators: letter 2*i is generator i,
// letter 2*i + 1 its inverse.
using GenWord = std::vector<std::uint8_t>;

inline constexpr std::size_t kDefaultOrderCap = 1000;

struct GroupSpec {
  enum class Kind { alternating, psl2, explicit_gens };

  std::string name;
  Kind kind = Kind::explicit_gens;
  int n = 0;  // alternating degree, or the psl2 prime
  std::uint32_t degree = 0;
  std::vector<Permutation> generators;

  static GroupSpec alternating(int n);
  static GroupSpec psl2(int p);
  static GroupSpec explicit_gens_spec(std::string name, std::uint32_t degree,
                                      std::vector<Permutation> generators);
};

// A finite group realized as lookup tables over element ids. Immutable after
// construction; safe for concurrent reads.
struct GroupTable {
  std::string name;
  std::uint32_t degree = 0;
  std::vector<Permutation> elements;
  std::vector<Elem> mult_table;        // row-major |G| x |G|
  std::vector<Elem> inv_table;         // |G|
  std::vector<std::uint16_t> orders;   // element orders
  Elem id_of_identity = 0;
  std::vector<Elem> gen_ids;           // ids of the defining generators
  std::vector<GenWord> expr;           // per-element witness word in the generators

  std::size_t order() const { return elements.size(); }
  Elem identity() const { return id_of_identity; }
  Elem mult(Elem a, Elem b) const { return mult_table[std::size_t(a) * order() + b]; }
  Elem inv(Elem a) const { return inv_table[a]; }
  std::uint16_t element_order(Elem g) const { return orders[g]; }

  PairIdx pair_index(Elem a, Elem b) const { return PairIdx(a) * PairIdx(order()) + b; }
  Elem pair_first(PairIdx p) const { return Elem(p / order()); }
  Elem pair_second(PairIdx p) const { return Elem(p % order()); }
  std::uint64_t pair_count() const { return std::uint64_t(order()) * order(); }

  // Substitutes a for x and b for y and multiplies left to right.
  // The empty word yields the identity.
  Elem evaluate(const Word& w, Elem a, Elem b) const;

  // Evaluates a generator word at the given images (one per defining generator).
  Elem eval_gen_word(const GenWord& w, std::span<const Elem> gen_images) const;
};

// Breadth-first closure of the generators. Throws InputError if the closure
// exceeds order_cap, the generator list is empty, or degrees disagree.
// Runs internal table self-checks (inverses, associativity samples,
// expression round-trips) and throws InternalInconsistency if any fails.
GroupTable build_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

struct SimplicityReport {
  enum class Why { ok, trivial, abelian, proper_normal_closure };
  bool simple = false;
  Why why = Why::ok;
  Elem offender = 0;            // witness element on failure
  std::uint32_t closure_size = 0;  // |normal closure of offender| when proper
};

// True iff G is nonabelian and the normal closure of every nonidentity
// element is all of G. Total: never throws on any valid table.
SimplicityReport validate_simple(const GroupTable& g);

// Size of the normal closure of {g}.
std::uint32_t normal_closure_size(const GroupTable& g, Elem x);

// True iff <a, b> = G. Bitset closure with early exit at |G|.
bool generates(const GroupTable& g, Elem a, Elem b);

}  // namespace wordmap
