#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "wordmap/group.hpp"

namespace wordmap {

// An abstract automorphism, stored as the image of every element id.
struct Automorphism {
  std::vector<Elem> map;
  Elem image_a = 0;  // image of the anchor pair
  Elem image_b = 0;

  Elem operator()(Elem g) const { return map[g]; }
};

// The full automorphism group, listed in ascending (image_a, image_b) order.
// Every automorphism is determined by its images of the anchor generating
// pair, which makes composition an O(1) table lookup.
struct AutGroup {
  Elem anchor_a = 0;
  Elem anchor_b = 0;
  std::vector<Automorphism> autos;
  std::size_t index_of_identity = 0;
  std::vector<std::uint32_t> gen_indices;  // small subset that closes to the whole list

  std::size_t order() const { return autos.size(); }
  const std::vector<Elem>& map_of(std::size_t i) const { return autos[i].map; }

  static constexpr std::uint32_t npos = 0xffffffff;

  // Index of the automorphism with the given anchor images, or npos.
  std::uint32_t find(Elem image_a, Elem image_b) const;
  // Index of autos[i] following autos[j]  (i.e. apply j first).
  std::uint32_t compose(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inverse_of(std::uint32_t i) const;

  // How from_maps vets each supplied map. Both reject non-automorphisms;
  // `anchored` exploits that a bijection fixing the identity and respecting
  // right multiplication by a generating pair is already a homomorphism,
  // which brings the per-map cost down from |G|^2 to |G|.
  enum class Verification { full, anchored };

  // Wraps an externally supplied list of maps (each must be an automorphism;
  // the list must be closed under composition). Used to study degenerate
  // sub-lists such as the inner automorphisms alone, and to rehydrate caches.
  static AutGroup from_maps(const GroupTable& g, std::vector<std::vector<Elem>> maps,
                            Verification verification = Verification::full);

 private:
  std::unordered_map<std::uint32_t, std::uint32_t> by_images_;
  void build_index(const GroupTable* g_for_anchor_check);
  friend AutGroup compute_automorphisms(const GroupTable&, unsigned);
};

// h -> g h g^-1 as an element-id map.
std::vector<Elem> inner_automorphism(const GroupTable& g, Elem x);

// Full |G|^2 homomorphism check of a candidate map.
bool is_automorphism(const GroupTable& g, std::span<const Elem> map);

// Enumerates all automorphisms by extending candidate images of an anchor
// generating pair. Candidates are prefiltered by the order fingerprint
// (|a|, |b|, |ab|, |ab^-1|, |[a,b]|); survivors are accepted iff the induced
// spanning-tree extension is bijective and respects right multiplication by
// both anchor generators at every element. For |G| <= 360 every accepted map
// is re-checked by the full homomorphism test.
AutGroup compute_automorphisms(const GroupTable& g, unsigned workers = 1);

// Orbits of a group action, over element ids or pair indices.
// Representatives are the least index in each orbit; orbit labels follow
// representative order, so the identity's orbit is always label 0.
struct OrbitPartition {
  std::vector<std::int32_t> orbit_id;
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> sizes;

  std::size_t count() const { return reps.size(); }
};

// Orbits of Aut(G) on element ids. {identity} is always orbit 0.
OrbitPartition orbits_on_elements(const GroupTable& g, const AutGroup& aut);

// Orbits of the diagonal action on all of G x G, indexed by pair index.
OrbitPartition all_pairs_orbits(const GroupTable& g, const AutGroup& aut);

// Diagonal-action orbits restricted to an explicit pair list. orbit_id is
// aligned with positions in `pairs`; reps/sizes refer to pair indices.
// The list must be invariant under the action (throws InputError otherwise).
OrbitPartition orbits_on_pairs(const GroupTable& g, const AutGroup& aut,
                               std::span<const PairIdx> pairs);

struct FreeActionReport {
  bool free = true;
  std::uint32_t auto_index = 0;  // a nonidentity automorphism fixing the pair
  PairIdx fixed_pair = 0;
};

enum class FreeActionMode {
  fixed_point_sets,  // enumerate each automorphism's fixed elements, test F x F
  naive,             // test every (automorphism, generating pair) directly
};

// Checks that no nonidentity automorphism fixes any pair flagged in is_gen.
FreeActionReport verify_free_action(const GroupTable& g, const AutGroup& aut,
                                    std::span<const std::uint8_t> is_gen,
                                    FreeActionMode mode = FreeActionMode::fixed_point_sets);

}  // namespace wordmap
