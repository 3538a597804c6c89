#pragma once

#include <cstdint>
#include <vector>

#include "wordmap/automorphism.hpp"
#include "wordmap/group.hpp"

namespace wordmap {

// The partition of G x G into generating and non-generating pairs, plus the
// orbit structure of Aut(G) on the generating ones. Pair i of `generating`
// corresponds to the i-th epimorphism coordinate used by the realizability
// checks.
struct PairClassification {
  std::uint64_t total = 0;
  std::uint32_t ell = 0;                  // number of generating pairs
  std::vector<PairIdx> generating;        // ascending pair indices
  std::vector<std::uint8_t> is_gen;       // verdict per pair index
  OrbitPartition pair_orbits;             // Aut-orbits of all of G x G
  std::vector<std::int32_t> gen_orbit_labels;  // pair_orbits labels that generate
  std::uint32_t r = 0;                    // number of generating-pair orbits
  std::vector<std::int32_t> epi_pos;      // pair index -> position in `generating`, or -1

  std::vector<PairIdx> nongenerating() const;  // materialized complement
};

// True iff <a, b> = G.
inline bool is_generating(Elem a, Elem b, const GroupTable& g) { return generates(g, a, b); }

enum class ClassifyMode {
  orbit_reps,  // classify one representative per orbit, propagate the verdict
  naive,       // classify every pair; cross-checks that verdicts are orbit-constant
};

// Classifies all of G x G. In naive mode a verdict that is not constant on an
// orbit throws InternalInconsistency (generation is an orbit invariant).
PairClassification classify_pairs(const GroupTable& g, const AutGroup& aut,
                                  ClassifyMode mode = ClassifyMode::orbit_reps,
                                  unsigned workers = 1);

struct HallReport {
  std::uint32_t r = 0;          // independent orbit count on generating pairs
  std::uint32_t quotient = 0;   // ell / |Aut|, when divisible
  bool divisible = false;       // ell mod |Aut| == 0
  bool matches = false;         // quotient == r

  bool consistent() const { return divisible && matches; }
};

// Cross-checks ell / |Aut(G)| against the orbit count. An inconsistency
// means the automorphism list is wrong (typically missing outer
// automorphisms), not that the classification is.
HallReport hall_rank(const PairClassification& pc, const AutGroup& aut);

// For every nonidentity a, the least b with <a, b> = G.
struct SpreadCertificate {
  bool total = false;
  std::vector<Elem> witness;  // indexed by element id; witness[identity] unused
  Elem missing = 0;           // first element with no generating mate, when !total
};

SpreadCertificate spread_check(const GroupTable& g, const PairClassification& pc);

}  // namespace wordmap
