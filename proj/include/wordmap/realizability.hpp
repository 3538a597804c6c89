#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wordmap/automorphism.hpp"
#include "wordmap/group.hpp"
#include "wordmap/pairs.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

// A candidate image set A, as sorted ids plus a membership table.
struct CandidateSet {
  std::vector<Elem> members;       // ascending
  std::vector<std::uint8_t> bits;  // size |G|

  static CandidateSet from_members(const GroupTable& g, std::vector<Elem> members);
  static CandidateSet from_orbit_mask(const GroupTable& g, const OrbitPartition& orbits,
                                      std::uint32_t mask);

  bool contains(Elem x) const { return bits[x] != 0; }
  std::size_t size() const { return members.size(); }
};

// Orbit-union bitmask of a set that is a union of orbits plus the identity;
// bit k-1 stands for nonidentity orbit k.
std::uint32_t orbit_mask_of(const GroupTable& g, const OrbitPartition& orbits,
                            const CandidateSet& a);

// Every union of nonidentity orbits with the identity adjoined, in ascending
// mask order ({e} first, G last). Refuses more than 20 nonidentity orbits.
std::vector<CandidateSet> admissible_sets(const GroupTable& g, const OrbitPartition& orbits);

enum class FailedCondition { none, missing_identity, not_aut_invariant };

struct ConditionResult {
  bool pass = false;
  FailedCondition failed = FailedCondition::none;
  std::uint32_t auto_index = 0;  // witness automorphism when not invariant
  Elem element = 0;              // element carried outside the set
};

// The two necessary conditions for A = w(G): the identity is a value of
// every word map, and images are invariant under every automorphism.
ConditionResult check_necessary_conditions(const GroupTable& g, const AutGroup& aut,
                                           const CandidateSet& a);

// A value per epimorphism coordinate (position in pc.generating).
struct EquivariantAssignment {
  std::vector<Elem> value;
};

// The witness assignment for a set A: on each generating pair (a, b) the
// value is a when a is a nonidentity member of A, identity otherwise.
EquivariantAssignment witness_assignment(const GroupTable& g, const PairClassification& pc,
                                         const CandidateSet& a);

struct EquivarianceResult {
  bool ok = false;
  std::uint32_t auto_index = 0;
  std::int32_t epi_i = -1;  // orbit-representative coordinate
  std::int32_t epi_j = -1;  // its image coordinate under the automorphism
};

// Whenever an automorphism carries generating pair i to pair j, it must carry
// value[i] to value[j]. Checked for every automorphism against every
// generating-pair orbit representative, which covers all (i, j) relations by
// closure of the automorphism list.
EquivarianceResult check_equivariance(const GroupTable& g, const AutGroup& aut,
                                      const PairClassification& pc,
                                      const EquivariantAssignment& u);

struct SpreadWitness {
  Elem a = 0;
  Elem b = 0;
};

struct ImageCertificate {
  enum class Verdict { realizable, rejected };
  Verdict verdict = Verdict::rejected;
  FailedCondition failed = FailedCondition::none;
  std::vector<SpreadWitness> witnesses;  // one generating mate per orbit of A'
  bool equivariance_ok = false;          // the witness assignment passed
  bool coverage_ok = false;              // assignment values cover exactly A'
  std::vector<Elem> rep_values;          // assignment on generating-orbit representatives
};

// Certifies that A is realizable as a word-map image: necessary conditions,
// a generating mate for every orbit of A', the witness assignment passing
// the equivariance criterion, and value coverage of A'. Evidence-chain
// failures after the conditions pass throw InternalInconsistency.
ImageCertificate certify_image(const GroupTable& g, const AutGroup& aut,
                               const PairClassification& pc, const OrbitPartition& orbits,
                               const SpreadCertificate& spread, const CandidateSet& a);

struct FunctionCertificate {
  enum class Verdict { realizable, not_equivariant, nonidentity_off_generating };
  Verdict verdict = Verdict::realizable;
  std::uint32_t auto_index = 0;  // witness for not_equivariant
  PairIdx pair = 0;              // violating pair
};

// A total function f : G x G -> G is realizable as a word map iff it is
// equivariant under every automorphism and vanishes on non-generating pairs.
// Both checks are exhaustive.
FunctionCertificate certify_function(const GroupTable& g, const AutGroup& aut,
                                     const PairClassification& pc, std::span<const Elem> f);

struct PredicateResult {
  bool holds = false;
  enum class Violation { none, vanishes_on_generating, nonidentity_off_generating };
  Violation violation = Violation::none;
  PairIdx pair = 0;
};

// Tests whether w(a, b) != identity exactly on the generating pairs;
// returns the first violating pair in index order otherwise.
PredicateResult generation_predicate_test(const GroupTable& g, const PairClassification& pc,
                                          const Word& w);

}  // namespace wordmap
