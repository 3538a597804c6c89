#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wordmap/automorphism.hpp"
#include "wordmap/group.hpp"
#include "wordmap/pairs.hpp"
#include "wordmap/realizability.hpp"
#include "wordmap/word.hpp"

namespace wordmap {

// The eight letter substitutions that fix the image of every word map:
// swap x/y, invert x, invert y, and their compositions. Together with
// cyclic rotation they define the canonical class of a cyclically reduced
// word. Index 0 is the identity substitution.
extern const Letter kLetterSubstitutions[8][4];

// Lexicographically least member of the class of a cyclically reduced word
// under the eight substitutions and all rotations.
Word canonical_form(const Word& w);

// True iff w is cyclically reduced and equal to its canonical form.
bool is_canonical(const Word& w);

// Every member of the canonical class of w (substitutions x rotations),
// deduplicated, sorted. Test and audit helper.
std::vector<Word> expand_class(const Word& w);

// All canonical class representatives of length 1..maxlen, in
// length-then-lexicographic order.
std::vector<Word> enumerate_canonical(int maxlen);

// Image of the word map as an orbit-union bitmask (bit k-1 = nonidentity
// orbit k; the identity belongs to every image and is implicit). Evaluates
// one representative per Aut-orbit of G x G and closes values under Aut(G).
std::uint32_t image_mask_of(const Word& w, const GroupTable& g, const PairClassification& pc,
                            const OrbitPartition& elem_orbits);

// The image as a sorted element-id set.
std::vector<Elem> image_of(const Word& w, const GroupTable& g, const PairClassification& pc,
                           const OrbitPartition& elem_orbits);

// Reference path: evaluates all |G|^2 pairs directly.
std::vector<Elem> image_of_naive(const Word& w, const GroupTable& g);

std::vector<Elem> set_from_mask(const GroupTable& g, const OrbitPartition& elem_orbits,
                                std::uint32_t mask);

struct ImageRecord {
  std::uint32_t mask = 0;        // orbit-union signature
  std::uint32_t set_size = 0;    // |image|, identity included
  Word min_word;                 // shortest word found with this image
  std::uint32_t min_length = 0;
  std::uint64_t words_found = 0; // canonical classes seen with this image
};

struct CensusOptions {
  int maxlen = 12;
  unsigned workers = 1;
  // Optional budget: stop after max_classes canonical classes (0 = no limit)
  // or once budget_seconds has elapsed (0 = no limit). The cut is taken at a
  // class boundary; the cursor makes the run resumable.
  std::uint64_t max_classes = 0;
  double budget_seconds = 0.0;
  // Resume after this canonical representative (empty = from the start).
  Word resume_after;
};

struct CensusResult {
  std::vector<ImageRecord> records;  // ascending mask order
  bool complete = true;
  std::uint64_t classes_processed = 0;
  Word next_cursor;  // last processed representative when !complete
};

// Folds the image of every canonical class representative up to maxlen into
// per-image records. Every recorded image must pass the necessary-condition
// check; a violation throws InternalInconsistency. Deterministic for any
// worker count.
CensusResult census(const GroupTable& g, const AutGroup& aut, const PairClassification& pc,
                    const OrbitPartition& elem_orbits, const CensusOptions& options);

struct WordDistribution {
  std::vector<std::uint64_t> counts;  // per element id
  std::uint64_t total = 0;            // |G|^2
};

// Exact value distribution of the word map, computed on orbit representatives
// and scaled by orbit sizes.
WordDistribution distribution(const Word& w, const GroupTable& g, const PairClassification& pc,
                              const OrbitPartition& elem_orbits);

// Reference path: full |G|^2 scan.
WordDistribution distribution_naive(const Word& w, const GroupTable& g);

// Max over c of | counts[c]/|G|^2 - p[c] |. p must sum to 1 and be constant
// on Aut-orbits (InputError otherwise).
double distribution_distance(const WordDistribution& d, std::span<const double> p,
                             const OrbitPartition& elem_orbits);

struct PredicateScan {
  std::uint64_t words_checked = 0;
  std::vector<Word> exact;          // words where the predicate holds exactly
  std::uint64_t forward_only = 0;   // nonzero on every generating pair, but not e elsewhere
  std::uint64_t vanishing_only = 0; // e on every non-generating pair, but vanishes on some generating one
  std::vector<Word> vanishing_examples;  // first few of the rare direction
};

// Scans canonical words for the generates-iff-nonvanishing predicate and
// reports the nearest misses (words satisfying one direction only).
PredicateScan predicate_scan(const GroupTable& g, const PairClassification& pc, int maxlen);

}  // namespace wordmap
