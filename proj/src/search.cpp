#include "wordmap/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "wordmap/errors.hpp"
#include "wordmap/parallel.hpp"

namespace wordmap {

// Letter permutations commuting with inversion: generated by x<->y and the
// two single-generator inversions.
const Letter kLetterSubstitutions[8][4] = {
    {0, 1, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2},
    {2, 3, 0, 1}, {3, 2, 0, 1}, {2, 3, 1, 0}, {3, 2, 1, 0},
};

namespace {

void apply_substitution(const Word& w, int sub, std::vector<Letter>& out) {
  out.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = kLetterSubstitutions[sub][w.letters[i]];
}

// Lexicographically least rotation of `letters`, written into `best` if smaller.
void fold_min_rotations(const std::vector<Letter>& letters, std::vector<Letter>& best) {
  const std::size_t k = letters.size();
  std::vector<Letter> rot(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) rot[i] = letters[(i + r) % k];
    if (rot < best) best = rot;
  }
}

}  // namespace

Word canonical_form(const Word& w) {
  if (w.empty()) return w;
  std::vector<Letter> best = w.letters;
  std::vector<Letter> subbed;
  for (int sub = 0; sub < 8; ++sub) {
    apply_substitution(w, sub, subbed);
    fold_min_rotations(subbed, best);
  }
  return Word(std::move(best));
}

bool is_canonical(const Word& w) {
  return is_cyclically_reduced(w) && canonical_form(w) == w;
}

std::vector<Word> expand_class(const Word& w) {
  if (w.empty()) return {w};
  std::set<Word> out;
  std::vector<Letter> subbed;
  for (int sub = 0; sub < 8; ++sub) {
    apply_substitution(w, sub, subbed);
    const std::size_t k = subbed.size();
    std::vector<Letter> rot(k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t i = 0; i < k; ++i) rot[i] = subbed[(i + r) % k];
      out.insert(Word(rot));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Word> enumerate_canonical(int maxlen) {
  if (maxlen < 1) throw InputError("maxlen must be at least 1");
  std::vector<Word> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      Word w{cur};
      if (is_cyclically_reduced(w) && canonical_form(w) == w) out.push_back(std::move(w));
      return;
    }
    for (Letter l = 0; l < 4; ++l) {
      if (!cur.empty() && cur.back() == inverse_letter(l)) continue;
      cur.push_back(l);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  for (int len = 1; len <= maxlen; ++len) {
    // Canonical representatives always start with x; prune the rest.
    cur.clear();
    cur.push_back(kX);
    rec(rec, len - 1);
  }
  return out;
}

std::uint32_t image_mask_of(const Word& w, const GroupTable& g, const PairClassification& pc,
                            const OrbitPartition& elem_orbits) {
  std::uint32_t mask = 0;
  for (PairIdx rep : pc.pair_orbits.reps) {
    Elem v = g.evaluate(w, g.pair_first(rep), g.pair_second(rep));
    std::int32_t label = elem_orbits.orbit_id[v];
    if (label > 0) mask |= std::uint32_t(1) << (label - 1);
  }
  return mask;
}

std::vector<Elem> set_from_mask(const GroupTable& g, const OrbitPartition& elem_orbits,
                                std::uint32_t mask) {
  std::vector<Elem> out;
  out.push_back(g.identity());
  for (Elem x = 0; x < g.order(); ++x) {
    std::int32_t label = elem_orbits.orbit_id[x];
    if (label > 0 && ((mask >> (label - 1)) & 1)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> image_of(const Word& w, const GroupTable& g, const PairClassification& pc,
                           const OrbitPartition& elem_orbits) {
  return set_from_mask(g, elem_orbits, image_mask_of(w, g, pc, elem_orbits));
}

std::vector<Elem> image_of_naive(const Word& w, const GroupTable& g) {
  std::vector<std::uint8_t> hit(g.order(), 0);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) hit[g.evaluate(w, a, b)] = 1;
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (hit[x]) out.push_back(x);
  return out;
}

namespace {

struct LocalRecord {
  Word min_word;
  std::uint64_t words_found = 0;
};

std::uint32_t orbit_sizes_total(const OrbitPartition& orbits, std::uint32_t mask) {
  std::uint32_t total = 1;  // identity
  for (std::size_t label = 1; label < orbits.count(); ++label)
    if ((mask >> (label - 1)) & 1) total += orbits.sizes[label];
  return total;
}

}  // namespace

CensusResult census(const GroupTable& g, const AutGroup& aut, const PairClassification& pc,
                    const OrbitPartition& elem_orbits, const CensusOptions& options) {
  if (elem_orbits.count() > 33)
    throw InputError("too many orbits for a 32-bit image signature");

  const auto started = std::chrono::steady_clock::now();
  std::vector<Word> reps = enumerate_canonical(options.maxlen);

  // Resume support: drop everything up to and including the cursor.
  std::size_t first = 0;
  if (!options.resume_after.empty()) {
    while (first < reps.size() && !shorter_lex(options.resume_after, reps[first])) ++first;
  }

  // Budget: a class-count cut, or a wall-clock cut at a class boundary.
  std::size_t limit = reps.size() - first;
  if (options.max_classes > 0) limit = std::min<std::size_t>(limit, options.max_classes);

  std::vector<std::uint32_t> masks;
  std::size_t done;
  if (options.budget_seconds > 0) {
    // Sequential walk so the cut lands on a class boundary; the cursor makes
    // a later run pick up exactly where this one stopped.
    masks.reserve(limit);
    for (done = 0; done < limit; ++done) {
      double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      if (elapsed >= options.budget_seconds) break;
      masks.push_back(image_mask_of(reps[first + done], g, pc, elem_orbits));
    }
  } else {
    masks.resize(limit);
    parallel_chunks(limit, options.workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k)
        masks[k] = image_mask_of(reps[first + k], g, pc, elem_orbits);
    });
    done = limit;
  }

  CensusResult res;
  res.classes_processed = done;
  res.complete = (first + done == reps.size());
  if (!res.complete) {
    if (done > 0)
      res.next_cursor = reps[first + done - 1];
    else
      res.next_cursor = options.resume_after;
  }

  std::map<std::uint32_t, LocalRecord> folded;
  for (std::size_t k = 0; k < done; ++k) {
    auto [it, fresh] = folded.try_emplace(masks[k]);
    if (fresh || shorter_lex(reps[first + k], it->second.min_word))
      it->second.min_word = reps[first + k];
    ++it->second.words_found;
  }

  res.records.reserve(folded.size());
  for (auto& [mask, rec] : folded) {
    ImageRecord r;
    r.mask = mask;
    r.set_size = orbit_sizes_total(elem_orbits, mask);
    r.min_word = rec.min_word;
    r.min_length = std::uint32_t(rec.min_word.size());
    r.words_found = rec.words_found;

    // Every recorded image must satisfy the necessary conditions.
    CandidateSet set = CandidateSet::from_members(g, set_from_mask(g, elem_orbits, mask));
    if (!check_necessary_conditions(g, aut, set).pass)
      throw InternalInconsistency("census image violates the necessary conditions");
    res.records.push_back(std::move(r));
  }
  return res;
}

WordDistribution distribution(const Word& w, const GroupTable& g, const PairClassification& pc,
                              const OrbitPartition& elem_orbits) {
  WordDistribution d;
  d.counts.assign(g.order(), 0);
  d.total = g.pair_count();
  const std::size_t n_orbits = pc.pair_orbits.count();
  for (std::size_t k = 0; k < n_orbits; ++k) {
    PairIdx rep = pc.pair_orbits.reps[k];
    Elem v = g.evaluate(w, g.pair_first(rep), g.pair_second(rep));
    std::uint32_t value_orbit_size = elem_orbits.sizes[elem_orbits.orbit_id[v]];
    std::uint32_t pair_orbit_size = pc.pair_orbits.sizes[k];
    // The pair stabilizer sits inside the value stabilizer, so this divides.
    if (pair_orbit_size % value_orbit_size != 0)
      throw InternalInconsistency("pair orbit size not divisible by value orbit size");
    std::uint64_t share = pair_orbit_size / value_orbit_size;
    std::int32_t label = elem_orbits.orbit_id[v];
    for (Elem c = 0; c < g.order(); ++c)
      if (elem_orbits.orbit_id[c] == label) d.counts[c] += share;
  }
  return d;
}

WordDistribution distribution_naive(const Word& w, const GroupTable& g) {
  WordDistribution d;
  d.counts.assign(g.order(), 0);
  d.total = g.pair_count();
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) ++d.counts[g.evaluate(w, a, b)];
  return d;
}

double distribution_distance(const WordDistribution& d, std::span<const double> p,
                             const OrbitPartition& elem_orbits) {
  if (p.size() != d.counts.size()) throw InputError("probability vector has the wrong length");
  double sum = 0;
  for (double v : p) sum += v;
  if (std::abs(sum - 1.0) > 1e-9) throw InputError("probabilities do not sum to 1");
  for (std::size_t c = 0; c < p.size(); ++c) {
    std::size_t rep = elem_orbits.reps[elem_orbits.orbit_id[c]];
    if (std::abs(p[c] - p[rep]) > 1e-12)
      throw InputError("probability map is not constant on automorphism orbits");
  }

  double worst = 0;
  for (std::size_t c = 0; c < p.size(); ++c) {
    double dev = std::abs(double(d.counts[c]) / double(d.total) - p[c]);
    worst = std::max(worst, dev);
  }
  return worst;
}

PredicateScan predicate_scan(const GroupTable& g, const PairClassification& pc, int maxlen) {
  PredicateScan scan;
  std::vector<Word> reps = enumerate_canonical(maxlen);
  scan.words_checked = reps.size();
  for (const Word& w : reps) {
    bool nonzero_on_generating = true;   // w(a,b) != e whenever <a,b> = G
    bool vanishes_elsewhere = true;      // w(a,b)  = e whenever <a,b> != G
    for (std::size_t k = 0; k < pc.pair_orbits.count(); ++k) {
      PairIdx rep = pc.pair_orbits.reps[k];
      Elem v = g.evaluate(w, g.pair_first(rep), g.pair_second(rep));
      if (pc.is_gen[rep]) {
        if (v == g.identity()) nonzero_on_generating = false;
      } else {
        if (v != g.identity()) vanishes_elsewhere = false;
      }
      if (!nonzero_on_generating && !vanishes_elsewhere) break;
    }
    if (nonzero_on_generating && vanishes_elsewhere) {
      scan.exact.push_back(w);
    } else if (nonzero_on_generating) {
      ++scan.forward_only;
    } else if (vanishes_elsewhere) {
      ++scan.vanishing_only;
      if (scan.vanishing_examples.size() < 8) scan.vanishing_examples.push_back(w);
    }
  }
  return scan;
}

}  // namespace wordmap
