#include "wordmap/pairs.hpp"

#include <algorithm>

#include "wordmap/parallel.hpp"

namespace wordmap {

std::vector<PairIdx> PairClassification::nongenerating() const {
  std::vector<PairIdx> out;
  out.reserve(std::size_t(total - ell));
  for (std::uint64_t p = 0; p < total; ++p)
    if (!is_gen[p]) out.push_back(PairIdx(p));
  return out;
}

PairClassification classify_pairs(const GroupTable& g, const AutGroup& aut, ClassifyMode mode,
                                  unsigned workers) {
  PairClassification pc;
  pc.total = g.pair_count();
  pc.pair_orbits = all_pairs_orbits(g, aut);

  const std::size_t n_orbits = pc.pair_orbits.count();
  std::vector<std::uint8_t> orbit_gen(n_orbits, 0);

  if (mode == ClassifyMode::orbit_reps) {
    parallel_chunks(n_orbits, workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        PairIdx rep = pc.pair_orbits.reps[k];
        orbit_gen[k] = generates(g, g.pair_first(rep), g.pair_second(rep)) ? 1 : 0;
      }
    });
  } else {
    // Classify every pair directly, then require the verdict to be constant
    // on each orbit. Generation is an automorphism invariant; a mixed orbit
    // is a table bug.
    std::vector<std::uint8_t> verdict(pc.total, 0);
    parallel_chunks(pc.total, workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t p = begin; p < end; ++p)
        verdict[p] = generates(g, g.pair_first(PairIdx(p)), g.pair_second(PairIdx(p))) ? 1 : 0;
    });
    std::vector<std::uint8_t> seen(n_orbits, 0);
    for (std::uint64_t p = 0; p < pc.total; ++p) {
      std::int32_t label = pc.pair_orbits.orbit_id[p];
      if (!seen[label]) {
        seen[label] = 1;
        orbit_gen[label] = verdict[p];
      } else if (orbit_gen[label] != verdict[p]) {
        throw InternalInconsistency("generation verdict not constant on a pair orbit");
      }
    }
  }

  pc.is_gen.assign(pc.total, 0);
  pc.epi_pos.assign(pc.total, -1);
  for (std::uint64_t p = 0; p < pc.total; ++p) {
    if (orbit_gen[pc.pair_orbits.orbit_id[p]]) {
      pc.is_gen[p] = 1;
      pc.epi_pos[p] = std::int32_t(pc.generating.size());
      pc.generating.push_back(PairIdx(p));
    }
  }
  pc.ell = std::uint32_t(pc.generating.size());

  for (std::size_t k = 0; k < n_orbits; ++k)
    if (orbit_gen[k]) pc.gen_orbit_labels.push_back(std::int32_t(k));
  pc.r = std::uint32_t(pc.gen_orbit_labels.size());

  return pc;
}

HallReport hall_rank(const PairClassification& pc, const AutGroup& aut) {
  HallReport rep;
  rep.r = pc.r;
  rep.divisible = (pc.ell % aut.order()) == 0;
  if (rep.divisible) {
    rep.quotient = std::uint32_t(pc.ell / aut.order());
    rep.matches = rep.quotient == pc.r;
  }
  return rep;
}

SpreadCertificate spread_check(const GroupTable& g, const PairClassification& pc) {
  SpreadCertificate sc;
  const std::size_t n = g.order();
  sc.witness.assign(n, 0);
  sc.total = true;
  for (Elem a = 0; a < n; ++a) {
    if (a == g.identity()) continue;
    bool found = false;
    const std::uint64_t base = std::uint64_t(a) * n;
    for (Elem b = 0; b < n; ++b) {
      if (pc.is_gen[base + b]) {
        sc.witness[a] = b;
        found = true;
        break;
      }
    }
    if (!found) {
      sc.total = false;
      sc.missing = a;
      return sc;
    }
  }
  return sc;
}

}  // namespace wordmap
