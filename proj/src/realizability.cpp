#include "wordmap/realizability.hpp"

#include <algorithm>

namespace wordmap {

CandidateSet CandidateSet::from_members(const GroupTable& g, std::vector<Elem> members) {
  CandidateSet s;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  s.members = std::move(members);
  s.bits.assign(g.order(), 0);
  for (Elem x : s.members) {
    if (x >= g.order()) throw InputError("set member out of range");
    s.bits[x] = 1;
  }
  return s;
}

CandidateSet CandidateSet::from_orbit_mask(const GroupTable& g, const OrbitPartition& orbits,
                                           std::uint32_t mask) {
  std::vector<Elem> members;
  members.push_back(g.identity());
  for (Elem x = 0; x < g.order(); ++x) {
    std::int32_t label = orbits.orbit_id[x];
    if (label > 0 && (mask >> (label - 1)) & 1) members.push_back(x);
  }
  return from_members(g, std::move(members));
}

std::uint32_t orbit_mask_of(const GroupTable&, const OrbitPartition& orbits,
                            const CandidateSet& a) {
  std::uint32_t mask = 0;
  for (Elem x : a.members) {
    std::int32_t label = orbits.orbit_id[x];
    if (label > 0) mask |= std::uint32_t(1) << (label - 1);
  }
  return mask;
}

std::vector<CandidateSet> admissible_sets(const GroupTable& g, const OrbitPartition& orbits) {
  const std::size_t k = orbits.count() - 1;  // nonidentity orbits
  if (k > 20)
    throw InputError("refusing to enumerate 2^" + std::to_string(k) +
                     " admissible sets; use the orbit list instead");
  std::vector<CandidateSet> out;
  out.reserve(std::size_t(1) << k);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << k); ++mask)
    out.push_back(CandidateSet::from_orbit_mask(g, orbits, mask));
  return out;
}

ConditionResult check_necessary_conditions(const GroupTable& g, const AutGroup& aut,
                                           const CandidateSet& a) {
  ConditionResult res;
  if (!a.contains(g.identity())) {
    res.failed = FailedCondition::missing_identity;
    return res;
  }
  for (std::uint32_t ai = 0; ai < aut.order(); ++ai) {
    const auto& m = aut.map_of(ai);
    for (Elem x : a.members) {
      if (!a.contains(m[x])) {
        res.failed = FailedCondition::not_aut_invariant;
        res.auto_index = ai;
        res.element = x;
        return res;
      }
    }
  }
  res.pass = true;
  return res;
}

EquivariantAssignment witness_assignment(const GroupTable& g, const PairClassification& pc,
                                         const CandidateSet& a) {
  EquivariantAssignment u;
  u.value.resize(pc.ell);
  for (std::uint32_t i = 0; i < pc.ell; ++i) {
    Elem first = g.pair_first(pc.generating[i]);
    u.value[i] = (first != g.identity() && a.contains(first)) ? first : g.identity();
  }
  return u;
}

EquivarianceResult check_equivariance(const GroupTable& g, const AutGroup& aut,
                                      const PairClassification& pc,
                                      const EquivariantAssignment& u) {
  if (u.value.size() != pc.ell)
    throw InputError("assignment does not cover every generating pair");
  EquivarianceResult res;
  const std::size_t n = g.order();
  // Checking every automorphism against every orbit representative reaches
  // every related coordinate pair: the automorphisms form a closed list.
  for (std::int32_t label : pc.gen_orbit_labels) {
    PairIdx rep = pc.pair_orbits.reps[label];
    Elem a = g.pair_first(rep), b = g.pair_second(rep);
    std::int32_t i = pc.epi_pos[rep];
    for (std::uint32_t ai = 0; ai < aut.order(); ++ai) {
      const auto& m = aut.map_of(ai);
      PairIdx image = PairIdx(m[a]) * PairIdx(n) + m[b];
      std::int32_t j = pc.epi_pos[image];
      if (j < 0) throw InternalInconsistency("automorphism carries a generating pair off the list");
      if (u.value[j] != m[u.value[i]]) {
        res.auto_index = ai;
        res.epi_i = i;
        res.epi_j = j;
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

ImageCertificate certify_image(const GroupTable& g, const AutGroup& aut,
                               const PairClassification& pc, const OrbitPartition& orbits,
                               const SpreadCertificate& spread, const CandidateSet& a) {
  ImageCertificate cert;

  ConditionResult cond = check_necessary_conditions(g, aut, a);
  if (!cond.pass) {
    cert.verdict = ImageCertificate::Verdict::rejected;
    cert.failed = cond.failed;
    return cert;
  }

  // One spread witness per nonidentity orbit of A'.
  if (!spread.total)
    throw InternalInconsistency("spread certificate is not total; cannot certify");
  std::uint32_t mask = orbit_mask_of(g, orbits, a);
  for (std::size_t label = 1; label < orbits.count(); ++label) {
    if (!((mask >> (label - 1)) & 1)) continue;
    Elem rep = Elem(orbits.reps[label]);
    Elem mate = spread.witness[rep];
    if (!pc.is_gen[g.pair_index(rep, mate)])
      throw InternalInconsistency("spread witness is not a generating pair");
    cert.witnesses.push_back({rep, mate});
  }

  EquivariantAssignment u = witness_assignment(g, pc, a);
  EquivarianceResult eq = check_equivariance(g, aut, pc, u);
  if (!eq.ok)
    throw InternalInconsistency("witness assignment for an invariant set failed equivariance");
  cert.equivariance_ok = true;

  // Coverage: the assignment's nonidentity values are exactly A'.
  std::vector<std::uint8_t> seen(g.order(), 0);
  for (Elem v : u.value) seen[v] = 1;
  bool cover = true;
  for (Elem x = 0; x < g.order(); ++x) {
    bool in_aprime = a.contains(x) && x != g.identity();
    bool appears = seen[x] && x != g.identity();
    if (in_aprime != appears) {
      cover = false;
      break;
    }
  }
  if (!cover)
    throw InternalInconsistency("assignment values do not cover the candidate set");
  cert.coverage_ok = true;

  cert.rep_values.reserve(pc.gen_orbit_labels.size());
  for (std::int32_t label : pc.gen_orbit_labels)
    cert.rep_values.push_back(u.value[pc.epi_pos[pc.pair_orbits.reps[label]]]);

  cert.verdict = ImageCertificate::Verdict::realizable;
  return cert;
}

FunctionCertificate certify_function(const GroupTable& g, const AutGroup& aut,
                                     const PairClassification& pc, std::span<const Elem> f) {
  if (f.size() != g.pair_count()) throw InputError("function is not total on G x G");
  FunctionCertificate cert;
  const std::size_t n = g.order();

  for (std::uint32_t ai = 0; ai < aut.order(); ++ai) {
    const auto& m = aut.map_of(ai);
    for (std::uint64_t p = 0; p < f.size(); ++p) {
      Elem a = Elem(p / n), b = Elem(p % n);
      PairIdx image = PairIdx(m[a]) * PairIdx(n) + m[b];
      if (f[image] != m[f[p]]) {
        cert.verdict = FunctionCertificate::Verdict::not_equivariant;
        cert.auto_index = ai;
        cert.pair = PairIdx(p);
        return cert;
      }
    }
  }

  for (std::uint64_t p = 0; p < f.size(); ++p) {
    if (!pc.is_gen[p] && f[p] != g.identity()) {
      cert.verdict = FunctionCertificate::Verdict::nonidentity_off_generating;
      cert.pair = PairIdx(p);
      return cert;
    }
  }

  cert.verdict = FunctionCertificate::Verdict::realizable;
  return cert;
}

PredicateResult generation_predicate_test(const GroupTable& g, const PairClassification& pc,
                                          const Word& w) {
  PredicateResult res;
  for (std::uint64_t p = 0; p < pc.total; ++p) {
    Elem value = g.evaluate(w, g.pair_first(PairIdx(p)), g.pair_second(PairIdx(p)));
    bool nonzero = value != g.identity();
    bool gen = pc.is_gen[p] != 0;
    if (nonzero == gen) continue;
    res.holds = false;
    res.pair = PairIdx(p);
    res.violation = gen ? PredicateResult::Violation::vanishes_on_generating
                        : PredicateResult::Violation::nonidentity_off_generating;
    return res;
  }
  res.holds = true;
  return res;
}

}  // namespace wordmap
