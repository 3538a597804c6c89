#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "wordmap/errors.hpp"
#include "wordmap/realizability.hpp"

using namespace wordmap;

namespace {

struct A5Fixture {
  GroupTable g = build_group(GroupSpec::alternating(5));
  AutGroup aut = compute_automorphisms(g);
  OrbitPartition orbits = orbits_on_elements(g, aut);
  PairClassification pc = classify_pairs(g, aut);
  SpreadCertificate spread = spread_check(g, pc);

  CandidateSet orbit_union(std::initializer_list<int> orders, bool with_identity) const {
    std::vector<Elem> members;
    if (with_identity) members.push_back(g.identity());
    for (Elem x = 0; x < g.order(); ++x)
      for (int k : orders)
        if (g.element_order(x) == k) members.push_back(x);
    return CandidateSet::from_members(g, std::move(members));
  }
};

}  // namespace

TEST_CASE("admissible sets of A5") {
  A5Fixture f;
  auto sets = admissible_sets(f.g, f.orbits);
  REQUIRE(sets.size() == 8);  // three nonidentity orbits
  CHECK(sets.front().size() == 1);
  CHECK(sets.front().members[0] == f.g.identity());
  CHECK(sets.back().size() == f.g.order());
  for (const auto& a : sets) {
    CHECK(a.contains(f.g.identity()));
    CHECK(check_necessary_conditions(f.g, f.aut, a).pass);
  }
}

TEST_CASE("admissible-set enumeration refuses too many orbits") {
  A5Fixture f;
  OrbitPartition fake;
  fake.orbit_id.assign(f.g.order(), 0);
  fake.reps.assign(22, 0);
  fake.sizes.assign(22, 1);
  CHECK_THROWS_AS(admissible_sets(f.g, fake), InputError);
}

TEST_CASE("necessary conditions") {
  A5Fixture f;

  CandidateSet no_e = f.orbit_union({3}, false);
  CHECK(no_e.size() == 20);
  ConditionResult r1 = check_necessary_conditions(f.g, f.aut, no_e);
  CHECK(!r1.pass);
  CHECK(r1.failed == FailedCondition::missing_identity);

  // One conjugacy class of 5-cycles plus the identity: the outer
  // automorphisms fuse the two classes, so the set is not invariant.
  Elem five = 0;
  for (Elem x = 0; x < f.g.order(); ++x)
    if (f.g.element_order(x) == 5) {
      five = x;
      break;
    }
  auto cls = test::conjugacy_class(f.g, five);
  REQUIRE(cls.size() == 12);
  std::vector<Elem> members(cls.begin(), cls.end());
  members.push_back(f.g.identity());
  ConditionResult r2 =
      check_necessary_conditions(f.g, f.aut, CandidateSet::from_members(f.g, members));
  CHECK(!r2.pass);
  CHECK(r2.failed == FailedCondition::not_aut_invariant);

  CHECK(check_necessary_conditions(f.g, f.aut, f.orbit_union({2}, true)).pass);
}

TEST_CASE("witness assignments") {
  A5Fixture f;

  EquivariantAssignment all_e = witness_assignment(f.g, f.pc, f.orbit_union({}, true));
  CHECK(std::all_of(all_e.value.begin(), all_e.value.end(),
                    [&](Elem v) { return v == f.g.identity(); }));

  CandidateSet whole = f.orbit_union({2, 3, 5}, true);
  EquivariantAssignment full = witness_assignment(f.g, f.pc, whole);
  for (std::uint32_t i = 0; i < f.pc.ell; ++i)
    CHECK(full.value[i] == f.g.pair_first(f.pc.generating[i]));

  CandidateSet invs = f.orbit_union({2}, true);
  EquivariantAssignment inv_only = witness_assignment(f.g, f.pc, invs);
  for (std::uint32_t i = 0; i < f.pc.ell; ++i) {
    Elem a = f.g.pair_first(f.pc.generating[i]);
    if (f.g.element_order(a) == 2)
      CHECK(inv_only.value[i] == a);
    else
      CHECK(inv_only.value[i] == f.g.identity());
  }
}

TEST_CASE("equivariance criterion") {
  A5Fixture f;

  EquivariantAssignment all_e;
  all_e.value.assign(f.pc.ell, f.g.identity());
  CHECK(check_equivariance(f.g, f.aut, f.pc, all_e).ok);

  for (const auto& a : admissible_sets(f.g, f.orbits))
    CHECK(check_equivariance(f.g, f.aut, f.pc, witness_assignment(f.g, f.pc, a)).ok);

  // A single nonidentity value with identity orbit-mates breaks equivariance.
  EquivariantAssignment bad;
  bad.value.assign(f.pc.ell, f.g.identity());
  PairIdx rep = f.pc.pair_orbits.reps[f.pc.gen_orbit_labels[0]];
  bad.value[f.pc.epi_pos[rep]] = f.g.pair_first(rep);
  EquivarianceResult res = check_equivariance(f.g, f.aut, f.pc, bad);
  CHECK(!res.ok);
  CHECK(res.epi_i >= 0);
  CHECK(res.epi_j >= 0);
  CHECK(res.epi_i != res.epi_j);
}

TEST_CASE("image certificates accept exactly the admissible sets") {
  A5Fixture f;

  auto sets = admissible_sets(f.g, f.orbits);
  for (const auto& a : sets) {
    ImageCertificate cert = certify_image(f.g, f.aut, f.pc, f.orbits, f.spread, a);
    CHECK(cert.verdict == ImageCertificate::Verdict::realizable);
    CHECK(cert.equivariance_ok);
    CHECK(cert.coverage_ok);
    // One witness per nonidentity orbit of the set.
    std::uint32_t mask = orbit_mask_of(f.g, f.orbits, a);
    CHECK(cert.witnesses.size() == std::size_t(__builtin_popcount(mask)));
    for (const auto& w : cert.witnesses) {
      CHECK(a.contains(w.a));
      CHECK(is_generating(w.a, w.b, f.g));
    }
  }

  CandidateSet no_e = f.orbit_union({3}, false);
  ImageCertificate c1 = certify_image(f.g, f.aut, f.pc, f.orbits, f.spread, no_e);
  CHECK(c1.verdict == ImageCertificate::Verdict::rejected);
  CHECK(c1.failed == FailedCondition::missing_identity);

  // Random non-admissible subsets are rejected with the right reason.
  std::mt19937 rng(59);
  int tested = 0;
  while (tested < 30) {
    std::vector<Elem> members;
    for (Elem x = 0; x < f.g.order(); ++x)
      if (rng() % 2) members.push_back(x);
    CandidateSet a = CandidateSet::from_members(f.g, members);
    ImageCertificate cert = certify_image(f.g, f.aut, f.pc, f.orbits, f.spread, a);
    if (!a.contains(f.g.identity())) {
      CHECK(cert.verdict == ImageCertificate::Verdict::rejected);
      CHECK(cert.failed == FailedCondition::missing_identity);
      ++tested;
      continue;
    }
    ConditionResult cond = check_necessary_conditions(f.g, f.aut, a);
    if (cond.pass) continue;  // astronomically unlikely; skip if admissible
    CHECK(cert.verdict == ImageCertificate::Verdict::rejected);
    CHECK(cert.failed == FailedCondition::not_aut_invariant);
    ++tested;
  }
}

TEST_CASE("function certificates") {
  for (const GroupSpec& spec : {GroupSpec::alternating(5), GroupSpec::psl2(7)}) {
    GroupTable g = build_group(spec);
    AutGroup aut = compute_automorphisms(g);
    PairClassification pc = classify_pairs(g, aut);

    // Commutator on generating pairs, identity elsewhere: realizable.
    std::vector<Elem> f(g.pair_count(), g.identity());
    for (PairIdx p : pc.generating) {
      Elem a = g.pair_first(p), b = g.pair_second(p);
      f[p] = g.mult(g.mult(a, b), g.mult(g.inv(a), g.inv(b)));
    }
    FunctionCertificate ok = certify_function(g, aut, pc, f);
    CHECK(ok.verdict == FunctionCertificate::Verdict::realizable);

    // A realizable function restricts to an equivariant assignment.
    EquivariantAssignment u;
    u.value.resize(pc.ell);
    for (std::uint32_t i = 0; i < pc.ell; ++i) u.value[i] = f[pc.generating[i]];
    CHECK(check_equivariance(g, aut, pc, u).ok);

    // First projection: nonidentity off the generating pairs.
    std::vector<Elem> proj(g.pair_count());
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) proj[g.pair_index(a, b)] = a;
    FunctionCertificate bad1 = certify_function(g, aut, pc, proj);
    CHECK(bad1.verdict == FunctionCertificate::Verdict::nonidentity_off_generating);

    // A nonidentity constant cannot be equivariant (its orbit is not a point).
    std::vector<Elem> constant(g.pair_count(), Elem(1));
    FunctionCertificate bad2 = certify_function(g, aut, pc, constant);
    CHECK(bad2.verdict == FunctionCertificate::Verdict::not_equivariant);
  }
}

TEST_CASE("generation predicate tester") {
  A5Fixture f;

  // w = x: nonidentity on the non-generating pair (g1, e).
  PredicateResult r1 = generation_predicate_test(f.g, f.pc, parse_word("x"));
  CHECK(!r1.holds);
  CHECK(r1.violation == PredicateResult::Violation::nonidentity_off_generating);
  CHECK(r1.pair == f.g.pair_index(1, 0));

  // Empty word vanishes on every generating pair.
  PredicateResult r2 = generation_predicate_test(f.g, f.pc, Word{});
  CHECK(!r2.holds);
  CHECK(r2.violation == PredicateResult::Violation::vanishes_on_generating);
  CHECK(r2.pair == f.pc.generating[0]);

  // The commutator word is nonzero somewhere inside a proper nonabelian
  // subgroup (A4 sits inside A5), so the predicate fails in that direction.
  PredicateResult r3 = generation_predicate_test(f.g, f.pc, parse_word("xyXY"));
  CHECK(!r3.holds);
  CHECK(r3.violation == PredicateResult::Violation::nonidentity_off_generating);
  CHECK(!f.pc.is_gen[r3.pair]);
  Elem a = f.g.pair_first(r3.pair), b = f.g.pair_second(r3.pair);
  CHECK(f.g.evaluate(parse_word("xyXY"), a, b) != f.g.identity());
}
