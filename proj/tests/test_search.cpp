#include <algorithm>
#include <random>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "wordmap/errors.hpp"
#include "wordmap/search.hpp"

using namespace wordmap;

namespace {

struct SearchFixture {
  GroupTable g;
  AutGroup aut;
  OrbitPartition orbits;
  PairClassification pc;

  explicit SearchFixture(const GroupSpec& spec)
      : g(build_group(spec)),
        aut(compute_automorphisms(g)),
        orbits(orbits_on_elements(g, aut)),
        pc(classify_pairs(g, aut)) {}
};

std::vector<Elem> to_sorted(std::set<Elem> s) { return {s.begin(), s.end()}; }

std::set<Elem> naive_image_set(const Word& w, const GroupTable& g) {
  std::set<Elem> out;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) out.insert(g.evaluate(w, a, b));
  return out;
}

}  // namespace

TEST_CASE("images of basic words on A5") {
  SearchFixture f(GroupSpec::alternating(5));

  auto full = image_of(parse_word("x"), f.g, f.pc, f.orbits);
  CHECK(full.size() == 60);

  auto killed = image_of(power(parse_word("x"), 30), f.g, f.pc, f.orbits);
  CHECK(killed == std::vector<Elem>{f.g.identity()});

  // Commutator word: the whole group.
  auto comm = image_of(parse_word("xyXY"), f.g, f.pc, f.orbits);
  CHECK(comm.size() == 60);

  // Squares: identity, all 3-cycles, all 5-cycles (45 elements).
  auto squares = image_of(parse_word("xx"), f.g, f.pc, f.orbits);
  CHECK(squares.size() == 45);
  for (Elem v : squares) CHECK(f.g.element_order(v) != 2);
  CHECK(to_sorted(naive_image_set(parse_word("xx"), f.g)) == squares);
}

TEST_CASE("orbit-representative image equals the naive image") {
  for (const GroupSpec& spec : {GroupSpec::alternating(5), GroupSpec::psl2(7)}) {
    SearchFixture f(spec);
    std::mt19937 rng(101);
    for (int t = 0; t < 25; ++t) {
      Word w = test::random_reduced_word(rng, 1 + int(rng() % 10));
      CHECK(image_of(w, f.g, f.pc, f.orbits) == image_of_naive(w, f.g));
    }
  }
}

TEST_CASE("image of the inverse word is the inverse image set") {
  SearchFixture f(GroupSpec::alternating(5));
  std::mt19937 rng(103);
  for (int t = 0; t < 20; ++t) {
    Word w = test::random_reduced_word(rng, 1 + int(rng() % 10));
    auto img = image_of(w, f.g, f.pc, f.orbits);
    std::set<Elem> inv_set;
    for (Elem v : img) inv_set.insert(f.g.inv(v));
    CHECK(image_of(inverse(w), f.g, f.pc, f.orbits) == to_sorted(std::move(inv_set)));
  }
}

TEST_CASE("all class members share one image") {
  SearchFixture f(GroupSpec::alternating(5));
  auto reps = enumerate_canonical(6);
  std::mt19937 rng(107);
  for (int t = 0; t < 50; ++t) {
    const Word& rep = reps[rng() % reps.size()];
    std::uint32_t mask = image_mask_of(rep, f.g, f.pc, f.orbits);
    for (const auto& member : expand_class(rep))
      CHECK(image_mask_of(member, f.g, f.pc, f.orbits) == mask);
  }
}

TEST_CASE("census at maxlen 2 on A5") {
  SearchFixture f(GroupSpec::alternating(5));
  CensusOptions opt;
  opt.maxlen = 2;
  CensusResult res = census(f.g, f.aut, f.pc, f.orbits, opt);
  CHECK(res.complete);
  CHECK(res.classes_processed == 3);  // [x], [xx], [xy]
  REQUIRE(res.records.size() == 2);

  // Records arrive in ascending mask order; G has the full mask.
  const ImageRecord& squares = res.records[0];
  const ImageRecord& whole = res.records[1];
  CHECK(whole.mask == 0b111);
  CHECK(whole.set_size == 60);
  CHECK(whole.min_word == parse_word("x"));
  CHECK(whole.min_length == 1);
  CHECK(whole.words_found == 2);  // x and xy

  CHECK(squares.set_size == 45);
  CHECK(squares.min_word == parse_word("xx"));
  CHECK(squares.min_length == 2);
  CHECK(squares.words_found == 1);
}

TEST_CASE("census records are admissible and worker-independent") {
  SearchFixture f(GroupSpec::alternating(5));
  CensusOptions opt;
  opt.maxlen = 8;
  CensusResult res = census(f.g, f.aut, f.pc, f.orbits, opt);
  CHECK(res.complete);

  std::uint64_t classes = 0;
  for (std::size_t i = 0; i < res.records.size(); ++i) {
    const auto& r = res.records[i];
    if (i > 0) CHECK(res.records[i - 1].mask < r.mask);
    CHECK(is_canonical(r.min_word));
    CHECK(r.min_length == r.min_word.size());
    auto set = set_from_mask(f.g, f.orbits, r.mask);
    CHECK(set.size() == r.set_size);
    CHECK(check_necessary_conditions(f.g, f.aut, CandidateSet::from_members(f.g, set)).pass);
    classes += r.words_found;
  }
  CHECK(classes == res.classes_processed);

  CensusOptions opt2 = opt;
  opt2.workers = 4;
  CensusResult res2 = census(f.g, f.aut, f.pc, f.orbits, opt2);
  REQUIRE(res2.records.size() == res.records.size());
  for (std::size_t i = 0; i < res.records.size(); ++i) {
    CHECK(res2.records[i].mask == res.records[i].mask);
    CHECK(res2.records[i].min_word == res.records[i].min_word);
    CHECK(res2.records[i].words_found == res.records[i].words_found);
  }
}

TEST_CASE("census budget cut is resumable") {
  SearchFixture f(GroupSpec::alternating(5));
  CensusOptions full_opt;
  full_opt.maxlen = 6;
  CensusResult full = census(f.g, f.aut, f.pc, f.orbits, full_opt);

  CensusOptions head_opt = full_opt;
  head_opt.max_classes = 5;
  CensusResult head = census(f.g, f.aut, f.pc, f.orbits, head_opt);
  CHECK(!head.complete);
  CHECK(head.classes_processed == 5);

  CensusOptions tail_opt = full_opt;
  tail_opt.resume_after = head.next_cursor;
  CensusResult tail = census(f.g, f.aut, f.pc, f.orbits, tail_opt);
  CHECK(tail.complete);
  CHECK(head.classes_processed + tail.classes_processed == full.classes_processed);

  // Manual merge (min over lengths with lex ties, sum of counts) matches the
  // single full run.
  std::map<std::uint32_t, ImageRecord> merged;
  for (const auto& part : {head.records, tail.records})
    for (const auto& r : part) {
      auto [it, fresh] = merged.emplace(r.mask, r);
      if (!fresh) {
        if (shorter_lex(r.min_word, it->second.min_word)) {
          it->second.min_word = r.min_word;
          it->second.min_length = r.min_length;
        }
        it->second.words_found += r.words_found;
      }
    }
  REQUIRE(merged.size() == full.records.size());
  for (const auto& r : full.records) {
    const auto& m = merged.at(r.mask);
    CHECK(m.min_word == r.min_word);
    CHECK(m.words_found == r.words_found);
  }
}

TEST_CASE("distributions") {
  SearchFixture f(GroupSpec::alternating(5));

  WordDistribution dx = distribution(parse_word("x"), f.g, f.pc, f.orbits);
  CHECK(dx.total == 3600);
  for (Elem c = 0; c < f.g.order(); ++c) CHECK(dx.counts[c] == 60);

  WordDistribution de = distribution(Word{}, f.g, f.pc, f.orbits);
  CHECK(de.counts[f.g.identity()] == 3600);

  // Orbit-scaled counting equals the naive scan, and counts are constant on
  // orbits.
  std::mt19937 rng(113);
  for (int t = 0; t < 12; ++t) {
    Word w = (t == 0) ? parse_word("xyXY") : test::random_reduced_word(rng, 1 + int(rng() % 8));
    WordDistribution d = distribution(w, f.g, f.pc, f.orbits);
    WordDistribution n = distribution_naive(w, f.g);
    CHECK(d.counts == n.counts);
    std::uint64_t sum = 0;
    for (Elem c = 0; c < f.g.order(); ++c) {
      sum += d.counts[c];
      CHECK(d.counts[c] == d.counts[f.orbits.reps[f.orbits.orbit_id[c]]]);
    }
    CHECK(sum == 3600);
  }
}

TEST_CASE("distribution distance") {
  SearchFixture f(GroupSpec::alternating(5));
  std::vector<double> uniform(f.g.order(), 1.0 / 60.0);

  WordDistribution dx = distribution(parse_word("x"), f.g, f.pc, f.orbits);
  CHECK(distribution_distance(dx, uniform, f.orbits) == doctest::Approx(0.0));

  WordDistribution de = distribution(Word{}, f.g, f.pc, f.orbits);
  CHECK(distribution_distance(de, uniform, f.orbits) == doctest::Approx(1.0 - 1.0 / 60.0));

  std::vector<double> not_normalized(f.g.order(), 1.0 / 59.0);
  CHECK_THROWS_AS(distribution_distance(dx, not_normalized, f.orbits), InputError);

  std::vector<double> not_invariant(f.g.order(), 0.0);
  not_invariant[f.g.identity()] = 0.5;
  not_invariant[1] = 0.5;  // misses the rest of element 1's orbit
  CHECK_THROWS_AS(distribution_distance(dx, not_invariant, f.orbits), InputError);
}

TEST_CASE("best census deviation from uniform is exactly zero") {
  // x is itself uniform, so the minimum over searched words is 0.
  SearchFixture f(GroupSpec::alternating(5));
  std::vector<double> uniform(f.g.order(), 1.0 / 60.0);
  double best = 1.0;
  for (const Word& w : enumerate_canonical(4)) {
    WordDistribution d = distribution(w, f.g, f.pc, f.orbits);
    best = std::min(best, distribution_distance(d, uniform, f.orbits));
  }
  CHECK(best == doctest::Approx(0.0));
}

TEST_CASE("canonical enumeration needs a positive bound") {
  CHECK_THROWS_AS(enumerate_canonical(0), InputError);
  CHECK_THROWS_AS(enumerate_canonical(-3), InputError);
}

TEST_CASE("predicate scan reports near misses") {
  SearchFixture f(GroupSpec::alternating(5));
  PredicateScan scan = predicate_scan(f.g, f.pc, 4);
  CHECK(scan.words_checked == enumerate_canonical(4).size());
  // x never vanishes on a generating pair, so one direction always holds.
  CHECK(scan.forward_only >= 1);
  for (const auto& w : scan.exact) CHECK(generation_predicate_test(f.g, f.pc, w).holds);
}
