#include "wordmap/report.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "wordmap/errors.hpp"

namespace wordmap {

namespace {

const Json& require_field(const Json& j, const char* field) {
  if (!j.contains(field)) throw InputError(std::string("missing field '") + field + "'");
  return j.at(field);
}

int require_int(const Json& j, const char* field) {
  const Json& v = require_field(j, field);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + field + "' must be an integer");
  return v.get<int>();
}

std::string require_string(const Json& j, const char* field) {
  const Json& v = require_field(j, field);
  if (!v.is_string()) throw InputError(std::string("field '") + field + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

GroupSpec parse_group_spec(const Json& j) {
  if (!j.is_object()) throw InputError("group spec must be a JSON object");
  std::string name = require_string(j, "name");

  if (j.contains("family")) {
    std::string family = require_string(j, "family");
    if (family == "alternating") {
      GroupSpec s = GroupSpec::alternating(require_int(j, "n"));
      s.name = name;
      return s;
    }
    if (family == "psl2") {
      GroupSpec s = GroupSpec::psl2(require_int(j, "p"));
      s.name = name;
      return s;
    }
    throw InputError("field 'family' must be \"alternating\" or \"psl2\", got \"" + family + "\"");
  }

  int degree = require_int(j, "degree");
  if (degree < 1 || degree > 256) throw InputError("field 'degree' must be in 1..256");
  const Json& gens = require_field(j, "generators");
  if (!gens.is_array() || gens.empty())
    throw InputError("field 'generators' must be a nonempty array of permutations");
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Json& arr = gens[i];
    if (!arr.is_array() || arr.size() != std::size_t(degree))
      throw InputError("field 'generators' entry " + std::to_string(i) +
                       " must be an array of length " + std::to_string(degree));
    std::vector<std::uint8_t> images;
    images.reserve(arr.size());
    for (const Json& v : arr) {
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= degree)
        throw InputError("field 'generators' entry " + std::to_string(i) +
                         " has a point outside 0.." + std::to_string(degree - 1));
      images.push_back(std::uint8_t(v.get<int>()));
    }
    Permutation p(std::move(images));
    if (!p.is_bijection())
      throw InputError("field 'generators' entry " + std::to_string(i) + " is not a permutation");
    perms.push_back(std::move(p));
  }
  return GroupSpec::explicit_gens_spec(name, std::uint32_t(degree), std::move(perms));
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group spec file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
  return parse_group_spec(j);
}

std::vector<std::string> orbit_labels(const GroupTable& g, const OrbitPartition& orbits) {
  std::vector<std::string> labels(orbits.count());
  std::map<std::string, int> used;
  for (std::size_t k = 0; k < orbits.count(); ++k) {
    if (k == 0) {
      labels[0] = "e";
      continue;
    }
    std::string base = "o" + std::to_string(g.element_order(Elem(orbits.reps[k]))) + "x" +
                       std::to_string(orbits.sizes[k]);
    int n = ++used[base];
    labels[k] = n == 1 ? base : base + "_" + std::to_string(n);
  }
  return labels;
}

CandidateSet parse_set_expression(const std::string& expr, const GroupTable& g,
                                  const OrbitPartition& orbits) {
  auto labels = orbit_labels(g, orbits);
  std::vector<Elem> members;
  bool any = false;
  std::stringstream ss(expr);
  std::string token;
  while (std::getline(ss, token, ',')) {
    // trim
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token.empty()) continue;
    any = true;
    if (token == "G" || token == "all") {
      for (Elem x = 0; x < g.order(); ++x) members.push_back(x);
      continue;
    }
    bool matched = false;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] == token) {
        for (Elem x = 0; x < g.order(); ++x)
          if (orbits.orbit_id[x] == std::int32_t(k)) members.push_back(x);
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::string known;
      for (const auto& l : labels) known += (known.empty() ? "" : ", ") + l;
      throw InputError("unknown orbit label \"" + token + "\"; known labels: " + known +
                       ", plus G for the whole group");
    }
  }
  if (!any) throw InputError("empty set expression");
  return CandidateSet::from_members(g, std::move(members));
}

Json group_summary_json(const GroupTable& g) {
  Json histogram = Json::object();
  std::map<int, int> by_order;
  for (Elem x = 0; x < g.order(); ++x) ++by_order[g.element_order(x)];
  for (const auto& [ord, count] : by_order) histogram[std::to_string(ord)] = count;

  Json j;
  j["name"] = g.name;
  j["degree"] = g.degree;
  j["order"] = g.order();
  j["generators"] = g.gen_ids.size();
  j["element_order_histogram"] = histogram;
  return j;
}

Json aut_report_json(const GroupTable& g, const AutGroup& aut, const OrbitPartition& orbits) {
  // inner_order is verified, not assumed: count the conjugation maps that
  // actually appear in the list.
  std::size_t inner_found = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    auto inner = inner_automorphism(g, x);
    std::uint32_t idx = aut.find(inner[aut.anchor_a], inner[aut.anchor_b]);
    if (idx != AutGroup::npos && aut.map_of(idx) == inner) ++inner_found;
  }

  Json j;
  j["aut_order"] = aut.order();
  j["inner_order"] = inner_found;
  Json arr = Json::array();
  for (std::size_t k = 0; k < orbits.count(); ++k) {
    Json o;
    o["size"] = orbits.sizes[k];
    o["rep"] = orbits.reps[k];
    o["rep_order"] = g.element_order(Elem(orbits.reps[k]));
    arr.push_back(std::move(o));
  }
  j["element_orbits"] = std::move(arr);
  return j;
}

Json pairs_report_json(const GroupTable& g, const AutGroup& aut, const PairClassification& pc,
                       const HallReport& hall, const SpreadCertificate& spread) {
  Json j;
  j["order"] = g.order();
  j["aut_order"] = aut.order();
  j["ell"] = pc.ell;
  j["r"] = pc.r;
  j["hall_consistent"] = hall.consistent();
  j["spread_total"] = spread.total;
  return j;
}

Json spread_json(const GroupTable& g, const SpreadCertificate& spread) {
  Json j;
  j["total"] = spread.total;
  Json arr = Json::array();
  if (spread.total) {
    for (Elem a = 0; a < g.order(); ++a) {
      if (a == g.identity()) continue;
      Json w;
      w["a"] = a;
      w["b"] = spread.witness[a];
      arr.push_back(std::move(w));
    }
  } else {
    j["missing"] = spread.missing;
  }
  j["witnesses"] = std::move(arr);
  return j;
}

Json certificate_json(const GroupTable& g, const CandidateSet& a, const ImageCertificate& cert) {
  (void)g;
  Json j;
  Json set = Json::array();
  for (Elem x : a.members) set.push_back(x);
  j["set"] = std::move(set);
  j["verdict"] = cert.verdict == ImageCertificate::Verdict::realizable ? "realizable" : "rejected";
  switch (cert.failed) {
    case FailedCondition::none: j["failed"] = nullptr; break;
    case FailedCondition::missing_identity: j["failed"] = "missing-identity"; break;
    case FailedCondition::not_aut_invariant: j["failed"] = "not-aut-invariant"; break;
  }
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) {
    Json e;
    e["a"] = w.a;
    e["b"] = w.b;
    witnesses.push_back(std::move(e));
  }
  j["witnesses"] = std::move(witnesses);
  j["eprime_ok"] = cert.equivariance_ok;
  return j;
}

Json census_json(const GroupTable& g, const OrbitPartition& orbits, const CensusResult& result) {
  auto labels = orbit_labels(g, orbits);
  Json arr = Json::array();
  for (const auto& rec : result.records) {
    Json r;
    Json sig = Json::array();
    for (std::size_t k = 1; k < orbits.count(); ++k)
      if ((rec.mask >> (k - 1)) & 1) sig.push_back(labels[k]);
    r["orbit_signature"] = std::move(sig);
    r["size"] = rec.set_size;
    r["min_word"] = word_string(rec.min_word);
    r["min_length"] = rec.min_length;
    r["words_found"] = rec.words_found;
    arr.push_back(std::move(r));
  }
  return arr;
}

std::string distribution_csv(const GroupTable& g, const OrbitPartition& orbits,
                             const WordDistribution& d) {
  std::string out = "element_id,orbit_id,count\n";
  for (Elem x = 0; x < g.order(); ++x) {
    out += std::to_string(x);
    out += ',';
    out += std::to_string(orbits.orbit_id[x]);
    out += ',';
    out += std::to_string(d.counts[x]);
    out += '\n';
  }
  return out;
}

}  // namespace wordmap
