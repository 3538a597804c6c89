#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wordmap/automorphism.hpp"
#include "wordmap/group.hpp"
#include "wordmap/pairs.hpp"
#include "wordmap/realizability.hpp"
#include "wordmap/search.hpp"

namespace wordmap {

using Json = nlohmann::ordered_json;

// Group spec files:
//   {"name": str, "family": "alternating"|"psl2", "n"|"p": int}
//   {"name": str, "degree": int, "generators": [[int, ...], ...]}
// Parse errors name the offending field.
GroupSpec parse_group_spec(const Json& j);
GroupSpec load_group_spec(const std::string& path);

// Stable text labels for element orbits: "e" for the identity orbit, else
// "o<rep order>x<size>", with "_2", "_3", ... suffixes on ties.
std::vector<std::string> orbit_labels(const GroupTable& g, const OrbitPartition& orbits);

// Parses a comma-separated union of orbit labels ("e,o3x20"; "G" for the
// whole group). The identity is a member exactly when "e" or "G" appears.
CandidateSet parse_set_expression(const std::string& expr, const GroupTable& g,
                                  const OrbitPartition& orbits);

Json group_summary_json(const GroupTable& g);
Json aut_report_json(const GroupTable& g, const AutGroup& aut, const OrbitPartition& orbits);
Json pairs_report_json(const GroupTable& g, const AutGroup& aut, const PairClassification& pc,
                       const HallReport& hall, const SpreadCertificate& spread);
Json spread_json(const GroupTable& g, const SpreadCertificate& spread);
Json certificate_json(const GroupTable& g, const CandidateSet& a, const ImageCertificate& cert);
Json census_json(const GroupTable& g, const OrbitPartition& orbits, const CensusResult& result);
std::string distribution_csv(const GroupTable& g, const OrbitPartition& orbits,
                             const WordDistribution& d);

}  // namespace wordmap
