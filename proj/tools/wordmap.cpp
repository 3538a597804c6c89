// Command-line driver: builds group tables, runs the automorphism /
// pair-classification / realizability / search stages, and persists reports.
//
// Stage artifacts live under <out>/<group>/:
//   group.bin, group.json     written by `group`
//   aut.bin, aut.json         written by `aut`
//   pairs.json                written by `pairs`
//   spread.json               written by `spread`
//   certify_<set>.json        written by `certify`
//   census.json, census_meta.json   written by `census`
//   dist_<word>.csv           written by `dist`
//
// Exit codes: 0 success, 1 rejection or negative verdict, 2 input error,
// 3 internal-inconsistency alarm.

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wordmap/cache.hpp"
#include "wordmap/errors.hpp"
#include "wordmap/report.hpp"

namespace fs = std::filesystem;
using namespace wordmap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitAlarm = 3;

std::string default_out_dir() {
  if (const char* env = std::getenv("WORDMAP_OUT"); env != nullptr && *env != '\0') return env;
  return "out";
}

fs::path group_dir(const std::string& out, const std::string& group) {
  return fs::path(out) / group;
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write " + path.string());
  f << text;
}

void write_json(const fs::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

GroupTable require_group(const std::string& out, const std::string& group) {
  fs::path p = group_dir(out, group) / "group.bin";
  auto g = load_group_cache(p.string());
  if (!g)
    throw InputError("no group cache at " + p.string() + "; run `wordmap group` for \"" + group +
                     "\" first");
  return std::move(*g);
}

AutGroup require_aut(const GroupTable& g, const std::string& out, const std::string& group) {
  fs::path p = group_dir(out, group) / "aut.bin";
  auto aut = load_aut_cache(g, p.string());
  if (!aut)
    throw InputError("no automorphism cache at " + p.string() + "; run `wordmap aut --group " +
                     group + "` first");
  return std::move(*aut);
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out.push_back((std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_');
  return out;
}

int default_maxlen(std::size_t order) {
  if (order <= 100) return 12;
  if (order <= 400) return 11;
  return 10;
}

struct Pipeline {
  GroupTable g;
  AutGroup aut;
  OrbitPartition orbits;
  PairClassification pc;

  Pipeline(const std::string& out, const std::string& group, unsigned workers)
      : g(require_group(out, group)),
        aut(require_aut(g, out, group)),
        orbits(orbits_on_elements(g, aut)),
        pc(classify_pairs(g, aut, ClassifyMode::orbit_reps, workers)) {}
};

int cmd_group(const std::string& out, const std::string& family, int n, int p,
              const std::string& spec_path, std::string name, std::size_t cap) {
  GroupSpec spec;
  if (!spec_path.empty()) {
    spec = load_group_spec(spec_path);
  } else if (family == "alternating") {
    spec = GroupSpec::alternating(n);
  } else if (family == "psl2") {
    spec = GroupSpec::psl2(p);
  } else if (family.empty()) {
    throw InputError("give either --spec FILE or --family alternating|psl2");
  } else {
    throw InputError("unknown family \"" + family + "\"; use alternating or psl2");
  }
  if (!name.empty()) spec.name = name;
  if (spec.name.empty()) throw InputError("group name must not be empty");
  for (char c : spec.name)
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_' && c != '-')
      throw InputError("group name \"" + spec.name +
                       "\" must use only letters, digits, '_' and '-'");

  GroupTable g = build_group(spec, cap);
  SimplicityReport rep = validate_simple(g);
  if (!rep.simple) {
    switch (rep.why) {
      case SimplicityReport::Why::trivial:
        std::cerr << "group \"" << g.name << "\" is trivial\n";
        break;
      case SimplicityReport::Why::abelian:
        std::cerr << "group \"" << g.name << "\" is abelian, not a nonabelian simple group\n";
        break;
      default:
        std::cerr << "group \"" << g.name << "\" is not simple: element " << rep.offender
                  << " (order " << g.element_order(rep.offender)
                  << ") has normal closure of size " << rep.closure_size << " < " << g.order()
                  << "\n";
    }
    return kExitNegative;
  }

  fs::path dir = group_dir(out, g.name);
  fs::create_directories(dir);
  save_group_cache(g, (dir / "group.bin").string());
  Json j = group_summary_json(g);
  j["simple"] = true;
  write_json(dir / "group.json", j);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_aut(const std::string& out, const std::string& group, unsigned workers) {
  GroupTable g = require_group(out, group);
  AutGroup aut = compute_automorphisms(g, workers);
  OrbitPartition orbits = orbits_on_elements(g, aut);

  fs::path dir = group_dir(out, group);
  fs::create_directories(dir);
  save_aut_cache(aut, (dir / "aut.bin").string());
  Json j = aut_report_json(g, aut, orbits);
  write_json(dir / "aut.json", j);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_pairs(const std::string& out, const std::string& group, unsigned workers) {
  Pipeline p(out, group, workers);
  HallReport hall = hall_rank(p.pc, p.aut);
  SpreadCertificate spread = spread_check(p.g, p.pc);

  Json j = pairs_report_json(p.g, p.aut, p.pc, hall, spread);
  write_json(group_dir(out, group) / "pairs.json", j);
  std::cout << j.dump(2) << "\n";

  if (!hall.consistent()) {
    std::cerr << "alarm: ell = " << p.pc.ell << " and |Aut| = " << p.aut.order()
              << " disagree with the orbit count r = " << p.pc.r << "\n";
    return kExitAlarm;
  }
  if (!spread.total) {
    std::cerr << "alarm: element " << spread.missing << " has no generating mate\n";
    return kExitAlarm;
  }
  return kExitOk;
}

int cmd_spread(const std::string& out, const std::string& group, unsigned workers) {
  Pipeline p(out, group, workers);
  SpreadCertificate spread = spread_check(p.g, p.pc);
  Json j = spread_json(p.g, spread);
  write_json(group_dir(out, group) / "spread.json", j);
  std::cout << (spread.total ? "spread total\n" : "spread FAILED\n");
  return spread.total ? kExitOk : kExitAlarm;
}

int cmd_certify(const std::string& out, const std::string& group, const std::string& set_expr,
                unsigned workers) {
  Pipeline p(out, group, workers);
  CandidateSet a = parse_set_expression(set_expr, p.g, p.orbits);
  SpreadCertificate spread = spread_check(p.g, p.pc);
  ImageCertificate cert = certify_image(p.g, p.aut, p.pc, p.orbits, spread, a);

  Json j = certificate_json(p.g, a, cert);
  write_json(group_dir(out, group) / ("certify_" + sanitize(set_expr) + ".json"), j);
  std::cout << j.dump(2) << "\n";
  return cert.verdict == ImageCertificate::Verdict::realizable ? kExitOk : kExitNegative;
}

int cmd_census(const std::string& out, const std::string& group, int maxlen, unsigned workers,
               double budget_sec, std::uint64_t max_classes, const std::string& resume_after,
               bool with_predicate) {
  Pipeline p(out, group, workers);
  CensusOptions opt;
  opt.maxlen = maxlen > 0 ? maxlen : default_maxlen(p.g.order());
  opt.workers = workers;
  opt.budget_seconds = budget_sec;
  opt.max_classes = max_classes;
  if (!resume_after.empty()) opt.resume_after = parse_word(resume_after);

  CensusResult res = census(p.g, p.aut, p.pc, p.orbits, opt);

  if (with_predicate) {
    // Which searched words separate generating from non-generating pairs by
    // vanishing? Exact hits are rare; near misses get reported.
    PredicateScan scan = predicate_scan(p.g, p.pc, opt.maxlen);
    Json pj;
    pj["maxlen"] = opt.maxlen;
    pj["words_checked"] = scan.words_checked;
    Json exact = Json::array();
    for (const auto& w : scan.exact) exact.push_back(word_string(w));
    pj["exact"] = std::move(exact);
    pj["nonvanishing_on_generating_only"] = scan.forward_only;
    pj["vanishing_off_generating_only"] = scan.vanishing_only;
    Json vex = Json::array();
    for (const auto& w : scan.vanishing_examples) vex.push_back(word_string(w));
    pj["vanishing_examples"] = std::move(vex);
    write_json(group_dir(out, group) / "predicate_scan.json", pj);
  }

  fs::path dir = group_dir(out, group);
  write_json(dir / "census.json", census_json(p.g, p.orbits, res));
  Json meta;
  meta["maxlen"] = opt.maxlen;
  meta["complete"] = res.complete;
  meta["classes_processed"] = res.classes_processed;
  meta["resume_after"] = word_string(opt.resume_after);
  meta["next_cursor"] = res.complete ? Json(nullptr) : Json(word_string(res.next_cursor));
  write_json(dir / "census_meta.json", meta);

  std::cout << "census: " << res.records.size() << " image(s) from " << res.classes_processed
            << " canonical classes up to length " << opt.maxlen
            << (res.complete ? "" : "  [PARTIAL: resume with --resume-after " +
                                        word_string(res.next_cursor) + "]")
            << "\n";
  return kExitOk;
}

int cmd_dist(const std::string& out, const std::string& group, const std::string& word_text,
             bool vs_uniform, unsigned workers) {
  Pipeline p(out, group, workers);
  Word w = parse_word(word_text);
  WordDistribution d = distribution(w, p.g, p.pc, p.orbits);

  write_text(group_dir(out, group) / ("dist_" + sanitize(word_text) + ".csv"),
             distribution_csv(p.g, p.orbits, d));
  if (vs_uniform) {
    std::vector<double> uniform(p.g.order(), 1.0 / double(p.g.order()));
    std::cout << "max_deviation_vs_uniform=" << distribution_distance(d, uniform, p.orbits)
              << "\n";
  } else {
    std::cout << "distribution written for word " << word_text << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& out, const std::string& group, const std::string& cert_path,
               unsigned workers) {
  std::ifstream in(cert_path);
  if (!in) throw InputError("cannot open certificate file: " + cert_path);
  Json stored;
  try {
    in >> stored;
  } catch (const std::exception& e) {
    throw InputError("cannot parse " + cert_path + ": " + e.what());
  }
  if (!stored.contains("set") || !stored["set"].is_array())
    throw InputError("certificate file has no \"set\" array");

  Pipeline p(out, group, workers);
  std::vector<Elem> members;
  for (const auto& v : stored["set"]) {
    if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= int(p.g.order()))
      throw InputError("certificate \"set\" contains an id outside the group");
    members.push_back(Elem(v.get<int>()));
  }
  CandidateSet a = CandidateSet::from_members(p.g, std::move(members));
  SpreadCertificate spread = spread_check(p.g, p.pc);
  ImageCertificate cert = certify_image(p.g, p.aut, p.pc, p.orbits, spread, a);
  Json fresh = certificate_json(p.g, a, cert);

  if (fresh != stored) {
    std::cerr << "certificate does NOT re-validate; recomputed evidence differs:\n"
              << fresh.dump(2) << "\n";
    return kExitAlarm;
  }
  std::cout << "certificate re-validates ("
            << (cert.verdict == ImageCertificate::Verdict::realizable ? "realizable" : "rejected")
            << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-map image toolkit for small finite simple groups"};
  app.require_subcommand(1);

  std::string out = default_out_dir();
  unsigned workers = 1;
  app.add_option("--out", out, "output directory (env WORDMAP_OUT overrides the default)");
  app.add_option("--workers", workers, "worker thread hint; never changes results");

  auto* c_group = app.add_subcommand("group", "build a group table and validate simplicity");
  std::string family, spec_path, name;
  int alt_n = 0, psl_p = 0;
  std::size_t cap = kDefaultOrderCap;
  c_group->add_option("--family", family, "alternating | psl2");
  c_group->add_option("--n", alt_n, "alternating degree (n >= 5)");
  c_group->add_option("--p", psl_p, "psl2 prime (p >= 5)");
  c_group->add_option("--spec", spec_path, "group spec JSON file");
  c_group->add_option("--name", name, "override the group name");
  c_group->add_option("--cap", cap, "order cap (default 1000)");

  std::string group;
  auto add_group_opt = [&group](CLI::App* cmd) {
    cmd->add_option("--group", group, "group name (as built by `group`)")->required();
  };

  auto* c_aut = app.add_subcommand("aut", "compute the automorphism group and element orbits");
  add_group_opt(c_aut);

  auto* c_pairs = app.add_subcommand("pairs", "classify generating pairs; Hall and spread checks");
  add_group_opt(c_pairs);

  auto* c_spread = app.add_subcommand("spread", "write per-element generating mates");
  add_group_opt(c_spread);

  auto* c_certify = app.add_subcommand("certify", "certify a candidate image set");
  std::string set_expr;
  add_group_opt(c_certify);
  c_certify->add_option("--set", set_expr, "orbit-union expression, e.g. \"e,o3x20\" or \"G\"")
      ->required();

  auto* c_census = app.add_subcommand("census", "enumerate word images up to a length bound");
  int maxlen = 0;
  double budget_sec = 0;
  std::uint64_t max_classes = 0;
  std::string resume_after;
  bool with_predicate = false;
  add_group_opt(c_census);
  c_census->add_option("--maxlen", maxlen, "word length bound (default scales with |G|)");
  c_census->add_option("--budget-sec", budget_sec, "wall-clock budget; cut at a class boundary");
  c_census->add_option("--max-classes", max_classes, "process at most this many classes");
  c_census->add_option("--resume-after", resume_after, "resume after this canonical word");
  c_census->add_flag("--predicate", with_predicate,
                     "also scan for words that vanish exactly off the generating pairs");

  auto* c_dist = app.add_subcommand("dist", "value distribution of one word map");
  std::string word_text;
  bool vs_uniform = false;
  add_group_opt(c_dist);
  c_dist->add_option("--word", word_text, "word over x,X,y,Y")->required();
  c_dist->add_flag("--uniform", vs_uniform, "print max deviation from the uniform target");

  auto* c_verify = app.add_subcommand("verify", "recompute a certificate's evidence from scratch");
  std::string cert_path;
  add_group_opt(c_verify);
  c_verify->add_option("--certificate", cert_path, "certificate JSON to re-validate")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_group->parsed()) return cmd_group(out, family, alt_n, psl_p, spec_path, name, cap);
    if (c_aut->parsed()) return cmd_aut(out, group, workers);
    if (c_pairs->parsed()) return cmd_pairs(out, group, workers);
    if (c_spread->parsed()) return cmd_spread(out, group, workers);
    if (c_certify->parsed()) return cmd_certify(out, group, set_expr, workers);
    if (c_census->parsed())
      return cmd_census(out, group, maxlen, workers, budget_sec, max_classes, resume_after,
                        with_predicate);
    if (c_dist->parsed()) return cmd_dist(out, group, word_text, vs_uniform, workers);
    if (c_verify->parsed()) return cmd_verify(out, group, cert_path, workers);
  } catch (const InternalInconsistency& e) {
    std::cerr << "alarm: " << e.what() << "\n";
    return kExitAlarm;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
