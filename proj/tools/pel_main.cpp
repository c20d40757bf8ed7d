// pel: exact p-element statistics for finite permutation groups, plus the
// claim-verification suite. Reports go to stdout as JSON lines (default),
// CSV or text; diagnostics to stderr. Exit codes: 0 success / all checks
// pass, 1 a verification failed, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pel/census.hpp"
#include "pel/classical.hpp"
#include "pel/group_spec.hpp"
#include "pel/report_io.hpp"
#include "pel/verify.hpp"

#ifndef PEL_DEFAULT_DATA_DIR
#define PEL_DEFAULT_DATA_DIR "data"
#endif

namespace {

struct CliOptions {
  std::string format = "json";
  std::string data_dir = PEL_DEFAULT_DATA_DIR;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool timing = false;
};

pel::LabeledCoset coset_from_args(const std::string& kind, std::uint64_t q) {
  if (kind == "diag") return pel::outer_coset(pel::OuterKind::diag, q);
  if (kind == "frob") return pel::outer_coset(pel::OuterKind::frob, q);
  if (kind == "diag_frob") return pel::outer_coset(pel::OuterKind::diag_frob, q);
  throw std::invalid_argument("unknown coset kind: " + kind);
}

/// "KIND:Q" shorthand used by estimate --coset.
pel::LabeledCoset coset_from_shorthand(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("coset shorthand must look like diag_frob:81");
  return coset_from_args(text.substr(0, colon), std::stoull(text.substr(colon + 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-element censuses, pair probabilities and paper-claim checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  CliOptions opt;
  app.add_option("--format,-f", opt.format, "output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--data-dir", opt.data_dir, "directory with the corpus files");
  app.add_option("--seed", opt.seed, "root random seed")->envname("PEL_SEED");
  app.add_option("--jobs", opt.jobs, "worker threads for exact censuses");
  app.add_flag("--timing", opt.timing, "emit measured runtimes (off: ms fields are 0)");
  app.add_option("--enum-cap", pel::caps::enumeration_cap, "enumeration cap (elements)")
      ->envname("PEL_ENUM_CAP");
  app.add_option("--pair-cap", pel::caps::pair_cap, "pair-scan cap (group order)")
      ->envname("PEL_PAIR_CAP");
  app.add_option("--index-cap", pel::caps::quotient_index_cap, "quotient index cap");

  // census
  std::vector<std::string> census_groups;
  std::uint64_t census_prime = 2;
  auto* census_cmd = app.add_subcommand("census", "exact p-element census of a group");
  census_cmd->add_option("--group,-g", census_groups, "group spec(s)")->required();
  census_cmd->add_option("--prime,-p", census_prime, "the prime p")->required();

  // coset
  std::string coset_kind;
  std::uint64_t coset_q = 0, coset_prime = 2;
  auto* coset_cmd = app.add_subcommand("coset", "exact p-element census of an outer coset");
  coset_cmd->add_option("--kind", coset_kind, "diag, frob or diag_frob")->required();
  coset_cmd->add_option("--q", coset_q, "field size q")->required();
  coset_cmd->add_option("--prime,-p", coset_prime, "the prime p")->required();

  // sylow
  std::string sylow_group;
  std::uint64_t sylow_prime = 2;
  auto* sylow_cmd = app.add_subcommand("sylow", "Sylow subgroup, normalizer and the order bound");
  sylow_cmd->add_option("--group,-g", sylow_group, "group spec")->required();
  sylow_cmd->add_option("--prime,-p", sylow_prime, "the prime p")->required();

  // pairs
  std::string pairs_group, pairs_element;
  std::uint64_t pairs_prime = 2;
  auto* pairs_cmd = app.add_subcommand("pairs", "pair probability P_p(G,G) or Omega_p(g,G)");
  pairs_cmd->add_option("--group,-g", pairs_group, "group spec")->required();
  pairs_cmd->add_option("--prime,-p", pairs_prime, "the prime p")->required();
  pairs_cmd->add_option("--element,-e", pairs_element, "fixed g in cycle notation");

  // baer
  std::string baer_group;
  std::uint64_t baer_prime = 2;
  auto* baer_cmd = app.add_subcommand("baer", "intersection of all Omega_p(g,G), with measure");
  baer_cmd->add_option("--group,-g", baer_group, "group spec")->required();
  baer_cmd->add_option("--prime,-p", baer_prime, "the prime p")->required();

  // gamma
  std::string gamma_socle, gamma_over;
  auto* gamma_cmd = app.add_subcommand("gamma", "per-coset 2-element ratios of a simple socle");
  gamma_cmd->add_option("--socle,-s", gamma_socle, "socle spec")->required();
  gamma_cmd->add_option("--group,-g", gamma_over, "overgroup spec")->required();

  // tower
  std::string tower_family;
  unsigned tower_depth = 8;
  auto* tower_cmd = app.add_subcommand("tower", "tower censuses against closed forms");
  tower_cmd->add_option("--family", tower_family, "gt, yt, xu or metacyclic")
      ->required()
      ->check(CLI::IsMember({"gt", "yt", "xu", "metacyclic"}));
  tower_cmd->add_option("--depth", tower_depth, "depth to evaluate to");

  // verify
  std::vector<std::string> verify_claims;
  auto* verify_cmd = app.add_subcommand("verify", "run the paper-claim checks");
  verify_cmd->add_option("--claim", verify_claims,
                         "m10, gt, yt, xu, metacyclic, l23, anchepsl, podd, section4, "
                         "onlypsl, anprop (default: all)");

  // estimate
  std::string est_group, est_coset;
  std::uint64_t est_prime = 2, est_samples = 10000;
  bool est_seed_given = false;
  std::uint64_t est_seed = 0;
  auto* est_cmd = app.add_subcommand("estimate", "Monte Carlo p-element proportion estimate");
  auto* est_group_opt = est_cmd->add_option("--group,-g", est_group, "group spec");
  est_cmd->add_option("--coset", est_coset, "coset shorthand KIND:Q")->excludes(est_group_opt);
  est_cmd->add_option("--prime,-p", est_prime, "the prime p")->required();
  est_cmd->add_option("--samples,-n", est_samples, "number of samples");
  est_cmd->add_option("--seed", est_seed, "seed for this estimate (default: root seed)")
      ->each([&](const std::string&) { est_seed_given = true; });

  // snprop
  unsigned snprop_n = 8;
  auto* snprop_cmd =
      app.add_subcommand("snprop", "2-element proportions of S_n / A_n by partition counting");
  snprop_cmd->add_option("--n", snprop_n, "n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream body;  // buffered so usage errors never partially emit
  bool any_check_failed = false;

  try {
    pel::OutputFormat fmt = pel::parse_format(opt.format);

    if (*census_cmd) {
      std::vector<std::pair<std::string, pel::Group>> groups;
      for (const auto& text : census_groups) {
        pel::GroupSpec spec = pel::parse_group_spec(text);
        groups.emplace_back(spec.render(), pel::build_group(spec));
      }
      if (fmt == pel::OutputFormat::csv)
        body << pel::census_line({}, fmt, true) << "\n";
      for (auto& [id, G] : groups)
        body << pel::census_line(pel::p_census(G, census_prime, id, opt.jobs), fmt) << "\n";
    } else if (*coset_cmd) {
      pel::LabeledCoset coset = coset_from_args(coset_kind, coset_q);
      std::string id = coset_kind + ":" + std::to_string(coset_q);
      if (fmt == pel::OutputFormat::csv) body << pel::census_line({}, fmt, true) << "\n";
      body << pel::census_line(pel::coset_p_census(coset, coset_prime, id), fmt) << "\n";
    } else if (*sylow_cmd) {
      pel::GroupSpec spec = pel::parse_group_spec(sylow_group);
      pel::Group G = pel::build_group(spec);
      pel::VerificationOutcome out = pel::sylow_bound_check(G, sylow_prime, spec.render());
      body << pel::outcome_line(out, fmt, opt.timing) << "\n";
      any_check_failed = any_check_failed || !out.pass;
    } else if (*pairs_cmd) {
      pel::GroupSpec spec = pel::parse_group_spec(pairs_group);
      pel::Group G = pel::build_group(spec);
      pel::PairReport report =
          pairs_element.empty()
              ? pel::pair_probability(G, pairs_prime, spec.render())
              : pel::omega_pair_set(G, pel::parse_permutation(pairs_element, G.degree()),
                                    pairs_prime, spec.render());
      if (fmt == pel::OutputFormat::csv) body << pel::pair_line({}, fmt, true) << "\n";
      body << pel::pair_line(report, fmt) << "\n";
    } else if (*baer_cmd) {
      pel::GroupSpec spec = pel::parse_group_spec(baer_group);
      pel::Group G = pel::build_group(spec);
      auto [core, measure] = pel::baer_intersection(G, baer_prime);
      pel::VerificationOutcome out;
      out.claim = "baer";
      out.add_param("group", spec.render());
      out.add_param("p", std::to_string(baer_prime));
      out.add_computed("|O_p|", core.order().str());
      out.add_computed("measure", pel::fraction_string(measure));
      out.relation = "cap_g Omega_p(g,G) = O_p(G)";
      out.pass = true;
      body << pel::outcome_line(out, fmt, opt.timing) << "\n";
    } else if (*gamma_cmd) {
      pel::Group S = pel::build_group(gamma_socle);
      pel::Group over = pel::build_group(gamma_over);
      pel::GammaReport report = pel::gamma_simple(S, over);
      pel::VerificationOutcome out;
      out.claim = "gamma";
      out.add_param("socle", gamma_socle);
      out.add_param("group", gamma_over);
      out.add_computed("outer_max", pel::fraction_string(report.outer_max));
      out.add_computed("socle_ratio", pel::fraction_string(report.identity_ratio));
      for (const auto& [name, ratio] : report.per_coset)
        out.add_computed(name, pel::fraction_string(ratio));
      out.relation = "max over nontrivial cosets of |Omega_2(gS)|/|S|";
      out.pass = true;
      body << pel::outcome_line(out, fmt, opt.timing) << "\n";
    } else if (*tower_cmd) {
      pel::TowerSpec::Family family = tower_family == "gt"  ? pel::TowerSpec::Family::Gt
                                      : tower_family == "yt" ? pel::TowerSpec::Family::Yt
                                      : tower_family == "xu" ? pel::TowerSpec::Family::Xu
                                                             : pel::TowerSpec::Family::metacyclic;
      pel::TowerEvaluation ev = pel::verify_towers(family, tower_depth);
      body << pel::tower_line(ev, fmt, opt.timing) << "\n";
      any_check_failed = any_check_failed || !ev.pass;
    } else if (*verify_cmd) {
      std::vector<pel::VerificationOutcome> outcomes;
      auto want = [&](const std::string& name) {
        if (verify_claims.empty()) return true;
        for (const auto& c : verify_claims)
          if (c == name || c == "all") return true;
        return false;
      };
      if (want("m10")) outcomes.push_back(pel::verify_m10());
      if (want("gt"))
        outcomes.push_back(pel::verify_towers(pel::TowerSpec::Family::Gt, 30).to_outcome());
      if (want("yt"))
        outcomes.push_back(pel::verify_towers(pel::TowerSpec::Family::Yt, 4).to_outcome());
      if (want("xu"))
        outcomes.push_back(pel::verify_towers(pel::TowerSpec::Family::Xu, 8).to_outcome());
      if (want("metacyclic"))
        outcomes.push_back(
            pel::verify_towers(pel::TowerSpec::Family::metacyclic, 6).to_outcome());
      if (want("l23")) outcomes.push_back(pel::verify_l23_corx3());
      if (want("anchepsl")) {
        outcomes.push_back(pel::verify_anchepsl(2));
        outcomes.push_back(pel::verify_anchepsl(4));
      }
      if (want("podd"))
        for (auto& o : pel::verify_podd(pel::load_podd_corpus(opt.data_dir + "/podd_corpus.txt")))
          outcomes.push_back(std::move(o));
      if (want("section4"))
        for (auto& o : pel::verify_local_section4(
                 pel::load_section4_corpus(opt.data_dir + "/section4_corpus.txt")))
          outcomes.push_back(std::move(o));
      if (want("onlypsl"))
        for (auto& o : pel::verify_onlypsl_negatives()) outcomes.push_back(std::move(o));
      if (want("anprop")) outcomes.push_back(pel::verify_an_proportions(16));

      if (outcomes.empty()) throw std::invalid_argument("no such claim");
      if (fmt == pel::OutputFormat::csv)
        body << pel::outcome_line({}, fmt, opt.timing, true) << "\n";
      for (const auto& o : outcomes) {
        body << pel::outcome_line(o, fmt, opt.timing) << "\n";
        any_check_failed = any_check_failed || !o.pass;
      }
    } else if (*est_cmd) {
      std::uint64_t seed = est_seed_given ? est_seed : opt.seed;
      pel::EstimateReport report;
      if (!est_coset.empty()) {
        report = pel::mc_estimate(coset_from_shorthand(est_coset), est_prime, est_samples, seed,
                                  est_coset);
      } else if (!est_group.empty()) {
        pel::GroupSpec spec = pel::parse_group_spec(est_group);
        report = pel::mc_estimate(pel::build_group(spec), est_prime, est_samples, seed,
                                  spec.render());
      } else {
        throw std::invalid_argument("estimate needs --group or --coset");
      }
      if (fmt == pel::OutputFormat::csv) body << pel::estimate_line({}, fmt, true) << "\n";
      body << pel::estimate_line(report, fmt) << "\n";
    } else if (*snprop_cmd) {
      pel::SnProportions props = pel::sn_two_proportion(snprop_n);
      pel::VerificationOutcome out;
      out.claim = "snprop";
      out.add_param("n", std::to_string(snprop_n));
      out.add_computed("symmetric", pel::fraction_string(props.symmetric));
      out.add_computed("alternating", pel::fraction_string(props.alternating));
      out.add_computed("odd_coset", pel::fraction_string(props.odd_coset));
      out.relation = "proportions of permutations with 2-power cycle lengths";
      out.pass = true;
      body << pel::outcome_line(out, fmt, opt.timing) << "\n";
    }
  } catch (const pel::SpecParseError& e) {
    std::cerr << "pel: spec error: " << e.what() << "\n";
    return 2;
  } catch (const pel::CapExceeded& e) {
    std::cerr << "pel: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pel: error: " << e.what() << "\n";
    return 2;
  }

  std::cout << body.str();
  return any_check_failed ? 1 : 0;
}
