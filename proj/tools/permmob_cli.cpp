// permmob: Möbius function computations on the permutation pattern poset.
//
//   permmob mu 12 3412 [--occurrence 1,2] [--emit-dot out.dot] [--use-cache]
//   permmob occurrences 1243 74136825
//   permmob predicates 2341 162395784
//   permmob interval 123 1324
//   permmob verify theorems --max-n 6 --workers 4 --json report.json
//
// Exit codes: 0 ok / pass, 1 violations, 2 usage or input error, 3 node
// budget exceeded (verify: only with --strict).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "permmob/harness.hpp"
#include "permmob/mu_cache.hpp"
#include "permmob/poset.hpp"
#include "permmob/predicates.hpp"
#include "permmob/text.hpp"

using namespace permmob;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string sigma;
  std::string tau;
  std::string occurrence;
  std::string emit_dot;
  std::string output;
  bool use_cache = false;
  std::string cache_path = "permmob-cache.tsv";
  std::size_t node_budget = kDefaultNodeBudget;

  std::string suite;
  int min_n = 1;
  int max_n = 0;  // 0: suite default
  std::vector<int> sigma_lengths;
  std::string avoid;
  int workers = 1;
  bool strict = false;
  bool symmetry_reduction = false;
  bool no_zeta = false;
  bool no_search = false;
  bool omit_elapsed = false;
  int search_length = 10;
  std::string json_path;
  std::string violations_path;
};

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct Inputs {
  Permutation sigma;
  Permutation tau;
  std::optional<Occurrence> occurrence;
};

Inputs read_inputs(const Options& o) {
  Inputs in{parse_permutation(o.sigma), parse_permutation(o.tau), std::nullopt};
  if (!o.occurrence.empty()) {
    Occurrence occ{parse_positions(o.occurrence), in.tau.size()};
    if (validate_occurrence(in.tau, occ) != in.sigma)
      throw std::invalid_argument("positions " + o.occurrence + " do not form an occurrence of " +
                                  to_string(in.sigma));
    in.occurrence = std::move(occ);
  }
  return in;
}

IntervalDag build(const Inputs& in, std::size_t budget) {
  return in.occurrence ? build_occurrence_poset(*in.occurrence, in.tau, budget)
                       : build_interval(in.sigma, in.tau, budget);
}

int cmd_mu(const Options& o) {
  const auto in = read_inputs(o);
  const bool dot = !o.emit_dot.empty();
  std::int64_t mu = 0;
  if (o.use_cache && !in.occurrence && !dot) {
    MuCache cache(o.cache_path);
    if (cache.recovered_from_corruption())
      std::cerr << "warning: cache " << o.cache_path << " was corrupt and has been rewritten\n";
    mu = contains(in.sigma, in.tau)
             ? cache.get_or_compute(in.sigma, in.tau,
                                    [&] {
                                      const auto dag = build(in, o.node_budget);
                                      return MuResult{mobius(dag), dag.size()};
                                    })
             : 0;
  } else {
    const auto dag = build(in, o.node_budget);
    mu = mobius(dag);
    if (dot && !write_file(o.emit_dot, to_dot(dag))) {
      std::cerr << "cannot write " << o.emit_dot << "\n";
      return kExitUsage;
    }
  }
  std::cout << mu << "\n";
  return 0;
}

int cmd_occurrences(const Options& o) {
  const auto sigma = parse_permutation(o.sigma);
  const auto tau = parse_permutation(o.tau);
  for (const auto& occ : occurrences(sigma, tau)) {
    const auto letters = letters_at(tau, occ.positions);
    std::cout << "{" << positions_to_string(occ.positions) << "} "
              << to_marked_string(tau, occ.positions) << " ";
    for (std::size_t i = 0; i < letters.size(); ++i)
      std::cout << (i && tau.size() > 9 ? "," : "") << letters[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_predicates(const Options& o) {
  const auto sigma = parse_permutation(o.sigma);
  const auto tau = parse_permutation(o.tau);
  if (!contains(sigma, tau)) {
    std::cerr << to_string(sigma) << " is not contained in " << to_string(tau) << "\n";
    return kExitUsage;
  }
  const auto mu_pair = mobius(build_interval(sigma, tau, o.node_budget));
  VerdictContext pair_ctx{&sigma, &tau, nullptr, mu_pair, std::nullopt};
  std::cout << verdict_to_json(thm_interval_block_pair(sigma, tau), pair_ctx).dump() << "\n";

  for (const auto& occ : occurrences(sigma, tau)) {
    const auto mu = mobius(build_occurrence_poset(occ, tau, o.node_budget));
    const auto prediction = cor_sign_prediction(occ, tau);
    VerdictContext ctx{&sigma, &tau, &occ, mu, prediction};

    nlohmann::json parts = nlohmann::json::array();
    for (const auto& region : regions(occ, tau)) {
      nlohmann::json values = nlohmann::json::array();
      for (const auto& letter : region.entries) values.push_back(letter.value);
      parts.push_back(values);
    }
    nlohmann::json layout = {{"predicate", "regions"},
                             {"sigma", to_string(sigma)},
                             {"tau", to_string(tau)},
                             {"occurrence_positions", positions_to_string(occ.positions)},
                             {"marked", to_marked_string(tau, occ.positions)},
                             {"regions", parts}};
    std::cout << layout.dump() << "\n";
    for (const auto& v : {thm_interval_block_occ(occ, tau), thm_separated(occ, tau),
                          thm_similar_hypothesis(occ, tau)})
      std::cout << verdict_to_json(v, ctx).dump() << "\n";
  }
  return 0;
}

int cmd_interval(const Options& o) {
  const auto dag = build(read_inputs(o), o.node_budget);
  const auto dot = to_dot(dag);
  if (o.output.empty()) {
    std::cout << dot;
  } else if (!write_file(o.output, dot)) {
    std::cerr << "cannot write " << o.output << "\n";
    return kExitUsage;
  }
  return 0;
}

int cmd_verify(const Options& o) {
  std::unique_ptr<MuCache> cache;
  if (o.use_cache) cache = std::make_unique<MuCache>(o.cache_path);

  SweepConfig cfg;
  cfg.min_tau_length = o.min_n;
  cfg.sigma_lengths = o.sigma_lengths;
  cfg.worker_count = o.workers;
  cfg.node_budget = o.node_budget;
  cfg.symmetry_reduction = o.symmetry_reduction;
  cfg.zeta_oracle = !o.no_zeta;
  cfg.cache = cache.get();
  if (!o.avoid.empty()) cfg.pattern_class = parse_pattern_class(o.avoid);

  VerificationReport report;
  if (o.suite == "theorems") {
    cfg.max_tau_length = o.max_n > 0 ? o.max_n : 7;
    report = sweep_theorems(cfg);
  } else if (o.suite == "conjecture1") {
    report = sweep_conjecture_1(o.max_n > 0 ? o.max_n : 9, cfg);
  } else if (o.suite == "conjecture2") {
    report = sweep_conjecture_2(o.max_n > 0 ? o.max_n : 8, o.sigma_lengths, cfg);
  } else if (o.suite == "symmetry") {
    cfg.max_tau_length = o.max_n > 0 ? o.max_n : 6;
    report = symmetry_audit(cfg);
  } else if (o.suite == "counterexamples") {
    report = reproduce_counterexamples({!o.no_search, o.search_length, o.workers});
  }

  const auto json = report.to_json(!o.omit_elapsed).dump(2) + "\n";
  if (o.json_path.empty()) {
    std::cout << json;
  } else {
    if (!write_file(o.json_path, json)) {
      std::cerr << "cannot write " << o.json_path << "\n";
      return kExitUsage;
    }
    std::cout << report.suite << ": " << (report.passed() ? "pass" : "FAIL") << ", "
              << report.instances_checked << " instances, " << report.skipped << " skipped, "
              << report.violations.size() << " violations\n";
  }
  if (!o.violations_path.empty() && !write_file(o.violations_path, report.violations_jsonl())) {
    std::cerr << "cannot write " << o.violations_path << "\n";
    return kExitUsage;
  }
  if (!report.passed()) return kExitViolation;
  if (o.strict && report.skipped > 0) return kExitBudget;
  return 0;
}

void add_pair(CLI::App* cmd, Options& o) {
  cmd->add_option("sigma", o.sigma, "pattern, e.g. 12 or 3,2,1")->required();
  cmd->add_option("tau", o.tau, "host permutation")->required();
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--node-budget", o.node_budget, "maximum interval size")
      ->envname("PERMMOB_NODE_BUDGET");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Möbius function of the permutation pattern poset"};
  app.require_subcommand(1);
  Options o;

  auto* mu = app.add_subcommand("mu", "print mu(sigma, tau) or mu(<sigma>, tau)");
  add_pair(mu, o);
  mu->add_option("--occurrence", o.occurrence, "one-based positions of a fixed occurrence");
  mu->add_option("--emit-dot", o.emit_dot, "write the interval as DOT");
  mu->add_flag("--use-cache", o.use_cache, "read and write the mu cache")
      ->envname("PERMMOB_USE_CACHE");
  mu->add_option("--cache-path", o.cache_path)->envname("PERMMOB_CACHE_PATH");
  add_budget(mu, o);

  auto* occ = app.add_subcommand("occurrences", "list occurrences of sigma in tau");
  add_pair(occ, o);

  auto* pred = app.add_subcommand("predicates", "JSON verdicts for every occurrence");
  add_pair(pred, o);
  add_budget(pred, o);

  auto* interval = app.add_subcommand("interval", "DOT dump of [sigma, tau]");
  add_pair(interval, o);
  interval->add_option("--occurrence", o.occurrence, "one-based positions of a fixed occurrence");
  interval->add_option("-o,--output", o.output, "file instead of stdout");
  add_budget(interval, o);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"theorems", "conjecture1", "conjecture2", "counterexamples",
                             "symmetry"}));
  verify->add_option("--min-n", o.min_n, "shortest host")->envname("PERMMOB_MIN_N");
  verify->add_option("--max-n", o.max_n, "longest host")->envname("PERMMOB_MAX_N");
  verify->add_option("--sigma-len", o.sigma_lengths, "pattern lengths (repeatable)")
      ->delimiter(',')
      ->envname("PERMMOB_SIGMA_LEN");
  verify->add_option("--avoid", o.avoid, "restrict hosts to avoiders of 132, 231, 213 or 312")
      ->envname("PERMMOB_AVOID");
  verify->add_option("--workers", o.workers, "OpenMP threads")
      ->check(CLI::PositiveNumber)
      ->envname("PERMMOB_WORKERS");
  verify->add_flag("--strict", o.strict, "exit 3 when intervals were skipped")
      ->envname("PERMMOB_STRICT");
  verify->add_flag("--symmetry-reduction", o.symmetry_reduction,
                   "one host per symmetry class");
  verify->add_flag("--no-zeta", o.no_zeta, "skip the zeta-matrix oracle");
  verify->add_flag("--no-search", o.no_search, "counterexamples: skip the exhaustive search");
  verify->add_option("--search-length", o.search_length, "counterexamples: host length");
  verify->add_flag("--omit-elapsed", o.omit_elapsed, "leave wall time out of the report");
  verify->add_option("--json", o.json_path, "write the report here")->envname("PERMMOB_JSON");
  verify->add_option("--violations", o.violations_path, "write violations as JSON lines");
  verify->add_flag("--use-cache", o.use_cache)->envname("PERMMOB_USE_CACHE");
  verify->add_option("--cache-path", o.cache_path)->envname("PERMMOB_CACHE_PATH");
  add_budget(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*mu) return cmd_mu(o);
    if (*occ) return cmd_occurrences(o);
    if (*pred) return cmd_predicates(o);
    if (*interval) return cmd_interval(o);
    if (*verify) return cmd_verify(o);
  } catch (const NodeBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
