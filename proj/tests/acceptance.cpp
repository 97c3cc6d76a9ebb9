// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact (integer equality); time limits are checked alongside.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "permmob/harness.hpp"
#include "permmob/predicates.hpp"
#include "permmob/symmetry.hpp"
#include "permmob/text.hpp"

using namespace permmob;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

int workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit_seconds) {
    out.ok = false;
    out.note = "over the " + std::to_string(limit_seconds) + " s limit";
  }
  if (!out.ok) ++failures;
  std::printf("criterion %d: %s  %s  (%.2f s)%s%s\n", number, out.ok ? "PASS" : "FAIL", title,
              secs, out.ok ? "" : "  -- ", out.note.c_str());
  std::fflush(stdout);
}

std::vector<int> region_values(const Region& r) {
  std::vector<int> v;
  for (const auto& l : r.entries) v.push_back(l.value);
  return v;
}

bool in_same_group(const SimilarGroups& groups, int a, int b) {
  for (const auto& g : groups) {
    bool ha = false, hb = false;
    for (const auto& l : g) {
      ha = ha || l.value == a;
      hb = hb || l.value == b;
    }
    if (ha && hb) return true;
  }
  return false;
}

bool no_failures(const VerificationReport& r, const std::string& check, Outcome& out) {
  const auto it = r.checks.find(check);
  const bool ok = it != r.checks.end() && it->second.evaluated > 0 && it->second.failures == 0;
  out.require(ok, check + (it == r.checks.end() ? " missing"
                                                : " evaluated " + std::to_string(it->second.evaluated) +
                                                      " failures " +
                                                      std::to_string(it->second.failures)));
  return ok;
}

std::string without_config(const VerificationReport& r) {
  auto j = r.to_json(false);
  j.erase("config");
  return j.dump();
}

}  // namespace

int main() {
  const int w = workers();
  std::printf("workers: %d\n", w);

  criterion(1, "published-value regressions", 1.0, [](Outcome& out) {
    out.require(mobius(build_interval(P("1"), P("123"))) == 0, "mu(1,123)");
    out.require(mobius(build_interval(P("12"), P("3412"))) == 1, "mu(12,3412)");
    out.require(mobius(build_occurrence_poset({{0, 1}, 4}, P("3412"))) == 0, "mu(<34>,3412)");
    out.require(count_occurrences(P("231"), P("23541")) == 5, "231 in 23541");
    out.require(count_occurrences(P("123"), P("246153")) == 2, "123 in 246153");

    const auto host = P("74136825");
    std::vector<std::vector<int>> occ_letters;
    for (const auto& o : occurrences(P("1243"), host)) occ_letters.push_back(letters_at(host, o.positions));
    std::sort(occ_letters.begin(), occ_letters.end());
    out.require(occ_letters == std::vector<std::vector<int>>{{1, 3, 6, 5}, {1, 3, 8, 5}},
                "occurrences of 1243");

    const auto blocks_host = P("71342865");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : interval_blocks(blocks_host)) {
      std::vector<int> f;
      for (int p = b.start_pos; p <= b.end_pos; ++p) f.push_back(blocks_host[p]);
      blocks.push_back(f);
    }
    std::sort(blocks.begin(), blocks.end());
    std::vector<std::vector<int>> want_blocks = {
        {3, 4}, {3, 4, 2}, {1, 3, 4, 2}, {6, 5}, {7, 1, 3, 4, 2, 8, 6, 5}};
    std::sort(want_blocks.begin(), want_blocks.end());
    out.require(blocks == want_blocks, "interval blocks of 71342865");

    const auto pv = thm_interval_block_pair(P("2341"), P("162395784"));
    const auto* b = std::get_if<IntervalBlock>(&pv.witness);
    out.require(pv.holds && b && b->low_value == 2 && b->high_value == 3 && b->length() == 2,
                "pair block witness 23");

    out.require(is_separated({{2, 4, 5}, 6}, P("146253")), "<653> separated");
    out.require(!is_separated({{3, 5, 6}, 7}, P("1357264")), "<764> not separated");

    const auto tau = P("357128469");
    const Occurrence o184{{3, 5, 6}, 9};
    out.require(letters_at(tau, o184.positions) == std::vector<int>{1, 8, 4}, "<184>");
    const auto parts = regions(o184, tau);
    out.require(parts.size() == 3 && region_values(parts[0]) == std::vector<int>{3, 5, 7} &&
                    region_values(parts[1]) == std::vector<int>{2} &&
                    region_values(parts[2]) == std::vector<int>{6, 9},
                "regions 357|2|69");
    const auto groups = similar_groups(o184, tau);
    out.require(in_same_group(groups, 5, 7), "5 and 7 similar");
    out.require(!in_same_group(groups, 3, 5), "3 and 5 not similar");

    out.require(is_boolean(build_interval(P("123"), P("1324"))), "[123,1324] boolean");
    out.require(is_boolean(build_interval(P("12"), P("3412"))), "[12,3412] boolean");
  });

  criterion(2, "counterexample reproduction", 60.0, [](Outcome& out) {
    const auto r = reproduce_counterexamples({false, 10, 1});
    for (const char* name :
         {"first_unique_occurrence", "first_interval_free", "first_mu_zero", "first_mu_zero_zeta",
          "first_occurrence_mu_zero", "second_unique_occurrence", "second_single_region",
          "second_mu_two", "second_mu_two_zeta"})
      no_failures(r, name, out);
    const auto t1 = first_counterexample_tau();
    const auto occ = occurrences(P("321"), t1);
    out.require(occ.size() == 1 && letters_at(t1, occ[0].positions) == std::vector<int>{10, 9, 8},
                "<10,9,8>");
    const auto t2 = second_counterexample_tau();
    const auto occ2 = occurrences(P("2341"), t2);
    out.require(occ2.size() == 1 &&
                    letters_at(t2, occ2[0].positions) == std::vector<int>{2, 3, 8, 1},
                "<2381>");
    out.require(r.passed(), "report has violations");
  });

  criterion(3, "minimality search |sigma| = 3, |tau| = 10", 30 * 60.0, [w](Outcome& out) {
    const auto r = minimality_search(10, 3, {true, true, w});
    std::printf("  hosts %llu, interval-free single-occurrence pairs %llu, hits %zu, classes %zu\n",
                static_cast<unsigned long long>(r.hosts_examined),
                static_cast<unsigned long long>(r.pairs_checked), r.hits.size(), r.classes.size());
    out.require(r.classes.size() == 1, std::to_string(r.classes.size()) + " classes");
    if (r.classes.size() != 1) return;
    out.require(r.classes[0].mu == 0, "class mu " + std::to_string(r.classes[0].mu));
    const auto expected =
        canonical_representative(MarkedPermutation{first_counterexample_tau(), {5, 8, 9}});
    out.require(r.classes[0].representative == expected, "representative is not the first example");
  });

  VerificationReport theorems;
  criterion(4, "theorem suites, |tau| <= 7 exhaustive", 30 * 60.0, [&](Outcome& out) {
    SweepConfig cfg;
    cfg.max_tau_length = 7;
    cfg.worker_count = w;
    theorems = sweep_theorems(cfg);
    std::printf("  hosts %llu, plain pairs %llu, occurrence pairs %llu, skipped %llu\n",
                static_cast<unsigned long long>(theorems.instances_checked),
                static_cast<unsigned long long>(theorems.counters["plain_pairs"]),
                static_cast<unsigned long long>(theorems.counters["occurrence_pairs"]),
                static_cast<unsigned long long>(theorems.skipped));
    for (const char* name :
         {"occurrence_block_mu_zero", "pair_block_mu_zero", "boolean_iff_separated", "separated_sign",
          "single_group_rank_property", "sign_prediction_occurrence", "sign_prediction_pair",
          "interval_free_removed_mu_zero"})
      no_failures(theorems, name, out);
    out.require(theorems.skipped == 0, "intervals skipped");
    out.require(theorems.passed(), std::to_string(theorems.violations.size()) + " violations");
  });

  criterion(5, "recursion equals zeta inversion", 10 * 60.0, [&](Outcome& out) {
    const auto& c = theorems.checks;
    out.require(c.count("zeta_oracle_plain") &&
                    c.at("zeta_oracle_plain").evaluated == theorems.counters["plain_pairs"] &&
                    c.at("zeta_oracle_plain").failures == 0,
                "plain intervals of criterion 4");
    out.require(c.count("zeta_oracle_occurrence") &&
                    c.at("zeta_oracle_occurrence").evaluated ==
                        theorems.counters["occurrence_pairs"] &&
                    c.at("zeta_oracle_occurrence").failures == 0,
                "occurrence posets of criterion 4");
    out.require(theorems.counters["plain_pairs"] > 0, "criterion 4 did not run");
    std::mt19937_64 rng(20240601);
    int checked = 0;
    while (checked < 1000) {
      const int n = 1 + static_cast<int>(rng() % 9);
      const auto tau = oracle::random_permutation(n, rng);
      const auto sigma = oracle::standardize(oracle::restrict_to(tau, oracle::random_mask(n, rng)));
      const auto dag = build_interval(Permutation(sigma), Permutation(tau));
      if (dag.size() > kZetaNodeLimit) continue;
      out.require(mobius(dag) == mobius_via_zeta(dag),
                  "random pair " + to_string(Permutation(sigma)) + " " + to_string(Permutation(tau)));
      ++checked;
    }
  });

  criterion(6, "conjecture sweeps", 30 * 60.0, [w](Outcome& out) {
    SweepConfig cfg;
    cfg.worker_count = w;
    const auto c1 = sweep_conjecture_1(9, cfg);
    out.require(c1.passed(), "conjecture 5.1 violations");
    out.require(c1.details["avoider_counts"] ==
                    nlohmann::json({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}),
                "avoider counts");
    out.require(c1.instances_checked == 6917 && c1.skipped == 0, "conjecture 5.1 instance count");
    const auto c2 = sweep_conjecture_2(8, {}, cfg);
    out.require(c2.passed(), "conjecture 5.2 violations");
    out.require(c2.details["classes"]["avoid_132"]["hosts"] == 2055, "conjecture 5.2 host count");
    no_failures(c2, "mu_bounded_by_occurrences", out);
    no_failures(c2, "class_verdicts_equal", out);
    const auto catalan = catalan_numbers(8);
    out.require(catalan == std::vector<std::uint64_t>{1, 1, 2, 5, 14, 42, 132, 429, 1430},
                "catalan numbers");
    for (int n = 1; n <= 7; ++n) {
      std::size_t filtered = 0;
      for (const auto& p : all_permutations(n))
        filtered += oracle::avoids({p.letters().begin(), p.letters().end()}, {1, 3, 2}) ? 1 : 0;
      out.require(filtered == catalan[n] && generate_avoiders_132(n).size() == filtered,
                  "filter agreement at n=" + std::to_string(n));
    }
  });

  criterion(7, "symmetry audit |tau| <= 6", 10 * 60.0, [w](Outcome& out) {
    SweepConfig cfg;
    cfg.max_tau_length = 6;
    cfg.worker_count = w;
    const auto r = symmetry_audit(cfg);
    no_failures(r, "mu_symmetry_invariant", out);
    out.require(r.skipped == 0, "skipped hosts");
  });

  criterion(8, "round trip, output stability, cache transparency", 30 * 60.0,
            [&](Outcome& out) {
              std::mt19937_64 rng(50);
              for (int i = 0; i < 10000; ++i) {
                const int n = 1 + static_cast<int>(rng() % 50);
                const Permutation p(oracle::random_permutation(n, rng));
                out.require(parse_permutation(to_string(p)) == p, "round trip " + to_string(p));
              }
              const auto t1 = first_counterexample_tau();
              out.require(to_dot(build_interval(P("321"), t1)) ==
                              to_dot(build_interval(P("321"), t1)),
                          "DOT differs between runs");
              SweepConfig small;
              small.max_tau_length = 6;
              small.worker_count = w;
              out.require(sweep_theorems(small).to_json(false).dump() ==
                              sweep_theorems(small).to_json(false).dump(),
                          "report differs between runs");

              const auto path = std::filesystem::temp_directory_path() / "permmob_acceptance.tsv";
              std::filesystem::remove(path);
              MuCache cache(path);
              SweepConfig cfg;
              cfg.max_tau_length = 7;
              cfg.worker_count = w;
              cfg.cache = &cache;
              const auto cold = sweep_theorems(cfg);
              const auto warm = sweep_theorems(cfg);
              out.require(cache.hits() > 0 && cache.misses() > 0, "cache unused");
              out.require(without_config(cold) == without_config(theorems), "cold cache differs");
              out.require(without_config(warm) == without_config(theorems), "warm cache differs");
              std::filesystem::remove(path);
            });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
