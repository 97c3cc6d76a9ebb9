#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "parallel.hpp"
#include "permmob/harness.hpp"
#include "permmob/kernels.hpp"
#include "permmob/symmetry.hpp"
#include "permmob/text.hpp"

namespace permmob {

namespace {

constexpr std::uint64_t kChunk = 5040;

struct ChunkResult {
  std::uint64_t hosts = 0;
  std::uint64_t pairs = 0;
  std::vector<MinimalityHit> hits;
};

std::vector<int> mask_positions(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

void scan_host(std::span<const int> tau, std::span<const std::uint32_t> subsets,
               bool single_only, ChunkResult& out) {
  struct Item {
    std::uint64_t code;
    std::uint32_t mask;
  };
  static thread_local std::vector<Item> items;
  items.clear();
  for (auto s : subsets) items.push_back({kernel::pattern_code(tau, s), s});
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.code < b.code; });
  const auto blocks = kernel::block_masks(tau);
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i + 1;
    while (j < items.size() && items[j].code == items[i].code) ++j;
    if (!single_only || j - i == 1) {
      for (std::size_t t = i; t < j; ++t) {
        if (!kernel::interval_free(blocks, items[t].mask)) continue;
        ++out.pairs;
        const auto mu = kernel::occurrence_mobius(tau, items[t].mask);
        if (mu != 1 && mu != -1)
          out.hits.push_back({Permutation(std::vector<int>(tau.begin(), tau.end())),
                              mask_positions(items[t].mask), mu});
      }
    }
    i = j;
  }
}

void group_hits(MinimalityResult& result) {
  std::sort(result.hits.begin(), result.hits.end());
  std::map<MarkedPermutation, MinimalityClass> classes;
  for (const auto& hit : result.hits) {
    const auto rep = canonical_representative(MarkedPermutation{hit.tau, hit.occurrence});
    auto& cls = classes[rep];
    cls.representative = rep;
    cls.mu = hit.mu;
    ++cls.hits;
  }
  for (auto& [rep, cls] : classes) result.classes.push_back(std::move(cls));
}

}  // namespace

nlohmann::json MinimalityResult::to_json() const {
  nlohmann::json j;
  j["tau_length"] = tau_length;
  j["sigma_length"] = sigma_length;
  j["symmetry_reduction"] = symmetry_reduction;
  j["require_single_occurrence"] = require_single_occurrence;
  j["hosts_examined"] = hosts_examined;
  j["pairs_checked"] = pairs_checked;
  j["hit_count"] = hits.size();
  auto& cj = j["classes"] = nlohmann::json::array();
  for (const auto& c : classes)
    cj.push_back({{"tau", to_string(c.representative.perm)},
                  {"sigma", to_string(pattern_of(c.representative.perm,
                                                 c.representative.occurrence()))},
                  {"occurrence", positions_to_string(c.representative.marked)},
                  {"marked", to_marked_string(c.representative.perm, c.representative.marked)},
                  {"mu", c.mu},
                  {"hits", c.hits}});
  return j;
}

MinimalityResult minimality_search(int tau_length, int sigma_length,
                                   const MinimalityOptions& options) {
  if (tau_length < 1 || tau_length > kernel::kMaxKernelLength)
    throw std::invalid_argument("minimality search needs 1 <= |tau| <= 12");
  if (sigma_length < 1 || sigma_length > tau_length)
    throw std::invalid_argument("sigma length out of range");
  if (options.worker_count < 1) throw std::invalid_argument("worker_count must be at least 1");

  const int n = tau_length;
  const auto subsets = kernel::subsets_of_size(n, sigma_length);
  const std::uint64_t total = kernel::factorial(n);
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;

  auto body = [&](std::size_t c) {
    ChunkResult out;
    auto tau = kernel::nth_permutation(n, c * kChunk);
    const std::uint64_t end = std::min(total, (c + 1) * kChunk);
    for (std::uint64_t index = c * kChunk; index < end; ++index) {
      if (!options.symmetry_reduction || kernel::is_least_image(tau)) {
        ++out.hosts;
        scan_host(tau, subsets, options.require_single_occurrence, out);
      }
      std::next_permutation(tau.begin(), tau.end());
    }
    return out;
  };
  const auto parts = detail::parallel_map<ChunkResult>(static_cast<std::size_t>(chunks),
                                                       options.worker_count, body);
  MinimalityResult result;
  result.tau_length = n;
  result.sigma_length = sigma_length;
  result.symmetry_reduction = options.symmetry_reduction;
  result.require_single_occurrence = options.require_single_occurrence;
  for (const auto& part : parts) {
    result.hosts_examined += part.hosts;
    result.pairs_checked += part.pairs;
    result.hits.insert(result.hits.end(), part.hits.begin(), part.hits.end());
  }
  group_hits(result);
  return result;
}

MinimalityResult minimality_search_reference(int tau_length, int sigma_length,
                                             bool require_single_occurrence) {
  MinimalityResult result;
  result.tau_length = tau_length;
  result.sigma_length = sigma_length;
  result.require_single_occurrence = require_single_occurrence;
  const auto patterns = all_permutations(sigma_length);
  for (const auto& tau : all_permutations(tau_length)) {
    ++result.hosts_examined;
    for (const auto& sigma : patterns) {
      const auto occs = occurrences(sigma, tau);
      if (require_single_occurrence && occs.size() != 1) continue;
      for (const auto& occ : occs) {
        if (pair_has_interval_block_occ(occ, tau)) continue;
        ++result.pairs_checked;
        const auto mu = mobius(build_occurrence_poset(occ, tau));
        if (mu != 1 && mu != -1) result.hits.push_back({tau, occ.positions, mu});
      }
    }
  }
  group_hits(result);
  return result;
}

// -- Counterexamples -------------------------------------------------------

Permutation first_counterexample_tau() { return {2, 5, 1, 7, 3, 10, 4, 6, 9, 8}; }

// The printed host has a trailing repeated 2; dropping it leaves a
// permutation of 1..12.
Permutation second_counterexample_tau() { return {2, 3, 8, 1, 6, 12, 4, 10, 5, 9, 7, 11}; }

VerificationReport reproduce_counterexamples(const CounterexampleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = "counterexamples";
  rep.config = {{"run_search", options.run_search},
                {"search_length", options.search_length},
                {"worker_count", options.worker_count}};

  auto record = [&](const std::string& name, bool ok, const Permutation& sigma,
                    const Permutation& tau, std::string details) {
    rep.check(name, ok, {"", to_string(sigma), to_string(tau), "", std::move(details)});
  };

  {
    const Permutation sigma{3, 2, 1};
    const auto tau = first_counterexample_tau();
    const auto occs = occurrences(sigma, tau);
    const bool unique = occs.size() == 1 && occs[0].positions == std::vector<int>{5, 8, 9};
    record("first_unique_occurrence", unique, sigma, tau,
           std::to_string(occs.size()) + " occurrences");
    record("first_interval_free", !pair_has_interval_block(sigma, tau), sigma, tau,
           "pair has an interval block");
    const auto interval = build_interval(sigma, tau);
    const auto mu = mobius(interval);
    const auto mu_zeta = mobius_via_zeta(interval);
    record("first_mu_zero", mu == 0, sigma, tau, "mu " + std::to_string(mu));
    record("first_mu_zero_zeta", mu_zeta == 0, sigma, tau, "zeta mu " + std::to_string(mu_zeta));
    if (unique) {
      const auto& occ = occs[0];
      const auto mu_occ = mobius(build_occurrence_poset(occ, tau));
      record("first_occurrence_mu_zero", mu_occ == 0, sigma, tau,
             "occurrence mu " + std::to_string(mu_occ));
      std::vector<std::vector<int>> values;
      for (const auto& region : regions(occ, tau)) {
        values.emplace_back();
        for (const auto& letter : region.entries) values.back().push_back(letter.value);
      }
      record("first_complement_regions",
             values == std::vector<std::vector<int>>{{2, 5, 1, 7, 3}, {4, 6}}, sigma, tau,
             "unexpected regions");
      record("first_outside_similar_hypothesis", similar_groups(occ, tau).size() > 1, sigma,
             tau, "similar-letter hypothesis holds");
    }
    rep.details["first"] = {{"sigma", to_string(sigma)}, {"tau", to_string(tau)},
                            {"mu", mu}, {"interval_nodes", interval.size()}};
  }

  {
    const Permutation sigma{2, 3, 4, 1};
    const auto tau = second_counterexample_tau();
    const auto occs = occurrences(sigma, tau);
    const bool unique = occs.size() == 1 && occs[0].positions == std::vector<int>{0, 1, 2, 3};
    record("second_unique_occurrence", unique, sigma, tau,
           std::to_string(occs.size()) + " occurrences");
    record("second_interval_free", !pair_has_interval_block(sigma, tau), sigma, tau,
           "pair has an interval block");
    const auto interval = build_interval(sigma, tau);
    const auto mu = mobius(interval);
    record("second_mu_two", mu == 2, sigma, tau, "mu " + std::to_string(mu));
    std::int64_t mu_zeta = 0;
    if (interval.size() <= kZetaNodeLimit) {
      mu_zeta = mobius_via_zeta(interval);
    } else if (unique) {
      // With a single occurrence the occurrence poset has the same mu; use
      // it for the oracle when the plain interval is too large.
      mu_zeta = mobius_via_zeta(build_occurrence_poset(occs[0], tau));
    }
    record("second_mu_two_zeta", mu_zeta == 2, sigma, tau, "zeta mu " + std::to_string(mu_zeta));
    if (unique) {
      const auto parts = regions(occs[0], tau);
      record("second_single_region", parts.size() == 1 && parts[0].entries.size() == 8, sigma,
             tau, std::to_string(parts.size()) + " regions");
    }
    rep.details["second"] = {{"sigma", to_string(sigma)}, {"tau", to_string(tau)},
                             {"mu", mu}, {"interval_nodes", interval.size()}};
  }

  if (options.run_search) {
    const int n = options.search_length;
    const MinimalityOptions search{true, true, options.worker_count};
    nlohmann::json runs = nlohmann::json::array();
    for (int m = 1; m < n; ++m)
      for (int k = 1; k < m; ++k) {
        const auto r = minimality_search(m, k, search);
        rep.check("no_shorter_counterexample", r.hits.empty(),
                  {"", "", "", "", "length " + std::to_string(m) + " sigma length " +
                                       std::to_string(k) + " has hits"});
      }
    for (int k = 1; k <= 3 && k < n; ++k) {
      const auto r = minimality_search(n, k, search);
      runs.push_back(r.to_json());
      if (k < 3) {
        rep.check("no_counterexample_shorter_sigma", r.hits.empty(),
                  {"", "", "", "", "sigma length " + std::to_string(k) + " has hits"});
        continue;
      }
      const auto expected = canonical_representative(
          MarkedPermutation{first_counterexample_tau(), {5, 8, 9}});
      const bool one = r.classes.size() == 1;
      rep.check("search_single_class", one,
                {"", "", "", "", std::to_string(r.classes.size()) + " classes"});
      if (one) {
        rep.check("search_class_mu_zero", r.classes[0].mu == 0,
                  {"", "", "", "", "mu " + std::to_string(r.classes[0].mu)});
        rep.check("search_class_is_first_counterexample",
                  r.classes[0].representative == expected,
                  {"", "", to_string(r.classes[0].representative.perm),
                   positions_to_string(r.classes[0].representative.marked),
                   "representative differs"});
      }
    }
    rep.details["search"] = runs;
  }
  rep.instances_checked = rep.checks.size();
  rep.finalize();
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace permmob
