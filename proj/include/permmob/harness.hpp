#pragma once

// Exhaustive sweeps over permutations that check each structural result
// against computed Möbius values, plus the conjecture sweeps, the
// counterexample reproduction and the minimality search.
//
// Every sweep splits its host permutations into independent instances and
// runs them through an OpenMP loop (`worker_count` threads); results are
// merged in host order, so reports do not depend on the worker count.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "permmob/mu_cache.hpp"
#include "permmob/permutation.hpp"
#include "permmob/poset.hpp"

namespace permmob {

enum class PatternClass { all, avoid_132, avoid_231, avoid_213, avoid_312 };

std::string to_string(PatternClass c);
PatternClass parse_pattern_class(const std::string& text);

struct SweepConfig {
  int min_tau_length = 1;
  int max_tau_length = 7;
  std::vector<int> sigma_lengths;  // empty means every length
  PatternClass pattern_class = PatternClass::all;
  bool symmetry_reduction = false;
  int worker_count = 1;
  std::size_t node_budget = kDefaultNodeBudget;
  bool zeta_oracle = true;
  MuCache* cache = nullptr;

  bool wants_sigma_length(int k) const;
  /// Throws std::invalid_argument when the configuration is inconsistent.
  void validate() const;
  nlohmann::json to_json() const;
};

struct Violation {
  std::string check;
  std::string sigma;
  std::string tau;
  std::string occurrence;  // one-based positions, empty for plain intervals
  std::string details;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct CheckStats {
  std::uint64_t evaluated = 0;  // instances where the premise held
  std::uint64_t failures = 0;
};

/// family -> rank (or length) -> mu -> count
using MuHistograms = std::map<std::string, std::map<int, std::map<std::int64_t, std::uint64_t>>>;

struct VerificationReport {
  std::string suite;
  nlohmann::json config;
  std::uint64_t instances_checked = 0;
  std::uint64_t skipped = 0;
  std::map<std::string, CheckStats> checks;
  std::vector<Violation> violations;
  std::optional<std::int64_t> min_mu;
  std::optional<std::int64_t> max_mu;
  MuHistograms histograms;
  std::map<std::string, std::uint64_t> counters;  // merged additively
  nlohmann::json details = nlohmann::json::object();
  double elapsed_seconds = 0.0;

  bool passed() const { return violations.empty(); }
  std::uint64_t total_enumerated() const { return instances_checked + skipped; }

  /// Counts one premise evaluation; records a violation when `ok` is false.
  void check(const std::string& name, bool ok, Violation v);
  /// Registers a check name so it appears even if its premise never held.
  void declare(const std::string& name);
  void observe_mu(const std::string& family, int rank, std::int64_t mu);

  /// Adds counts, violations, histograms and counters; `details` are not
  /// merged.
  void merge(const VerificationReport& other);
  /// Sorts violations so the report is independent of evaluation order.
  void finalize();

  nlohmann::json to_json(bool include_elapsed = true) const;
  /// One JSON object per line.
  std::string violations_jsonl() const;
};

/// Host permutations for a sweep: every length in range, filtered by
/// pattern class and, when requested, to symmetry-class representatives.
std::vector<Permutation> sweep_hosts(const SweepConfig& config);

/// Checks interval-block vanishing (occurrence and pair forms), boolean iff
/// separated with the sign, rank property under the similar-letter
/// hypothesis, the sign prediction, the removal remark and both parts of
/// the rank-property lemma, plus engine invariants (oracle agreement,
/// zero sum, gradedness, single-occurrence collapse).
VerificationReport sweep_theorems(const SweepConfig& config);

/// The same per-host work without OpenMP; kept as the reference.
VerificationReport sweep_theorems_serial(const SweepConfig& config);

/// mu(1, tau) in {-1, 0, 1} for every 132-avoider up to max_n.
VerificationReport sweep_conjecture_1(int max_n, const SweepConfig& config);

/// |mu(sigma, tau)| <= occurrences of sigma in tau for all sigma and all
/// 132-avoiders tau up to max_n; repeated for the 231, 213 and 312 classes,
/// whose per-class summaries must coincide.
VerificationReport sweep_conjecture_2(int max_n, const std::vector<int>& sigma_lengths,
                                      const SweepConfig& config);

/// mu(sigma, tau) = mu(g sigma, g tau) for all eight symmetries g and all
/// sigma <= tau with |tau| in the configured range.
VerificationReport symmetry_audit(const SweepConfig& config);

// -- Counterexamples and the minimality search ---------------------------

/// (tau, occurrence) pairs where sigma occurs once, the pair is interval
/// free, and mu is not +-1.
struct MinimalityHit {
  Permutation tau;
  std::vector<int> occurrence;  // zero-based positions
  std::int64_t mu = 0;
  friend auto operator<=>(const MinimalityHit&, const MinimalityHit&) = default;
};

struct MinimalityClass {
  MarkedPermutation representative;
  std::int64_t mu = 0;
  std::uint64_t hits = 0;  // hits found in this class
};

struct MinimalityResult {
  int tau_length = 0;
  int sigma_length = 0;
  bool symmetry_reduction = false;
  bool require_single_occurrence = true;
  std::uint64_t hosts_examined = 0;
  std::uint64_t pairs_checked = 0;  // pairs meeting the filters
  std::vector<MinimalityHit> hits;  // sorted
  std::vector<MinimalityClass> classes;  // by representative

  nlohmann::json to_json() const;
};

struct MinimalityOptions {
  bool symmetry_reduction = true;
  bool require_single_occurrence = true;
  int worker_count = 1;
};

/// Bitmask kernel, OpenMP over host chunks. Hosts up to 12 letters.
MinimalityResult minimality_search(int tau_length, int sigma_length,
                                   const MinimalityOptions& options);

/// Generic engine path (occurrences + occurrence posets), single threaded,
/// no symmetry reduction.
MinimalityResult minimality_search_reference(int tau_length, int sigma_length,
                                             bool require_single_occurrence = true);

struct CounterexampleOptions {
  bool run_search = true;
  int search_length = 10;
  int worker_count = 1;
};

/// Both explicit counterexamples, the search at `search_length` for
/// |sigma| <= 3, and the absence of counterexamples at shorter lengths.
VerificationReport reproduce_counterexamples(const CounterexampleOptions& options);

/// The length-10 counterexample host and the corrected length-12 host.
Permutation first_counterexample_tau();
Permutation second_counterexample_tau();

/// Catalan numbers C_0..C_n.
std::vector<std::uint64_t> catalan_numbers(int n);

}  // namespace permmob
