#pragma once

// Named decision procedures for the hypotheses of the interval-block,
// boolean, and rank-property results, each returning the evidence behind
// its answer.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "permmob/permutation.hpp"

namespace permmob {

using SimilarGroups = std::vector<std::vector<PositionedLetter>>;

using Witness = std::variant<std::monostate, IntervalBlock, UnseparatedPair, SimilarGroups>;

struct PredicateVerdict {
  std::string name;
  bool holds = false;
  Witness witness;
};

/// The pair (<sigma>, tau) has an interval block; witness is the first
/// block disjoint from the occurrence.
PredicateVerdict thm_interval_block_occ(const Occurrence& occ, const Permutation& tau);

/// The pair (sigma, tau) has an interval block. Throws std::invalid_argument
/// when sigma is not contained in tau.
PredicateVerdict thm_interval_block_pair(const Permutation& sigma, const Permutation& tau);

/// (<sigma>, tau) is separated; on failure the witness is the first
/// unseparated pair.
PredicateVerdict thm_separated(const Occurrence& occ, const Permutation& tau);

/// At most one maximal group of similar letters; the witness lists them.
PredicateVerdict thm_similar_hypothesis(const Occurrence& occ, const Permutation& tau);

/// (-1)^(n-k) when the similar-letter hypothesis holds and the pair is
/// interval free, otherwise no prediction.
std::optional<int> cor_sign_prediction(const Occurrence& occ, const Permutation& tau);

/// Extra fields attached to a serialised verdict.
struct VerdictContext {
  const Permutation* sigma = nullptr;
  const Permutation* tau = nullptr;
  const Occurrence* occurrence = nullptr;
  std::optional<std::int64_t> mu;
  std::optional<int> prediction;
};

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json verdict_to_json(const PredicateVerdict& v, const VerdictContext& ctx);

}  // namespace permmob
