#include "permmob/predicates.hpp"

#include "permmob/text.hpp"

namespace permmob {

namespace {

std::vector<bool> used_positions(const Occurrence& occ, int n) {
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int p : occ.positions) used[p] = true;
  return used;
}

nlohmann::json letter_json(const PositionedLetter& l) {
  return {{"position", l.position + 1}, {"value", l.value}};
}

}  // namespace

PredicateVerdict thm_interval_block_occ(const Occurrence& occ, const Permutation& tau) {
  PredicateVerdict v{"interval_block_occurrence", false, {}};
  const auto blocks = interval_blocks(tau);
  if (const auto* b = first_disjoint_block(blocks, used_positions(occ, tau.size()))) {
    v.holds = true;
    v.witness = *b;
  }
  return v;
}

PredicateVerdict thm_interval_block_pair(const Permutation& sigma, const Permutation& tau) {
  PredicateVerdict v{"interval_block_pair", false, {}};
  std::vector<bool> used(static_cast<std::size_t>(tau.size()), false);
  bool any = false;
  for_each_occurrence(sigma, tau, [&](std::span<const int> pos) {
    any = true;
    for (int p : pos) used[p] = true;
    return true;
  });
  if (!any) throw std::invalid_argument("pattern is not contained in host");
  const auto blocks = interval_blocks(tau);
  if (const auto* b = first_disjoint_block(blocks, used)) {
    v.holds = true;
    v.witness = *b;
  }
  return v;
}

PredicateVerdict thm_separated(const Occurrence& occ, const Permutation& tau) {
  PredicateVerdict v{"separated", true, {}};
  if (auto bad = first_unseparated_pair(occ, tau)) {
    v.holds = false;
    v.witness = *bad;
  }
  return v;
}

PredicateVerdict thm_similar_hypothesis(const Occurrence& occ, const Permutation& tau) {
  auto groups = similar_groups(occ, tau);
  const bool holds = groups.size() <= 1;
  return {"similar_hypothesis", holds, std::move(groups)};
}

std::optional<int> cor_sign_prediction(const Occurrence& occ, const Permutation& tau) {
  if (occ.size() >= tau.size()) return std::nullopt;
  if (!thm_similar_hypothesis(occ, tau).holds) return std::nullopt;
  if (pair_has_interval_block_occ(occ, tau)) return std::nullopt;
  return (tau.size() - occ.size()) % 2 == 0 ? 1 : -1;
}

nlohmann::json witness_to_json(const Witness& w) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(const IntervalBlock& b) const {
      return {{"kind", "block"},
              {"start", b.start_pos + 1},
              {"end", b.end_pos + 1},
              {"low", b.low_value},
              {"high", b.high_value}};
    }
    nlohmann::json operator()(const UnseparatedPair& p) const {
      return {{"kind", "unseparated_pair"},
              {"x", letter_json(p.low)},
              {"y", letter_json(p.high)},
              {"region", p.region + 1}};
    }
    nlohmann::json operator()(const SimilarGroups& groups) const {
      auto arr = nlohmann::json::array();
      for (const auto& g : groups) {
        auto values = nlohmann::json::array();
        for (const auto& l : g) values.push_back(l.value);
        arr.push_back(values);
      }
      return {{"kind", "similar_groups"}, {"groups", arr}};
    }
  };
  return std::visit(Visitor{}, w);
}

nlohmann::json verdict_to_json(const PredicateVerdict& v, const VerdictContext& ctx) {
  nlohmann::json j;
  j["predicate"] = v.name;
  if (ctx.sigma) j["sigma"] = to_string(*ctx.sigma);
  if (ctx.tau) j["tau"] = to_string(*ctx.tau);
  if (ctx.occurrence) j["occurrence_positions"] = positions_to_string(ctx.occurrence->positions);
  j["holds"] = v.holds;
  j["witness"] = witness_to_json(v.witness);
  if (ctx.mu) j["mu"] = *ctx.mu;
  if (ctx.prediction) j["prediction"] = *ctx.prediction;
  return j;
}

}  // namespace permmob
