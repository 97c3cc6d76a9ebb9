#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "permmob/poset.hpp"
#include "permmob/predicates.hpp"
#include "permmob/text.hpp"

using namespace permmob;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

}  // namespace

TEST_CASE("pair block verdict carries the block") {
  const auto tau = P("162395784");
  const auto v = thm_interval_block_pair(P("2341"), tau);
  CHECK(v.name == "interval_block_pair");
  CHECK(v.holds);
  const auto* b = std::get_if<IntervalBlock>(&v.witness);
  REQUIRE(b);
  CHECK(tau[b->start_pos] == 2);
  CHECK(tau[b->end_pos] == 3);
  CHECK(b->low_value == 2);
  CHECK(b->high_value == 3);
  CHECK_THROWS_AS(thm_interval_block_pair(P("21"), P("12")), std::invalid_argument);
}

TEST_CASE("occurrence block verdict") {
  const auto tau = P("3412");
  const auto blocked = thm_interval_block_occ({{0, 1}, 4}, tau);
  CHECK(blocked.holds);
  const auto* b = std::get_if<IntervalBlock>(&blocked.witness);
  REQUIRE(b);
  CHECK(b->start_pos == 2);
  CHECK(b->end_pos == 3);
  CHECK(thm_interval_block_occ({{2, 3}, 4}, tau).holds);
  const auto free = thm_interval_block_occ({{0, 1}, 4}, P("2413"));
  CHECK_FALSE(free.holds);
  CHECK(std::holds_alternative<std::monostate>(free.witness));
}

TEST_CASE("separation verdicts") {
  CHECK(thm_separated({{2, 4, 5}, 6}, P("146253")).holds);
  const auto v = thm_separated({{3, 5, 6}, 7}, P("1357264"));
  CHECK_FALSE(v.holds);
  const auto* pair = std::get_if<UnseparatedPair>(&v.witness);
  REQUIRE(pair);
  CHECK(pair->low.value == 1);
  CHECK(pair->high.value == 3);
}

TEST_CASE("similar-letter hypothesis") {
  const auto tau = P("357128469");
  const Occurrence o184{{3, 5, 6}, 9};
  const auto v = thm_similar_hypothesis(o184, tau);
  const auto* groups = std::get_if<SimilarGroups>(&v.witness);
  REQUIRE(groups);
  CHECK(v.holds == (groups->size() <= 1));

  // The first counterexample falls outside the hypothesis.
  const auto t1 = P("2,5,1,7,3,10,4,6,9,8");
  CHECK_FALSE(thm_similar_hypothesis({{5, 8, 9}, 10}, t1).holds);
  CHECK_FALSE(cor_sign_prediction({{5, 8, 9}, 10}, t1).has_value());
}

TEST_CASE("sign prediction") {
  // <653> in 146253 is separated and interval free: rank 3 gives -1.
  const Occurrence occ{{2, 4, 5}, 6};
  const auto tau = P("146253");
  const auto p = cor_sign_prediction(occ, tau);
  REQUIRE_FALSE(pair_has_interval_block_occ(occ, tau));
  REQUIRE(p);
  CHECK(*p == -1);
  CHECK(mobius(build_occurrence_poset(occ, tau)) == -1);
  // No prediction with k = n.
  CHECK_FALSE(cor_sign_prediction({{0, 1}, 2}, P("21")).has_value());
  // No prediction with a disjoint block.
  CHECK_FALSE(cor_sign_prediction({{0, 1}, 4}, P("3412")).has_value());
}

TEST_CASE("verdict JSON") {
  const auto sigma = P("2341");
  const auto tau = P("162395784");
  const auto v = thm_interval_block_pair(sigma, tau);
  const auto j = verdict_to_json(v, {&sigma, &tau, nullptr, 0, std::nullopt});
  CHECK(j["predicate"] == "interval_block_pair");
  CHECK(j["holds"] == true);
  CHECK(j["sigma"] == "2341");
  CHECK(j["witness"]["start"] == 3);
  CHECK(j["witness"]["end"] == 4);
  CHECK(j["mu"] == 0);
  CHECK_FALSE(j.contains("prediction"));
  CHECK(witness_to_json(Witness{}).is_null());
  const Occurrence occ{{3, 5, 6}, 7};
  const auto s = thm_separated(occ, P("1357264"));
  const auto js = verdict_to_json(s, {nullptr, nullptr, &occ, std::nullopt, std::nullopt});
  CHECK(js["occurrence_positions"] == "4,6,7");
  CHECK(js["witness"]["kind"] == "unseparated_pair");
  CHECK(js["witness"]["x"]["value"] == 1);
}
