#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "permmob/harness.hpp"
#include "permmob/kernels.hpp"
#include "permmob/symmetry.hpp"

using namespace permmob;

namespace {

std::vector<int> mask_positions(std::uint32_t m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("pattern codes identify standard forms") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const auto tau = oracle::random_permutation(n, rng);
    const auto a = oracle::random_mask(n, rng);
    const auto b = oracle::random_mask(n, rng);
    if (__builtin_popcount(a) != __builtin_popcount(b)) continue;
    const bool same = oracle::standardize(oracle::restrict_to(tau, a)) ==
                      oracle::standardize(oracle::restrict_to(tau, b));
    CHECK((kernel::pattern_code(tau, a) == kernel::pattern_code(tau, b)) == same);
  }
}

TEST_CASE("block masks agree with interval blocks") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto w = oracle::random_permutation(n, rng);
    const auto blocks = interval_blocks(Permutation(w));
    const auto masks = kernel::block_masks(w);
    REQUIRE(masks.size() == blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::uint32_t m = 0;
      for (int p = blocks[i].start_pos; p <= blocks[i].end_pos; ++p) m |= 1u << p;
      CHECK(masks[i] == m);
    }
  }
}

TEST_CASE("kernel occurrence mobius matches the generic engine") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto w = oracle::random_permutation(n, rng);
    const auto mask = oracle::random_mask(n, rng);
    const Permutation tau(w);
    const Occurrence occ{mask_positions(mask), n};
    CHECK(kernel::occurrence_mobius(w, mask) == mobius(build_occurrence_poset(occ, tau)));
    CHECK(kernel::interval_free(kernel::block_masks(w), mask) ==
          !pair_has_interval_block_occ(occ, tau));
  }
  // The first counterexample, through the kernel.
  const std::vector<int> t1 = {2, 5, 1, 7, 3, 10, 4, 6, 9, 8};
  CHECK(kernel::occurrence_mobius(t1, (1u << 5) | (1u << 8) | (1u << 9)) == 0);
}

TEST_CASE("least images and unranking") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    REQUIRE(all.size() == kernel::factorial(n));
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto w = kernel::nth_permutation(n, i);
      CHECK(Permutation(w) == all[i]);
      CHECK(kernel::is_least_image(w) == is_class_representative(all[i]));
    }
  }
  CHECK(kernel::subsets_of_size(5, 2).size() == 10);
}

TEST_CASE("fast minimality search equals the reference") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k < n; ++k)
      for (bool single : {true, false}) {
        const auto fast = minimality_search(n, k, {false, single, 2});
        const auto ref = minimality_search_reference(n, k, single);
        CHECK(fast.hosts_examined == ref.hosts_examined);
        CHECK(fast.pairs_checked == ref.pairs_checked);
        CHECK(fast.hits == ref.hits);
        REQUIRE(fast.classes.size() == ref.classes.size());
        for (std::size_t i = 0; i < fast.classes.size(); ++i)
          CHECK(fast.classes[i].representative == ref.classes[i].representative);
      }
}

TEST_CASE("symmetry reduction keeps every class") {
  for (int n = 5; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      const auto full = minimality_search(n, k, {false, false, 1});
      const auto reduced = minimality_search(n, k, {true, false, 1});
      REQUIRE(full.classes.size() == reduced.classes.size());
      for (std::size_t i = 0; i < full.classes.size(); ++i) {
        CHECK(full.classes[i].representative == reduced.classes[i].representative);
        CHECK(full.classes[i].mu == reduced.classes[i].mu);
      }
    }
}

TEST_CASE("search argument checks") {
  CHECK_THROWS_AS(minimality_search(13, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(minimality_search(5, 6, {}), std::invalid_argument);
  CHECK_THROWS_AS(minimality_search(5, 2, {true, true, 0}), std::invalid_argument);
}
