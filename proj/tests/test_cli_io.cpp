#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "permmob/mu_cache.hpp"
#include "permmob/poset.hpp"
#include "permmob/text.hpp"

using namespace permmob;

namespace {

std::filesystem::path temp_file(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

std::string join(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

MuResult compute(const Permutation& s, const Permutation& t) {
  const auto dag = build_interval(s, t);
  return {mobius(dag), dag.size()};
}

}  // namespace

TEST_CASE("text round trip up to n = 50") {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const Permutation p(oracle::random_permutation(n, rng));
    CHECK(parse_permutation(to_string(p)) == p);
    const std::vector<int> w(p.letters().begin(), p.letters().end());
    CHECK(parse_permutation(join(w)) == p);
  }
}

TEST_CASE("text formats") {
  CHECK(to_string(Permutation{2, 4, 6, 1, 5, 3}) == "246153");
  CHECK(to_string(Permutation{2, 5, 1, 7, 3, 10, 4, 6, 9, 8}) == "2,5,1,7,3,10,4,6,9,8");
  CHECK(parse_permutation(" 3,1,2 ") == Permutation{3, 1, 2});
  CHECK(to_marked_string(Permutation{6, 3, 4, 5, 2, 1}, {0, 2, 4, 5}) == "[6]3[4]5[2][1]");
  CHECK(parse_positions("1,2") == std::vector<int>{0, 1});
  CHECK(positions_to_string({0, 1}) == "1,2");
  CHECK_THROWS_AS(parse_permutation(""), ParseError);
  CHECK_THROWS_AS(parse_permutation("1a2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("113"), ParseError);
  CHECK_THROWS_AS(parse_permutation("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("2,3"), ParseError);
  CHECK_THROWS_AS(parse_positions("0,1"), ParseError);
  CHECK(parse_positions("3,1") == std::vector<int>{0, 2});
  CHECK_THROWS_AS(parse_positions("1,1"), ParseError);
}

TEST_CASE("cache stores, reloads and counts") {
  const auto path = temp_file("permmob_cache_reload.tsv");
  const Permutation s{1, 2}, t{3, 4, 1, 2};
  {
    MuCache cache(path);
    CHECK(cache.get_or_compute(s, t, [&] { return compute(s, t); }) == 1);
    CHECK(cache.get_or_compute(s, t, [&]() -> MuResult { throw std::logic_error("recomputed"); }) == 1);
    CHECK(cache.hits() == 1);
    CHECK(cache.misses() == 1);
    CHECK(cache.get_or_compute("1|123") == 0);
    CHECK_THROWS_AS(cache.get_or_compute(std::string("12-3412")), std::invalid_argument);
  }
  MuCache again(path);
  CHECK(again.size() == 2);
  const auto e = again.lookup("12|3412");
  REQUIRE(e);
  CHECK(e->mu == 1);
  CHECK(e->node_count == compute(s, t).node_count);
  CHECK(e->engine_version == kEngineVersion);
  std::filesystem::remove(path);
}

TEST_CASE("version bump invalidates entries") {
  const auto path = temp_file("permmob_cache_version.tsv");
  { MuCache(path, "old").get_or_compute("12|3412"); }
  MuCache fresh(path, "new");
  CHECK(fresh.size() == 0);
  CHECK_FALSE(fresh.lookup("12|3412"));
  std::filesystem::remove(path);
}

TEST_CASE("corrupt cache files are rewritten") {
  const auto path = temp_file("permmob_cache_corrupt.tsv");
  {
    std::ofstream out(path);
    out << "12|3412\t1\t4\t" << kEngineVersion << "\n";
    out << "garbage line\n";
    out << "12|3412x\t1\t4\t" << kEngineVersion << "\n";
    out << "3,1,2|3412\t1\t2\t" << kEngineVersion << "\n";  // non-canonical key
    out << "21|12\t0\t0\t" << kEngineVersion << "\n";  // not contained
  }
  MuCache cache(path);
  CHECK(cache.recovered_from_corruption());
  CHECK(cache.size() == 1);
  CHECK(cache.get_or_compute("123|1324") == -1);
  MuCache reloaded(path);
  CHECK_FALSE(reloaded.recovered_from_corruption());
  CHECK(reloaded.size() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("concurrent get_or_compute") {
  const auto path = temp_file("permmob_cache_threads.tsv");
  MuCache cache(path);
  const auto perms = std::vector<Permutation>{{2, 4, 1, 3}, {3, 1, 4, 2}, {2, 5, 3, 1, 4}};
  std::vector<std::thread> threads;
  std::vector<std::int64_t> results(8 * perms.size());
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < perms.size(); ++i)
        results[t * perms.size() + i] =
            cache.get_or_compute(Permutation{1}, perms[i], [&] { return compute({1}, perms[i]); });
    });
  for (auto& th : threads) th.join();
  for (std::size_t i = 0; i < results.size(); ++i)
    CHECK(results[i] == compute({1}, perms[i % perms.size()]).mu);
  CHECK(cache.size() == perms.size());
  MuCache reloaded(path);
  CHECK(reloaded.size() == perms.size());
  std::filesystem::remove(path);
}

TEST_CASE("DOT output is byte identical across runs") {
  const Permutation s{1}, t{2, 5, 3, 1, 4};
  const auto a = to_dot(build_interval(s, t));
  const auto b = to_dot(build_interval(s, t));
  CHECK(a == b);
  CHECK(a.rfind("digraph interval {", 0) == 0);
}
