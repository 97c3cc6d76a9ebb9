// Serial reference vs OpenMP kernels.
//
//   bench_kernels [--quick] [--workers N]
//
// Times the theorem sweep (serial loop vs OpenMP over hosts) and the
// minimality search (generic dag engine vs bitmask kernel, one thread and N
// threads), and checks that each pair of runs agrees.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <thread>

#include "permmob/harness.hpp"

using namespace permmob;

namespace {

double seconds(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* what, double base, double fast, bool agree) {
  std::printf("%-44s %10.3f %10.3f %8.2fx  %s\n", what, base, fast, fast > 0 ? base / fast : 0.0,
              agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--quick")) quick = true;
    else if (!std::strcmp(argv[i], "--workers") && i + 1 < argc) workers = std::stoi(argv[++i]);
  }
  const int sweep_n = quick ? 5 : 7;
  const int search_n = quick ? 6 : 8;
  bool all_agree = true;

  std::printf("workers %d\n%-44s %10s %10s %9s\n", workers, "", "base s", "fast s", "speedup");

  SweepConfig cfg;
  cfg.max_tau_length = sweep_n;
  cfg.worker_count = workers;
  VerificationReport serial, parallel;
  const double ts = seconds([&] { serial = sweep_theorems_serial(cfg); });
  const double tp = seconds([&] { parallel = sweep_theorems(cfg); });
  auto stable = [](const VerificationReport& r) {
    auto j = r.to_json(false);
    j["config"].erase("worker_count");
    return j.dump();
  };
  bool agree = stable(serial) == stable(parallel);
  all_agree = all_agree && agree;
  const std::string sweep_label = "theorem sweep |tau|<=" + std::to_string(sweep_n) + " serial/omp";
  row(sweep_label.c_str(), ts, tp, agree);

  MinimalityResult ref, one, many;
  const double tr = seconds([&] { ref = minimality_search_reference(search_n, 3); });
  const double t1 = seconds([&] { one = minimality_search(search_n, 3, {false, true, 1}); });
  const double tn = seconds([&] { many = minimality_search(search_n, 3, {false, true, workers}); });
  agree = ref.hits == one.hits && ref.pairs_checked == one.pairs_checked;
  all_agree = all_agree && agree;
  const std::string a = "search |tau|=" + std::to_string(search_n) + " generic/kernel";
  row(a.c_str(), tr, t1, agree);
  agree = one.hits == many.hits && one.pairs_checked == many.pairs_checked;
  all_agree = all_agree && agree;
  const std::string b = "search |tau|=" + std::to_string(search_n) + " kernel 1/N threads";
  row(b.c_str(), t1, tn, agree);
  return all_agree ? 0 : 1;
}
