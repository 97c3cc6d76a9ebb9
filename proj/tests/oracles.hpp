#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's matching or poset code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline Word standardize(const Word& w) {
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) -
                              sorted.begin()) + 1;
  return out;
}

inline Word restrict_to(const Word& tau, std::uint32_t mask) {
  Word w;
  for (std::size_t i = 0; i < tau.size(); ++i)
    if ((mask >> i) & 1u) w.push_back(tau[i]);
  return w;
}

/// Every position mask of tau whose letters form sigma.
inline std::vector<std::uint32_t> occurrence_masks(const Word& sigma, const Word& tau) {
  std::vector<std::uint32_t> out;
  const std::uint32_t n = static_cast<std::uint32_t>(tau.size());
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (static_cast<std::size_t>(__builtin_popcount(m)) != sigma.size()) continue;
    if (standardize(restrict_to(tau, m)) == sigma) out.push_back(m);
  }
  return out;
}

inline bool contains(const Word& sigma, const Word& tau) {
  return !occurrence_masks(sigma, tau).empty();
}

/// Distinct patterns of tau (including the empty word).
inline std::set<Word> patterns(const Word& tau) {
  std::set<Word> out;
  for (std::uint32_t m = 0; m < (1u << tau.size()); ++m) out.insert(standardize(restrict_to(tau, m)));
  return out;
}

/// mu(sigma, tau) straight from the recursive definition, with containment
/// tested by subset enumeration.
inline std::int64_t mobius(const Word& sigma, const Word& tau) {
  if (!contains(sigma, tau)) return 0;
  std::vector<Word> elems;
  for (const auto& p : patterns(tau))
    if (p.size() >= sigma.size() && contains(sigma, p)) elems.push_back(p);
  std::sort(elems.begin(), elems.end(),
            [](const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  std::map<Word, std::int64_t> mu;
  for (const auto& x : elems) {
    if (x == sigma) {
      mu[x] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& [y, v] : mu)
      if (y.size() < x.size() && contains(y, x)) sum += v;
    mu[x] = -sum;
  }
  return mu[tau];
}

/// mu of the occurrence poset: elements are (pattern, marked slots) pairs
/// reached by deleting unmarked letters; order is marked embedding.
inline std::int64_t occurrence_mobius(const Word& tau, std::uint32_t occ) {
  using Elem = std::pair<Word, std::vector<int>>;
  const std::uint32_t n = static_cast<std::uint32_t>(tau.size());
  std::set<Elem> set;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if ((m & occ) != occ) continue;
    std::vector<int> marks;
    int slot = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      if ((m >> i) & 1u) {
        if ((occ >> i) & 1u) marks.push_back(slot);
        ++slot;
      }
    set.insert({standardize(restrict_to(tau, m)), marks});
  }
  auto below = [](const Elem& a, const Elem& b) {
    // a <= b: some subset of b's letters keeping all marks realises a.
    const std::uint32_t len = static_cast<std::uint32_t>(b.first.size());
    std::uint32_t need = 0;
    for (int s : b.second) need |= 1u << s;
    for (std::uint32_t m = 0; m < (1u << len); ++m) {
      if ((m & need) != need) continue;
      if (static_cast<std::size_t>(__builtin_popcount(m)) != a.first.size()) continue;
      if (standardize(restrict_to(b.first, m)) != a.first) continue;
      std::vector<int> marks;
      int slot = 0;
      for (std::uint32_t i = 0; i < len; ++i)
        if ((m >> i) & 1u) {
          if ((need >> i) & 1u) marks.push_back(slot);
          ++slot;
        }
      if (marks == a.second) return true;
    }
    return false;
  };
  std::vector<Elem> elems(set.begin(), set.end());
  std::sort(elems.begin(), elems.end(), [](const Elem& a, const Elem& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a < b;
  });
  std::vector<std::int64_t> mu(elems.size(), 0);
  mu[0] = 1;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (elems[j].first.size() < elems[i].first.size() && below(elems[j], elems[i])) sum += mu[j];
    mu[i] = -sum;
  }
  return mu.back();
}

inline Word random_permutation(int n, std::mt19937_64& rng) {
  Word w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

/// Nonempty random position mask of an n-letter host.
inline std::uint32_t random_mask(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(1, (1u << n) - 1);
  return pick(rng);
}

inline bool avoids(const Word& tau, const Word& pattern) { return !contains(pattern, tau); }

}  // namespace oracle
