#include "permmob/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace permmob {

std::array<Symmetry, 8> Symmetry::all() {
  std::array<Symmetry, 8> out{};
  for (int m = 0; m < 8; ++m) out[m] = Symmetry{(m & 4) != 0, (m & 2) != 0, (m & 1) != 0};
  return out;
}

std::string Symmetry::name() const {
  std::string s;
  if (inverse) s += "i";
  if (reverse) s += "r";
  if (complement) s += "c";
  return s.empty() ? "id" : s;
}

Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.letters().rbegin(), p.letters().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
  std::vector<int> w;
  for (int v : p.letters()) w.push_back(p.size() + 1 - v);
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) w[p[i] - 1] = i + 1;
  return Permutation(std::move(w));
}

Permutation apply(const Symmetry& g, const Permutation& p) {
  Permutation q = p;
  if (g.inverse) q = inverse(q);
  if (g.reverse) q = reverse(q);
  if (g.complement) q = complement(q);
  return q;
}

MarkedPermutation apply(const Symmetry& g, const MarkedPermutation& e) {
  const int n = e.perm.size();
  Permutation q = e.perm;
  std::vector<int> marked = e.marked;
  if (g.inverse) {
    for (int& m : marked) m = q[m] - 1;
    q = inverse(q);
  }
  if (g.reverse) {
    for (int& m : marked) m = n - 1 - m;
    q = reverse(q);
  }
  if (g.complement) q = complement(q);
  std::sort(marked.begin(), marked.end());
  return {std::move(q), std::move(marked)};
}

Permutation canonical_representative(const Permutation& p) {
  Permutation best = p;
  for (const auto& g : Symmetry::all()) best = std::min(best, apply(g, p));
  return best;
}

MarkedPermutation canonical_representative(const MarkedPermutation& e) {
  MarkedPermutation best = e;
  for (const auto& g : Symmetry::all()) best = std::min(best, apply(g, e));
  return best;
}

bool is_class_representative(const Permutation& p) {
  for (const auto& g : Symmetry::all())
    if (apply(g, p) < p) return false;
  return true;
}

std::vector<SymmetryClass> symmetry_reduce(std::span<const Permutation> perms) {
  std::map<Permutation, std::vector<Permutation>> classes;
  for (const auto& p : perms) classes[canonical_representative(p)].push_back(p);
  std::vector<SymmetryClass> out;
  for (auto& [rep, members] : classes) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Symmetry to_rep;
    for (const auto& g : Symmetry::all())
      if (apply(g, members.front()) == rep) {
        to_rep = g;
        break;
      }
    out.push_back({rep, std::move(members), to_rep});
  }
  return out;
}

namespace {

// A 132-avoider of length n is alpha n beta with alpha on the top values,
// beta on the bottom values, and both 132-avoiding.
void avoiders_132(int n, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back({});
    return;
  }
  for (int split = 0; split < n; ++split) {
    // `split` letters before n, n - 1 - split after.
    const int after = n - 1 - split;
    std::vector<std::vector<int>> left, right;
    avoiders_132(split, left);
    avoiders_132(after, right);
    for (const auto& a : left)
      for (const auto& b : right) {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(n));
        for (int v : a) w.push_back(v + after);
        w.push_back(n);
        w.insert(w.end(), b.begin(), b.end());
        out.push_back(std::move(w));
      }
  }
}

}  // namespace

std::vector<Permutation> generate_avoiders_132(int n) {
  if (n < 1) throw std::invalid_argument("avoider length must be at least 1");
  std::vector<std::vector<int>> words;
  avoiders_132(n, words);
  std::vector<Permutation> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> generate_avoiders(const Permutation& pattern, int n) {
  const Permutation base{1, 3, 2};
  for (const auto& g : Symmetry::all()) {
    if (apply(g, base) != pattern) continue;
    auto out = generate_avoiders_132(n);
    for (auto& p : out) p = apply(g, p);
    std::sort(out.begin(), out.end());
    return out;
  }
  throw std::invalid_argument("pattern is not a symmetry image of 132");
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace permmob
