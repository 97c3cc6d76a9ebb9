#include "permmob/kernels.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace permmob::kernel {

std::uint64_t marked_pattern_code(std::span<const int> tau, std::uint32_t positions,
                                  std::uint32_t marked) {
  std::uint32_t values = 0;  // bit v-1 set when value v is retained
  for (std::uint32_t m = positions; m != 0; m &= m - 1)
    values |= 1u << (tau[static_cast<std::size_t>(std::countr_zero(m))] - 1);
  std::uint64_t code = 0;
  std::uint64_t marks = 0;
  int slot = 0;
  for (std::uint32_t m = positions; m != 0; m &= m - 1, ++slot) {
    const int i = std::countr_zero(m);
    const int v = tau[static_cast<std::size_t>(i)] - 1;
    const auto rank = static_cast<std::uint64_t>(std::popcount(values & ((1u << v) - 1)));
    code |= rank << (4 * slot);
    if ((marked >> i) & 1u) marks |= std::uint64_t{1} << slot;
  }
  return code | (marks << 48);
}

std::vector<std::uint32_t> block_masks(std::span<const int> tau) {
  std::vector<std::uint32_t> out;
  const int n = static_cast<int>(tau.size());
  for (int a = 0; a < n; ++a) {
    int lo = tau[a], hi = tau[a];
    for (int b = a + 1; b < n; ++b) {
      lo = std::min(lo, tau[b]);
      hi = std::max(hi, tau[b]);
      if (hi - lo == b - a) out.push_back(((2u << b) - 1) & ~((1u << a) - 1));
    }
  }
  return out;
}

std::vector<std::uint32_t> subsets_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

std::int64_t occurrence_mobius(std::span<const int> tau, std::uint32_t occ) {
  const int n = static_cast<int>(tau.size());
  if (n > kMaxKernelLength) throw std::invalid_argument("host too long for bitmask kernel");
  int spare[kMaxKernelLength];
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (!((occ >> i) & 1u)) spare[m++] = i;
  const std::uint32_t subsets = 1u << m;

  // Subsets of the complement grouped by size; within a size, equal codes
  // are the same element of the occurrence poset.
  struct Item {
    std::uint64_t code;
    std::uint32_t subset;
  };
  std::vector<Item> items(subsets);
  for (std::uint32_t s = 0; s < subsets; ++s) {
    std::uint32_t pos = occ;
    for (int j = 0; j < m; ++j)
      if ((s >> j) & 1u) pos |= 1u << spare[j];
    items[s] = {marked_pattern_code(tau, pos, occ), s};
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    const int pa = std::popcount(a.subset), pb = std::popcount(b.subset);
    if (pa != pb) return pa < pb;
    return a.code < b.code;
  });
  std::vector<int> cls(subsets);
  int classes = 0;
  for (std::uint32_t i = 0; i < subsets; ++i) {
    if (i == 0 || items[i].code != items[i - 1].code ||
        std::popcount(items[i].subset) != std::popcount(items[i - 1].subset))
      ++classes;
    cls[items[i].subset] = classes - 1;
  }

  // Down-set closure as bitsets, then mu from the bottom in class order
  // (class order is by size, hence a linear extension).
  const std::size_t words = (static_cast<std::size_t>(classes) + 63) / 64;
  std::vector<std::uint64_t> down(static_cast<std::size_t>(classes) * words, 0);
  std::vector<bool> done(static_cast<std::size_t>(classes), false);
  for (const auto& item : items) {
    const int c = cls[item.subset];
    if (done[c]) continue;
    done[c] = true;
    auto* row = &down[static_cast<std::size_t>(c) * words];
    row[c / 64] |= std::uint64_t{1} << (c % 64);
    for (std::uint32_t rest = item.subset; rest != 0; rest &= rest - 1) {
      const int d = cls[item.subset & ~(rest & (~rest + 1))];
      const auto* sub = &down[static_cast<std::size_t>(d) * words];
      for (std::size_t w = 0; w < words; ++w) row[w] |= sub[w];
    }
  }
  std::vector<std::int64_t> mu(static_cast<std::size_t>(classes), 0);
  mu[0] = 1;
  for (int c = 1; c < classes; ++c) {
    const auto* row = &down[static_cast<std::size_t>(c) * words];
    std::int64_t sum = 0;
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
        const int d = static_cast<int>(w * 64) + std::countr_zero(bits);
        if (d != c) sum += mu[d];
      }
    mu[c] = -sum;
  }
  return mu[static_cast<std::size_t>(cls[subsets - 1])];
}

bool is_least_image(std::span<const int> tau) {
  const int n = static_cast<int>(tau.size());
  int inv[kMaxKernelLength * 2];
  for (int i = 0; i < n; ++i) inv[tau[i] - 1] = i + 1;
  // Compare the image (of tau or its inverse, optionally reversed and
  // complemented) against tau letter by letter.
  for (int g = 1; g < 8; ++g) {
    const int* base = (g & 4) ? inv : tau.data();
    const bool rev = (g & 2) != 0;
    const bool comp = (g & 1) != 0;
    for (int i = 0; i < n; ++i) {
      int v = base[rev ? n - 1 - i : i];
      if (comp) v = n + 1 - v;
      if (v < tau[i]) return false;
      if (v > tau[i]) break;
    }
  }
  return true;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<int> nth_permutation(int n, std::uint64_t index) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto pick = static_cast<std::size_t>(index / block);
    index %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace permmob::kernel
