#pragma once

// Bitmask kernels for hosts of at most kMaxKernelLength letters. A subset
// of host positions is a 32-bit mask; a marked pattern is packed into one
// 64-bit code. These back the large exhaustive searches; the generic
// IntervalDag code is the reference they are tested against.

#include <cstdint>
#include <span>
#include <vector>

namespace permmob::kernel {

inline constexpr int kMaxKernelLength = 12;

/// Standard form of tau restricted to `positions`, 4 bits per letter, with
/// the marked letters (a subset of `positions`) recorded in bits 48..59.
/// Codes are only comparable between subsets of equal size.
std::uint64_t marked_pattern_code(std::span<const int> tau, std::uint32_t positions,
                                  std::uint32_t marked);

inline std::uint64_t pattern_code(std::span<const int> tau, std::uint32_t positions) {
  return marked_pattern_code(tau, positions, 0);
}

/// Position masks of every interval block of tau.
std::vector<std::uint32_t> block_masks(std::span<const int> tau);

inline bool interval_free(std::span<const std::uint32_t> blocks, std::uint32_t occ) {
  for (auto b : blocks)
    if ((b & occ) == 0) return false;
  return true;
}

/// mu(<sigma>, tau) for the occurrence on the positions in `occ`.
std::int64_t occurrence_mobius(std::span<const int> tau, std::uint32_t occ);

/// True iff tau is lexicographically least among its images under
/// reverse, complement and inverse.
bool is_least_image(std::span<const int> tau);

/// The index-th permutation of 1..n in lexicographic order.
std::vector<int> nth_permutation(int n, std::uint64_t index);

std::uint64_t factorial(int n);

/// All k-subsets of {0..n-1} as masks, in increasing numeric order.
std::vector<std::uint32_t> subsets_of_size(int n, int k);

}  // namespace permmob::kernel
