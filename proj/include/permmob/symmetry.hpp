#pragma once

// The eight trivial symmetries of the pattern poset (generated by reverse,
// complement and inverse) and pattern-avoider generation.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "permmob/permutation.hpp"
#include "permmob/poset.hpp"

namespace permmob {

/// Applied as inverse first, then reverse, then complement.
struct Symmetry {
  bool inverse = false;
  bool reverse = false;
  bool complement = false;

  static std::array<Symmetry, 8> all();
  std::string name() const;
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);

Permutation apply(const Symmetry& g, const Permutation& p);

/// Transforms a permutation together with a marked occurrence; the image of
/// the marked letters is an occurrence of the image pattern.
MarkedPermutation apply(const Symmetry& g, const MarkedPermutation& e);

struct SymmetryClass {
  Permutation representative;  // least image in lexicographic order
  std::vector<Permutation> members;  // distinct inputs in this class, sorted
  Symmetry to_representative;  // maps members.front() to the representative
};

Permutation canonical_representative(const Permutation& p);
MarkedPermutation canonical_representative(const MarkedPermutation& e);

/// True iff p is the least of its images.
bool is_class_representative(const Permutation& p);

/// Groups the inputs by symmetry class, ordered by representative.
std::vector<SymmetryClass> symmetry_reduce(std::span<const Permutation> perms);

/// 132-avoiders of length n in lexicographic order. Throws on n < 1.
std::vector<Permutation> generate_avoiders_132(int n);

/// Avoiders of any of 132, 231, 213, 312, obtained from the 132-avoiders by
/// the symmetry carrying 132 to `pattern`.
std::vector<Permutation> generate_avoiders(const Permutation& pattern, int n);

std::vector<Permutation> all_permutations(int n);

}  // namespace permmob
