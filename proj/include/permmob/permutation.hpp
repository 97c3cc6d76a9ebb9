#pragma once

// Permutations, pattern containment, occurrences, and the letter-level
// structure of an occurrence inside its host (interval blocks, regions,
// similar letters).
//
// Positions are zero-based everywhere in the library. The text layer
// (text.hpp) and the CLI convert to the one-based positions users type.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permmob {

class Permutation {
 public:
  Permutation() = default;

  /// Takes letters that must already be a permutation of 1..n.
  explicit Permutation(std::vector<int> letters);
  Permutation(std::initializer_list<int> letters)
      : Permutation(std::vector<int>(letters)) {}

  static Permutation identity(int n);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  std::span<const int> letters() const { return letters_; }

  /// positions_of()[v - 1] is the position holding value v.
  std::vector<int> positions_of() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
};

/// The canonical permutation of 1..k order isomorphic to `word`.
/// Throws std::invalid_argument on empty input or repeated letters.
Permutation standard_form(std::span<const int> word);

struct Occurrence {
  std::vector<int> positions;  // strictly increasing
  int host_length = 0;

  int size() const { return static_cast<int>(positions.size()); }
  std::uint64_t mask() const;  // requires host_length <= 64

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Checks that `occ` is a well-formed occurrence in `host`; throws
/// std::invalid_argument otherwise. Returns the pattern it realises.
Permutation validate_occurrence(const Permutation& host, const Occurrence& occ);

/// Letters of `host` at `positions`, in position order.
std::vector<int> letters_at(const Permutation& host, std::span<const int> positions);

/// The pattern formed by the letters of an occurrence.
Permutation pattern_of(const Permutation& host, const Occurrence& occ);

/// All occurrences of `sigma` in `tau`, ordered lexicographically by
/// position set.
std::vector<Occurrence> occurrences(const Permutation& sigma, const Permutation& tau);

/// Calls `visit` on each occurrence (as a position span) in lexicographic
/// order; returning false from `visit` stops the enumeration.
void for_each_occurrence(const Permutation& sigma, const Permutation& tau,
                         const std::function<bool(std::span<const int>)>& visit);

std::size_t count_occurrences(const Permutation& sigma, const Permutation& tau);
bool contains(const Permutation& sigma, const Permutation& tau);

/// Standard form of what is left of `tau` after removing `positions`.
/// Throws std::invalid_argument if nothing would remain or an index is out
/// of range.
Permutation delete_letters(const Permutation& tau, std::span<const int> positions);

/// ⟨σ⟩ + S: the occurrence on the union of `occ` and the positions holding
/// the letters in `extra_letters`. Throws if a letter is absent or already
/// in the occurrence.
Occurrence extend_occurrence(const Permutation& host, const Occurrence& occ,
                             std::span<const int> extra_letters);

struct PositionedLetter {
  int position = 0;
  int value = 0;
  friend bool operator==(const PositionedLetter&, const PositionedLetter&) = default;
};

/// The letters of `host` not in `occ`, in position order.
std::vector<PositionedLetter> complement(const Permutation& host, const Occurrence& occ);

struct IntervalBlock {
  int start_pos = 0;
  int end_pos = 0;  // inclusive, > start_pos
  int low_value = 0;
  int high_value = 0;

  int length() const { return end_pos - start_pos + 1; }
  friend bool operator==(const IntervalBlock&, const IntervalBlock&) = default;
  friend auto operator<=>(const IntervalBlock&, const IntervalBlock&) = default;
};

/// Every factor of length >= 2 whose values form a contiguous range,
/// sorted by (start_pos, end_pos). Includes tau itself when |tau| >= 2.
std::vector<IntervalBlock> interval_blocks(const Permutation& tau);

/// First interval block (in interval_blocks order) avoiding every position
/// flagged in `used`.
const IntervalBlock* first_disjoint_block(std::span<const IntervalBlock> blocks,
                                          const std::vector<bool>& used);

bool pair_has_interval_block_occ(const Occurrence& occ, const Permutation& tau);

/// True iff some interval block of tau misses every occurrence of sigma.
/// Throws std::invalid_argument when sigma is not contained in tau.
bool pair_has_interval_block(const Permutation& sigma, const Permutation& tau);

struct Region {
  std::vector<PositionedLetter> entries;
  friend bool operator==(const Region&, const Region&) = default;
};

std::vector<Region> regions(const Occurrence& occ, const Permutation& tau);

/// Two letters x < y of one region with no occurrence letter valued
/// strictly between them.
struct UnseparatedPair {
  PositionedLetter low;
  PositionedLetter high;
  int region = 0;
};

/// The first unseparated pair, scanning regions left to right and pairs by
/// (position of x, position of y); empty when the pair is separated.
std::optional<UnseparatedPair> first_unseparated_pair(const Occurrence& occ,
                                                      const Permutation& tau);

bool is_separated(const Occurrence& occ, const Permutation& tau);

/// Maximal classes (size >= 2) of similar letters, region by region, each
/// sorted by value.
std::vector<std::vector<PositionedLetter>> similar_groups(const Occurrence& occ,
                                                          const Permutation& tau);

}  // namespace permmob

template <>
struct std::hash<permmob::Permutation> {
  std::size_t operator()(const permmob::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : p.letters()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};
