#pragma once

// Intervals [sigma, tau] of the pattern poset and occurrence posets
// [<sigma>, tau], stored as graded Hasse diagrams, with the Möbius function
// computed from the bottom element.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "permmob/permutation.hpp"

namespace permmob {

inline constexpr std::size_t kDefaultNodeBudget = 200'000;
inline constexpr std::size_t kZetaNodeLimit = 4096;

struct NodeBudgetExceeded : std::runtime_error {
  explicit NodeBudgetExceeded(std::size_t budget)
      : std::runtime_error("interval exceeds node budget of " + std::to_string(budget)),
        budget(budget) {}
  std::size_t budget;
};

/// A permutation with a distinguished occurrence (the marked letters).
/// Equality is equality of the pair (letters, marked positions).
struct MarkedPermutation {
  Permutation perm;
  std::vector<int> marked;

  Occurrence occurrence() const { return {marked, perm.size()}; }
  friend bool operator==(const MarkedPermutation&, const MarkedPermutation&) = default;
  friend auto operator<=>(const MarkedPermutation&, const MarkedPermutation&) = default;
};

/// True iff `lower` is obtained from `upper` by deleting unmarked letters,
/// with marked letters landing on marked letters.
bool embeds_marked(const MarkedPermutation& lower, const MarkedPermutation& upper);

struct DagNode {
  MarkedPermutation element;  // marked is empty in plain intervals
  int rank = 0;
  std::vector<int> lower;  // indices of covered nodes, ascending
  std::vector<int> upper;  // indices of covering nodes, ascending

  const Permutation& perm() const { return element.perm; }
};

/// Nodes are sorted by (rank, element), so index order is a linear
/// extension. The bottom is node 0 and the top is the last node.
class IntervalDag {
 public:
  enum class Kind { plain, occurrence };

  IntervalDag() = default;
  IntervalDag(Kind kind, std::vector<DagNode> nodes);

  Kind kind() const { return kind_; }
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<DagNode>& nodes() const { return nodes_; }
  const DagNode& node(std::size_t i) const { return nodes_[i]; }
  int bottom() const { return 0; }
  int top() const { return static_cast<int>(nodes_.size()) - 1; }
  int rank() const { return empty() ? -1 : nodes_.back().rank; }

  /// Number of nodes at each rank 0..rank().
  std::vector<std::size_t> rank_counts() const;
  std::size_t edge_count() const;

  /// mu(bottom, x) for every node x; computed on first use.
  const std::vector<std::int64_t>& mu_of() const;

 private:
  Kind kind_ = Kind::plain;
  std::vector<DagNode> nodes_;
  mutable std::vector<std::int64_t> mu_of_;
};

/// [sigma, tau]; empty when sigma is not contained in tau.
IntervalDag build_interval(const Permutation& sigma, const Permutation& tau,
                           std::size_t node_budget = kDefaultNodeBudget);

/// [<sigma>, tau] for the occurrence `occ` of some sigma in tau.
IntervalDag build_occurrence_poset(const Occurrence& occ, const Permutation& tau,
                                   std::size_t node_budget = kDefaultNodeBudget);

/// Index of `element`, or -1 when it is not a node.
int find_node(const IntervalDag& dag, const MarkedPermutation& element);

/// The sub-interval [node, top] of `dag`, ranks measured from `node`.
IntervalDag upper_interval(const IntervalDag& dag, int node);

/// mu(x, top) for every node x, by the top-down form of the recursion.
std::vector<std::int64_t> mobius_to_top(const IntervalDag& dag);

/// Column `top` of the inverse zeta matrix, i.e. mu(x, top) for every x,
/// with the order relation recomputed from pattern containment.
std::vector<std::int64_t> zeta_column_to_top(const IntervalDag& dag);

/// mu(bottom, top); 0 for the empty interval.
std::int64_t mobius(const IntervalDag& dag);

/// Same value from the (bottom, top) entry of the inverse zeta matrix, with
/// the order relation taken from pattern containment rather than from the
/// cover edges. Throws std::length_error above kZetaNodeLimit nodes.
std::int64_t mobius_via_zeta(const IntervalDag& dag);

/// Nodes x of an occurrence poset for which the pair (<sigma>, x) has no
/// interval block, with the order inherited from the parent dag.
struct IntervalFreeSubposet {
  const IntervalDag* parent = nullptr;
  std::vector<int> nodes;  // parent indices, ascending

  bool has_top() const;
  std::vector<int> ranks() const;
  /// Parent nodes that were dropped.
  std::vector<int> removed() const;
  /// mu(bottom, x) inside the subposet, aligned with `nodes`.
  std::vector<std::int64_t> mu_of() const;
};

IntervalFreeSubposet interval_free_subposet(const IntervalDag& dag);

/// Structural check: 2^r nodes, down-degree equal to rank and up-degree
/// equal to r - rank at every node.
bool is_boolean(const IntervalDag& dag);

bool is_rank_property(std::span<const int> ranks);
bool is_rank_property(const IntervalDag& dag);
bool is_rank_property(const IntervalFreeSubposet& poset);

/// True iff every node lies on a bottom-to-top chain using covers that
/// raise the rank by exactly one.
bool is_graded(const IntervalDag& dag);

/// DOT digraph, edges bottom to top, one `mu` attribute per node.
std::string to_dot(const IntervalDag& dag);

}  // namespace permmob
