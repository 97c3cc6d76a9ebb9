#include "permmob/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "permmob/text.hpp"

namespace permmob {

namespace {

struct ElementHash {
  std::size_t operator()(const MarkedPermutation& e) const noexcept {
    std::size_t h = std::hash<Permutation>{}(e.perm);
    for (int p : e.marked) h = (h ^ static_cast<std::size_t>(p + 0x9e37)) * 0x100000001b3ull;
    return h;
  }
};

// Removing one letter of a canonical permutation: every larger letter
// drops by one, and marks to the right shift left.
MarkedPermutation delete_one(const MarkedPermutation& e, int pos) {
  const int gone = e.perm[pos];
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(e.perm.size()) - 1);
  for (int i = 0; i < e.perm.size(); ++i) {
    if (i == pos) continue;
    const int v = e.perm[i];
    w.push_back(v > gone ? v - 1 : v);
  }
  std::vector<int> marked;
  marked.reserve(e.marked.size());
  for (int m : e.marked) marked.push_back(m > pos ? m - 1 : m);
  return {Permutation(std::move(w)), std::move(marked)};
}

// Top-down construction shared by both interval kinds. `keep` decides
// whether a freshly generated element belongs to the poset and `deletable`
// lists the positions that may be removed from an element.
template <typename Keep, typename Deletable>
IntervalDag build_top_down(IntervalDag::Kind kind, MarkedPermutation top, int bottom_length,
                           std::size_t budget, Keep keep, Deletable deletable) {
  struct Raw {
    MarkedPermutation element;
    int length;
    std::vector<int> lower;
  };
  std::vector<Raw> raw;
  raw.push_back({std::move(top), 0, {}});
  raw[0].length = raw[0].element.perm.size();

  std::size_t level_begin = 0;
  while (level_begin < raw.size() && raw[level_begin].length > bottom_length) {
    const std::size_t level_end = raw.size();
    // -1 marks an element already rejected by `keep`.
    std::unordered_map<MarkedPermutation, int, ElementHash> seen;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      std::vector<int> covers;
      for (int pos : deletable(raw[i].element)) {
        auto child = delete_one(raw[i].element, pos);
        auto it = seen.find(child);
        if (it == seen.end()) {
          int id = -1;
          if (keep(child)) {
            id = static_cast<int>(raw.size());
            if (raw.size() >= budget) throw NodeBudgetExceeded(budget);
            raw.push_back({child, raw[i].length - 1, {}});
          }
          it = seen.emplace(std::move(child), id).first;
        }
        if (it->second >= 0) covers.push_back(it->second);
      }
      std::sort(covers.begin(), covers.end());
      covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
      raw[i].lower = std::move(covers);
    }
    level_begin = level_end;
  }

  // Reindex by (rank, element).
  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (raw[a].length != raw[b].length) return raw[a].length < raw[b].length;
    return raw[a].element < raw[b].element;
  });
  std::vector<int> new_index(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = static_cast<int>(i);

  std::vector<DagNode> nodes(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& r = raw[order[i]];
    auto& n = nodes[i];
    n.element = std::move(r.element);
    n.rank = r.length - bottom_length;
    for (int c : r.lower) n.lower.push_back(new_index[c]);
    std::sort(n.lower.begin(), n.lower.end());
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int c : nodes[i].lower) nodes[c].upper.push_back(static_cast<int>(i));
  return IntervalDag(kind, std::move(nodes));
}

// Marked-letter-preserving embedding search, in the style of the plain
// matcher but with marks required to line up.
class MarkedMatcher {
 public:
  MarkedMatcher(const MarkedPermutation& lower, const MarkedPermutation& upper)
      : a_(lower.perm), b_(upper.perm), k_(lower.perm.size()), n_(upper.perm.size()) {
    a_marked_.assign(static_cast<std::size_t>(k_), false);
    b_marked_.assign(static_cast<std::size_t>(n_), false);
    for (int m : lower.marked) a_marked_[m] = true;
    for (int m : upper.marked) b_marked_[m] = true;
    below_.assign(static_cast<std::size_t>(k_), -1);
    above_.assign(static_cast<std::size_t>(k_), -1);
    for (int j = 0; j < k_; ++j)
      for (int p = 0; p < j; ++p) {
        if (a_[p] < a_[j] && (below_[j] < 0 || a_[p] > a_[below_[j]])) below_[j] = p;
        if (a_[p] > a_[j] && (above_[j] < 0 || a_[p] < a_[above_[j]])) above_[j] = p;
      }
    chosen_.assign(static_cast<std::size_t>(k_), 0);
  }

  bool found() { return k_ <= n_ && extend(0, 0); }

 private:
  bool extend(int j, int from) {
    if (j == k_) return true;
    const int lo = below_[j] < 0 ? 0 : b_[chosen_[below_[j]]];
    const int hi = above_[j] < 0 ? n_ + 1 : b_[chosen_[above_[j]]];
    for (int i = from; i <= n_ - (k_ - j); ++i) {
      if (b_marked_[i] != a_marked_[j]) {
        // A skipped marked letter can never be recovered.
        if (b_marked_[i]) return false;
        continue;
      }
      if (b_[i] <= lo || b_[i] >= hi) {
        if (b_marked_[i]) return false;
        continue;
      }
      chosen_[j] = i;
      if (extend(j + 1, i + 1)) return true;
      if (b_marked_[i]) return false;
    }
    return false;
  }

  const Permutation& a_;
  const Permutation& b_;
  int k_;
  int n_;
  std::vector<bool> a_marked_;
  std::vector<bool> b_marked_;
  std::vector<int> below_;
  std::vector<int> above_;
  std::vector<int> chosen_;
};

}  // namespace

bool embeds_marked(const MarkedPermutation& lower, const MarkedPermutation& upper) {
  if (lower.marked.size() != upper.marked.size()) return false;
  return MarkedMatcher(lower, upper).found();
}

IntervalDag::IntervalDag(Kind kind, std::vector<DagNode> nodes)
    : kind_(kind), nodes_(std::move(nodes)) {}

std::vector<std::size_t> IntervalDag::rank_counts() const {
  std::vector<std::size_t> counts(empty() ? 0 : static_cast<std::size_t>(rank()) + 1, 0);
  for (const auto& n : nodes_) ++counts[static_cast<std::size_t>(n.rank)];
  return counts;
}

std::size_t IntervalDag::edge_count() const {
  std::size_t e = 0;
  for (const auto& n : nodes_) e += n.lower.size();
  return e;
}

const std::vector<std::int64_t>& IntervalDag::mu_of() const {
  if (mu_of_.size() == nodes_.size()) return mu_of_;
  // Increasing index is a linear extension, so every strict lower element
  // of x already has its value when x is reached.
  std::vector<std::int64_t> mu(nodes_.size(), 0);
  std::vector<std::size_t> stamp(nodes_.size(), 0);
  std::vector<int> stack;
  for (std::size_t x = 0; x < nodes_.size(); ++x) {
    if (x == 0) {
      mu[0] = 1;
      continue;
    }
    std::int64_t sum = 0;
    stack.assign(nodes_[x].lower.begin(), nodes_[x].lower.end());
    for (int c : stack) stamp[c] = x;
    while (!stack.empty()) {
      const int y = stack.back();
      stack.pop_back();
      sum += mu[y];
      for (int z : nodes_[y].lower) {
        if (stamp[z] != x) {
          stamp[z] = x;
          stack.push_back(z);
        }
      }
    }
    mu[x] = -sum;
  }
  mu_of_ = std::move(mu);
  return mu_of_;
}

IntervalDag build_interval(const Permutation& sigma, const Permutation& tau,
                           std::size_t node_budget) {
  if (!contains(sigma, tau)) return IntervalDag(IntervalDag::Kind::plain, {});
  return build_top_down(
      IntervalDag::Kind::plain, MarkedPermutation{tau, {}}, sigma.size(), node_budget,
      [&](const MarkedPermutation& e) { return contains(sigma, e.perm); },
      [](const MarkedPermutation& e) {
        std::vector<int> all(static_cast<std::size_t>(e.perm.size()));
        for (int i = 0; i < e.perm.size(); ++i) all[i] = i;
        return all;
      });
}

IntervalDag build_occurrence_poset(const Occurrence& occ, const Permutation& tau,
                                   std::size_t node_budget) {
  validate_occurrence(tau, occ);
  return build_top_down(
      IntervalDag::Kind::occurrence, MarkedPermutation{tau, occ.positions}, occ.size(),
      node_budget, [](const MarkedPermutation&) { return true; },
      [](const MarkedPermutation& e) {
        std::vector<int> free;
        std::size_t m = 0;
        for (int i = 0; i < e.perm.size(); ++i) {
          if (m < e.marked.size() && e.marked[m] == i) {
            ++m;
            continue;
          }
          free.push_back(i);
        }
        return free;
      });
}

std::int64_t mobius(const IntervalDag& dag) {
  if (dag.empty()) return 0;
  return dag.mu_of()[static_cast<std::size_t>(dag.top())];
}

std::vector<std::int64_t> zeta_column_to_top(const IntervalDag& dag) {
  const std::size_t m = dag.size();
  if (m > kZetaNodeLimit)
    throw std::length_error("zeta oracle limited to " + std::to_string(kZetaNodeLimit) +
                            " nodes");
  // zeta[i * m + j] = 1 iff node i <= node j; upper triangular because index
  // order is a linear extension.
  std::vector<std::uint8_t> zeta(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = dag.node(i);
    zeta[i * m + i] = 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& b = dag.node(j);
      if (a.rank >= b.rank) continue;
      const bool le = dag.kind() == IntervalDag::Kind::plain
                          ? contains(a.perm(), b.perm())
                          : embeds_marked(a.element, b.element);
      zeta[i * m + j] = le ? 1 : 0;
    }
  }
  // Solve zeta * y = e_top by back substitution (unit diagonal).
  std::vector<std::int64_t> y(m, 0);
  for (std::size_t i = m; i-- > 0;) {
    std::int64_t rhs = (i + 1 == m) ? 1 : 0;
    for (std::size_t j = i + 1; j < m; ++j)
      if (zeta[i * m + j]) rhs -= y[j];
    y[i] = rhs;
  }
  return y;
}

std::int64_t mobius_via_zeta(const IntervalDag& dag) {
  if (dag.empty()) return 0;
  return zeta_column_to_top(dag)[0];
}

int find_node(const IntervalDag& dag, const MarkedPermutation& element) {
  if (dag.empty()) return -1;
  const int rank = element.perm.size() - dag.node(0).perm().size();
  const auto& nodes = dag.nodes();
  auto it = std::lower_bound(nodes.begin(), nodes.end(), std::pair{rank, &element},
                             [](const DagNode& n, const std::pair<int, const MarkedPermutation*>& key) {
                               if (n.rank != key.first) return n.rank < key.first;
                               return n.element < *key.second;
                             });
  if (it == nodes.end() || it->rank != rank || it->element != element) return -1;
  return static_cast<int>(it - nodes.begin());
}

IntervalDag upper_interval(const IntervalDag& dag, int node) {
  const auto& all = dag.nodes();
  std::vector<int> local(all.size(), -1);
  std::vector<int> keep;
  std::vector<int> stack{node};
  local[node] = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    keep.push_back(x);
    for (int u : all[x].upper)
      if (local[u] < 0) {
        local[u] = 0;
        stack.push_back(u);
      }
  }
  // Ascending parent index keeps the (rank, element) order.
  std::sort(keep.begin(), keep.end());
  for (std::size_t k = 0; k < keep.size(); ++k) local[keep[k]] = static_cast<int>(k);
  const int base = all[node].rank;
  std::vector<DagNode> nodes;
  nodes.reserve(keep.size());
  for (int x : keep) {
    DagNode n;
    n.element = all[x].element;
    n.rank = all[x].rank - base;
    for (int c : all[x].lower)
      if (local[c] >= 0 && c >= node) n.lower.push_back(local[c]);
    for (int u : all[x].upper) n.upper.push_back(local[u]);
    nodes.push_back(std::move(n));
  }
  return IntervalDag(dag.kind(), std::move(nodes));
}

std::vector<std::int64_t> mobius_to_top(const IntervalDag& dag) {
  const auto& nodes = dag.nodes();
  const std::size_t m = nodes.size();
  std::vector<std::int64_t> mu(m, 0);
  if (m == 0) return mu;
  std::vector<std::size_t> stamp(m, m);
  std::vector<int> stack;
  for (std::size_t x = m; x-- > 0;) {
    if (x + 1 == m) {
      mu[x] = 1;
      continue;
    }
    std::int64_t sum = 0;
    stack.assign(nodes[x].upper.begin(), nodes[x].upper.end());
    for (int u : stack) stamp[u] = x;
    while (!stack.empty()) {
      const int y = stack.back();
      stack.pop_back();
      sum += mu[y];
      for (int z : nodes[y].upper)
        if (stamp[z] != x) {
          stamp[z] = x;
          stack.push_back(z);
        }
    }
    mu[x] = -sum;
  }
  return mu;
}

bool IntervalFreeSubposet::has_top() const {
  return parent != nullptr && !nodes.empty() && nodes.back() == parent->top();
}

std::vector<int> IntervalFreeSubposet::ranks() const {
  std::vector<int> out;
  out.reserve(nodes.size());
  for (int i : nodes) out.push_back(parent->node(static_cast<std::size_t>(i)).rank);
  return out;
}

std::vector<int> IntervalFreeSubposet::removed() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int i = 0; i < static_cast<int>(parent->size()); ++i) {
    if (k < nodes.size() && nodes[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

std::vector<std::int64_t> IntervalFreeSubposet::mu_of() const {
  const auto& all = parent->nodes();
  std::vector<int> local(all.size(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = static_cast<int>(k);
  std::vector<std::int64_t> mu(nodes.size(), 0);
  std::vector<std::size_t> stamp(all.size(), 0);
  std::vector<int> stack;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const int x = nodes[k];
    if (k == 0) {
      mu[0] = 1;
      continue;
    }
    // Walk the full down-set in the parent; only retained nodes contribute.
    std::int64_t sum = 0;
    stack.assign(all[x].lower.begin(), all[x].lower.end());
    for (int c : stack) stamp[c] = k;
    while (!stack.empty()) {
      const int y = stack.back();
      stack.pop_back();
      if (local[y] >= 0) sum += mu[local[y]];
      for (int z : all[y].lower)
        if (stamp[z] != k) {
          stamp[z] = k;
          stack.push_back(z);
        }
    }
    mu[k] = -sum;
  }
  return mu;
}

IntervalFreeSubposet interval_free_subposet(const IntervalDag& dag) {
  if (dag.kind() != IntervalDag::Kind::occurrence)
    throw std::invalid_argument("interval-free subposet needs an occurrence poset");
  IntervalFreeSubposet out{&dag, {}};
  for (std::size_t i = 0; i < dag.size(); ++i) {
    const auto& e = dag.node(i).element;
    if (!pair_has_interval_block_occ(e.occurrence(), e.perm))
      out.nodes.push_back(static_cast<int>(i));
  }
  return out;
}

bool is_boolean(const IntervalDag& dag) {
  if (dag.empty()) return false;
  const int r = dag.rank();
  if (r >= 62 || dag.size() != (std::size_t{1} << r)) return false;
  for (const auto& n : dag.nodes()) {
    if (static_cast<int>(n.lower.size()) != n.rank) return false;
    if (static_cast<int>(n.upper.size()) != r - n.rank) return false;
  }
  return true;
}

bool is_rank_property(std::span<const int> ranks) {
  std::ptrdiff_t balance = 0;
  for (int r : ranks) balance += (r % 2 == 0) ? 1 : -1;
  return balance == 0;
}

bool is_rank_property(const IntervalDag& dag) {
  std::vector<int> ranks;
  for (const auto& n : dag.nodes()) ranks.push_back(n.rank);
  return is_rank_property(ranks);
}

bool is_rank_property(const IntervalFreeSubposet& poset) {
  return is_rank_property(poset.ranks());
}

bool is_graded(const IntervalDag& dag) {
  if (dag.empty()) return true;
  const int top = dag.top();
  for (int i = 0; i <= top; ++i) {
    const auto& n = dag.node(static_cast<std::size_t>(i));
    if (i == 0 && n.rank != 0) return false;
    if (i != 0 && n.lower.empty()) return false;
    if (i != top && n.upper.empty()) return false;
    if (i != top && n.rank == dag.rank()) return false;
    for (int c : n.lower)
      if (dag.node(static_cast<std::size_t>(c)).rank + 1 != n.rank) return false;
  }
  return true;
}

std::string to_dot(const IntervalDag& dag) {
  std::ostringstream out;
  out << "digraph interval {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  const auto& mu = dag.mu_of();
  for (std::size_t i = 0; i < dag.size(); ++i) {
    const auto& n = dag.node(i);
    out << "  n" << i << " [label=\"" << to_marked_string(n.perm(), n.element.marked)
        << "\", mu=" << mu[i] << "];\n";
  }
  for (std::size_t i = 0; i < dag.size(); ++i)
    for (int c : dag.node(i).lower) out << "  n" << c << " -> n" << i << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace permmob
