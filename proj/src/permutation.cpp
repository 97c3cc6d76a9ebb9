#include "permmob/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace permmob {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Backtracking matcher. For pattern index j it keeps the pattern indices of
// the nearest smaller and nearest larger values among sigma[0..j), so each
// candidate host letter is checked against just two bounds.
class Matcher {
 public:
  Matcher(const Permutation& sigma, const Permutation& tau)
      : sigma_(sigma), tau_(tau), k_(sigma.size()), n_(tau.size()) {
    below_.assign(static_cast<std::size_t>(k_), -1);
    above_.assign(static_cast<std::size_t>(k_), -1);
    for (int j = 0; j < k_; ++j) {
      for (int p = 0; p < j; ++p) {
        if (sigma[p] < sigma[j] &&
            (below_[j] < 0 || sigma[p] > sigma[below_[j]])) below_[j] = p;
        if (sigma[p] > sigma[j] &&
            (above_[j] < 0 || sigma[p] < sigma[above_[j]])) above_[j] = p;
      }
    }
    chosen_.assign(static_cast<std::size_t>(k_), 0);
  }

  void run(const std::function<bool(std::span<const int>)>& visit) {
    if (k_ == 0 || k_ > n_) return;
    visit_ = &visit;
    extend(0, 0);
  }

 private:
  // Returns false once the visitor asked to stop.
  bool extend(int j, int from) {
    if (j == k_) return (*visit_)(std::span<const int>(chosen_));
    const int lo = below_[j] < 0 ? 0 : tau_[chosen_[below_[j]]];
    const int hi = above_[j] < 0 ? n_ + 1 : tau_[chosen_[above_[j]]];
    const int last = n_ - (k_ - j);
    for (int i = from; i <= last; ++i) {
      const int v = tau_[i];
      if (v <= lo || v >= hi) continue;
      chosen_[j] = i;
      if (!extend(j + 1, i + 1)) return false;
    }
    return true;
  }

  const Permutation& sigma_;
  const Permutation& tau_;
  int k_;
  int n_;
  std::vector<int> below_;
  std::vector<int> above_;
  std::vector<int> chosen_;
  const std::function<bool(std::span<const int>)>* visit_ = nullptr;
};

}  // namespace

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : letters_) {
    require(v >= 1 && v <= n, "permutation letters must be 1..n");
    require(!seen[v], "permutation letters must be distinct");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::vector<int> Permutation::positions_of() const {
  std::vector<int> pos(letters_.size());
  for (int i = 0; i < size(); ++i) pos[letters_[i] - 1] = i;
  return pos;
}

Permutation standard_form(std::span<const int> word) {
  require(!word.empty(), "standard form of an empty word");
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0) require(word[order[r]] != word[order[r - 1]], "repeated letter in word");
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(out));
}

std::uint64_t Occurrence::mask() const {
  std::uint64_t m = 0;
  for (int p : positions) m |= std::uint64_t{1} << p;
  return m;
}

std::vector<int> letters_at(const Permutation& host, std::span<const int> positions) {
  std::vector<int> w;
  w.reserve(positions.size());
  for (int p : positions) w.push_back(host[p]);
  return w;
}

Permutation pattern_of(const Permutation& host, const Occurrence& occ) {
  return standard_form(letters_at(host, occ.positions));
}

Permutation validate_occurrence(const Permutation& host, const Occurrence& occ) {
  require(occ.host_length == host.size(), "occurrence host length mismatch");
  require(!occ.positions.empty(), "occurrence must be nonempty");
  for (std::size_t i = 0; i < occ.positions.size(); ++i) {
    require(occ.positions[i] >= 0 && occ.positions[i] < host.size(),
            "occurrence position out of range");
    if (i > 0) require(occ.positions[i - 1] < occ.positions[i],
                       "occurrence positions must be strictly increasing");
  }
  return pattern_of(host, occ);
}

void for_each_occurrence(const Permutation& sigma, const Permutation& tau,
                         const std::function<bool(std::span<const int>)>& visit) {
  Matcher(sigma, tau).run(visit);
}

std::vector<Occurrence> occurrences(const Permutation& sigma, const Permutation& tau) {
  std::vector<Occurrence> out;
  for_each_occurrence(sigma, tau, [&](std::span<const int> pos) {
    out.push_back({std::vector<int>(pos.begin(), pos.end()), tau.size()});
    return true;
  });
  return out;
}

std::size_t count_occurrences(const Permutation& sigma, const Permutation& tau) {
  std::size_t count = 0;
  for_each_occurrence(sigma, tau, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

bool contains(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() > tau.size()) return false;
  if (sigma.size() == tau.size()) return sigma == tau;
  bool found = false;
  for_each_occurrence(sigma, tau, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

Permutation delete_letters(const Permutation& tau, std::span<const int> positions) {
  std::vector<bool> drop(static_cast<std::size_t>(tau.size()), false);
  for (int p : positions) {
    require(p >= 0 && p < tau.size(), "deletion position out of range");
    drop[p] = true;
  }
  std::vector<int> rest;
  for (int i = 0; i < tau.size(); ++i)
    if (!drop[i]) rest.push_back(tau[i]);
  require(!rest.empty(), "cannot delete every letter");
  return standard_form(rest);
}

Occurrence extend_occurrence(const Permutation& host, const Occurrence& occ,
                             std::span<const int> extra_letters) {
  const auto where = host.positions_of();
  std::vector<int> pos = occ.positions;
  for (int v : extra_letters) {
    require(v >= 1 && v <= host.size(), "letter not in host");
    const int p = where[v - 1];
    require(!std::binary_search(occ.positions.begin(), occ.positions.end(), p),
            "letter already belongs to the occurrence");
    pos.push_back(p);
  }
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  return {std::move(pos), host.size()};
}

std::vector<PositionedLetter> complement(const Permutation& host, const Occurrence& occ) {
  std::vector<bool> in(static_cast<std::size_t>(host.size()), false);
  for (int p : occ.positions) in[p] = true;
  std::vector<PositionedLetter> out;
  for (int i = 0; i < host.size(); ++i)
    if (!in[i]) out.push_back({i, host[i]});
  return out;
}

std::vector<IntervalBlock> interval_blocks(const Permutation& tau) {
  std::vector<IntervalBlock> out;
  const int n = tau.size();
  for (int a = 0; a < n; ++a) {
    int lo = tau[a], hi = tau[a];
    for (int b = a + 1; b < n; ++b) {
      lo = std::min(lo, tau[b]);
      hi = std::max(hi, tau[b]);
      if (hi - lo == b - a) out.push_back({a, b, lo, hi});
    }
  }
  return out;
}

const IntervalBlock* first_disjoint_block(std::span<const IntervalBlock> blocks,
                                          const std::vector<bool>& used) {
  for (const auto& block : blocks) {
    bool clear = true;
    for (int p = block.start_pos; p <= block.end_pos && clear; ++p) clear = !used[p];
    if (clear) return &block;
  }
  return nullptr;
}

bool pair_has_interval_block_occ(const Occurrence& occ, const Permutation& tau) {
  std::vector<bool> used(static_cast<std::size_t>(tau.size()), false);
  for (int p : occ.positions) used[p] = true;
  const auto blocks = interval_blocks(tau);
  return first_disjoint_block(blocks, used) != nullptr;
}

bool pair_has_interval_block(const Permutation& sigma, const Permutation& tau) {
  std::vector<bool> used(static_cast<std::size_t>(tau.size()), false);
  bool any = false;
  for_each_occurrence(sigma, tau, [&](std::span<const int> pos) {
    any = true;
    for (int p : pos) used[p] = true;
    return true;
  });
  require(any, "pattern is not contained in host");
  const auto blocks = interval_blocks(tau);
  return first_disjoint_block(blocks, used) != nullptr;
}

std::vector<Region> regions(const Occurrence& occ, const Permutation& tau) {
  std::vector<Region> out;
  int last = -2;
  for (const auto& letter : complement(tau, occ)) {
    if (letter.position != last + 1 || out.empty()) out.emplace_back();
    out.back().entries.push_back(letter);
    last = letter.position;
  }
  return out;
}

namespace {

// below[v] = number of occurrence letters with value < v.
std::vector<int> occurrence_value_prefix(const Occurrence& occ, const Permutation& tau) {
  std::vector<int> below(static_cast<std::size_t>(tau.size()) + 2, 0);
  std::vector<bool> in(static_cast<std::size_t>(tau.size()) + 1, false);
  for (int p : occ.positions) in[tau[p]] = true;
  for (int v = 1; v <= tau.size() + 1; ++v) below[v] = below[v - 1] + (in[v - 1] ? 1 : 0);
  return below;
}

std::vector<PositionedLetter> by_value(std::vector<PositionedLetter> letters) {
  std::sort(letters.begin(), letters.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  return letters;
}

}  // namespace

std::optional<UnseparatedPair> first_unseparated_pair(const Occurrence& occ,
                                                      const Permutation& tau) {
  const auto below = occurrence_value_prefix(occ, tau);
  const auto all = regions(occ, tau);
  for (std::size_t r = 0; r < all.size(); ++r) {
    const auto& e = all[r].entries;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        auto x = e[i], y = e[j];
        if (x.value > y.value) std::swap(x, y);
        if (below[y.value] - below[x.value + 1] == 0)
          return UnseparatedPair{x, y, static_cast<int>(r)};
      }
    }
  }
  return std::nullopt;
}

bool is_separated(const Occurrence& occ, const Permutation& tau) {
  return !first_unseparated_pair(occ, tau).has_value();
}

std::vector<std::vector<PositionedLetter>> similar_groups(const Occurrence& occ,
                                                          const Permutation& tau) {
  const auto below = occurrence_value_prefix(occ, tau);
  std::vector<std::vector<PositionedLetter>> groups;
  for (const auto& region : regions(occ, tau)) {
    const auto sorted = by_value(region.entries);
    std::vector<PositionedLetter> run;
    auto flush = [&] {
      if (run.size() >= 2) groups.push_back(run);
      run.clear();
    };
    for (const auto& letter : sorted) {
      // Similar to the previous letter iff no occurrence value lies between.
      if (!run.empty() && below[letter.value] - below[run.back().value + 1] != 0) flush();
      run.push_back(letter);
    }
    flush();
  }
  return groups;
}

}  // namespace permmob
