#pragma once

// Unweighted set cover: greedy and depth-first branch-and-bound, with optional
// pairwise conflicts between sets (used for SBCC, where a red box and a blue
// box with intersecting interiors may not both be chosen).

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "boxcover/geometry.hpp"

namespace boxcover {

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

struct SetCoverInstance {
  std::size_t universe = 0;
  std::vector<Mask> sets;
  /// Empty, or one mask over set indices per set. Must be symmetric.
  std::vector<Mask> conflicts;

  bool has_conflicts() const noexcept { return !conflicts.empty(); }
};

struct SetCoverResult {
  std::vector<std::size_t> chosen;
  bool optimal = false;
  std::size_t nodes = 0;
};

/// Repeatedly takes the available set covering the most uncovered elements,
/// lowest index first on ties. nullopt if conflicts leave an element uncoverable.
inline std::optional<std::vector<std::size_t>> greedy_set_cover(const SetCoverInstance& inst) {
  Mask covered(inst.universe);
  Mask forbidden(inst.sets.size());
  std::vector<std::size_t> chosen;
  while (!covered.all()) {
    std::size_t best = inst.sets.size();
    std::size_t best_gain = 0;
    for (std::size_t s = 0; s < inst.sets.size(); ++s) {
      if (forbidden.test(s)) continue;
      const std::size_t gain = (inst.sets[s] - covered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    if (best == inst.sets.size()) return std::nullopt;
    chosen.push_back(best);
    covered |= inst.sets[best];
    if (inst.has_conflicts()) forbidden |= inst.conflicts[best];
    forbidden.set(best);
  }
  return chosen;
}

namespace detail {

class CoverSearch {
 public:
  CoverSearch(const SetCoverInstance& inst, std::size_t budget)
      : inst_(inst), budget_(budget), removed_(inst.sets.size()) {
    remove_dominated();
    const std::size_t u = inst_.universe;
    covering_.assign(u, Mask(inst_.sets.size()));
    cocoverable_.assign(u, Mask(u));
    for (std::size_t s = 0; s < inst_.sets.size(); ++s) {
      if (removed_.test(s)) continue;
      for (auto e = inst_.sets[s].find_first(); e != Mask::npos; e = inst_.sets[s].find_next(e)) {
        covering_[e].set(s);
        cocoverable_[e] |= inst_.sets[s];
      }
    }
    order_.resize(u);
    for (std::size_t e = 0; e < u; ++e) order_[e] = e;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return covering_[a].count() < covering_[b].count();
    });
  }

  SetCoverResult run(std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    best_size_ = best_.empty() && inst_.universe > 0 ? std::numeric_limits<std::size_t>::max()
                                                    : best_.size();
    std::vector<std::size_t> chosen;
    dfs(Mask(inst_.universe), removed_, chosen);
    return {best_, !truncated_, nodes_};
  }

 private:
  // A set is dropped when another covers a superset of its elements and
  // conflicts with no more sets than it does.
  void remove_dominated() {
    const std::size_t n = inst_.sets.size();
    const bool conf = inst_.has_conflicts();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || removed_.test(b)) continue;
        if (!inst_.sets[a].is_subset_of(inst_.sets[b])) continue;
        bool equal = inst_.sets[a] == inst_.sets[b];
        if (conf) {
          Mask cb = inst_.conflicts[b];
          Mask ca = inst_.conflicts[a];
          cb.reset(a);
          ca.reset(b);
          if (!cb.is_subset_of(ca)) continue;
          equal = equal && ca == cb;
        }
        if (equal && b > a) continue;
        removed_.set(a);
        break;
      }
    }
  }

  std::size_t independent_lower_bound(const Mask& covered) const {
    Mask blocked = covered;
    std::size_t count = 0;
    for (std::size_t e : order_) {
      if (blocked.test(e)) continue;
      ++count;
      blocked |= cocoverable_[e];
      blocked.set(e);
    }
    return count;
  }

  void dfs(const Mask& covered, const Mask& forbidden, std::vector<std::size_t>& chosen) {
    if (++nodes_ > budget_) {
      truncated_ = true;
      return;
    }
    if (covered.all()) {
      if (chosen.size() < best_size_) {
        best_ = chosen;
        best_size_ = chosen.size();
      }
      return;
    }
    if (chosen.size() + 1 >= best_size_) return;
    if (chosen.size() + independent_lower_bound(covered) >= best_size_) return;

    std::size_t pick = inst_.universe;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t e : order_) {
      if (covered.test(e)) continue;
      const std::size_t avail = (covering_[e] - forbidden).count();
      if (avail < fewest) {
        fewest = avail;
        pick = e;
        if (avail <= 1) break;
      }
    }
    if (fewest == 0) return;

    const Mask options = covering_[pick] - forbidden;
    std::vector<std::pair<std::size_t, std::size_t>> ranked;
    for (auto s = options.find_first(); s != Mask::npos; s = options.find_next(s))
      ranked.emplace_back((inst_.sets[s] - covered).count(), s);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    Mask local = forbidden;
    for (const auto& [gain, s] : ranked) {
      Mask next_forbidden = local;
      if (inst_.has_conflicts()) next_forbidden |= inst_.conflicts[s];
      next_forbidden.set(s);
      chosen.push_back(s);
      dfs(covered | inst_.sets[s], next_forbidden, chosen);
      chosen.pop_back();
      if (truncated_) return;
      local.set(s);
    }
  }

  const SetCoverInstance& inst_;
  std::size_t budget_;
  Mask removed_;
  std::vector<Mask> covering_;
  std::vector<Mask> cocoverable_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
  std::size_t nodes_ = 0;
  bool truncated_ = false;
};

}  // namespace detail

/// Minimum-cardinality cover by branch-and-bound. `incumbent` must be a
/// feasible cover (or empty, meaning none known). If the node budget runs out
/// the best cover found so far is returned with optimal = false.
inline SetCoverResult exact_set_cover(const SetCoverInstance& inst,
                                      std::vector<std::size_t> incumbent,
                                      std::size_t node_budget = kDefaultNodeBudget) {
  if (inst.universe == 0) return {{}, true, 0};
  detail::CoverSearch search(inst, node_budget);
  return search.run(std::move(incumbent));
}

}  // namespace boxcover
