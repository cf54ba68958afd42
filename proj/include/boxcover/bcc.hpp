#pragma once

// Boxes Class Cover: cover every red point with boxes (or half-strips) that
// contain no blue point in their interior.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "boxcover/candidates.hpp"
#include "boxcover/geometry.hpp"
#include "boxcover/set_cover.hpp"

namespace boxcover {

struct BccSolution {
  Cover cover;
  bool optimal = false;
  std::size_t candidates_considered = 0;
  std::size_t nodes = 0;
  /// 1 + ln max(1, |R|): the greedy approximation guarantee.
  double opt_bound_log = 1.0;
};

namespace detail {

struct BccProblem {
  std::vector<Candidate> candidates;
  std::vector<std::size_t> reds;  // point index of each universe element
  SetCoverInstance instance;
};

inline BccProblem make_bcc_problem(const BichromaticSet& s, Shape shape) {
  BccProblem prob;
  prob.reds = s.indices_of(Color::Red);
  prob.candidates = dedupe_by_subset(
      to_candidates(enumerate_maximal_mono_boxes(s, Color::Red, shape), Color::Red, s));
  prob.instance.universe = prob.reds.size();
  for (const auto& c : prob.candidates) {
    Mask m(prob.reds.size());
    for (std::size_t e = 0; e < prob.reds.size(); ++e)
      if (c.covered.test(prob.reds[e])) m.set(e);
    prob.instance.sets.push_back(std::move(m));
  }
  return prob;
}

inline Cover cover_from(const std::vector<Candidate>& cands, const std::vector<std::size_t>& chosen,
                        Coord scale) {
  Cover z;
  z.scale = scale;
  for (std::size_t i : chosen) z.boxes.push_back({cands[i].box, cands[i].color});
  return z;
}

inline double log_guarantee(std::size_t reds) {
  return 1.0 + std::log(static_cast<double>(std::max<std::size_t>(1, reds)));
}

}  // namespace detail

/// Greedy set cover over the maximal red candidates; ties go to the
/// lexicographically smallest corner tuple.
inline BccSolution solve_bcc_greedy(const BichromaticSet& s, Shape shape = Shape::Box) {
  BccSolution sol;
  sol.cover.scale = s.scale();
  sol.opt_bound_log = detail::log_guarantee(s.count(Color::Red));
  if (s.count(Color::Red) == 0) {
    sol.optimal = true;
    return sol;
  }
  auto prob = detail::make_bcc_problem(s, shape);
  sol.candidates_considered = prob.candidates.size();
  auto chosen = greedy_set_cover(prob.instance);
  detail::ensure(chosen.has_value(), "a red point admits no maximal candidate");
  sol.cover = detail::cover_from(prob.candidates, *chosen, s.scale());
  return sol;
}

/// Minimum BCC over the maximal candidates (which lose nothing: any red box
/// grows into a maximal one). optimal=false when the node budget ran out.
inline BccSolution solve_bcc_exact(const BichromaticSet& s, Shape shape = Shape::Box,
                                   std::size_t budget = kDefaultNodeBudget) {
  BccSolution sol;
  sol.cover.scale = s.scale();
  sol.opt_bound_log = detail::log_guarantee(s.count(Color::Red));
  if (s.count(Color::Red) == 0) {
    sol.optimal = true;
    return sol;
  }
  auto prob = detail::make_bcc_problem(s, shape);
  sol.candidates_considered = prob.candidates.size();
  auto incumbent = greedy_set_cover(prob.instance);
  detail::ensure(incumbent.has_value(), "a red point admits no maximal candidate");
  auto result = exact_set_cover(prob.instance, *incumbent, budget);
  std::sort(result.chosen.begin(), result.chosen.end());
  sol.cover = detail::cover_from(prob.candidates, result.chosen, s.scale());
  sol.optimal = result.optimal;
  sol.nodes = result.nodes;
  return sol;
}

}  // namespace boxcover
