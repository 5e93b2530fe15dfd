// Copyright 2026 The areaform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "areaform/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace areaform {

std::string_view to_string(Certificate certificate) {
  return certificate == Certificate::Exact ? "exact" : "greedy-upper-bound";
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct Candidate {
  std::size_t index;  // into the family
  Bits local;         // members of the target covered by this set
  ExtReal cost;
  double approx;
};

/// Admissible members restricted to the target, plus the zero-cost ones that
/// are always worth taking.
struct Reduction {
  std::vector<std::size_t> target_points;
  std::vector<Candidate> candidates;  // positive cost, sorted by cost
  std::vector<std::size_t> free_sets;
  Bits free_cover;
  bool feasible = false;
  bool exact = true;
};

Reduction reduce(const GaugedFamily& family, const ExtReal& delta, const PointSet& target) {
  Reduction r;
  r.target_points = target.members();
  const std::size_t m = r.target_points.size();
  std::vector<std::size_t> local_pos(family.universe(), PointSet::npos);
  for (std::size_t k = 0; k < m; ++k) local_pos[r.target_points[k]] = k;

  r.free_cover = Bits(m);
  Bits reachable(m);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& member = family[i];
    if (member.diameter > delta || member.zeta.is_infinite() || !member.set.intersects(target)) continue;
    Bits local(m);
    (member.set & target).for_each([&](std::size_t p) { local.set(local_pos[p]); });
    reachable |= local;
    r.exact = r.exact && member.zeta.is_exact();
    if (member.zeta.is_zero()) {
      r.free_sets.push_back(i);
      r.free_cover |= local;
    } else {
      r.candidates.push_back(Candidate{i, std::move(local), member.zeta, member.zeta.to_double()});
    }
  }
  r.feasible = reachable.all();
  if (!r.feasible) return r;

  // Drop points already covered for free, then dominated candidates.
  for (auto& c : r.candidates) c.local -= r.free_cover;
  std::erase_if(r.candidates, [](const Candidate& c) { return c.local.none(); });
  std::stable_sort(r.candidates.begin(), r.candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.cost < b.cost; });
  if (r.candidates.size() <= 4000) {
    std::vector<bool> dominated(r.candidates.size(), false);
    for (std::size_t j = 0; j < r.candidates.size(); ++j) {
      for (std::size_t i = 0; i < j && !dominated[j]; ++i) {
        // i precedes j, so cost_i <= cost_j.
        if (!dominated[i] && r.candidates[j].local.is_subset_of(r.candidates[i].local)) dominated[j] = true;
      }
    }
    std::size_t k = 0;
    std::erase_if(r.candidates, [&](const Candidate&) { return dominated[k++]; });
  }
  return r;
}

class CoverSearch {
 public:
  CoverSearch(const Reduction& reduction, const SolverOptions& options)
      : r_(reduction), options_(options), m_(reduction.target_points.size()),
        excluded_(reduction.candidates.size(), false), by_point_(m_), counts_(reduction.candidates.size(), 0),
        stamp_(reduction.candidates.size(), 0) {
    for (std::size_t j = 0; j < r_.candidates.size(); ++j) {
      const Bits& local = r_.candidates[j].local;
      for (auto p = local.find_first(); p != Bits::npos; p = local.find_next(p)) by_point_[p].push_back(j);
    }
    zero_ = r_.exact ? ExtReal() : ExtReal::from_double(0.0);
  }

  void set_incumbent(ExtReal value, std::vector<std::size_t> chosen) {
    best_ = std::move(value);
    best_cover_ = std::move(chosen);
  }

  bool run() {
    Bits uncovered(m_);
    uncovered.set();
    uncovered -= r_.free_cover;
    std::vector<std::size_t> chosen;
    search(uncovered, zero_, chosen);
    return !aborted_;
  }

  const ExtReal& best() const { return best_; }
  const std::vector<std::size_t>& best_cover() const { return best_cover_; }
  std::size_t nodes() const { return nodes_; }

 private:
  std::size_t count_in(std::size_t j, const Bits& uncovered) {
    if (stamp_[j] != node_stamp_) {
      stamp_[j] = node_stamp_;
      counts_[j] = (r_.candidates[j].local & uncovered).count();
    }
    return counts_[j];
  }

  // Dual-feasible point prices: y_p = min over active sets S containing p of
  // cost(S) / |S & U|. Their sum is a lower bound on any cover of U.
  double lower_bound_approx(const Bits& uncovered) {
    ++node_stamp_;
    double total = 0.0;
    for (auto p = uncovered.find_first(); p != Bits::npos; p = uncovered.find_next(p)) {
      double price = std::numeric_limits<double>::infinity();
      for (std::size_t j : by_point_[p]) {
        if (excluded_[j]) continue;
        price = std::min(price, r_.candidates[j].approx / static_cast<double>(count_in(j, uncovered)));
      }
      total += price;
    }
    return total;
  }

  ExtReal lower_bound_exact(const Bits& uncovered) {
    ++node_stamp_;
    ExtReal total = zero_;
    for (auto p = uncovered.find_first(); p != Bits::npos; p = uncovered.find_next(p)) {
      std::optional<ExtReal> price;
      for (std::size_t j : by_point_[p]) {
        if (excluded_[j]) continue;
        ExtReal v = r_.candidates[j].cost / ExtReal(static_cast<int>(count_in(j, uncovered)));
        if (!price || v < *price) price = std::move(v);
      }
      if (!price) return ExtReal::infinity();
      total += *price;
    }
    return total;
  }

  bool can_prune(const Bits& uncovered, const ExtReal& spent) {
    if (best_.is_infinite()) return false;
    double bound = spent.to_double() + lower_bound_approx(uncovered);
    double best = best_.to_double();
    double slack = 1e-9 * std::max(std::abs(best), 1e-300);
    if (!r_.exact) return bound >= best - 1e-12 * std::max(std::abs(best), 1e-300);
    if (bound < best - slack) return false;
    if (bound > best + slack) return true;
    return spent + lower_bound_exact(uncovered) >= best_;
  }

  void search(Bits& uncovered, const ExtReal& spent, std::vector<std::size_t>& chosen) {
    if (aborted_) return;
    ++nodes_;
    if (options_.node_limit != 0 && nodes_ > options_.node_limit) {
      aborted_ = true;
      return;
    }
    if (uncovered.none()) {
      if (spent < best_) set_incumbent(spent, chosen);
      return;
    }
    if (can_prune(uncovered, spent)) return;

    // Branch on the uncovered point with the fewest remaining candidates.
    std::size_t branch_point = Bits::npos;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (auto p = uncovered.find_first(); p != Bits::npos; p = uncovered.find_next(p)) {
      std::size_t k = 0;
      for (std::size_t j : by_point_[p]) k += excluded_[j] ? 0 : 1;
      if (k < fewest) {
        fewest = k;
        branch_point = p;
        if (k == 0) return;
      }
    }
    std::vector<std::size_t> undo;
    for (std::size_t j : by_point_[branch_point]) {
      if (excluded_[j]) continue;
      ExtReal next = spent + r_.candidates[j].cost;
      if (!best_.is_infinite() && next >= best_) break;  // candidates are sorted by cost
      Bits child = uncovered - r_.candidates[j].local;
      chosen.push_back(j);
      search(child, next, chosen);
      chosen.pop_back();
      // Later siblings need not reuse j: that subtree was just explored.
      excluded_[j] = true;
      undo.push_back(j);
      if (aborted_) break;
    }
    for (std::size_t j : undo) excluded_[j] = false;
  }

  const Reduction& r_;
  const SolverOptions& options_;
  std::size_t m_;
  std::vector<bool> excluded_;
  std::vector<std::vector<std::size_t>> by_point_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> stamp_;
  std::size_t node_stamp_ = 0;
  ExtReal zero_;
  ExtReal best_ = ExtReal::infinity();
  std::vector<std::size_t> best_cover_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

// Returns candidate positions (into r.candidates) of a greedy cover.
std::vector<std::size_t> greedy_positions(const Reduction& r) {
  const std::size_t m = r.target_points.size();
  Bits uncovered(m);
  uncovered.set();
  uncovered -= r.free_cover;
  std::vector<std::size_t> picked;
  while (uncovered.any()) {
    std::size_t best = Bits::npos;
    std::size_t best_new = 0;
    for (std::size_t j = 0; j < r.candidates.size(); ++j) {
      std::size_t fresh = (r.candidates[j].local & uncovered).count();
      if (fresh == 0) continue;
      // cost_j / fresh < cost_best / best_new
      if (best == Bits::npos ||
          r.candidates[j].cost * ExtReal(static_cast<int>(best_new)) <
              r.candidates[best].cost * ExtReal(static_cast<int>(fresh))) {
        best = j;
        best_new = fresh;
      }
    }
    picked.push_back(best);
    uncovered -= r.candidates[best].local;
  }
  return picked;
}

CoverSolution finish(const Reduction& r, const std::vector<std::size_t>& positions, ExtReal value,
                     Certificate certificate, std::size_t nodes) {
  CoverSolution out;
  out.value = std::move(value);
  out.certificate = certificate;
  out.nodes = nodes;
  out.cover = r.free_sets;
  for (auto j : positions) out.cover.push_back(r.candidates[j].index);
  std::sort(out.cover.begin(), out.cover.end());
  return out;
}

ExtReal sum_costs(const Reduction& r, const std::vector<std::size_t>& positions) {
  ExtReal total = r.exact ? ExtReal() : ExtReal::from_double(0.0);
  for (auto j : positions) total += r.candidates[j].cost;
  return total;
}

}  // namespace

CoverSolution greedy_cover(const GaugedFamily& family, const ExtReal& delta, const PointSet& target) {
  if (target.empty()) return CoverSolution{};
  Reduction r = reduce(family, delta, target);
  if (!r.feasible) return CoverSolution{ExtReal::infinity(), {}, Certificate::GreedyUpperBound, 0};
  auto positions = greedy_positions(r);
  return finish(r, positions, sum_costs(r, positions), Certificate::GreedyUpperBound, 0);
}

CoverSolution phi(const GaugedFamily& family, const ExtReal& delta, const PointSet& target,
                  const SolverOptions& options) {
  if (delta.is_zero()) throw std::invalid_argument("delta must be positive");
  if (target.universe() != family.universe()) throw std::invalid_argument("target over a different universe");
  if (target.empty()) return CoverSolution{};
  Reduction r = reduce(family, delta, target);
  if (!r.feasible) return CoverSolution{ExtReal::infinity(), {}, Certificate::Exact, 0};

  auto greedy = greedy_positions(r);
  ExtReal greedy_value = sum_costs(r, greedy);
  if (options.greedy_only) return finish(r, greedy, greedy_value, Certificate::GreedyUpperBound, 0);

  CoverSearch search(r, options);
  search.set_incumbent(greedy_value, greedy);
  bool complete = search.run();
  return finish(r, search.best_cover(), search.best(),
                complete ? Certificate::Exact : Certificate::GreedyUpperBound, search.nodes());
}

std::vector<ExtReal> delta_probes(const GaugedFamily& family) {
  std::vector<ExtReal> diameters;
  for (const auto& m : family) {
    if (!m.diameter.is_zero()) diameters.push_back(m.diameter);
  }
  std::sort(diameters.begin(), diameters.end());
  diameters.erase(std::unique(diameters.begin(), diameters.end()), diameters.end());
  const ExtReal half(1, 2);
  std::vector<ExtReal> probes;
  if (diameters.empty()) {
    probes.emplace_back(1);
    return probes;
  }
  probes.push_back(diameters.front() * half);
  for (std::size_t i = 0; i + 1 < diameters.size(); ++i) {
    probes.push_back((diameters[i] + diameters[i + 1]) * half);
  }
  probes.push_back(diameters.back() * ExtReal(2));
  return probes;
}

PsiResult psi_profile(const GaugedFamily& family, const PointSet& target, const SolverOptions& options) {
  PsiResult result;
  if (target.empty()) {
    result.value = ExtReal();
    return result;
  }
  auto probes = delta_probes(family);
  if (options.delta_floor) {
    const ExtReal& floor = *options.delta_floor;
    std::erase_if(probes, [&](const ExtReal& d) { return d < floor; });
    if (!floor.is_zero()) probes.insert(probes.begin(), floor);
  }
  for (auto& delta : probes) {
    CoverSolution s = phi(family, delta, target, options);
    if (result.probes.empty() || s.value > result.value) result.value = s.value;
    result.probes.push_back(PsiProbe{std::move(delta), std::move(s)});
  }
  return result;
}

ExtReal psi(const GaugedFamily& family, const PointSet& target, const SolverOptions& options) {
  if (target.empty()) return ExtReal();
  // Every cover admissible at a smaller delta is admissible at a larger one,
  // so phi is nonincreasing and its supremum sits at the smallest probe.
  ExtReal delta = delta_probes(family).front();
  if (options.delta_floor && !options.delta_floor->is_zero()) delta = *options.delta_floor;
  return phi(family, delta, target, options).value;
}

ExtReal hausdorff_measure(const FiniteMetricSpace& space, const ExtReal& alpha, const ExtReal& c_alpha,
                          const Family& family, const PointSet& target) {
  return psi(GaugedFamily::evaluate(space, family, Gauge::hausdorff(alpha, c_alpha)), target);
}

ExtReal spherical_measure(const FiniteMetricSpace& space, const ExtReal& alpha, const ExtReal& c_alpha,
                          const PointSet& target) {
  return psi(GaugedFamily::evaluate(space, closed_ball_family(space), Gauge::spherical(alpha, c_alpha)), target);
}

}  // namespace areaform
