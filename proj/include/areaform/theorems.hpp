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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "areaform/caratheodory.hpp"
#include "areaform/density.hpp"
#include "areaform/instance.hpp"
#include "areaform/spaces.hpp"

namespace areaform {

enum class Status { Verified, Violated, Assumed, NotDecidableAtScale };

std::string_view to_string(Status status);

struct Condition {
  int number = 0;       // 0 for premises outside the numbered list
  std::string key;
  std::string statement;
  Status status = Status::Assumed;
  std::string witness;  // set for violations, and for assumptions with a reason
  bool conclusion = false;  // a clause the theorem asserts rather than assumes
};

struct HypothesisReport {
  std::string theorem;
  FinenessSemantics semantics = FinenessSemantics::Exact;
  std::string topology;  // how "open" and "closed" were read
  std::vector<Condition> conditions;

  /// No condition violated.
  bool gate_passed() const;
  /// Every assumed condition verified (conclusion clauses are not counted).
  bool all_verified() const;
  const Condition* find(const std::string& key) const;
};

enum class Variant { GeneralI, GeneralII, HausdorffI, HausdorffII, SphericalI, SphericalII };

std::string_view to_string(Variant variant);
std::optional<Variant> parse_variant(std::string_view text);

/// Shared per-instance data: the gauged family for the variant, its
/// filtration, the densities F^zeta(mu, x) and a cache of psi values.
class Analysis {
 public:
  explicit Analysis(MetricInstance instance, SolverOptions solver = {});

  const MetricInstance& instance() const { return instance_; }
  const GaugedFamily& family() const { return family_; }
  const FilteredFamily& filtered() const { return filtered_; }
  const Fineness& fineness() const { return fineness_; }
  const SolverOptions& solver() const { return solver_; }
  Backend backend() const;

  /// F^zeta(mu, x); nullopt where S_{mu,zeta} is not fine at x.
  const std::optional<ExtReal>& density(std::size_t x) const { return density_.at(x); }
  const std::vector<std::optional<ExtReal>>& densities() const { return density_; }

  ExtReal psi(const PointSet& s) const;
  ExtReal mu(const PointSet& s) const { return instance_.measure(s); }

 private:
  MetricInstance instance_;
  SolverOptions solver_;
  GaugedFamily family_;
  FilteredFamily filtered_;
  Fineness fineness_;
  std::vector<std::optional<ExtReal>> density_;
  mutable std::map<PointSet, ExtReal> psi_cache_;
};

/// Layer-cake integral of g over B against psi: the sum over the distinct
/// positive levels t_1 > ... > t_m of g on B of (t_i - t_{i+1}) psi({g >= t_i}),
/// t_{m+1} = 0. A level +inf contributes +inf * psi, which is 0 on psi-null sets.
ExtReal integrate_against_psi(const std::vector<ExtReal>& g, const PointSet& b, const Analysis& analysis);

/// Carathéodory criterion for an outer measure on all subsets of n points.
/// `outer` holds the values indexed by bitmask.
bool caratheodory_measurable(const std::vector<ExtReal>& outer, std::uint64_t set_mask);

struct SubsetCheckOptions {
  std::size_t exhaustive_limit = 12;  // |A| up to this: every subset
  std::size_t samples = 4096;         // otherwise this many random subsets
  std::uint64_t seed = 1;
};

struct LemmaReport {
  HypothesisReport hypotheses;
  bool checked = false;       // conclusion evaluated (gate passed)
  bool exhaustive = false;
  std::size_t sets_checked = 0;
  std::uint64_t seed = 0;
  std::vector<PointSet> violations;  // capped at 16
  ExtReal lhs;  // major lemma: t psi(B)
  ExtReal rhs;  // major lemma: mu(V)

  bool passed() const { return hypotheses.gate_passed() && violations.empty(); }
};

/// mu(E) <= t psi(E) for every E inside A, gated on: mu regular, S_{mu,zeta}
/// covers A finely, F < t on A.
LemmaReport verify_lemma_minor(const Analysis& analysis, const PointSet& a, const ExtReal& t,
                               const SubsetCheckOptions& options = {});

/// t psi(B) <= mu(V), gated on: kept sets closed and mu-measurable, fine
/// cover of B, the (c, eta) condition (searched when c, eta are not given),
/// F > t on B, and V an open superset of B.
LemmaReport verify_lemma_major(const Analysis& analysis, const PointSet& b, const PointSet& v, const ExtReal& t,
                               std::optional<ExtReal> c = std::nullopt, std::optional<ExtReal> eta = std::nullopt);

struct AbsContReport {
  HypothesisReport hypotheses;
  bool absolutely_continuous = false;   // psi(E) = 0 implies mu(E) = 0 for E inside A
  bool infinite_density_null = false;   // mu({x in A : F = +inf}) = 0
  bool exhaustive = false;
  std::optional<PointSet> null_witness;  // psi-null set of positive mu
  PointSet infinite_density_set;
  std::size_t undefined_density = 0;     // points of A where F is not defined

  bool agree() const { return absolutely_continuous == infinite_density_null; }
  /// The direction that needs no sigma-finiteness: no mass on F = +inf
  /// implies absolute continuity.
  bool forward_holds() const { return !infinite_density_null || absolutely_continuous; }
};

AbsContReport check_absolute_continuity(const Analysis& analysis, const PointSet& a,
                                        const SubsetCheckOptions& options = {});

enum class Verdict { Equal, Violated, HypothesesFailed };

std::string_view to_string(Verdict verdict);

struct AreaFormulaReport {
  Variant variant = Variant::GeneralI;
  Backend backend = Backend::Rational;
  HypothesisReport hypotheses;
  PointSet b;
  ExtReal lhs;                  // mu(B)
  std::optional<ExtReal> rhs;   // integral of F over B against psi; absent when F is undefined on B
  std::optional<ExtReal> gap;
  std::vector<std::pair<std::size_t, std::optional<ExtReal>>> densities;  // points of B
  Verdict verdict = Verdict::HypothesesFailed;
  ExtReal tolerance;            // float mode only
};

/// The instance seen through the variant: general keeps the gauge,
/// hausdorff uses c_alpha diam^alpha on the family, spherical the same over
/// generated closed balls.
MetricInstance instance_for_variant(const MetricInstance& instance, Variant variant, const ExtReal& alpha,
                                    const ExtReal& c_alpha);

/// Hypotheses of the variant for the domain A.
HypothesisReport area_formula_hypotheses(const Analysis& analysis, Variant variant, const PointSet& a);

/// Evaluates both sides for B inside A. Reuse `hypotheses` across many B.
AreaFormulaReport evaluate_area_formula(const Analysis& analysis, Variant variant, const HypothesisReport& hypotheses,
                                        const PointSet& b, double tolerance = 1e-9);

AreaFormulaReport verify_area_formula(Variant variant, const MetricInstance& instance, const PointSet& a,
                                      const PointSet& b, double tolerance = 1e-9);

struct SemicontinuityPoint {
  std::size_t point = 0;
  ExtReal value;         // truncated density at the point
  double radius = 0;     // radius from the maximizing set, inside which the value must stay > t
  double clear_radius = 0;  // largest radius whose open ball in A stays in the super-level set
  bool holds = false;
  bool below_resolution = false;  // radius < h: the ball holds the point only
};

struct SemicontinuityReport {
  ExtReal delta;
  ExtReal t;
  double resolution = 0;
  std::vector<ExtReal> values;           // truncated density at every point of the space
  std::vector<SemicontinuityPoint> points;  // the super-level set inside A
  bool passed = true;
};

/// The truncated density d_delta(x) = sup of Q over kept sets containing x with
/// diam < delta, and a check that {d_delta > t} is open in A at resolution:
/// around each y of it, the ball whose radius follows from the set realizing
/// the sup stays inside the super-level set. Requires a diameter-power gauge
/// and an instance with a resolution; throws ResolutionTooCoarseError when h > delta / 2.
SemicontinuityReport semicontinuity_probe(const Analysis& analysis, const PointSet& a, const ExtReal& delta,
                                          const ExtReal& t);

}  // namespace areaform
