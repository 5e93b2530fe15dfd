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

#include "areaform/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

namespace areaform {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Verified: return "verified";
    case Status::Violated: return "violated";
    case Status::Assumed: return "assumed";
    case Status::NotDecidableAtScale: return "not-decidable-at-scale";
  }
  return "?";
}

bool HypothesisReport::gate_passed() const {
  return std::none_of(conditions.begin(), conditions.end(),
                      [](const Condition& c) { return c.status == Status::Violated; });
}

bool HypothesisReport::all_verified() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const Condition& c) { return c.conclusion || c.status == Status::Verified; });
}

const Condition* HypothesisReport::find(const std::string& key) const {
  for (const auto& c : conditions) {
    if (c.key == key) return &c;
  }
  return nullptr;
}

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::GeneralI: return "general-I";
    case Variant::GeneralII: return "general-II";
    case Variant::HausdorffI: return "hausdorff-I";
    case Variant::HausdorffII: return "hausdorff-II";
    case Variant::SphericalI: return "spherical-I";
    case Variant::SphericalII: return "spherical-II";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
  for (auto v : {Variant::GeneralI, Variant::GeneralII, Variant::HausdorffI, Variant::HausdorffII,
                 Variant::SphericalI, Variant::SphericalII}) {
    if (text == to_string(v)) return v;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Equal: return "equal";
    case Verdict::Violated: return "violated";
    case Verdict::HypothesesFailed: return "hypotheses-failed";
  }
  return "?";
}

Analysis::Analysis(MetricInstance instance, SolverOptions solver)
    : instance_(std::move(instance)), solver_(std::move(solver)) {
  instance_.validate();
  family_ = instance_.gauged_family();
  filtered_ = filter_family(instance_.measure, family_);
  fineness_ = Fineness::of(instance_);
  density_ = federer_densities(family_, filtered_, fineness_);
  if (instance_.resolution && !solver_.delta_floor) solver_.delta_floor = instance_.fineness_floor();
}

Backend Analysis::backend() const {
  if (!family_.is_exact() || !instance_.measure.is_exact()) return Backend::Float;
  return instance_.backend;
}

ExtReal Analysis::psi(const PointSet& s) const {
  auto it = psi_cache_.find(s);
  if (it != psi_cache_.end()) return it->second;
  ExtReal value = areaform::psi(family_, s, solver_);
  psi_cache_.emplace(s, value);
  return value;
}

ExtReal integrate_against_psi(const std::vector<ExtReal>& g, const PointSet& b, const Analysis& analysis) {
  if (g.size() != b.universe()) throw std::invalid_argument("integrand size differs from the universe");
  std::vector<ExtReal> levels;
  b.for_each([&](std::size_t x) {
    if (!g[x].is_zero()) levels.push_back(g[x]);
  });
  std::sort(levels.begin(), levels.end(), [](const ExtReal& p, const ExtReal& q) { return p > q; });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  ExtReal total;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    ExtReal below = i + 1 < levels.size() ? levels[i + 1] : ExtReal();
    PointSet level(b.universe());
    b.for_each([&](std::size_t x) {
      if (g[x] >= levels[i]) level.insert(x);
    });
    total += (levels[i] - below) * analysis.psi(level);
  }
  return total;
}

bool caratheodory_measurable(const std::vector<ExtReal>& outer, std::uint64_t set_mask) {
  const std::uint64_t full = outer.size() - 1;
  for (std::uint64_t t = 1; t <= full; ++t) {
    if (outer[t] < outer[t & set_mask] + outer[t & ~set_mask & full]) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kCaratheodoryLimit = 10;
constexpr std::size_t kViolationCap = 16;

std::uint64_t mask_of(const PointSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](std::size_t i) { m |= std::uint64_t{1} << i; });
  return m;
}

std::string format_set(const FiniteMetricSpace& space, const PointSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += space.id(i);
    first = false;
  });
  return out + "}";
}

bool within(const ExtReal& lhs, const ExtReal& rhs, bool exact, double tolerance = 1e-9) {
  if (lhs <= rhs) return true;
  if (exact || lhs.is_infinite() || rhs.is_infinite()) return false;
  return lhs.to_double() - rhs.to_double() <= tolerance * std::max(1.0, std::abs(rhs.to_double()));
}

bool exact_semantics(const Analysis& an) { return an.fineness().semantics == FinenessSemantics::Exact; }

Condition make(int number, std::string key, std::string statement, Status status, std::string witness = {}) {
  return {number, std::move(key), std::move(statement), status, std::move(witness), false};
}

std::vector<ExtReal> outer_table(std::size_t n, const std::function<ExtReal(const PointSet&)>& f) {
  std::vector<ExtReal> out(std::size_t{1} << n);
  for (std::uint64_t m = 1; m < out.size(); ++m) out[m] = f(subset_from_mask(n, m));
  return out;
}

// The first subset that fails the Caratheodory criterion for the table measure.
std::optional<std::uint64_t> first_unmeasurable(const Analysis& an, const std::vector<std::uint64_t>& masks) {
  const std::size_t n = an.instance().size();
  auto outer = outer_table(n, [&](const PointSet& s) { return an.mu(s); });
  for (auto m : masks) {
    if (!caratheodory_measurable(outer, m)) return m;
  }
  return std::nullopt;
}

Status mu_borel_status(const Analysis& an, std::string& witness) {
  const auto& mu = an.instance().measure;
  if (mu.is_atomic()) {
    witness = "atomic measure: every subset is measurable";
    return Status::Verified;
  }
  const std::size_t n = an.instance().size();
  std::vector<std::uint64_t> all;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) all.push_back(m);
  if (auto bad = first_unmeasurable(an, all)) {
    witness = format_set(an.instance().space, subset_from_mask(n, *bad)) + " fails the Caratheodory criterion";
    return Status::Violated;
  }
  witness = "every subset passes the Caratheodory criterion";
  return Status::Verified;
}

Condition measure_condition(const Analysis& an, int number, std::string key, std::string statement) {
  std::string witness;
  Status status = mu_borel_status(an, witness);
  return make(number, std::move(key), std::move(statement), status, std::move(witness));
}

Status kept_closed_status(const Analysis& an, std::string& witness) {
  if (exact_semantics(an)) return Status::Verified;
  switch (an.instance().family.source) {
    case FamilySource::ClosedBalls: return Status::Verified;
    case FamilySource::OpenBalls:
      witness = "open balls of the continuum are not closed";
      return Status::Violated;
    default:
      witness = "listed sets read as closed at resolution";
      return Status::Assumed;
  }
}

Condition kept_closed(const Analysis& an, int number) {
  std::string witness;
  Status status = kept_closed_status(an, witness);
  return make(number, "kept-closed", "every kept set is closed", status, std::move(witness));
}

Condition kept_closed_measurable(const Analysis& an, int number) {
  std::string witness;
  Status status = kept_closed_status(an, witness);
  if (status != Status::Violated && !an.instance().measure.is_atomic()) {
    std::vector<std::uint64_t> kept;
    for (auto i : an.filtered().kept) kept.push_back(mask_of(an.family()[i].set));
    if (auto bad = first_unmeasurable(an, kept)) {
      status = Status::Violated;
      witness = "kept set " + format_set(an.instance().space, subset_from_mask(an.instance().size(), *bad)) +
                " is not mu-measurable";
    }
  }
  return make(number, "kept-closed-measurable", "every kept set is closed and mu-measurable", status,
              std::move(witness));
}

Condition fine_cover(const Analysis& an, int number, const PointSet& s, const std::string& name) {
  std::string witness;
  Status status = Status::Verified;
  s.for_each([&](std::size_t x) {
    if (status == Status::Verified && !an.density(x)) {
      status = Status::Violated;
      witness = "no kept set of admissible diameter contains " + an.instance().space.id(x);
    }
  });
  return make(number, "fine-cover", "kept sets cover " + name + " finely", status, std::move(witness));
}

Condition borel_set(const Analysis& an, int number, std::string key, const std::string& name) {
  if (exact_semantics(an)) return make(number, std::move(key), name + " is Borel", Status::Verified);
  return make(number, std::move(key), name + " is Borel", Status::Assumed, "grid sets read as Borel sets");
}

Condition open_finite_cover(const Analysis& an, int number, const PointSet& a) {
  const auto& mu = an.instance().measure;
  std::string witness;
  Status status = exact_semantics(an) ? Status::Verified : Status::Assumed;
  if (status == Status::Assumed) witness = "truncated continuum instance";
  a.for_each([&](std::size_t x) {
    if (status != Status::Violated && mu(PointSet(a.universe(), {x})).is_infinite()) {
      status = Status::Violated;
      witness = "mu({" + an.instance().space.id(x) + "}) = inf";
    }
  });
  return make(number, "open-mu-finite-cover", "A has a countable cover by open sets of finite mu measure", status,
              std::move(witness));
}

Condition c_eta(const Analysis& an, int number, std::optional<ExtReal> c = std::nullopt,
                std::optional<ExtReal> eta = std::nullopt) {
  Tau tau(an.instance().tau);
  CEtaReport report = c && eta ? check_c_eta(an.family(), an.filtered(), tau, *c, *eta)
                               : search_c_eta(an.family(), an.filtered(), tau);
  std::string witness;
  Status status = report.feasible ? Status::Verified : Status::Violated;
  if (report.feasible) {
    witness = "c = " + report.c.to_string() + ", eta = " + report.eta.to_string();
  } else if (report.first_failure) {
    witness = "no admissible S-tilde for kept set " +
              format_set(an.instance().space, an.family()[*report.first_failure].set);
  } else {
    witness = "c = " + report.c.to_string() + ", eta = " + report.eta.to_string() + " fail";
  }
  return make(number, "c-eta", "some c >= 1, eta > 0 bound every enlargement by a family member", status,
              std::move(witness));
}

Condition sigma_finite(const Analysis& an, int number, std::string key, std::string statement, const PointSet& s) {
  std::string witness;
  Status status = exact_semantics(an) ? Status::Verified : Status::Assumed;
  if (status == Status::Assumed) witness = "truncated continuum instance";
  s.for_each([&](std::size_t x) {
    if (status != Status::Violated && an.psi(PointSet(s.universe(), {x})).is_infinite()) {
      status = Status::Violated;
      witness = "psi({" + an.instance().space.id(x) + "}) = inf";
    }
  });
  return make(number, std::move(key), std::move(statement), status, std::move(witness));
}

PointSet zero_density_set(const Analysis& an, const PointSet& a) {
  PointSet z(a.universe());
  a.for_each([&](std::size_t x) {
    if (an.density(x) && an.density(x)->is_zero()) z.insert(x);
  });
  return z;
}

// psi-null sets inside A are exactly the subsets of N = {x in A : psi({x}) = 0},
// since psi is monotone and countably subadditive.
PointSet null_points(const Analysis& an, const PointSet& a) {
  PointSet n(a.universe());
  a.for_each([&](std::size_t x) {
    if (an.psi(PointSet(a.universe(), {x})).is_zero()) n.insert(x);
  });
  return n;
}

Condition abs_cont(const Analysis& an, int number, const PointSet& a) {
  PointSet n = null_points(an, a);
  ExtReal mass = an.mu(n);
  if (mass.is_zero()) {
    return make(number, "absolute-continuity", "mu on A is absolutely continuous with respect to psi on A",
                Status::Verified);
  }
  return make(number, "absolute-continuity", "mu on A is absolutely continuous with respect to psi on A",
              Status::Violated,
              "psi(" + format_set(an.instance().space, n) + ") = 0 but mu = " + mass.to_string());
}

Status psi_measurable_status(const Analysis& an, const std::vector<PointSet>& sets, std::string& witness) {
  const std::size_t n = an.instance().size();
  if (n > kCaratheodoryLimit) {
    witness = "more than " + std::to_string(kCaratheodoryLimit) + " points";
    return Status::NotDecidableAtScale;
  }
  auto outer = outer_table(n, [&](const PointSet& s) { return an.psi(s); });
  for (const auto& s : sets) {
    if (!caratheodory_measurable(outer, mask_of(s))) {
      witness = format_set(an.instance().space, s) + " fails the Caratheodory criterion for psi";
      return Status::Violated;
    }
  }
  return Status::Verified;
}

Condition a_psi_measurable_sigma_finite(const Analysis& an, int number, const PointSet& a) {
  Condition c = sigma_finite(an, number, "A-psi-measurable-sigma-finite", "A is psi-measurable and psi-sigma-finite",
                             a);
  if (c.status == Status::Violated) return c;
  std::string witness;
  Status status = psi_measurable_status(an, {a}, witness);
  if (status != Status::Verified) {
    c.status = status;
    c.witness = witness;
  }
  return c;
}

std::vector<PointSet> density_level_sets(const Analysis& an, const PointSet& a, bool& undefined) {
  std::vector<ExtReal> levels;
  undefined = false;
  a.for_each([&](std::size_t x) {
    if (an.density(x)) {
      levels.push_back(*an.density(x));
    } else {
      undefined = true;
    }
  });
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<PointSet> out;
  for (const auto& t : levels) {
    PointSet s(a.universe());
    a.for_each([&](std::size_t x) {
      if (an.density(x) && *an.density(x) >= t) s.insert(x);
    });
    out.push_back(std::move(s));
  }
  return out;
}

Condition density_borel(const Analysis& an) {
  const std::string statement = "the density F on A is Borel";
  if (exact_semantics(an)) return make(0, "density-borel", statement, Status::Verified);
  return make(0, "density-borel", statement, Status::NotDecidableAtScale, "level sets at resolution only");
}

Condition density_psi_measurable(const Analysis& an, const PointSet& a) {
  const std::string statement = "the density F on A is psi-measurable";
  bool undefined = false;
  auto sets = density_level_sets(an, a, undefined);
  if (undefined) return make(0, "density-psi-measurable", statement, Status::NotDecidableAtScale, "F undefined on A");
  std::string witness;
  Status status = psi_measurable_status(an, sets, witness);
  return make(0, "density-psi-measurable", statement, status, std::move(witness));
}

Condition diametric_regularity(const Analysis& an, int number, const PointSet& a) {
  const std::string statement = "X is diametrically regular";
  if (exact_semantics(an)) {
    return make(number, "diametric-regularity", statement, Status::Verified,
                "isolated points: r -> diam B(y, r) is constant below the nearest-neighbour distance");
  }
  auto points = a.members();
  const std::size_t probes = std::min<std::size_t>(points.size(), 8);
  for (std::size_t k = 0; k < probes; ++k) {
    std::size_t x = points[k * points.size() / probes];
    auto report = diametric_regularity_probe(an.instance(), x);
    if (!report.consistent) {
      return make(number, "diametric-regularity", statement, Status::Violated,
                  "diameter jump " + std::to_string(report.max_jump) + " near " + an.instance().space.id(x));
    }
  }
  return make(number, "diametric-regularity", statement, Status::Verified,
              "regularity probe consistent at " + std::to_string(probes) + " points");
}

Condition b_measurable_clause() {
  Condition c = make(0, "B-mu-measurable", "B is mu-measurable", Status::NotDecidableAtScale,
                     "every subset of a finite instance is measurable; the clause has no observable content");
  c.conclusion = true;
  return c;
}

HypothesisReport blank_report(const Analysis& an, std::string theorem) {
  HypothesisReport r;
  r.theorem = std::move(theorem);
  r.semantics = an.fineness().semantics;
  r.topology = exact_semantics(an) ? "discrete: every subset is open and closed"
                                   : "epsilon-net: open sets are unions of open balls";
  return r;
}

Condition points_compare(const Analysis& an, int number, std::string key, std::string statement, const PointSet& s,
                         const ExtReal& t, bool below) {
  Status status = Status::Verified;
  std::string witness;
  s.for_each([&](std::size_t x) {
    if (status == Status::Violated) return;
    const auto& f = an.density(x);
    if (!f) {
      status = Status::NotDecidableAtScale;
      witness = "F undefined at " + an.instance().space.id(x);
      return;
    }
    if (below ? !(*f < t) : !(*f > t)) {
      status = Status::Violated;
      witness = "F(" + an.instance().space.id(x) + ") = " + f->to_string();
    }
  });
  return make(number, std::move(key), std::move(statement), status, std::move(witness));
}

std::vector<PointSet> subsets_to_check(const PointSet& a, const SubsetCheckOptions& options, bool& exhaustive) {
  auto members = a.members();
  std::vector<PointSet> out;
  exhaustive = members.size() <= options.exhaustive_limit;
  if (exhaustive) {
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << members.size()); ++m) {
      PointSet s(a.universe());
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (m >> k & 1) s.insert(members[k]);
      }
      out.push_back(std::move(s));
    }
    return out;
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    PointSet s(a.universe());
    for (auto x : members) {
      if (rng() & 1) s.insert(x);
    }
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

LemmaReport verify_lemma_minor(const Analysis& analysis, const PointSet& a, const ExtReal& t,
                               const SubsetCheckOptions& options) {
  LemmaReport report;
  report.hypotheses = blank_report(analysis, "lemma-minor");
  auto& conds = report.hypotheses.conditions;
  conds.push_back(measure_condition(analysis, 1, "mu-regular", "mu is regular"));
  conds.push_back(fine_cover(analysis, 2, a, "A"));
  conds.push_back(points_compare(analysis, 3, "density-below-t", "F < t on A", a, t, true));
  report.seed = options.seed;
  if (!report.hypotheses.gate_passed()) return report;
  report.checked = true;
  const bool exact = analysis.backend() == Backend::Rational;
  for (const auto& e : subsets_to_check(a, options, report.exhaustive)) {
    ++report.sets_checked;
    if (!within(analysis.mu(e), t * analysis.psi(e), exact) && report.violations.size() < kViolationCap) {
      report.violations.push_back(e);
    }
  }
  return report;
}

LemmaReport verify_lemma_major(const Analysis& analysis, const PointSet& b, const PointSet& v, const ExtReal& t,
                               std::optional<ExtReal> c, std::optional<ExtReal> eta) {
  LemmaReport report;
  report.hypotheses = blank_report(analysis, "lemma-major");
  auto& conds = report.hypotheses.conditions;
  conds.push_back(kept_closed_measurable(analysis, 1));
  conds.push_back(fine_cover(analysis, 2, b, "B"));
  conds.push_back(c_eta(analysis, 3, c, eta));
  conds.push_back(points_compare(analysis, 4, "density-above-t", "F > t on B", b, t, false));

  Status open_status = Status::Verified;
  std::string witness;
  if (!b.is_subset_of(v)) {
    open_status = Status::Violated;
    witness = format_set(analysis.instance().space, b - v) + " lies outside V";
  } else if (!exact_semantics(analysis)) {
    // Open at resolution: V holds the open ball of radius 4h around each of its points.
    const auto& space = analysis.instance().space;
    ExtReal r = analysis.fineness().floor;
    v.for_each([&](std::size_t y) {
      if (open_status == Status::Verified && !space.open_ball(y, r).is_subset_of(v)) {
        open_status = Status::Violated;
        witness = "V is not open at resolution around " + space.id(y);
      }
    });
  }
  conds.push_back(make(0, "V-open-superset", "V is open and contains B", open_status, std::move(witness)));
  if (!report.hypotheses.gate_passed()) return report;
  report.checked = true;
  report.exhaustive = true;
  report.sets_checked = 1;
  report.lhs = t * analysis.psi(b);
  report.rhs = analysis.mu(v);
  if (!within(report.lhs, report.rhs, analysis.backend() == Backend::Rational)) report.violations.push_back(b);
  return report;
}

AbsContReport check_absolute_continuity(const Analysis& analysis, const PointSet& a,
                                        const SubsetCheckOptions& options) {
  AbsContReport report;
  report.hypotheses = blank_report(analysis, "absolute-continuity");
  auto& conds = report.hypotheses.conditions;
  conds.push_back(measure_condition(analysis, 1, "mu-regular", "mu is regular"));
  conds.push_back(kept_closed_measurable(analysis, 2));
  conds.push_back(fine_cover(analysis, 3, a, "A"));
  conds.push_back(open_finite_cover(analysis, 4, a));
  conds.push_back(c_eta(analysis, 5));

  // Direct side: psi(E) = 0 implies mu(E) = 0 for E inside A.
  report.absolutely_continuous = true;
  if (a.size() <= options.exhaustive_limit) {
    report.exhaustive = true;
    for (const auto& e : subsets_to_check(a, options, report.exhaustive)) {
      if (analysis.psi(e).is_zero() && !analysis.mu(e).is_zero()) {
        report.absolutely_continuous = false;
        report.null_witness = e;
        break;
      }
    }
  } else {
    PointSet n = null_points(analysis, a);
    if (!analysis.mu(n).is_zero()) {
      report.absolutely_continuous = false;
      report.null_witness = n;
    }
  }

  // Density side: mu of the points of A where F = +inf.
  report.infinite_density_set = PointSet(a.universe());
  a.for_each([&](std::size_t x) {
    const auto& f = analysis.density(x);
    if (!f) {
      ++report.undefined_density;
    } else if (f->is_infinite()) {
      report.infinite_density_set.insert(x);
    }
  });
  report.infinite_density_null = analysis.mu(report.infinite_density_set).is_zero();
  return report;
}

MetricInstance instance_for_variant(const MetricInstance& instance, Variant variant, const ExtReal& alpha,
                                    const ExtReal& c_alpha) {
  switch (variant) {
    case Variant::GeneralI:
    case Variant::GeneralII: return instance;
    case Variant::HausdorffI:
    case Variant::HausdorffII: return with_diameter_gauge(instance, alpha, c_alpha, GaugeKind::Hausdorff);
    case Variant::SphericalI:
    case Variant::SphericalII: return with_diameter_gauge(instance, alpha, c_alpha, GaugeKind::Spherical);
  }
  return instance;
}

HypothesisReport area_formula_hypotheses(const Analysis& an, Variant variant, const PointSet& a) {
  HypothesisReport r = blank_report(an, std::string(to_string(variant)));
  auto& c = r.conditions;
  const PointSet zero = zero_density_set(an, a);
  const bool spherical = variant == Variant::SphericalI || variant == Variant::SphericalII;
  int k = 1;
  if (spherical) c.push_back(diametric_regularity(an, k++, a));
  switch (variant) {
    case Variant::GeneralI:
      c.push_back(measure_condition(an, k++, "mu-regular-borel", "mu is regular and Borel"));
      c.push_back(kept_closed(an, k++));
      c.push_back(fine_cover(an, k++, a, "A"));
      c.push_back(borel_set(an, k++, "A-borel", "A"));
      c.push_back(open_finite_cover(an, k++, a));
      c.push_back(c_eta(an, k++));
      c.push_back(sigma_finite(an, k++, "zero-density-sigma-finite", "{x in A : F = 0} is psi-sigma-finite", zero));
      c.push_back(abs_cont(an, k++, a));
      c.push_back(density_borel(an));
      break;
    case Variant::GeneralII:
      c.push_back(measure_condition(an, k++, "mu-borel-regular", "mu is Borel regular"));
      c.push_back(kept_closed(an, k++));
      c.back().key = "family-borel-kept-closed";
      c.back().statement = "family members are Borel and kept sets are closed";
      c.push_back(fine_cover(an, k++, a, "A"));
      c.push_back(a_psi_measurable_sigma_finite(an, k++, a));
      c.push_back(open_finite_cover(an, k++, a));
      c.push_back(c_eta(an, k++));
      c.push_back(abs_cont(an, k++, a));
      c.push_back(density_psi_measurable(an, a));
      c.push_back(b_measurable_clause());
      break;
    case Variant::HausdorffI:
    case Variant::SphericalI:
      c.push_back(measure_condition(an, k++, "mu-regular-borel", "mu is regular and Borel"));
      c.push_back(fine_cover(an, k++, a, "A"));
      c.push_back(borel_set(an, k++, "A-borel", "A"));
      c.push_back(open_finite_cover(an, k++, a));
      c.push_back(sigma_finite(an, k++, "zero-density-sigma-finite", "{x in A : F = 0} is psi-sigma-finite", zero));
      c.push_back(abs_cont(an, k++, a));
      break;
    case Variant::HausdorffII:
    case Variant::SphericalII:
      c.push_back(measure_condition(an, k++, "mu-borel-regular", "mu is Borel regular"));
      c.push_back(fine_cover(an, k++, a, "A"));
      c.push_back(a_psi_measurable_sigma_finite(an, k++, a));
      c.push_back(open_finite_cover(an, k++, a));
      c.push_back(abs_cont(an, k++, a));
      c.push_back(b_measurable_clause());
      break;
  }
  return r;
}

AreaFormulaReport evaluate_area_formula(const Analysis& analysis, Variant variant, const HypothesisReport& hypotheses,
                                        const PointSet& b, double tolerance) {
  AreaFormulaReport report;
  report.variant = variant;
  report.backend = analysis.backend();
  report.hypotheses = hypotheses;
  report.b = b;
  report.lhs = analysis.mu(b);
  const bool exact = report.backend == Backend::Rational;
  report.tolerance = exact ? ExtReal() : ExtReal::from_double(tolerance);

  std::vector<ExtReal> g(b.universe());
  bool defined = true;
  b.for_each([&](std::size_t x) {
    report.densities.emplace_back(x, analysis.density(x));
    if (analysis.density(x)) {
      g[x] = *analysis.density(x);
    } else {
      defined = false;
    }
  });
  bool equal = false;
  if (defined) {
    report.rhs = integrate_against_psi(g, b, analysis);
    const ExtReal& l = report.lhs;
    const ExtReal& r = *report.rhs;
    report.gap = l >= r ? l - r : r - l;
    if (exact || l.is_infinite() || r.is_infinite()) {
      equal = l == r;
    } else {
      equal = report.gap->to_double() <= tolerance * std::max(1.0, l.to_double());
    }
  }
  if (!hypotheses.gate_passed()) {
    report.verdict = Verdict::HypothesesFailed;
  } else {
    report.verdict = equal ? Verdict::Equal : Verdict::Violated;
  }
  return report;
}

AreaFormulaReport verify_area_formula(Variant variant, const MetricInstance& instance, const PointSet& a,
                                      const PointSet& b, double tolerance) {
  if (!b.is_subset_of(a)) throw std::invalid_argument("B must lie inside A");
  const auto& gauge = instance.gauge;
  ExtReal alpha = gauge.is_diameter_power() ? gauge.alpha() : ExtReal(1);
  ExtReal c_alpha = gauge.is_diameter_power() ? gauge.c_alpha() : ExtReal(1);
  Analysis analysis(instance_for_variant(instance, variant, alpha, c_alpha));
  auto hypotheses = area_formula_hypotheses(analysis, variant, a);
  return evaluate_area_formula(analysis, variant, hypotheses, b, tolerance);
}

SemicontinuityReport semicontinuity_probe(const Analysis& analysis, const PointSet& a, const ExtReal& delta,
                                          const ExtReal& t) {
  const auto& inst = analysis.instance();
  if (!inst.gauge.is_diameter_power()) throw std::invalid_argument("semicontinuity probe needs a diameter gauge");
  if (!inst.resolution) throw ResolutionTooCoarseError("instance has no resolution floor h");
  const double h = inst.resolution->to_double();
  const double d = delta.to_double();
  if (h > d / 2) {
    throw ResolutionTooCoarseError("resolution h = " + inst.resolution->to_string() + " exceeds delta / 2");
  }
  const auto& family = analysis.family();
  const auto& filtered = analysis.filtered();
  const auto& space = inst.space;
  const double alpha = inst.gauge.alpha().to_double();
  const double c = inst.gauge.c_alpha().to_double();
  const double tt = t.to_double();
  const std::size_t n = space.size();

  SemicontinuityReport report;
  report.delta = delta;
  report.t = t;
  report.resolution = h;
  report.values.assign(n, ExtReal());
  std::vector<std::optional<std::size_t>> argmax(n);
  auto index = membership(family, filtered);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i : index[x]) {
      if (!(family[i].diameter < delta)) continue;
      ExtReal q = quotient(filtered.mu[i], family[i].zeta);
      if (!argmax[x] || q > report.values[x]) {
        report.values[x] = q;
        argmax[x] = i;
      }
    }
  }
  PointSet level(n);
  a.for_each([&](std::size_t y) {
    if (report.values[y] > t) level.insert(y);
  });
  level.for_each([&](std::size_t y) {
    SemicontinuityPoint p;
    p.point = y;
    p.value = report.values[y];
    const auto& s0 = family[*argmax[y]];
    const double mass = filtered.mu[*argmax[y]].to_double();
    const double reach = std::pow(mass / (c * tt), 1.0 / alpha);
    if (s0.zeta.is_zero()) {
      p.radius = std::min(d / 2, reach / 2);
    } else {
      const double diam = s0.diameter.to_double();
      p.radius = std::min(d - diam, reach - diam) / 2;
    }
    p.clear_radius = std::numeric_limits<double>::infinity();
    a.for_each([&](std::size_t z) {
      if (!level.contains(z)) p.clear_radius = std::min(p.clear_radius, space.distance_approx(y, z));
    });
    p.holds = p.radius <= p.clear_radius;
    p.below_resolution = p.radius < h;
    report.passed = report.passed && p.holds;
    report.points.push_back(p);
  });
  return report;
}

}  // namespace areaform
