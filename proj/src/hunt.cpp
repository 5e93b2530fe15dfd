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

#include "areaform/hunt.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>
#include <tuple>

namespace areaform {

std::string_view to_string(HuntKind kind) {
  switch (kind) {
    case HuntKind::SingletonComplete: return "singleton-complete";
    case HuntKind::MaskedAtom: return "masked-atom";
    case HuntKind::ZeroWeight: return "zero-weight";
    case HuntKind::HausdorffAtomic: return "hausdorff-atomic";
  }
  return "?";
}

std::size_t HuntSummary::count(bool all_verified, Verdict verdict) const {
  auto it = table.find({all_verified, verdict});
  return it == table.end() ? 0 : it->second;
}

std::pair<HuntKind, GeneratorSpec> hunt_spec(const HuntOptions& options, std::size_t i) {
  std::mt19937_64 rng(options.seed + i);
  const std::size_t lo = 2, hi = std::max<std::size_t>(options.max_points, lo);
  GeneratorSpec spec;
  spec.seed = rng();
  spec.n = lo + rng() % (hi - lo + 1);
  spec.extra_sets = 1 + rng() % 4;
  // Mostly clean instances, with a share of constructed hypothesis failures.
  HuntKind kind = HuntKind::SingletonComplete;
  switch (rng() % 8) {
    case 5: kind = HuntKind::MaskedAtom; break;
    case 6: kind = HuntKind::ZeroWeight; break;
    case 7: kind = HuntKind::HausdorffAtomic; break;
    default: break;
  }
  spec.kind = kind == HuntKind::HausdorffAtomic ? GeneratorKind::RandomMetric : GeneratorKind::SingletonComplete;
  spec.masked_atom = kind == HuntKind::MaskedAtom;
  return {kind, spec};
}

MetricInstance hunt_instance(const HuntOptions& options, std::size_t i) {
  auto [kind, spec] = hunt_spec(options, i);
  MetricInstance inst = generate(spec);
  if (kind == HuntKind::ZeroWeight) {
    // A charged point whose singleton costs nothing.
    std::size_t x = spec.seed % inst.size();
    for (auto& m : inst.family.members) {
      if (m.set.size() == 1 && m.set.contains(x)) m.zeta = ExtReal();
    }
    inst.metadata["zero_weight"] = inst.space.id(x);
  }
  inst.metadata["hunt_kind"] = std::string(to_string(kind));
  return inst;
}

MetricInstance restrict_instance(const MetricInstance& instance, const PointSet& keep) {
  auto idx = keep.members();
  const std::size_t n = idx.size();
  std::vector<std::size_t> position(instance.size(), n);
  for (std::size_t k = 0; k < n; ++k) position[idx[k]] = k;
  auto project = [&](const PointSet& s) {
    PointSet out(n);
    s.for_each([&](std::size_t x) {
      if (position[x] < n) out.insert(position[x]);
    });
    return out;
  };

  MetricInstance out = instance;
  std::vector<std::string> ids;
  for (auto i : idx) ids.push_back(instance.space.id(i));
  const auto& space = instance.space;
  if (space.is_euclidean()) {
    std::vector<Coordinates> coords;
    for (auto i : idx) coords.push_back(space.coordinates(i));
    out.space = FiniteMetricSpace::euclidean(std::move(ids), std::move(coords), space.backend());
  } else {
    std::vector<std::vector<ExtReal>> d(n, std::vector<ExtReal>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) d[a][b] = space.distance(idx[a], idx[b]);
    }
    out.space = FiniteMetricSpace::from_matrix(std::move(ids), std::move(d));
  }

  switch (instance.family.source) {
    case FamilySource::ClosedBalls:
      out.family = closed_ball_family(out.space, instance.family.max_radius, instance.family.positive_diameter);
      break;
    case FamilySource::OpenBalls:
      out.family = open_ball_family(out.space, instance.family.max_radius, instance.family.positive_diameter);
      break;
    case FamilySource::AllSubsets: out.family = all_subsets_family(out.space); break;
    case FamilySource::Listed: {
      out.family.members.clear();
      std::set<PointSet> seen;
      for (const auto& m : instance.family.members) {
        PointSet s = project(m.set);
        if (s.empty() || !seen.insert(s).second) continue;
        out.family.members.push_back({std::move(s), m.zeta, m.scale, std::nullopt});
      }
      break;
    }
  }

  if (instance.gauge.kind() == GaugeKind::Explicit) {
    std::map<PointSet, ExtReal> table;
    for (const auto& [s, v] : instance.gauge.table()) {
      PointSet p = project(s);
      if (!p.empty()) table.emplace(std::move(p), v);
    }
    out.gauge = Gauge::explicit_table(std::move(table));
  }

  if (instance.measure.is_atomic()) {
    std::vector<ExtReal> masses;
    for (auto i : idx) masses.push_back(instance.measure.mass(i));
    out.measure = AtomicMeasure::atomic(std::move(masses));
  } else {
    // The outer measure of a subset of the kept points is unchanged.
    std::map<PointSet, ExtReal> table;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      PointSet s = subset_from_mask(n, m);
      PointSet original(instance.size());
      s.for_each([&](std::size_t k) { original.insert(idx[k]); });
      table.emplace(std::move(s), instance.measure(original));
    }
    out.measure = AtomicMeasure::table(n, std::move(table));
  }
  out.validate();
  return out;
}

namespace {

struct CaseResult {
  HuntCase summary;
  std::optional<AreaFormulaReport> failure;
  std::optional<MetricInstance> instance;
  bool minor_checked = false, minor_violated = false;
  bool major_checked = false, major_violated = false;
  bool constructed = false;
};

std::vector<PointSet> b_sets(std::size_t n, const HuntOptions& options, std::uint64_t seed) {
  std::vector<PointSet> out{PointSet(n)};
  if (n <= options.exhaustive_b) {
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) out.push_back(subset_from_mask(n, m));
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < options.b_samples; ++k) {
    PointSet s(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (rng() & 1) s.insert(x);
    }
    out.push_back(std::move(s));
  }
  return out;
}

MetricInstance variant_instance(const MetricInstance& inst, Variant variant) {
  ExtReal alpha = inst.gauge.is_diameter_power() ? inst.gauge.alpha() : ExtReal(1);
  ExtReal c = inst.gauge.is_diameter_power() ? inst.gauge.c_alpha() : ExtReal(1);
  return instance_for_variant(inst, variant, alpha, c);
}

// Verdict of the area formula over every checked B, and the first failing B.
std::pair<HypothesisReport, std::optional<AreaFormulaReport>> check_formula(const MetricInstance& inst,
                                                                             const HuntOptions& options,
                                                                             std::uint64_t seed,
                                                                             std::size_t* b_checked = nullptr) {
  Analysis analysis(variant_instance(inst, options.variant));
  PointSet a = analysis.instance().space.all();
  auto hypotheses = area_formula_hypotheses(analysis, options.variant, a);
  for (const auto& b : b_sets(inst.size(), options, seed)) {
    if (b_checked) ++*b_checked;
    auto report = evaluate_area_formula(analysis, options.variant, hypotheses, b);
    bool mismatch = !report.rhs || report.lhs != *report.rhs;
    if (report.backend == Backend::Float && report.rhs) mismatch = report.verdict == Verdict::Violated;
    if (mismatch) return {hypotheses, report};
  }
  return {hypotheses, std::nullopt};
}

bool is_counterexample(const MetricInstance& inst, const HuntOptions& options, std::uint64_t seed) {
  auto [hyp, failure] = check_formula(inst, options, seed);
  return hyp.all_verified() && failure && failure->verdict == Verdict::Violated;
}

MetricInstance shrink(MetricInstance inst, const HuntOptions& options, std::uint64_t seed) {
  bool progress = true;
  while (progress && inst.size() > 1) {
    progress = false;
    for (std::size_t x = 0; x < inst.size(); ++x) {
      PointSet keep = inst.space.all();
      keep.erase(x);
      MetricInstance smaller;
      try {
        smaller = restrict_instance(inst, keep);
      } catch (const std::exception&) {
        continue;
      }
      if (is_counterexample(smaller, options, seed)) {
        inst = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return inst;
}

CaseResult run_case(const HuntOptions& options, std::size_t i) {
  CaseResult r;
  auto [kind, spec] = hunt_spec(options, i);
  MetricInstance inst = hunt_instance(options, i);
  r.summary.index = i;
  r.summary.kind = kind;
  r.summary.seed = spec.seed;
  r.summary.points = inst.size();
  r.constructed = kind != HuntKind::SingletonComplete;

  auto [hyp, failure] = check_formula(inst, options, spec.seed, &r.summary.b_checked);
  r.summary.all_verified = hyp.all_verified();
  r.summary.gate_passed = hyp.gate_passed();
  if (!hyp.gate_passed()) {
    r.summary.verdict = Verdict::HypothesesFailed;
  } else {
    r.summary.verdict = failure ? Verdict::Violated : Verdict::Equal;
  }
  if (failure) r.summary.failing_b = failure->b;
  if (r.summary.all_verified && r.summary.verdict == Verdict::Violated) {
    MetricInstance small = shrink(inst, options, spec.seed);
    auto [h2, f2] = check_formula(small, options, spec.seed);
    r.failure = f2 ? *f2 : *failure;
    r.instance = std::move(small);
  }

  if (options.lemmas) {
    Analysis analysis(inst);
    PointSet a = inst.space.all();
    ExtReal top, bottom = ExtReal::infinity();
    for (const auto& f : analysis.densities()) {
      if (!f) continue;
      if (f->is_finite()) top = max(top, *f);
      if (!f->is_zero()) bottom = min(bottom, *f);
    }
    auto minor = verify_lemma_minor(analysis, a, top + ExtReal(1));
    r.minor_checked = minor.checked;
    r.minor_violated = !minor.violations.empty();
    ExtReal t = bottom.is_finite() ? bottom * ExtReal(1, 2) : ExtReal(1);
    auto major = verify_lemma_major(analysis, a, a, t);
    r.major_checked = major.checked;
    r.major_violated = !major.violations.empty();
  }
  return r;
}

}  // namespace

HuntSummary hunt(const HuntOptions& options) {
  std::vector<CaseResult> results(options.instances);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < options.instances; i = next++) results[i] = run_case(options, i);
  };
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(options.instances, 1));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  HuntSummary summary;
  summary.instances = options.instances;
  for (auto& r : results) {
    ++summary.table[{r.summary.all_verified, r.summary.verdict}];
    ++summary.kinds[r.summary.kind];
    if (options.lemmas) {
      for (auto [tally, checked, violated] : {std::tuple{&summary.minor, r.minor_checked, r.minor_violated},
                                             std::tuple{&summary.major, r.major_checked, r.major_violated}}) {
        ++tally->runs;
        if (checked) {
          ++tally->checked;
          if (violated) ++tally->violations;
        } else {
          ++tally->gated;
        }
      }
    }
    if (r.constructed) {
      ++summary.constructed;
      bool formula_gated = !r.summary.gate_passed;
      if (formula_gated && (!options.lemmas || !r.minor_checked || !r.major_checked)) {
        ++summary.constructed_gate_failures;
      }
      if (!formula_gated) ++summary.constructed_silent_passes;
    }
    if (r.failure) summary.counterexamples.push_back({r.summary.index, std::move(*r.instance), std::move(*r.failure)});
    summary.cases.push_back(std::move(r.summary));
  }
  return summary;
}

}  // namespace areaform
