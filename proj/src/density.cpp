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

#include "areaform/density.hpp"

#include <algorithm>

namespace areaform {

Tau::Tau(ExtReal value) : value_(std::move(value)) {
  if (value_ <= ExtReal(1) || value_.is_infinite()) {
    throw std::invalid_argument("tau must be a finite number > 1, got " + value_.to_string());
  }
}

std::string_view to_string(DropReason reason) {
  return reason == DropReason::BothZero ? "both-zero" : "both-infinite";
}

FilteredFamily filter_family(const AtomicMeasure& mu, const GaugedFamily& family) {
  FilteredFamily out;
  out.mu.reserve(family.size());
  out.is_kept.assign(family.size(), false);
  for (std::size_t i = 0; i < family.size(); ++i) {
    ExtReal m = mu(family[i].set);
    const ExtReal& z = family[i].zeta;
    if (m.is_zero() && z.is_zero()) {
      out.dropped.emplace_back(i, DropReason::BothZero);
    } else if (m.is_infinite() && z.is_infinite()) {
      out.dropped.emplace_back(i, DropReason::BothInfinite);
    } else {
      out.kept.push_back(i);
      out.is_kept[i] = true;
    }
    out.mu.push_back(std::move(m));
  }
  return out;
}

ExtReal quotient(const ExtReal& mu, const ExtReal& zeta) {
  if (mu.is_zero() && zeta.is_zero()) throw NotInFilteredFamilyError("mu(S) = zeta(S) = 0");
  if (mu.is_infinite() && zeta.is_infinite()) throw NotInFilteredFamilyError("mu(S) = zeta(S) = +inf");
  return unfiltered_quotient(mu, zeta);
}

ExtReal unfiltered_quotient(const ExtReal& mu, const ExtReal& zeta) {
  if (zeta.is_zero()) return ExtReal::infinity();
  if (zeta.is_infinite()) return mu.is_exact() ? ExtReal() : ExtReal::from_double(0.0);
  return mu / zeta;
}

DensityProfile covering_profile(std::vector<CoveringSample> samples, const Fineness& fineness) {
  DensityProfile p;
  p.fineness = fineness;
  if (samples.empty()) return p;
  std::sort(samples.begin(), samples.end(),
            [](const CoveringSample& a, const CoveringSample& b) { return a.diameter < b.diameter; });
  // Ascending pass: running sup / inf over all samples up to each distinct diameter.
  std::vector<ExtReal> diam, sup, inf;
  for (const auto& s : samples) {
    if (diam.empty() || s.diameter != diam.back()) {
      diam.push_back(s.diameter);
      sup.push_back(sup.empty() ? s.value : sup.back());
      inf.push_back(inf.empty() ? s.value : inf.back());
    }
    sup.back() = max(sup.back(), s.value);
    inf.back() = min(inf.back(), s.value);
  }
  const ExtReal half(1, 2);
  for (std::size_t k = diam.size(); k-- > 0;) {
    p.diameters.push_back(diam[k]);
    if (k + 1 < diam.size()) {
      p.thresholds.push_back((diam[k] + diam[k + 1]) * half);
    } else {
      p.thresholds.push_back(diam[k].is_zero() ? ExtReal(1) : diam[k] * ExtReal(2));
    }
    p.sup_values.push_back(sup[k]);
    p.inf_values.push_back(inf[k]);
  }
  p.fine = fineness.admits(diam.front());
  if (p.fine) {
    p.limsup = sup.front();
    p.liminf = inf.front();
  }
  return p;
}

bool is_fine(const std::vector<CoveringSample>& samples, const Fineness& fineness) {
  return std::any_of(samples.begin(), samples.end(),
                     [&](const CoveringSample& s) { return fineness.admits(s.diameter); });
}

ExtReal covering_limsup(std::vector<CoveringSample> samples, const Fineness& fineness) {
  auto p = covering_profile(std::move(samples), fineness);
  if (!p.fine) throw NotFineError("covering relation is not fine at the point");
  return *p.limsup;
}

ExtReal covering_liminf(std::vector<CoveringSample> samples, const Fineness& fineness) {
  auto p = covering_profile(std::move(samples), fineness);
  if (!p.fine) throw NotFineError("covering relation is not fine at the point");
  return *p.liminf;
}

std::vector<std::vector<std::size_t>> membership(const GaugedFamily& family, const FilteredFamily& filtered) {
  std::vector<std::vector<std::size_t>> out(family.universe());
  for (std::size_t i : filtered.kept) family[i].set.for_each([&](std::size_t p) { out[p].push_back(i); });
  return out;
}

bool covers_finely(const GaugedFamily& family, const FilteredFamily& filtered, const PointSet& a,
                   const Fineness& fineness) {
  PointSet reached(family.universe());
  for (std::size_t i : filtered.kept) {
    if (fineness.admits(family[i].diameter)) reached |= family[i].set;
  }
  return a.is_subset_of(reached);
}

namespace {

std::vector<CoveringSample> quotient_samples(const GaugedFamily& family, const FilteredFamily& filtered,
                                             const std::vector<std::size_t>& members) {
  std::vector<CoveringSample> samples;
  samples.reserve(members.size());
  for (std::size_t i : members) {
    samples.push_back({family[i].diameter, quotient(filtered.mu[i], family[i].zeta)});
  }
  return samples;
}

std::vector<std::size_t> kept_containing(const GaugedFamily& family, const FilteredFamily& filtered, std::size_t x) {
  if (x >= family.universe()) throw std::out_of_range("point index " + std::to_string(x) + " out of range");
  std::vector<std::size_t> out;
  for (std::size_t i : filtered.kept) {
    if (family[i].set.contains(x)) out.push_back(i);
  }
  return out;
}

}  // namespace

DensityProfile federer_profile(const GaugedFamily& family, const FilteredFamily& filtered, std::size_t x,
                               const Fineness& fineness) {
  return covering_profile(quotient_samples(family, filtered, kept_containing(family, filtered, x)), fineness);
}

ExtReal federer_density(const GaugedFamily& family, const FilteredFamily& filtered, std::size_t x,
                        const Fineness& fineness) {
  auto p = federer_profile(family, filtered, x, fineness);
  if (!p.fine) throw NotFineError("S_{mu,zeta} is not fine at point " + std::to_string(x));
  return *p.limsup;
}

ExtReal federer_density(const MetricInstance& instance, std::size_t x) {
  auto family = instance.gauged_family();
  return federer_density(family, filter_family(instance.measure, family), x, Fineness::of(instance));
}

std::vector<std::optional<ExtReal>> federer_densities(const GaugedFamily& family, const FilteredFamily& filtered,
                                                      const Fineness& fineness) {
  auto index = membership(family, filtered);
  std::vector<std::optional<ExtReal>> out(family.universe());
  for (std::size_t x = 0; x < index.size(); ++x) {
    auto p = covering_profile(quotient_samples(family, filtered, index[x]), fineness);
    out[x] = p.limsup;
  }
  return out;
}

DensityProfile unfiltered_profile(const AtomicMeasure& mu, const GaugedFamily& family, std::size_t x,
                                  const Fineness& fineness) {
  if (x >= family.universe()) throw std::out_of_range("point index " + std::to_string(x) + " out of range");
  std::vector<CoveringSample> samples;
  for (const auto& m : family) {
    if (m.set.contains(x)) samples.push_back({m.diameter, unfiltered_quotient(mu(m.set), m.zeta)});
  }
  return covering_profile(std::move(samples), fineness);
}

ExtReal unfiltered_density(const AtomicMeasure& mu, const GaugedFamily& family, std::size_t x,
                           const Fineness& fineness) {
  auto p = unfiltered_profile(mu, family, x, fineness);
  if (!p.fine) throw NotFineError("family is not fine at point " + std::to_string(x));
  return *p.limsup;
}

PointSet enlargement(const PointSet& s, const ExtReal& diam_s, const GaugedFamily& family,
                     const FilteredFamily& filtered, const Tau& tau) {
  const ExtReal bound = tau.value() * diam_s;
  PointSet hat(family.universe());
  for (std::size_t i : filtered.kept) {
    const auto& t = family[i];
    if (t.diameter <= bound && t.set.intersects(s)) hat |= t.set;
  }
  return hat;
}

PointSet enlargement(std::size_t index, const GaugedFamily& family, const FilteredFamily& filtered, const Tau& tau) {
  return enlargement(family[index].set, family[index].diameter, family, filtered, tau);
}

namespace {

// Least r >= 0 with a <= r * b, where r * inf is inf for r > 0 (infimum 0).
ExtReal needed_ratio(const ExtReal& a, const ExtReal& b) {
  if (b.is_infinite()) return ExtReal();
  if (b.is_zero()) return a.is_zero() ? ExtReal() : ExtReal::infinity();
  return a / b;
}

struct Option {
  std::size_t index;
  ExtReal c;
  ExtReal eta;
};

std::vector<Option> superset_options(const GaugedFamily& family, const GaugedMember& s, const PointSet& hat) {
  std::vector<Option> out;
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto& t = family[j];
    if (!hat.is_subset_of(t.set)) continue;
    out.push_back({j, needed_ratio(t.diameter, s.diameter), needed_ratio(t.zeta, s.zeta)});
  }
  return out;
}

}  // namespace

CEtaReport check_c_eta(const GaugedFamily& family, const FilteredFamily& filtered, const Tau& tau, const ExtReal& c,
                       const ExtReal& eta) {
  if (c < ExtReal(1)) throw std::invalid_argument("c must be >= 1");
  if (eta.is_zero()) throw std::invalid_argument("eta must be positive");
  CEtaReport report;
  report.c = c;
  report.eta = eta;
  report.feasible = true;
  for (std::size_t i : filtered.kept) {
    const auto& s = family[i];
    CEtaEntry entry{i, enlargement(i, family, filtered, tau), std::nullopt, ExtReal::infinity(), ExtReal::infinity()};
    const ExtReal diam_bound = c * s.diameter;
    const ExtReal zeta_bound = eta * s.zeta;
    for (const auto& o : superset_options(family, s, entry.hat)) {
      entry.c_needed = min(entry.c_needed, o.c);
      const auto& t = family[o.index];
      if (t.diameter <= diam_bound && t.zeta <= zeta_bound &&
          (!entry.witness || o.eta < entry.eta_needed)) {
        entry.witness = o.index;
        entry.eta_needed = o.eta;
      }
    }
    if (!entry.witness && report.feasible) {
      report.feasible = false;
      report.first_failure = i;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

CEtaReport search_c_eta(const GaugedFamily& family, const FilteredFamily& filtered, const Tau& tau) {
  CEtaReport report;
  std::vector<std::vector<Option>> options;
  ExtReal c(1);
  for (std::size_t i : filtered.kept) {
    CEtaEntry entry{i, enlargement(i, family, filtered, tau), std::nullopt, ExtReal::infinity(), ExtReal::infinity()};
    options.push_back(superset_options(family, family[i], entry.hat));
    for (const auto& o : options.back()) entry.c_needed = min(entry.c_needed, o.c);
    if (entry.c_needed.is_infinite() && !report.first_failure) report.first_failure = i;
    c = max(c, entry.c_needed);
    report.entries.push_back(std::move(entry));
  }
  ExtReal eta;
  for (std::size_t k = 0; k < report.entries.size(); ++k) {
    auto& entry = report.entries[k];
    for (const auto& o : options[k]) {
      if (o.c <= c && (!entry.witness || o.eta < entry.eta_needed)) {
        entry.witness = o.index;
        entry.eta_needed = o.eta;
      }
    }
    if (entry.eta_needed.is_infinite() && !report.first_failure) report.first_failure = entry.set;
    eta = max(eta, entry.eta_needed);
  }
  report.c = c;
  report.eta = eta;
  report.feasible = !report.first_failure;
  return report;
}

std::vector<BallEnlargementCheck> check_ball_enlargement(const FiniteMetricSpace& space, const GaugedFamily& family,
                                                         const FilteredFamily& filtered, const Tau& tau) {
  std::vector<BallEnlargementCheck> out;
  const ExtReal one_plus_tau = ExtReal(1) + tau.value();
  for (std::size_t i : filtered.kept) {
    const auto& s = family[i];
    if (!s.ball) continue;
    PointSet hat = enlargement(i, family, filtered, tau);
    const ExtReal radius = one_plus_tau * s.diameter;
    bool inside = true;
    hat.for_each([&](std::size_t z) { inside = inside && space.distance(s.ball->center, z) <= radius; });
    out.push_back({i, inside});
  }
  return out;
}

}  // namespace areaform
