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
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "areaform/ext_real.hpp"
#include "areaform/gauge.hpp"
#include "areaform/instance.hpp"
#include "areaform/measure.hpp"
#include "areaform/point_set.hpp"

namespace areaform {

/// The covering relation is not fine at the requested point.
class NotFineError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The quotient was requested for a set outside S_{mu,zeta}.
class NotInFilteredFamilyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Tau {
 public:
  explicit Tau(ExtReal value);
  const ExtReal& value() const { return value_; }

 private:
  ExtReal value_;
};

enum class DropReason { BothZero, BothInfinite };

std::string_view to_string(DropReason reason);

/// S_{mu,zeta}: the members on which mu and zeta are not both 0 and not both
/// +inf. `mu` caches mu(S) for every member of the family.
struct FilteredFamily {
  std::vector<std::size_t> kept;
  std::vector<std::pair<std::size_t, DropReason>> dropped;
  std::vector<ExtReal> mu;
  std::vector<bool> is_kept;
};

FilteredFamily filter_family(const AtomicMeasure& mu, const GaugedFamily& family);

/// Q(S) = +inf when zeta = 0, mu / zeta for finite positive zeta, 0 when
/// zeta = +inf. Throws NotInFilteredFamilyError when mu and zeta are both 0
/// or both +inf.
ExtReal quotient(const ExtReal& mu, const ExtReal& zeta);

/// Q extended to every set: both-zero falls into the zeta = 0 branch and
/// both-infinite into the zeta = +inf branch.
ExtReal unfiltered_quotient(const ExtReal& mu, const ExtReal& zeta);

/// Which diameters count as arbitrarily small.
struct Fineness {
  FinenessSemantics semantics = FinenessSemantics::Exact;
  ExtReal floor;

  static Fineness of(const MetricInstance& instance) { return {instance.semantics(), instance.fineness_floor()}; }
  bool admits(const ExtReal& diameter) const { return diameter <= floor; }
};

/// One (set, value) pair of C({x}) seen through its diameter.
struct CoveringSample {
  ExtReal diameter;
  ExtReal value;
};

/// The step functions eps -> sup / inf of f over {S in C({x}) : diam S < eps}.
/// Entry k covers eps in (diameters[k], next larger diameter]; entries are
/// ordered by decreasing diameter, so the last entry is the finest scale.
struct DensityProfile {
  std::vector<ExtReal> diameters;
  std::vector<ExtReal> thresholds;  // a representative eps of each step
  std::vector<ExtReal> sup_values;
  std::vector<ExtReal> inf_values;
  bool fine = false;
  Fineness fineness;
  std::optional<ExtReal> limsup;  // present iff fine
  std::optional<ExtReal> liminf;
};

DensityProfile covering_profile(std::vector<CoveringSample> samples, const Fineness& fineness = {});

/// Fine at x: some member of C({x}) has a diameter admitted by `fineness`.
bool is_fine(const std::vector<CoveringSample>& samples, const Fineness& fineness = {});
ExtReal covering_limsup(std::vector<CoveringSample> samples, const Fineness& fineness = {});
ExtReal covering_liminf(std::vector<CoveringSample> samples, const Fineness& fineness = {});

/// For each point, the indices of the kept members containing it.
std::vector<std::vector<std::size_t>> membership(const GaugedFamily& family, const FilteredFamily& filtered);

bool covers_finely(const GaugedFamily& family, const FilteredFamily& filtered, const PointSet& a,
                   const Fineness& fineness = {});

/// Profile of Q over the kept members containing x.
DensityProfile federer_profile(const GaugedFamily& family, const FilteredFamily& filtered, std::size_t x,
                               const Fineness& fineness = {});
/// F^zeta(mu, x). Throws NotFineError when the filtered relation is not fine at x.
ExtReal federer_density(const GaugedFamily& family, const FilteredFamily& filtered, std::size_t x,
                        const Fineness& fineness = {});
ExtReal federer_density(const MetricInstance& instance, std::size_t x);

/// F^zeta(mu, .) at every point; nullopt where the relation is not fine.
std::vector<std::optional<ExtReal>> federer_densities(const GaugedFamily& family, const FilteredFamily& filtered,
                                                      const Fineness& fineness = {});

/// The covering limsup of Q over all members containing x, without filtering.
DensityProfile unfiltered_profile(const AtomicMeasure& mu, const GaugedFamily& family, std::size_t x,
                                  const Fineness& fineness = {});
ExtReal unfiltered_density(const AtomicMeasure& mu, const GaugedFamily& family, std::size_t x,
                           const Fineness& fineness = {});

/// S-hat: the union of kept T meeting S with diam T <= tau * diam S.
PointSet enlargement(const PointSet& s, const ExtReal& diam_s, const GaugedFamily& family,
                     const FilteredFamily& filtered, const Tau& tau);
/// Enlargement of the kept member `index`.
PointSet enlargement(std::size_t index, const GaugedFamily& family, const FilteredFamily& filtered, const Tau& tau);

struct CEtaEntry {
  std::size_t set = 0;                  // kept member S
  PointSet hat;                         // S-hat
  std::optional<std::size_t> witness;   // S-tilde
  ExtReal c_needed;                     // least c over supersets of S-hat
  ExtReal eta_needed;                   // least eta over those within the reported c
};

struct CEtaReport {
  bool feasible = false;
  ExtReal c;
  ExtReal eta;
  std::vector<CEtaEntry> entries;
  std::optional<std::size_t> first_failure;  // kept member without a witness
};

/// Checks that every kept S has S-tilde in the family with S-hat within it,
/// diam S-tilde <= c diam S and zeta(S-tilde) <= eta zeta(S).
CEtaReport check_c_eta(const GaugedFamily& family, const FilteredFamily& filtered, const Tau& tau, const ExtReal& c,
                       const ExtReal& eta);
/// The lexicographically least (c, eta) with c >= 1 for which check_c_eta
/// passes, or an infeasible report. eta may come out 0 when every needed
/// ratio vanishes; any positive eta then works.
CEtaReport search_c_eta(const GaugedFamily& family, const FilteredFamily& filtered, const Tau& tau);

struct BallEnlargementCheck {
  std::size_t set = 0;
  bool contained = false;
};

/// For each kept member that is a tagged ball B(y, r): S-hat is inside the
/// closed ball of center y and radius (1 + tau) diam S.
std::vector<BallEnlargementCheck> check_ball_enlargement(const FiniteMetricSpace& space, const GaugedFamily& family,
                                                         const FilteredFamily& filtered, const Tau& tau);

}  // namespace areaform
