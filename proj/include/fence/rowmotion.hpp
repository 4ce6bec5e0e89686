#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fence/composition.hpp"
#include "fence/poset.hpp"
#include "fence/report.hpp"

namespace fence {

/// Down-closure of the minimal elements of the complement.
IdealSet rowmotion(const ZigzagPoset& p, IdealSet ideal);

/// Complement of the up-closure of the maximal elements.
IdealSet rowmotion_inverse(const ZigzagPoset& p, IdealSet ideal);

/// A rowmotion cycle, starting at its numerically smallest mask.
struct Orbit {
  std::vector<IdealSet> ideals;

  std::size_t period() const noexcept { return ideals.size(); }
  Mask canonical_rep() const { return ideals.front().mask; }
};

/// All orbits of a circular fence, sorted by (period, canonical_rep).
std::vector<Orbit> orbits(const ZigzagPoset& p, std::size_t bound = kDefaultIdealBound);

struct RowCounts {
  long b = 0;  // black tiles
  long w = 0;  // yellow cells
  long r = 0;  // red tiles starting in this row
  friend bool operator==(const RowCounts&, const RowCounts&) = default;
};

struct OrbitStats {
  long period = 0;
  std::vector<RowCounts> rows;  // rows[i-1] for segment i
  long M = 0;
  long chi = 0;
  std::vector<long> M_x;    // indexed by node id; entry 0 unused
  std::vector<long> chi_x;
  friend bool operator==(const OrbitStats&, const OrbitStats&) = default;
};

/// Direct counts over the ideals of the orbit.
OrbitStats orbit_stats(const Orbit& o, const ZigzagPoset& p);

/// Poset that the complement map lands in: the circular fence of shift_one().
ZigzagPoset kappa_poset(const ZigzagPoset& p);
/// Node of p read at position k of the shifted fence.
NodeId kappa_source(const ZigzagPoset& p, NodeId k);
/// Complement of the ideal, read as an ideal of kappa_poset(p).
IdealSet kappa(const ZigzagPoset& p, IdealSet ideal);
/// Image orbit on kappa_poset(p), in rowmotion order.
Orbit kappa_orbit(const ZigzagPoset& p, const Orbit& o);

/// Per-segment and per-node homomesies for every orbit of the circular fence.
Report verify_homomesy(const Composition& alpha);

/// Conjugation identity on every ideal, and orbit statistics under the
/// complement map.
Report verify_kappa(const Composition& alpha);

enum class Family { TwoParts, AOneAOne, OneOneAOne, TwoOneAOne, FourEqual };

std::string family_name(Family f);

/// Claimed orbit counts, periods and mesies for one member of a family.
/// Printed statistic values are compared too, as typo findings.
Report verify_orbit_theorem(Family f, const std::vector<int>& params);

/// Every member with parameters in [lo, hi] ((a,b) ranges over both).
Report verify_orbit_theorems(Family f, int lo, int hi);

}  // namespace fence
