#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sofic2/orbit_count.hpp"
#include "sofic2/periodic.hpp"

namespace sofic2 {

using PointPair = std::pair<PeriodicPoint, PeriodicPoint>;

/// Structure graph of a countable sofic shift of rank at most 2.
///
/// Vertices are the periodic points of the listed orbits. Rotation edges
/// x -> σ(x) are implicit. A transition edge (x, y) carries the number of
/// σ-orbits of points left-asymptotic to x and right-asymptotic to y; the
/// diagonal entry (x, x) counts x itself and is always present.
class StructureGraph {
 public:
  /// Orbits are kept sorted (period, then root) and unique.
  void add_orbit(const PeriodicOrbit& orbit);
  /// Adds `count` to the transition (x, y); both orbits must be listed.
  void add_transition(const PeriodicPoint& x, const PeriodicPoint& y, const OrbitCount& count);
  void set_transition(const PeriodicPoint& x, const PeriodicPoint& y, const OrbitCount& count);

  const std::vector<PeriodicOrbit>& orbits() const noexcept { return orbits_; }
  const std::map<PointPair, OrbitCount>& transitions() const noexcept { return transitions_; }

  std::optional<std::size_t> orbit_index(const PeriodicOrbit& orbit) const;
  bool has_orbit(const PeriodicOrbit& orbit) const { return orbit_index(orbit).has_value(); }

  /// All periodic points, orbit by orbit, phases ascending.
  std::vector<PeriodicPoint> points() const;
  std::size_t point_count() const;

  /// Zero when there is no transition edge (x, y).
  OrbitCount count(const PeriodicPoint& x, const PeriodicPoint& y) const;
  bool has_transition(const PeriodicPoint& x, const PeriodicPoint& y) const;

  /// Throws Error(MalformedStructureGraph) unless: every endpoint lies on a
  /// listed orbit, every count is >= 1, every point has its diagonal
  /// entry, and counts are invariant under the simultaneous shift
  /// (x, y) -> (σx, σy), which every structure graph of a shift satisfies.
  void validate() const;

  /// True when every transition is diagonal with count 1, the shape of the
  /// structure graph of a finite shift.
  bool is_rank_one() const;

  friend bool operator==(const StructureGraph&, const StructureGraph&) = default;

 private:
  std::vector<PeriodicOrbit> orbits_;
  std::map<PointPair, OrbitCount> transitions_;
};

}  // namespace sofic2
