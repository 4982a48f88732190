#include "sofic2/structure_graph.hpp"

#include <algorithm>

#include "sofic2/error.hpp"

namespace sofic2 {

void StructureGraph::add_orbit(const PeriodicOrbit& orbit) {
  auto it = std::lower_bound(orbits_.begin(), orbits_.end(), orbit);
  if (it != orbits_.end() && *it == orbit) return;
  orbits_.insert(it, orbit);
}

void StructureGraph::add_transition(const PeriodicPoint& x, const PeriodicPoint& y,
                                    const OrbitCount& count) {
  if (!has_orbit(x.orbit) || !has_orbit(y.orbit)) {
    throw Error(ErrorKind::MalformedStructureGraph, "transition endpoint on an unlisted orbit");
  }
  if (count.is_zero()) return;
  transitions_[{x, y}] += count;
}

void StructureGraph::set_transition(const PeriodicPoint& x, const PeriodicPoint& y,
                                    const OrbitCount& count) {
  if (!has_orbit(x.orbit) || !has_orbit(y.orbit)) {
    throw Error(ErrorKind::MalformedStructureGraph, "transition endpoint on an unlisted orbit");
  }
  if (count.is_zero()) {
    transitions_.erase({x, y});
  } else {
    transitions_[{x, y}] = count;
  }
}

std::optional<std::size_t> StructureGraph::orbit_index(const PeriodicOrbit& orbit) const {
  auto it = std::lower_bound(orbits_.begin(), orbits_.end(), orbit);
  if (it != orbits_.end() && *it == orbit) return static_cast<std::size_t>(it - orbits_.begin());
  return std::nullopt;
}

std::vector<PeriodicPoint> StructureGraph::points() const {
  std::vector<PeriodicPoint> out;
  for (const auto& o : orbits_) {
    for (std::size_t r = 0; r < o.period(); ++r) out.push_back(PeriodicPoint{o, r});
  }
  return out;
}

std::size_t StructureGraph::point_count() const {
  std::size_t n = 0;
  for (const auto& o : orbits_) n += o.period();
  return n;
}

OrbitCount StructureGraph::count(const PeriodicPoint& x, const PeriodicPoint& y) const {
  if (auto it = transitions_.find({x, y}); it != transitions_.end()) return it->second;
  return {};
}

bool StructureGraph::has_transition(const PeriodicPoint& x, const PeriodicPoint& y) const {
  return transitions_.contains({x, y});
}

void StructureGraph::validate() const {
  for (const auto& [pair, c] : transitions_) {
    const auto& [x, y] = pair;
    if (!has_orbit(x.orbit) || !has_orbit(y.orbit)) {
      throw Error(ErrorKind::MalformedStructureGraph, "transition endpoint on an unlisted orbit");
    }
    if (x.phase >= x.period() || y.phase >= y.period()) {
      throw Error(ErrorKind::MalformedStructureGraph, "phase outside its orbit period");
    }
    if (c.is_zero()) throw Error(ErrorKind::MalformedStructureGraph, "zero transition count");
    auto shifted = transitions_.find({shift_point(x, 1), shift_point(y, 1)});
    if (shifted == transitions_.end() || !(shifted->second == c)) {
      throw Error(ErrorKind::MalformedStructureGraph,
                  "transition counts are not invariant under the shift");
    }
  }
  for (const auto& x : points()) {
    if (!has_transition(x, x)) {
      throw Error(ErrorKind::MalformedStructureGraph, "missing diagonal transition");
    }
  }
}

bool StructureGraph::is_rank_one() const {
  for (const auto& [pair, c] : transitions_) {
    if (!(pair.first == pair.second) || !(c == OrbitCount(1))) return false;
  }
  return true;
}

}  // namespace sofic2
