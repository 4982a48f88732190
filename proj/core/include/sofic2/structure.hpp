#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sofic2/labeled_graph.hpp"
#include "sofic2/orbit_count.hpp"
#include "sofic2/presentation.hpp"
#include "sofic2/structure_graph.hpp"

namespace sofic2 {

/// A path that uses no edge of any cycle, from a cycle vertex to a cycle
/// vertex. Phases are positions within the cycles as listed by analyze.
struct TransitionalPath {
  std::vector<VertexId> vertices;
  Word label;
  std::size_t start_cycle = 0;
  std::size_t start_phase = 0;
  std::size_t end_cycle = 0;
  std::size_t end_phase = 0;
};

/// Matrix over the presentation's vertices whose entry (v, w) is the
/// number of edges v -> w that belong to no cycle. Stored by rows.
class TransferMatrix {
 public:
  using Row = std::map<VertexId, OrbitCount>;

  TransferMatrix(const LabeledGraph& g, const std::vector<Cycle>& cycles);

  std::size_t size() const noexcept { return rows_.size(); }
  std::uint64_t at(VertexId v, VertexId w) const;

  /// row * M: extends every walk counted in `row` by one edge.
  Row step(const Row& row) const;

 private:
  std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> rows_;
};

/// Presentation of the same shift in which every aperiodic σ-orbit is the
/// label of exactly one transitional path, up to shift. One cycle per
/// periodic orbit carries every way of leaving that orbit (built from the
/// sets of vertices reachable along its left-infinite label), and every
/// path after a departure is determinized. Requires a minimized,
/// right-resolving, countable-certified presentation of rank at most 2.
LabeledGraph departure_normal_form(const LabeledGraph& minimized, const AnalysisReport& report);

/// Structure graph of the presented shift: minimize, certify, pass to the
/// departure normal form, then count transitional paths of each length
/// with powers of the transfer matrix. A path of length l from phase a of
/// cycle i to phase b of cycle j is one σ-orbit, asymptotic to
/// (λ_i(a), λ_j(b - l)); it counts once on that edge and on each of its
/// simultaneous shifts. Diagonal entries get +1 for the periodic point.
///
/// Throws NotRightResolving, NotCountableCertified, RankTooHigh.
StructureGraph build_structure(const LabeledGraph& g);

/// Every transitional path of the trimmed input, up to `budget` of them.
/// Throws BudgetExceeded beyond that.
std::vector<TransitionalPath> enumerate_transitional_paths(const LabeledGraph& g,
                                                           const AnalysisReport& report,
                                                           std::uint64_t budget);

/// Definitional structure graph: enumerate all transitional paths of the
/// trimmed (not minimized) input, canonicalize each resulting
/// configuration, deduplicate σ-orbits and count them per pair of
/// asymptotic periodic points.
StructureGraph oracle_structure(const LabeledGraph& g, std::uint64_t path_budget);

/// Right-resolving presentation whose structure graph is `s` with each
/// orbit root renamed to a word of fresh, pairwise distinct symbols.
/// Throws MalformedStructureGraph when `s` fails validate().
LabeledGraph synthesize(const StructureGraph& s);

/// The fresh root synthesize() assigns to the orbit with index i (period m).
Word synthesized_root(std::size_t orbit_index, std::size_t period);

}  // namespace sofic2
