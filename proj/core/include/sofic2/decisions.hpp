#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stop_token>
#include <string_view>
#include <vector>

#include "sofic2/structure_graph.hpp"

namespace sofic2 {

/// Which kind of block map is asked for: any block map, an injective one,
/// a surjective one, or a conjugacy.
enum class Mode { BlockMap, Embedding, Factor, Conjugacy };

std::string_view to_string(Mode mode);

/// Homomorphism of structure graphs, given by its action on periodic
/// points. The action on edges is determined by the endpoints.
struct SGHomomorphism {
  std::map<PeriodicPoint, PeriodicPoint> vertex_map;

  friend bool operator==(const SGHomomorphism&, const SGHomomorphism&) = default;
};

struct DecideOptions {
  /// Dispatch to rank1_decide when both inputs are rank one.
  bool use_fastpath = true;
  /// Checked during the search; a stop request raises Error(Cancelled).
  std::stop_token stop;
};

/// Searches for a homomorphism x -> y satisfying the mode's conditions.
/// Each orbit of x goes to an orbit of y whose period divides its own,
/// with a phase offset; candidates are tried in a fixed order, so the
/// witness is reproducible. Returns nullopt when none exists.
///
/// Throws MalformedStructureGraph, Cancelled.
std::optional<SGHomomorphism> decide(Mode mode, const StructureGraph& x, const StructureGraph& y,
                                     const DecideOptions& options = {});

/// Checks a candidate witness directly against the definitions: total on
/// the points of x, commutes with the shift, keeps transition edges, and
/// meets the mode's injectivity, surjectivity and count conditions.
/// Shares no code with the search. Never throws.
bool verify_witness(Mode mode, const StructureGraph& x, const StructureGraph& y,
                    const SGHomomorphism& h) noexcept;

/// Decision for finite shifts from the multisets of orbit periods alone.
/// Throws NotRankOne unless both inputs pass is_rank_one().
bool rank1_decide(Mode mode, const StructureGraph& x, const StructureGraph& y);

/// Orbits of C_{e'} for one target transition edge e', indexed 0..count-1,
/// together with the preimage edges of e' whose orbits are indexed
/// consecutively in the listed order. image[i] is the target orbit that
/// source orbit i is sent to.
struct EdgeAssignment {
  PointPair target;
  OrbitCount target_count;
  std::vector<PointPair> sources;
  std::vector<std::size_t> image;
};

/// Per target transition edge, an explicit assignment of orbits that is
/// injective, surjective or bijective as the mode demands. Source orbit i
/// goes to target orbit min(i, count - 1).
/// Throws WitnessInvalid unless verify_witness accepts h.
std::vector<EdgeAssignment> realize_orbit_map(Mode mode, const StructureGraph& x,
                                              const StructureGraph& y, const SGHomomorphism& h);

}  // namespace sofic2
