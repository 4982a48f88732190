#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sofic2/comb_rep.hpp"
#include "sofic2/labeled_graph.hpp"

namespace sofic2 {

/// A simple cycle q^0 -> q^1 -> ... -> q^{m-1} -> q^0. label[r] is the
/// label of the edge leaving q^r, edges[r] its index in the graph.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<std::size_t> edges;
  Word label;

  std::size_t length() const noexcept { return vertices.size(); }
};

enum class RankStatus { Exact, AtLeastThree, NotCertified };

struct AnalysisReport {
  bool is_right_resolving = false;
  bool is_essential = false;
  bool is_countable_certified = false;
  /// Listed only when pairwise vertex-disjoint.
  std::vector<Cycle> cycles;
  RankStatus rank_status = RankStatus::NotCertified;
  /// Meaningful when rank_status is Exact (0 for the empty shift).
  std::size_t rank = 0;
};

/// Removes vertices that do not lie on a bi-infinite walk. The presented
/// shift is unchanged.
LabeledGraph trim_essential(const LabeledGraph& g);

/// (vertex, label) pairs with two or more outgoing edges carrying the label,
/// sorted by vertex id then label.
std::vector<std::pair<VertexId, Symbol>> check_right_resolving(const LabeledGraph& g);

/// Merges follower-equivalent vertices by partition refinement. The input
/// is trimmed first; throws Error(NotRightResolving) if it is not
/// right-resolving.
LabeledGraph minimize_right_resolving(const LabeledGraph& g);

/// Structural analysis: right-resolvingness, essentialness, the cycles of
/// the graph, the countability certificate (cycles pairwise
/// vertex-disjoint) and the rank (most cycles met by one directed path).
/// Never throws; see require_rank_at_most_two for the refusing variant.
AnalysisReport analyze(const LabeledGraph& g);

/// Throws NotRightResolving / NotCountableCertified / RankTooHigh as
/// appropriate, otherwise returns the report.
AnalysisReport require_rank_at_most_two(const LabeledGraph& g);

/// Subset construction started from the full vertex set. The result is
/// right-resolving and presents the same shift as g.
LabeledGraph determinize(const LabeledGraph& g);

/// Right-resolving, essential, minimized presentation of the union of the
/// term shifts.
LabeledGraph from_comb_rep(const CombRep& r);

/// N-block presentation of the shift over `alphabet` avoiding `forbidden`,
/// N = max(2, longest forbidden word). Edges are labeled by the image of
/// the last symbol of their block under `symbol_map` (identity where the
/// map has no entry). The result is trimmed.
LabeledGraph from_forbidden_words(const std::vector<Symbol>& alphabet,
                                  const std::vector<Word>& forbidden,
                                  const std::map<Symbol, Symbol>& symbol_map = {});

/// 1 + the largest term arity. Throws EmptyRepresentation.
std::size_t rank_of_comb_rep(const CombRep& r);

/// Replaces every term of arity m >= 1 by its two truncations of arity
/// m - 1 and drops arity-0 terms; duplicates are removed keeping first
/// occurrences. Throws EmptyRepresentation on an empty input.
CombRep derivative_of_comb_rep(const CombRep& r);

}  // namespace sofic2
