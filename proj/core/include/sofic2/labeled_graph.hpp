#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sofic2/word.hpp"

namespace sofic2 {

using VertexId = std::size_t;

struct LabeledEdge {
  VertexId source;
  VertexId target;
  Symbol label;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Finite directed multigraph with symbol-labeled edges. The bi-infinite
/// walks' labels form the presented shift. Parallel edges and self-loops
/// are allowed; vertices carry string names for I/O.
class LabeledGraph {
 public:
  /// Returns the existing id when the name is already present.
  VertexId add_vertex(const std::string& name);
  void add_edge(VertexId source, VertexId target, Symbol label);
  void add_edge(const std::string& source, const std::string& target, Symbol label);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(const std::string& name) const;

  std::span<const LabeledEdge> edges() const noexcept { return edges_; }
  const LabeledEdge& edge(std::size_t i) const { return edges_.at(i); }

  /// Edge indices leaving / entering each vertex.
  std::vector<std::vector<std::size_t>> out_edges() const;
  std::vector<std::vector<std::size_t>> in_edges() const;

  /// Subgraph on the vertices with keep[v] true, edges between kept
  /// vertices only. Vertex ids are renumbered in order.
  LabeledGraph induced(const std::vector<bool>& keep) const;

  /// Same graph with vertices sorted by name and edges sorted by
  /// (source name, target name, label).
  LabeledGraph canonical() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<LabeledEdge> edges_;
};

/// Labels of all paths of exactly `length` edges, as a sorted set. Used
/// for language comparisons on small graphs.
std::vector<Word> path_labels(const LabeledGraph& g, std::size_t length);

}  // namespace sofic2
