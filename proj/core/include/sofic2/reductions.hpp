#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sofic2/structure_graph.hpp"

namespace sofic2 {

/// Undirected graph without self-loops; repeated edges are ignored.
/// Vertex names double as alphabet symbols in the gadgets.
class SimpleGraph {
 public:
  std::size_t add_vertex(const std::string& name);
  /// Throws Error(ParseError) on a self-loop.
  void add_edge(std::size_t u, std::size_t v);
  void add_edge(const std::string& u, const std::string& v);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Edges as (u, v) with u < v, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// A graph whose vertices carry a color in {0, 1}.
struct ColoredGraph {
  SimpleGraph graph;
  std::vector<int> color;

  std::size_t add_vertex(const std::string& name, int c);
};

/// Directed multigraph without labels.
struct Digraph {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  std::size_t add_vertex(std::string name);
  std::size_t vertex_count() const noexcept { return names.size(); }
};

/// Structure graph of the SFT made of u*v* for every edge {u, v} with u of
/// color 0: one fixed point per vertex and a count-1 transition u -> v.
/// Throws ImproperColoring, IsolatedVertex.
StructureGraph gi_gadget(const ColoredGraph& g);

/// Structure graph of the union of (#u)*(#v)* and (#u)*(v#)* over both
/// orientations of every edge, with # a symbol that names no vertex.
/// Computed by presenting the union and running build_structure.
/// Throws IsolatedVertex.
StructureGraph hom_gadget(const SimpleGraph& g);

/// The count attached to transition edges in digraph_gadget: m_k = k + 3,
/// so rotation edges (m = 3) and all counts get distinct path bundles and
/// the encoding does not depend on which counts occur.
std::size_t bundle_size(std::size_t count);

/// Replaces every rotation edge by 3 parallel paths of length 3 and every
/// transition edge with count k by m_k parallel paths of length m_k. Two
/// structure graphs are equal up to renaming iff their gadgets are
/// isomorphic. Throws MalformedStructureGraph, TooLarge (counts > 1000).
Digraph digraph_gadget(const StructureGraph& s);

/// Digraph isomorphism by color refinement and individualization. Returns
/// a vertex map from a to b when one exists.
std::optional<std::vector<std::size_t>> digraph_isomorphism(const Digraph& a, const Digraph& b);

enum class OracleKind { IsoColored, Hom, EdgeInjectiveHom, Compaction };

/// Exhaustive search over vertex maps g -> h: a color-preserving
/// isomorphism, a homomorphism, a homomorphism injective on vertices and
/// edges, or a homomorphism surjective on vertices and edges. Colors are
/// ignored except for IsoColored. Throws TooLarge above 8 vertices.
bool brute_graph_oracle(OracleKind kind, const ColoredGraph& g, const ColoredGraph& h);
bool brute_graph_oracle(OracleKind kind, const SimpleGraph& g, const SimpleGraph& h);

}  // namespace sofic2
